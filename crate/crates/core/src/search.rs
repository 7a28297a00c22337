//! Exact Hamiltonian-cycle counting by a frontier dynamic program.
//!
//! Vertices are introduced one at a time in an order that keeps the
//! frontier (introduced vertices with neighbours still to come) small. A state
//! records, for each frontier vertex, whether it is untouched, finished, or
//! the end of a path fragment together with the fragment's other end. This
//! handles vertex sets far beyond the subset table as long as the graph is
//! "thin" in the chosen order, which the blow-up constructions are.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::graph::{Cycle, LabeledGraph, VertexSet};

const FREE: u16 = 0;
const DONE: u16 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningCycles {
    pub count: u128,
    pub witness: Option<Cycle>,
}

impl SpanningCycles {
    pub fn exists(&self) -> bool {
        self.count > 0
    }

    fn none() -> Self {
        SpanningCycles {
            count: 0,
            witness: None,
        }
    }
}

struct Link {
    edge: (usize, usize),
    prev: Option<Rc<Link>>,
}

#[derive(Clone)]
struct Entry {
    count: u128,
    trail: Option<Rc<Link>>,
}

fn push_edge(trail: &Option<Rc<Link>>, edge: (usize, usize)) -> Option<Rc<Link>> {
    Some(Rc::new(Link {
        edge,
        prev: trail.clone(),
    }))
}

fn collect(trail: &Option<Rc<Link>>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut cur = trail.clone();
    while let Some(link) = cur {
        out.push(link.edge);
        cur = link.prev.clone();
    }
    out
}

/// Greedy introduction order: each step picks the vertex that leaves the
/// smallest frontier, preferring more already-placed neighbours, then the
/// lowest id.
pub fn frontier_order(g: &LabeledGraph) -> Vec<usize> {
    let m = g.n();
    let mut placed = vec![false; m];
    let mut pending: Vec<usize> = (0..m).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let mut best: Option<((usize, std::cmp::Reverse<usize>), usize)> = None;
        for c in (0..m).filter(|&c| !placed[c]) {
            let placed_nbrs = g.neighbors(c).iter().filter(|&w| placed[w]).count();
            let mut size = (0..m)
                .filter(|&w| placed[w] && pending[w] - g.has_edge(w, c) as usize > 0)
                .count();
            if pending[c] > 0 {
                size += 1;
            }
            let key = (size, std::cmp::Reverse(placed_nbrs));
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, c));
            }
        }
        let c = best.expect("an unplaced vertex remains").1;
        placed[c] = true;
        for w in g.neighbors(c).iter() {
            pending[w] -= 1;
        }
        order.push(c);
    }
    order
}

/// Counts the Hamiltonian cycles of `G[set]` that use every edge in
/// `forced`, returning one of them as a witness.
pub fn spanning_cycles(g: &LabeledGraph, set: &VertexSet, forced: &[(usize, usize)]) -> Result<SpanningCycles> {
    for &(a, b) in forced {
        if !g.has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
    }
    if forced.iter().any(|&(a, b)| !set.contains(a) || !set.contains(b)) {
        return Ok(SpanningCycles::none());
    }
    let (h, ids) = g.induced_subgraph(set);
    let m = h.n();
    if m < 3 || m > u16::MAX as usize - 2 || (0..m).any(|v| h.degree(v) < 2) {
        return Ok(SpanningCycles::none());
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in ids.iter().enumerate() {
        local[v] = i;
    }
    let mut is_forced = vec![VertexSet::new(m); m];
    let mut forced_total = 0;
    for &(a, b) in forced {
        let (a, b) = (local[a], local[b]);
        if is_forced[a].insert(b) {
            is_forced[b].insert(a);
            forced_total += 1;
        }
    }
    if is_forced.iter().any(|f| f.len() > 2) {
        return Ok(SpanningCycles::none());
    }

    let order = frontier_order(&h);
    let mut pos = vec![0; m];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut pending: Vec<usize> = (0..m).map(|v| h.degree(v)).collect();
    let mut frontier: Vec<usize> = Vec::new();
    let mut slot = vec![usize::MAX; m];
    let mut states: BTreeMap<Vec<u16>, Entry> = BTreeMap::new();
    states.insert(Vec::new(), Entry { count: 1, trail: None });
    let mut forced_seen = 0;
    let mut total = 0u128;
    let mut witness: Option<Vec<(usize, usize)>> = None;

    for (step, &v) in order.iter().enumerate() {
        slot[v] = frontier.len();
        frontier.push(v);
        states = states
            .into_iter()
            .map(|(mut k, e)| {
                k.push(FREE);
                (k, e)
            })
            .collect();
        let mut earlier: Vec<usize> = h.neighbors(v).iter().filter(|&u| pos[u] < step).collect();
        earlier.sort_by_key(|&u| pos[u]);
        for u in earlier {
            let must = is_forced[u].contains(v);
            forced_seen += must as usize;
            let last_step = step == m - 1;
            let closing_ok = last_step && forced_seen == forced_total;
            let (pu, pv) = (slot[u], slot[v]);
            let mut next: BTreeMap<Vec<u16>, Entry> = BTreeMap::new();
            let add = |map: &mut BTreeMap<Vec<u16>, Entry>, key: Vec<u16>, count: u128, trail: Option<Rc<Link>>| {
                map.entry(key)
                    .and_modify(|e| e.count = e.count.saturating_add(count))
                    .or_insert(Entry { count, trail });
            };
            for (key, entry) in states {
                if !must {
                    add(&mut next, key.clone(), entry.count, entry.trail.clone());
                }
                let (cu, cv) = (key[pu], key[pv]);
                if cu == DONE || cv == DONE {
                    continue;
                }
                let mut k = key;
                match (cu, cv) {
                    (FREE, FREE) => {
                        k[pu] = v as u16 + 2;
                        k[pv] = u as u16 + 2;
                    }
                    (FREE, b) => {
                        let b = (b - 2) as usize;
                        k[pu] = b as u16 + 2;
                        k[slot[b]] = u as u16 + 2;
                        k[pv] = DONE;
                    }
                    (a, FREE) => {
                        let a = (a - 2) as usize;
                        k[pv] = a as u16 + 2;
                        k[slot[a]] = v as u16 + 2;
                        k[pu] = DONE;
                    }
                    (a, b) => {
                        let (a, b) = ((a - 2) as usize, (b - 2) as usize);
                        if a == v {
                            k[pu] = DONE;
                            k[pv] = DONE;
                            if closing_ok && k.iter().all(|&c| c == DONE) {
                                total = total.saturating_add(entry.count);
                                if witness.is_none() {
                                    witness = Some(collect(&push_edge(&entry.trail, (u, v))));
                                }
                            }
                            continue;
                        }
                        k[slot[a]] = b as u16 + 2;
                        k[slot[b]] = a as u16 + 2;
                        k[pu] = DONE;
                        k[pv] = DONE;
                    }
                }
                let trail = push_edge(&entry.trail, (u, v));
                add(&mut next, k, entry.count, trail);
            }
            states = next;
        }
        for w in h.neighbors(v).iter() {
            pending[w] -= 1;
        }
        let keep: Vec<bool> = frontier.iter().map(|&w| pending[w] > 0).collect();
        if keep.iter().any(|&k| !k) {
            states = states
                .into_iter()
                .filter(|(k, _)| k.iter().zip(&keep).all(|(&c, &kp)| kp || c == DONE))
                .map(|(k, e)| {
                    let k: Vec<u16> = k.iter().zip(&keep).filter(|(_, &kp)| kp).map(|(&c, _)| c).collect();
                    (k, e)
                })
                .collect();
            frontier = frontier
                .iter()
                .zip(&keep)
                .filter(|(_, &kp)| kp)
                .map(|(&w, _)| w)
                .collect();
            for (i, &w) in frontier.iter().enumerate() {
                slot[w] = i;
            }
        }
        if states.is_empty() {
            break;
        }
    }

    let witness = match witness {
        Some(edges) => {
            let c = Cycle::from_edges(&h, &edges)?;
            Some(Cycle::new(g, c.vertices().iter().map(|&v| ids[v]).collect())?)
        }
        None => None,
    };
    Ok(SpanningCycles { count: total, witness })
}

/// Cycles on exactly `set` through every heavy edge of `g`; zero when a
/// heavy edge leaves the set.
pub fn heavy_spanning_cycles(g: &LabeledGraph, set: &VertexSet) -> Result<SpanningCycles> {
    spanning_cycles(g, set, g.heavy_edges())
}
