//! Vertex connectivity, longest induced paths and P_t-freeness.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSet};

/// Exact vertex connectivity. `cut` is `None` for complete graphs, which have
/// no separating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityCert {
    pub kappa: usize,
    pub cut: Option<Vec<usize>>,
}

impl ConnectivityCert {
    /// Whether removing the cut really disconnects `g`.
    pub fn validates(&self, g: &LabeledGraph) -> bool {
        match &self.cut {
            None => (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.has_edge(u, v))) && self.kappa + 1 == g.n().max(1),
            Some(cut) => {
                let rest = g.all_vertices().difference(&g.vertex_set(cut.iter().copied()));
                cut.len() == self.kappa && rest.len() >= 2 && !g.is_connected_within(&rest)
            }
        }
    }
}

const INF: u32 = u32::MAX / 2;

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn reachable(&self, s: usize) -> Vec<Option<usize>> {
        let mut via = vec![None; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for &e in &self.head[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    via[b] = Some(e);
                    queue.push_back(b);
                }
            }
        }
        via.iter()
            .zip(&seen)
            .map(|(v, &s)| if s { Some(v.unwrap_or(usize::MAX)) } else { None })
            .collect()
    }

    /// Augments until no path remains or `limit` units have been pushed.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let via = self.reachable(s);
            if via[t].is_none() {
                break;
            }
            let mut b = t;
            while b != s {
                let e = via[b].unwrap();
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                b = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Minimum vertex separator between non-adjacent `s` and `t`, stopping early
/// once `limit` disjoint paths are found (then `None`).
fn min_separator(g: &LabeledGraph, s: usize, t: usize, limit: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { INF } else { 1 };
        net.arc(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, INF);
        net.arc(2 * v + 1, 2 * u, INF);
    }
    let flow = net.max_flow(2 * s + 1, 2 * t, limit);
    if flow >= limit {
        return None;
    }
    let side = net.reachable(2 * s + 1);
    let cut: Vec<usize> = (0..n)
        .filter(|&v| side[2 * v].is_some() && side[2 * v + 1].is_none())
        .collect();
    debug_assert_eq!(cut.len(), flow);
    Some(cut)
}

/// Exact vertex connectivity via unit-capacity flow over every non-adjacent
/// pair. The reported cut comes from the first pair (lexicographically)
/// attaining the minimum.
pub fn vertex_connectivity(g: &LabeledGraph) -> ConnectivityCert {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let limit = best.as_ref().map_or(n, Vec::len);
            if let Some(cut) = min_separator(g, s, t, limit) {
                best = Some(cut);
            }
        }
    }
    match best {
        Some(cut) => ConnectivityCert {
            kappa: cut.len(),
            cut: Some(cut),
        },
        None => ConnectivityCert {
            kappa: n.saturating_sub(1),
            cut: None,
        },
    }
}

pub const INDUCED_PATH_CAP: usize = 25;

/// Whether `seq` lists the vertices of an induced path, in order.
pub fn is_induced_path(g: &LabeledGraph, seq: &[usize]) -> bool {
    let mut seen = VertexSet::new(g.n());
    if seq.iter().any(|&v| v >= g.n() || !seen.insert(v)) {
        return false;
    }
    seq.iter().enumerate().all(|(i, &a)| {
        seq[i + 1..]
            .iter()
            .enumerate()
            .all(|(j, &b)| g.has_edge(a, b) == (j == 0))
    })
}

/// A longest induced path: its vertex count and one witness.
pub fn longest_induced_path(g: &LabeledGraph) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n > INDUCED_PATH_CAP {
        return Err(Error::CapExceeded {
            what: "induced-path search",
            size: n,
            cap: INDUCED_PATH_CAP,
        });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();
    let mut search = PathSearch {
        adj,
        full: ((1u64 << n) - 1) as u32,
        path: Vec::new(),
        best: vec![0],
    };
    for s in 0..n {
        search.path.push(s);
        search.grow(s, 1 << s, 0);
        search.path.pop();
    }
    Ok((search.best.len(), search.best))
}

struct PathSearch {
    adj: Vec<u32>,
    full: u32,
    path: Vec<usize>,
    best: Vec<usize>,
}

impl PathSearch {
    /// `blocked`: closed neighbourhoods of every path vertex except the end.
    fn grow(&mut self, end: usize, on_path: u32, blocked: u32) {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        let next_blocked = blocked | self.adj[end] | 1 << end;
        let room = (self.full & !(blocked | on_path)).count_ones() as usize;
        if self.path.len() + room <= self.best.len() {
            return;
        }
        let mut cand = self.adj[end] & !blocked & !on_path;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.path.push(w);
            self.grow(w, on_path | 1 << w, next_blocked);
            self.path.pop();
        }
    }
}

/// True iff no induced path has `t` vertices.
pub fn is_pt_free(g: &LabeledGraph, t: usize) -> Result<bool> {
    Ok(longest_induced_path(g)?.0 < t)
}
