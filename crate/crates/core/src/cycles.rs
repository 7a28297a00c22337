//! Which vertex sets carry a cycle, and the extendibility verdicts built on
//! that.
//!
//! A cycle with vertex set `S` exists iff `G[S]` is Hamiltonian, so every
//! extendibility notion here is decided on vertex subsets. The table stores,
//! for each subset `S`, the endpoints `e` of Hamiltonian paths of `G[S]` that
//! start at `min(S)`; `S` is cyclable when one of them is adjacent to
//! `min(S)` and `|S| >= 3`.

use crate::error::{Error, Result};
use crate::graph::{Cycle, LabeledGraph, VertexSet};

pub const DEFAULT_SUBSET_CAP: usize = 24;
/// Upper bound on any cap override.
pub const MAX_SUBSET_CAP: usize = 26;
pub const CAP_ENV: &str = "HENDRY_SUBSET_CAP";

/// Subset-table cap: `HENDRY_SUBSET_CAP` when set and parseable (clamped to
/// [`MAX_SUBSET_CAP`]), otherwise [`DEFAULT_SUBSET_CAP`].
pub fn subset_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(DEFAULT_SUBSET_CAP, |c| c.min(MAX_SUBSET_CAP))
}

fn lowest(mask: u32) -> usize {
    mask.trailing_zeros() as usize
}

fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = lowest(mask);
            mask &= mask - 1;
            b
        })
    })
}

/// Hamiltonian-path endpoint table over every vertex subset of a graph.
#[derive(Clone, Debug)]
pub struct CyclableTable {
    graph: LabeledGraph,
    adj: Vec<u32>,
    ends: Vec<u32>,
}

impl CyclableTable {
    pub fn build(g: &LabeledGraph) -> Result<CyclableTable> {
        CyclableTable::build_with_cap(g, subset_cap())
    }

    pub fn build_with_cap(g: &LabeledGraph, cap: usize) -> Result<CyclableTable> {
        let n = g.n();
        let cap = cap.min(MAX_SUBSET_CAP);
        if n > cap {
            return Err(Error::CapExceeded {
                what: "subset table",
                size: n,
                cap,
            });
        }
        let adj: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
            .collect();
        let mut ends = vec![0u32; 1usize << n];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for s in 1u32..(1u32 << n) {
            if s & (s - 1) == 0 {
                continue;
            }
            let anchor = lowest(s);
            let mut acc = 0u32;
            for e in bits(s & !(1 << anchor)) {
                if ends[(s ^ (1 << e)) as usize] & adj[e] != 0 {
                    acc |= 1 << e;
                }
            }
            ends[s as usize] = acc;
        }
        Ok(CyclableTable {
            graph: g.clone(),
            adj,
            ends,
        })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.n()) - 1) as u32
    }

    pub fn mask_of(&self, set: &VertexSet) -> u32 {
        set.iter().filter(|&v| v < self.n()).fold(0, |m, v| m | 1 << v)
    }

    pub fn set_of(&self, mask: u32) -> VertexSet {
        VertexSet::from_iter(self.n(), bits(mask))
    }

    /// Endpoints of Hamiltonian paths of `G[mask]` starting at its minimum.
    pub fn path_ends(&self, mask: u32) -> u32 {
        self.ends[mask as usize]
    }

    #[inline]
    pub fn cyclable_mask(&self, mask: u32) -> bool {
        mask.count_ones() >= 3 && self.ends[mask as usize] & self.adj[lowest(mask)] != 0
    }

    pub fn is_cyclable(&self, set: &VertexSet) -> bool {
        self.cyclable_mask(self.mask_of(set))
    }

    /// A Hamiltonian cycle of `G[set]`, read back out of the table.
    pub fn hamiltonian_cycle(&self, set: &VertexSet) -> Option<Cycle> {
        let mask = self.mask_of(set);
        if !self.cyclable_mask(mask) {
            return None;
        }
        let anchor = lowest(mask);
        let mut cur = lowest(self.ends[mask as usize] & self.adj[anchor]);
        let mut rem = mask;
        let mut back = vec![cur];
        loop {
            rem ^= 1 << cur;
            if rem == 1 << anchor {
                break;
            }
            cur = lowest(self.ends[rem as usize] & self.adj[cur]);
            back.push(cur);
        }
        back.push(anchor);
        back.reverse();
        Some(Cycle::new(&self.graph, back).expect("table reconstruction yields a cycle"))
    }

    /// `{v not in S : S + v cyclable}` for a cyclable `S`.
    pub fn extension_candidates(&self, set: &VertexSet) -> Result<VertexSet> {
        let mask = self.mask_of(set);
        if !self.cyclable_mask(mask) {
            return Err(Error::NotCyclable);
        }
        let outside = self.full_mask() & !mask;
        Ok(self.set_of(
            bits(outside)
                .filter(|&v| self.cyclable_mask(mask | 1 << v))
                .fold(0, |m, v| m | 1 << v),
        ))
    }

    /// Cycle extendibility: every cyclable non-spanning set has a cyclable
    /// superset with one more vertex. The witness is the smallest failing
    /// subset index.
    pub fn extendibility(&self) -> ExtensionVerdict {
        let full = self.full_mask();
        for s in 1..full {
            if !self.cyclable_mask(s) {
                continue;
            }
            let outside = full & !s;
            if !bits(outside).any(|v| self.cyclable_mask(s | 1 << v)) {
                return ExtensionVerdict::fails(self.set_of(s));
            }
        }
        ExtensionVerdict::holds()
    }

    /// For each `d`, whether some cyclable superset exists with exactly `d`
    /// more vertices, for `d` in `0..=max`.
    fn superset_levels(&self, max: usize) -> Vec<BitTable> {
        let size = 1usize << self.n();
        let mut level = BitTable::new(size);
        for s in 0..size {
            if self.cyclable_mask(s as u32) {
                level.set(s);
            }
        }
        let mut levels = vec![level];
        for _ in 0..max {
            let prev = levels.last().unwrap();
            let mut next = BitTable::new(size);
            for s in 0..size {
                let outside = self.full_mask() & !(s as u32);
                if bits(outside).any(|v| prev.get(s | 1 << v)) {
                    next.set(s);
                }
            }
            levels.push(next);
        }
        levels
    }

    /// S-cycle extendibility for a finite set of positive gaps.
    pub fn s_extendibility(&self, gaps: &[usize]) -> Result<ExtensionVerdict> {
        if gaps.is_empty() || gaps.contains(&0) {
            return Err(Error::InvalidParameter("gap set must be nonempty and positive".into()));
        }
        let n = self.n();
        let max = *gaps.iter().max().unwrap();
        let levels = self.superset_levels(max.min(n));
        let full = self.full_mask();
        for s in 1..full {
            if !self.cyclable_mask(s) {
                continue;
            }
            let size = s.count_ones() as usize;
            if !could_be_extended(size, n, gaps) {
                continue;
            }
            let ok = gaps.iter().any(|&d| size + d <= n && levels[d].get(s as usize));
            if !ok {
                return Ok(ExtensionVerdict::fails(self.set_of(s)));
            }
        }
        Ok(ExtensionVerdict::holds())
    }
}

/// Whether a cycle on `size` of `n` vertices is subject to the S-extension
/// requirement: some gap still fits inside the graph.
pub fn could_be_extended(size: usize, n: usize, gaps: &[usize]) -> bool {
    gaps.iter().any(|&d| size + d <= n)
}

#[derive(Clone, Debug)]
struct BitTable(Vec<u64>);

impl BitTable {
    fn new(size: usize) -> Self {
        BitTable(vec![0; size.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
}

/// Verdict of an extendibility check; a failing verdict carries a cyclable
/// vertex set with no admissible cyclable superset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionVerdict {
    pub extendible: bool,
    pub witness: Option<VertexSet>,
}

impl ExtensionVerdict {
    fn holds() -> Self {
        ExtensionVerdict {
            extendible: true,
            witness: None,
        }
    }

    fn fails(witness: VertexSet) -> Self {
        ExtensionVerdict {
            extendible: false,
            witness: Some(witness),
        }
    }
}

pub fn build_cyclable_table(g: &LabeledGraph) -> Result<CyclableTable> {
    CyclableTable::build(g)
}

fn induced_table(g: &LabeledGraph, set: &VertexSet) -> Result<(CyclableTable, Vec<usize>)> {
    let cap = subset_cap();
    let size = set.len();
    if size > cap {
        return Err(Error::CapExceeded {
            what: "induced subset table",
            size,
            cap,
        });
    }
    let (sub, ids) = g.induced_subgraph(set);
    Ok((CyclableTable::build_with_cap(&sub, cap)?, ids))
}

/// Whether `G[set]` has a Hamiltonian cycle, by running the subset table on
/// the induced subgraph.
pub fn is_cyclable(g: &LabeledGraph, set: &VertexSet) -> Result<bool> {
    Ok(hamiltonian_cycle(g, set)?.is_some())
}

/// A Hamiltonian cycle of `G[set]` in `g`'s vertex ids.
pub fn hamiltonian_cycle(g: &LabeledGraph, set: &VertexSet) -> Result<Option<Cycle>> {
    if set.len() < 3 {
        return Ok(None);
    }
    let (table, ids) = induced_table(g, set)?;
    let full = table.set_of(table.full_mask());
    Ok(table.hamiltonian_cycle(&full).map(|c| {
        let seq = c.vertices().iter().map(|&v| ids[v]).collect();
        Cycle::new(g, seq).expect("induced cycle maps back")
    }))
}

/// Targeted version of [`CyclableTable::extension_candidates`]: one induced
/// table per candidate, so only the sets involved need to fit under the cap.
pub fn extension_candidates(g: &LabeledGraph, set: &VertexSet) -> Result<VertexSet> {
    if !is_cyclable(g, set)? {
        return Err(Error::NotCyclable);
    }
    let mut out = VertexSet::new(g.n());
    for v in g.all_vertices().difference(set).iter() {
        let mut bigger = set.clone();
        bigger.insert(v);
        if is_cyclable(g, &bigger)? {
            out.insert(v);
        }
    }
    Ok(out)
}

pub fn is_cycle_extendible(g: &LabeledGraph) -> Result<ExtensionVerdict> {
    Ok(CyclableTable::build(g)?.extendibility())
}

pub fn every_vertex_on_triangle(g: &LabeledGraph) -> bool {
    (0..g.n()).all(|v| {
        let nv: Vec<usize> = g.neighbors(v).iter().collect();
        nv.iter()
            .enumerate()
            .any(|(i, &a)| nv[i + 1..].iter().any(|&b| g.has_edge(a, b)))
    })
}

pub fn is_fully_cycle_extendible(g: &LabeledGraph) -> Result<bool> {
    Ok(is_cycle_extendible(g)?.extendible && every_vertex_on_triangle(g))
}

pub fn is_s_cycle_extendible(g: &LabeledGraph, gaps: &[usize]) -> Result<ExtensionVerdict> {
    CyclableTable::build(g)?.s_extendibility(gaps)
}

/// Largest vertex set the heavy-cycle backtracking accepts.
pub const HEAVY_SEARCH_CAP: usize = 20;

/// Number of cycles with vertex set exactly `set` through every heavy edge,
/// plus the first one found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeavyCycles {
    pub count: u64,
    pub witness: Option<Cycle>,
}

/// Backtracking count of heavy cycles on `set`; heavy edges act as forced
/// segments of the path being grown.
pub fn heavy_cycles_on(g: &LabeledGraph, set: &VertexSet) -> Result<HeavyCycles> {
    let none = HeavyCycles {
        count: 0,
        witness: None,
    };
    if set.len() > HEAVY_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "heavy-cycle search",
            size: set.len(),
            cap: HEAVY_SEARCH_CAP,
        });
    }
    if g.heavy_edges()
        .iter()
        .any(|&(a, b)| !set.contains(a) || !set.contains(b))
        || set.len() < 3
    {
        return Ok(none);
    }
    let (sub, ids) = g.induced_subgraph(set);
    let m = sub.n();
    let adj: Vec<u32> = (0..m)
        .map(|v| sub.neighbors(v).iter().fold(0u32, |acc, w| acc | 1 << w))
        .collect();
    let mut forced = vec![0u32; m];
    for &(a, b) in sub.heavy_edges() {
        forced[a] |= 1 << b;
        forced[b] |= 1 << a;
    }
    if forced.iter().any(|f| f.count_ones() > 2) {
        return Ok(none);
    }
    let mut search = HeavySearch {
        adj,
        forced,
        total_forced: sub.heavy_edges().len(),
        full: ((1u64 << m) - 1) as u32,
        path: vec![0],
        count: 0,
        witness: None,
    };
    search.extend(0, None, 1, 0);
    let witness = search
        .witness
        .map(|p| Cycle::new(g, p.iter().map(|&v| ids[v]).collect()).expect("search yields a cycle"));
    Ok(HeavyCycles {
        count: search.count / 2,
        witness,
    })
}

struct HeavySearch {
    adj: Vec<u32>,
    forced: Vec<u32>,
    total_forced: usize,
    full: u32,
    path: Vec<usize>,
    count: u64,
    witness: Option<Vec<usize>>,
}

impl HeavySearch {
    fn is_forced(&self, a: usize, b: usize) -> bool {
        self.forced[a] & 1 << b != 0
    }

    fn extend(&mut self, cur: usize, prev: Option<usize>, visited: u32, used: usize) {
        let start = 0;
        let prev_bit = prev.map_or(0, |p| 1u32 << p);
        if visited == self.full {
            if self.adj[cur] & 1 << start != 0 && used + self.is_forced(cur, start) as usize == self.total_forced {
                self.count += 1;
                if self.witness.is_none() {
                    self.witness = Some(self.path.clone());
                }
            }
            return;
        }
        let mut choices = self.adj[cur] & !visited;
        if prev.is_some() {
            let pending = self.forced[cur] & !prev_bit;
            if pending != 0 {
                if pending & !visited == 0 {
                    // the forced partner is already on the path
                    return;
                }
                choices &= pending;
            }
        } else if self.forced[cur].count_ones() == 2 {
            choices &= self.forced[cur];
        }
        for w in bits(choices) {
            let forced_step = self.is_forced(cur, w);
            if !forced_step && self.forced[w].count_ones() == 2 {
                continue;
            }
            let now = visited | 1 << w;
            let open = (self.full & !now) | 1 << w | 1 << start;
            if bits(self.full & !now).any(|y| (self.adj[y] & open).count_ones() < 2) {
                continue;
            }
            self.path.push(w);
            self.extend(w, Some(cur), now, used + forced_step as usize);
            self.path.pop();
        }
    }
}
