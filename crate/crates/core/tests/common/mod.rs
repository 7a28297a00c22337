//! Random graph generators and brute-force oracles shared by the integration
//! suites. Nothing here calls the engine routines it is compared against.

#![allow(dead_code)]

use hendry_core::LabeledGraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn gnp(rng: &mut StdRng, n: usize, p: f64) -> LabeledGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    LabeledGraph::from_edges(n, &edges).unwrap()
}

/// Chordal by construction: each new vertex is attached to a clique of the
/// graph built so far, so the reverse insertion order is a PEO.
pub fn random_chordal(rng: &mut StdRng, n: usize) -> LabeledGraph {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let mut earlier: Vec<usize> = (0..v).collect();
        earlier.shuffle(rng);
        let want = rng.gen_range(0..=v.min(4));
        let mut clique: Vec<usize> = Vec::new();
        for &c in &earlier {
            if clique.len() == want {
                break;
            }
            if clique.iter().all(|&d| adj[c][d]) {
                clique.push(c);
            }
        }
        for &c in &clique {
            adj[c][v] = true;
            adj[v][c] = true;
            edges.push((c, v));
        }
    }
    LabeledGraph::from_edges(n, &edges).unwrap()
}

fn mask_adj(g: &LabeledGraph) -> Vec<u32> {
    (0..g.n())
        .map(|v| (0..g.n()).filter(|&w| g.has_edge(v, w)).fold(0, |m, w| m | 1 << w))
        .collect()
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Hamiltonicity of `G[mask]` by trying every ordering of the vertices after
/// the first.
pub fn cyclable_by_permutations(g: &LabeledGraph, mask: u32) -> bool {
    let vs = members(mask);
    if vs.len() < 3 {
        return false;
    }
    let mut rest = vs[1..].to_vec();
    let mut found = false;
    permute(&mut rest, 0, &mut |p| {
        if found {
            return;
        }
        let mut prev = vs[0];
        for &w in p {
            if !g.has_edge(prev, w) {
                return;
            }
            prev = w;
        }
        found = g.has_edge(prev, vs[0]);
    });
    found
}

pub fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

fn induced_degrees(adj: &[u32], mask: u32) -> Vec<u32> {
    members(mask).iter().map(|&v| (adj[v] & mask).count_ones()).collect()
}

fn connected(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = 1u32 << mask.trailing_zeros();
    loop {
        let grow = members(seen).iter().fold(seen, |s, &v| s | (adj[v] & mask));
        if grow == seen {
            return seen == mask;
        }
        seen = grow;
    }
}

/// Some vertex subset of size at least 4 induces a cycle.
pub fn has_long_induced_cycle(g: &LabeledGraph) -> bool {
    let adj = mask_adj(g);
    (0u32..1 << g.n())
        .any(|s| s.count_ones() >= 4 && induced_degrees(&adj, s).iter().all(|&d| d == 2) && connected(&adj, s))
}

/// Smallest vertex set whose removal leaves a disconnected graph on at least
/// two vertices; `n - 1` when none exists.
pub fn kappa_by_enumeration(g: &LabeledGraph) -> usize {
    let n = g.n();
    let adj = mask_adj(g);
    let full = ((1u64 << n) - 1) as u32;
    let mut best = n.saturating_sub(1);
    for cut in 0u32..1 << n {
        let size = cut.count_ones() as usize;
        if size < best && n - size >= 2 && !connected(&adj, full & !cut) {
            best = size;
        }
    }
    best
}

/// Largest subset inducing a path: connected, acyclic, maximum degree 2.
pub fn longest_induced_path_by_enumeration(g: &LabeledGraph) -> usize {
    let adj = mask_adj(g);
    let mut best = 0;
    for s in 1u32..1 << g.n() {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        let deg = induced_degrees(&adj, s);
        let edges: u32 = deg.iter().sum::<u32>() / 2;
        if deg.iter().all(|&d| d <= 2) && edges as usize == size - 1 && connected(&adj, s) {
            best = size;
        }
    }
    best
}

pub fn sun3() -> LabeledGraph {
    LabeledGraph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
    )
    .unwrap()
}
