//! Backtracking isomorphism test, used to compare contractions against the
//! families they should collapse to. Degree sequences of the neighbourhoods
//! prune candidates; there is no canonical labeling.

use crate::graph::LabeledGraph;

fn signature(g: &LabeledGraph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// A bijection `map` with `uv` an edge of `g` iff `map[u] map[v]` is an edge
/// of `h`, if one exists.
pub fn find_isomorphism(g: &LabeledGraph, h: &LabeledGraph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let sg: Vec<_> = (0..n).map(|v| signature(g, v)).collect();
    let sh: Vec<_> = (0..n).map(|v| signature(h, v)).collect();
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    // most constrained first: BFS order from the rarest signature
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (sh.iter().filter(|s| **s == sg[v]).count(), v))
            .unwrap();
        placed[start] = true;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            let v = order[i];
            for w in g.neighbors(v).iter() {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &sg, &sh, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &LabeledGraph,
    h: &LabeledGraph,
    sg: &[(usize, Vec<usize>)],
    sh: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for c in 0..h.n() {
        if used[c] || sh[c] != sg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], c));
        if !consistent {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend(g, h, sg, sh, order, depth + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    find_isomorphism(g, h).is_some()
}
