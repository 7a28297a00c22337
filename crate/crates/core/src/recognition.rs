//! Chordal and strongly chordal recognition with certificates.
//!
//! Chordality goes through maximum cardinality search; a failure is turned
//! into an explicit chordless cycle. Strong chordality is decided by greedy
//! deletion of simple vertices, and separately by the even-cycle/odd-chord
//! definition on small graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSet};

/// A permutation of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder(Vec<usize>);

impl EliminationOrder {
    pub fn new(g: &LabeledGraph, order: Vec<usize>) -> Result<EliminationOrder> {
        let mut seen = VertexSet::new(g.n());
        if order.len() != g.n() || !order.iter().all(|&v| v < g.n() && seen.insert(v)) {
            return Err(Error::NotAPermutation);
        }
        Ok(EliminationOrder(order))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn reversed(&self) -> EliminationOrder {
        EliminationOrder(self.0.iter().rev().copied().collect())
    }
}

/// Maximum cardinality search. Ties go to the lowest id. When `g` is
/// chordal, the reverse of the visit order is a perfect elimination ordering.
pub fn mcs_order(g: &LabeledGraph) -> EliminationOrder {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    EliminationOrder(order)
}

/// First vertex (in order) whose later neighbours are not a clique, together
/// with two non-adjacent later neighbours.
pub fn peo_violation(g: &LabeledGraph, order: &[usize]) -> Result<Option<[usize; 3]>> {
    let order = EliminationOrder::new(g, order.to_vec())?;
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.as_slice().iter().enumerate() {
        pos[v] = i;
    }
    for &v in order.as_slice() {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !g.has_edge(a, b) {
                    return Ok(Some([v, a, b]));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_peo(g: &LabeledGraph, order: &[usize]) -> Result<bool> {
    Ok(peo_violation(g, order)?.is_none())
}

/// Outcome of chordality recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering.
    Chordal(EliminationOrder),
    /// Vertices of a chordless cycle of length at least 4, in cycle order.
    InducedCycle(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

pub fn chordality(g: &LabeledGraph) -> Chordality {
    let peo = mcs_order(g).reversed();
    if is_peo(g, peo.as_slice()).expect("mcs returns a permutation") {
        return Chordality::Chordal(peo);
    }
    Chordality::InducedCycle(find_chordless_cycle(g).expect("graph without a PEO has a long induced cycle"))
}

pub fn is_chordal(g: &LabeledGraph) -> bool {
    chordality(g).is_chordal()
}

/// Any vertex of a chordless cycle of length >= 4 has two non-adjacent cycle
/// neighbours joined by a path avoiding the rest of its closed neighbourhood,
/// so trying every such pair with a shortest-path search finds one.
fn find_chordless_cycle(g: &LabeledGraph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nv: Vec<usize> = g.neighbors(v).iter().collect();
        for (i, &a) in nv.iter().enumerate() {
            for &b in &nv[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut allowed = g.all_vertices().difference(&g.closed_neighbors(v));
                allowed.insert(a);
                allowed.insert(b);
                if let Some(path) = shortest_path(g, a, b, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &LabeledGraph, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x).iter() {
            if allowed.contains(y) && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

fn is_simple_within(g: &LabeledGraph, v: usize, alive: &VertexSet) -> bool {
    let closed = |w: usize| g.closed_neighbors(w).intersection(alive);
    let mut hoods: Vec<VertexSet> = closed(v).iter().map(closed).collect();
    hoods.sort_by_key(VertexSet::len);
    hoods.windows(2).all(|w| w[0].is_subset(&w[1]))
}

/// Whether the closed neighbourhoods of the members of N[v] form a chain
/// under inclusion.
pub fn is_simple_vertex(g: &LabeledGraph, v: usize) -> bool {
    is_simple_within(g, v, &g.all_vertices())
}

/// Greedy simple elimination: repeatedly delete the lowest-id vertex that is
/// simple in what remains. `None` when some remaining graph has no simple
/// vertex.
pub fn find_simple_elimination_order(g: &LabeledGraph) -> Option<EliminationOrder> {
    match strong_chordality(g) {
        StrongChordality::Strong(order) => Some(order),
        StrongChordality::NoSimpleVertex(_) => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongChordality {
    /// A simple elimination ordering.
    Strong(EliminationOrder),
    /// A vertex set whose induced subgraph has no simple vertex.
    NoSimpleVertex(Vec<usize>),
}

/// Greedy simple elimination; when it gets stuck, the remaining vertices
/// certify that no simple elimination ordering exists.
pub fn strong_chordality(g: &LabeledGraph) -> StrongChordality {
    let mut alive = g.all_vertices();
    let mut order = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let Some(v) = alive.iter().find(|&v| is_simple_within(g, v, &alive)) else {
            return StrongChordality::NoSimpleVertex(alive.to_vec());
        };
        alive.remove(v);
        order.push(v);
    }
    StrongChordality::Strong(EliminationOrder(order))
}

/// Whether no vertex of `G[set]` is simple there.
pub fn has_no_simple_vertex(g: &LabeledGraph, set: &[usize]) -> bool {
    let alive = g.vertex_set(set.iter().copied());
    !set.is_empty() && set.iter().all(|&v| !is_simple_within(g, v, &alive))
}

/// Whether every vertex is simple in the subgraph induced by itself and the
/// vertices after it.
pub fn is_simple_elimination_order(g: &LabeledGraph, order: &[usize]) -> Result<bool> {
    let order = EliminationOrder::new(g, order.to_vec())?;
    let mut alive = g.all_vertices();
    for &v in order.as_slice() {
        if !is_simple_within(g, v, &alive) {
            return Ok(false);
        }
        alive.remove(v);
    }
    Ok(true)
}

pub fn is_strongly_chordal(g: &LabeledGraph) -> bool {
    is_chordal(g) && find_simple_elimination_order(g).is_some()
}

/// Largest graph the cycle-enumerating definition check accepts.
pub const DEFINITIONAL_CAP: usize = 14;

/// Strong chordality straight from the definition: no chordless cycle of
/// length >= 4, and every even cycle of length >= 6 has a chord joining two
/// vertices at odd distance along the cycle. Enumerates every cycle.
pub fn is_strongly_chordal_definitional(g: &LabeledGraph) -> Result<bool> {
    let n = g.n();
    if n > DEFINITIONAL_CAP {
        return Err(Error::CapExceeded {
            what: "definitional strong chordality",
            size: n,
            cap: DEFINITIONAL_CAP,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.clear();
        path.push(s);
        if !cycles_ok(&adj, s, 1 << s, &mut path) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Depth-first enumeration of cycles whose minimum vertex is `path[0]`;
/// returns false on the first offending cycle.
fn cycles_ok(adj: &[u32], s: usize, used: u32, path: &mut Vec<usize>) -> bool {
    let end = *path.last().unwrap();
    if path.len() >= 3 && adj[end] & (1 << s) != 0 && path[1] < end && !cycle_ok(adj, path) {
        return false;
    }
    let mut next = adj[end] & !used & !((1u32 << (s + 1)) - 1);
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        path.push(w);
        let ok = cycles_ok(adj, s, used | 1 << w, path);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn cycle_ok(adj: &[u32], cycle: &[usize]) -> bool {
    let len = cycle.len();
    let mut any_chord = false;
    let mut odd_chord = false;
    for i in 0..len {
        for j in i + 2..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            if adj[cycle[i]] & (1 << cycle[j]) != 0 {
                any_chord = true;
                if (j - i) % 2 == 1 {
                    odd_chord = true;
                }
            }
        }
    }
    if len >= 4 && !any_chord {
        return false;
    }
    !(len >= 6 && len.is_multiple_of(2) && !odd_chord)
}

/// Whether the five vertices induce a bull: a triangle with pendant vertices
/// at two of its corners.
pub fn induces_bull(g: &LabeledGraph, set: &[usize; 5]) -> bool {
    let mut degrees = [0usize; 5];
    let mut edges = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            if g.has_edge(set[i], set[j]) {
                degrees[i] += 1;
                degrees[j] += 1;
                edges += 1;
            }
        }
    }
    degrees.sort_unstable();
    edges == 5 && degrees == [1, 1, 2, 3, 3]
}

/// First induced bull in lexicographic order of vertex 5-sets.
pub fn find_bull(g: &LabeledGraph) -> Option<[usize; 5]> {
    let n = g.n();
    let mut set = [0usize; 5];
    fn rec(g: &LabeledGraph, n: usize, depth: usize, start: usize, set: &mut [usize; 5]) -> bool {
        if depth == 5 {
            return induces_bull(g, set);
        }
        for v in start..n {
            set[depth] = v;
            if rec(g, n, depth + 1, v + 1, set) {
                return true;
            }
        }
        false
    }
    rec(g, n, 0, 0, &mut set).then_some(set)
}

pub fn is_bull_free(g: &LabeledGraph) -> bool {
    find_bull(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_gk, build_hk, build_jk, HkSpec};
    use crate::graph::Role;

    fn sun3() -> LabeledGraph {
        LabeledGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
        )
        .unwrap()
    }

    fn displayed_order(g: &LabeledGraph, k: usize) -> Vec<usize> {
        let mut roles = Vec::new();
        roles.extend((1..=k).map(Role::U));
        roles.extend((1..=k).map(Role::V));
        roles.extend((1..=k).map(Role::X));
        roles.push(Role::Z);
        roles.into_iter().map(|r| g.expect_vertex(r)).collect()
    }

    #[test]
    fn mcs_on_small_graphs() {
        let k5 = LabeledGraph::complete(5);
        assert!(is_peo(&k5, mcs_order(&k5).reversed().as_slice()).unwrap());
        let c4 = LabeledGraph::cycle(4);
        assert!(!is_peo(&c4, mcs_order(&c4).reversed().as_slice()).unwrap());
        let g3 = build_gk(3).unwrap();
        assert!(is_peo(&g3, mcs_order(&g3).reversed().as_slice()).unwrap());
    }

    #[test]
    fn peo_checks() {
        let p3 = LabeledGraph::path(3);
        assert!(is_peo(&p3, &[0, 1, 2]).unwrap());
        let c4 = LabeledGraph::cycle(4);
        for order in [[0, 1, 2, 3], [1, 3, 0, 2], [3, 2, 1, 0]] {
            assert!(!is_peo(&c4, &order).unwrap());
        }
        assert_eq!(is_peo(&p3, &[0, 1]), Err(Error::NotAPermutation));
        assert_eq!(is_peo(&p3, &[0, 1, 1]), Err(Error::NotAPermutation));
        assert_eq!(peo_violation(&p3, &[1, 0, 2]).unwrap(), Some([1, 0, 2]));
    }

    #[test]
    fn chordality_certificates() {
        match chordality(&LabeledGraph::cycle(5)) {
            Chordality::InducedCycle(c) => {
                assert_eq!(c.len(), 5);
                let mut s = c.clone();
                s.sort_unstable();
                assert_eq!(s, vec![0, 1, 2, 3, 4]);
            }
            other => panic!("{other:?}"),
        }
        let h = build_hk(&HkSpec::triangles(3).unwrap()).unwrap();
        assert!(is_chordal(&h));
        assert!(is_chordal(&crate::constructions::build_s(3).unwrap()));
    }

    #[test]
    fn stuck_elimination_is_certified() {
        match strong_chordality(&sun3()) {
            StrongChordality::NoSimpleVertex(rest) => {
                assert_eq!(rest, vec![0, 1, 2, 3, 4, 5]);
                assert!(has_no_simple_vertex(&sun3(), &rest));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            strong_chordality(&build_gk(3).unwrap()),
            StrongChordality::Strong(_)
        ));
    }

    #[test]
    fn simple_vertices() {
        let k4 = LabeledGraph::complete(4);
        assert!((0..4).all(|v| is_simple_vertex(&k4, v)));
        let g3 = build_gk(3).unwrap();
        assert!(is_simple_vertex(&g3, g3.expect_vertex(Role::U(1))));
        assert!(!is_simple_vertex(&LabeledGraph::path(3), 1));
        assert!(is_simple_vertex(&LabeledGraph::path(3), 0));
    }

    #[test]
    fn displayed_order_is_simple() {
        for k in 3..=6 {
            let g = build_gk(k).unwrap();
            assert!(is_simple_elimination_order(&g, &displayed_order(&g, k)).unwrap(), "k={k}");
        }
        assert!(find_simple_elimination_order(&LabeledGraph::cycle(6)).is_none());
    }

    #[test]
    fn pasted_vertices_first_then_displayed_order() {
        let h = build_hk(&HkSpec::triangles(3).unwrap()).unwrap();
        let mut order: Vec<usize> = (10..h.n()).collect();
        order.extend(displayed_order(&h, 3));
        assert!(is_simple_elimination_order(&h, &order).unwrap());
        let greedy = find_simple_elimination_order(&h).unwrap();
        assert!(is_simple_elimination_order(&h, greedy.as_slice()).unwrap());
    }

    #[test]
    fn strong_chordality_matches_definition() {
        for k in 1..=6 {
            assert!(is_strongly_chordal(&build_gk(k).unwrap()), "k={k}");
        }
        assert!(is_strongly_chordal(&build_jk(3, &[3; 5], 6).unwrap()));
        let sun = sun3();
        assert!(is_chordal(&sun));
        assert!(!is_strongly_chordal(&sun));
        assert!(!is_strongly_chordal_definitional(&sun).unwrap());
        assert!(is_strongly_chordal_definitional(&build_gk(3).unwrap()).unwrap());
        assert!(!is_strongly_chordal_definitional(&LabeledGraph::cycle(4)).unwrap());
        assert!(is_strongly_chordal_definitional(&LabeledGraph::empty(15)).is_err());
    }

    #[test]
    fn bulls() {
        assert!(is_bull_free(&LabeledGraph::complete(5)));
        assert!(is_bull_free(&LabeledGraph::path(5)));
        let bull = LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        assert_eq!(find_bull(&bull), Some([0, 1, 2, 3, 4]));
        let h = build_hk(&HkSpec::triangles(3).unwrap()).unwrap();
        let w = find_bull(&h).expect("pasted graph contains a bull");
        assert!(induces_bull(&h, &w));
    }

    #[test]
    fn bull_through_both_x1_cliques() {
        let h = build_hk(&HkSpec::triangles(3).unwrap()).unwrap();
        let r = |role| h.expect_vertex(role);
        // heavy edges: 0 = x1u1, 1 = x2u2, 3 = x1v1
        let w_u1 = r(Role::Pasted { edge: 0, copy: 1 });
        let w_u2 = r(Role::Pasted { edge: 1, copy: 1 });
        let y = r(Role::Pasted { edge: 3, copy: 1 });
        let (u1, x1, x2) = (r(Role::U(1)), r(Role::X(1)), r(Role::X(2)));
        // the vertex pasted on x1u1 sees both u1 and x1, so this set has six edges
        assert!(!induces_bull(&h, &[u1, x1, x2, w_u1, y]));
        // with the vertex pasted on x2u2 instead, triangle u1x1x2 gets two horns
        assert!(induces_bull(&h, &[u1, x1, x2, w_u2, y]));
    }
}
