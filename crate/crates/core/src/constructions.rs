//! Generators for the counterexample families and the witness cycles their
//! correctness arguments are built on.
//!
//! Vertex ids follow construction order. For the base graph `G_k` the ids are
//! `x_1..x_k`, then the path `u_1..u_k, z, v_k..v_1`. Every later family
//! appends its new vertices after the ones it starts from, so a `G_k` id is
//! valid in every graph derived from it.

use crate::error::{Error, Result};
use crate::graph::{join, paste_clique, Cycle, LabeledGraph, Part, Role};

/// Parameters of a member of the pasted family: the base order `k` and one
/// clique order per heavy edge, in the order x_1u_1..x_ku_k, x_1v_1..x_{k-1}v_{k-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkSpec {
    pub k: usize,
    pub clique_sizes: Vec<usize>,
}

impl HkSpec {
    pub fn new(k: usize, clique_sizes: Vec<usize>) -> Result<HkSpec> {
        let spec = HkSpec { k, clique_sizes };
        spec.validate()?;
        Ok(spec)
    }

    /// Every heavy edge gets a triangle.
    pub fn triangles(k: usize) -> Result<HkSpec> {
        HkSpec::new(k, vec![3; (2 * k).saturating_sub(1)])
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 3 {
            return Err(Error::InvalidParameter(format!("k = {} < 3", self.k)));
        }
        if self.clique_sizes.len() != 2 * self.k - 1 {
            return Err(Error::InvalidParameter(format!(
                "{} clique sizes given, {} heavy edges",
                self.clique_sizes.len(),
                2 * self.k - 1
            )));
        }
        if let Some(r) = self.clique_sizes.iter().find(|&&r| r < 3) {
            return Err(Error::InvalidParameter(format!("pasted clique order {r} < 3")));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        3 * self.k + 1 + self.clique_sizes.iter().map(|r| r - 2).sum::<usize>()
    }
}

fn x(k: usize, i: usize) -> usize {
    debug_assert!((1..=k).contains(&i));
    i - 1
}

fn u(k: usize, i: usize) -> usize {
    k + i - 1
}

fn z(k: usize) -> usize {
    2 * k
}

fn v(k: usize, i: usize) -> usize {
    3 * k + 1 - i
}

/// The base graph K_k ∨ P_{2k+1} with its heavy edges.
pub fn build_gk(k: usize) -> Result<LabeledGraph> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut g = join(&LabeledGraph::complete(k), &LabeledGraph::path(2 * k + 1));
    for i in 1..=k {
        g.set_role(x(k, i), Role::X(i));
        g.set_role(u(k, i), Role::U(i));
        g.set_role(v(k, i), Role::V(i));
    }
    g.set_role(z(k), Role::Z);
    for i in 1..=k {
        g.add_heavy_edge(x(k, i), u(k, i))?;
    }
    for i in 1..k {
        g.add_heavy_edge(x(k, i), v(k, i))?;
    }
    debug_assert!(g.validate().is_ok());
    Ok(g)
}

/// u_1..u_k, v_1..v_k, x_1..x_k, z: a simple elimination ordering of the
/// base graph, as vertex ids of any graph carrying the base roles.
pub fn base_elimination_order(g: &LabeledGraph, k: usize) -> Result<Vec<usize>> {
    let mut roles: Vec<Role> = (1..=k).map(Role::U).collect();
    roles.extend((1..=k).map(Role::V));
    roles.extend((1..=k).map(Role::X));
    roles.push(Role::Z);
    roles
        .into_iter()
        .map(|r| {
            g.vertex(r)
                .ok_or_else(|| Error::InvalidParameter(format!("no vertex tagged {r}")))
        })
        .collect()
}

/// Pasted clique interiors first (by id), then [`base_elimination_order`].
pub fn pasted_elimination_order(g: &LabeledGraph, k: usize) -> Result<Vec<usize>> {
    let mut order: Vec<usize> = (0..g.n())
        .filter(|&v| matches!(g.role(v), Role::Pasted { .. }))
        .collect();
    order.extend(base_elimination_order(g, k)?);
    Ok(order)
}

fn paste_all(mut g: LabeledGraph, sizes: &[usize]) -> Result<LabeledGraph> {
    let heavy = g.heavy_edges().to_vec();
    debug_assert_eq!(heavy.len(), sizes.len());
    for (&e, &r) in heavy.iter().zip(sizes) {
        g = paste_clique(&g, e, r)?;
    }
    Ok(g)
}

/// Base graph with a clique pasted onto every heavy edge.
pub fn build_hk(spec: &HkSpec) -> Result<LabeledGraph> {
    spec.validate()?;
    paste_all(build_gk(spec.k)?, &spec.clique_sizes)
}

/// [`build_hk`] plus the chord u_1u_3.
pub fn build_h_plus(spec: &HkSpec) -> Result<LabeledGraph> {
    let h = build_hk(spec)?;
    let k = spec.k;
    h.with_edge(u(k, 1), u(k, 3))
}

/// The base graph plus the chord u_1u_3, without pasted cliques.
pub fn build_gk_plus(k: usize) -> Result<LabeledGraph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k = {k} < 3")));
    }
    build_gk(k)?.with_edge(u(k, 1), u(k, 3))
}

/// Layout of the blow-up graph produced by [`build_s`].
#[derive(Clone, Debug)]
pub struct BlowupParts {
    pub x: Vec<usize>,
    /// Cliques F_1..F_{k-1}, each listed v_{i,1}..v_{i,k-1}.
    pub f: Vec<Vec<usize>>,
    /// Cliques F'_1..F'_{k-2}.
    pub f_prime: Vec<Vec<usize>>,
    pub t: Vec<Vec<usize>>,
    pub t_prime: Vec<Vec<usize>>,
    pub z: usize,
    pub v_k: usize,
}

impl BlowupParts {
    /// Partition whose quotient contracts every F, F', T, T' to a vertex.
    pub fn contraction(&self, with_t: bool) -> Vec<Vec<usize>> {
        let mut parts: Vec<Vec<usize>> = self.x.iter().map(|&v| vec![v]).collect();
        parts.extend(self.f.iter().cloned());
        parts.extend(self.f_prime.iter().cloned());
        parts.push(vec![self.z]);
        parts.push(vec![self.v_k]);
        if with_t {
            parts.extend(self.t.iter().cloned());
            parts.extend(self.t_prime.iter().cloned());
        }
        parts
    }
}

/// The clique chain Q joined with Z = K_{k-1} on x_1..x_{k-1}, before the
/// independent sets are attached. Returns the graph and its layout (with
/// empty `t`, `t_prime`).
pub fn build_r(k: usize) -> Result<(LabeledGraph, BlowupParts)> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k = {k} < 3")));
    }
    let c = k - 1;
    let mut g = LabeledGraph::empty(0);
    let x: Vec<usize> = (1..k).map(|i| g.add_vertex(Role::X(i))).collect();
    for (a, &xa) in x.iter().enumerate() {
        for &xb in &x[a + 1..] {
            g.add_edge(xa, xb)?;
        }
    }
    let clique = |g: &mut LabeledGraph, part: Part| -> Result<Vec<usize>> {
        let ids: Vec<usize> = (1..=c)
            .map(|index| g.add_vertex(Role::BlowupClique { part, index }))
            .collect();
        for (a, &p) in ids.iter().enumerate() {
            for &q in &ids[a + 1..] {
                g.add_edge(p, q)?;
            }
        }
        Ok(ids)
    };
    let mut f = Vec::new();
    for i in 1..k {
        f.push(clique(&mut g, Part::U(i))?);
    }
    let zv = g.add_vertex(Role::Z);
    let v_k = g.add_vertex(Role::V(k));
    let mut f_prime = vec![Vec::new(); k - 2];
    for i in (1..k - 1).rev() {
        f_prime[i - 1] = clique(&mut g, Part::V(i))?;
    }
    // chain F_1 .. F_{k-1}, z, v_k, F'_{k-2} .. F'_1
    for i in 0..c - 1 {
        g.add_edge(f[i][c - 1], f[i + 1][0])?;
    }
    g.add_edge(f[c - 1][c - 1], zv)?;
    g.add_edge(zv, v_k)?;
    g.add_edge(v_k, f_prime[k - 3][0])?;
    for i in (1..k - 2).rev() {
        g.add_edge(f_prime[i][c - 1], f_prime[i - 1][0])?;
    }
    let q_end = g.n();
    for &xa in &x {
        for w in x.len()..q_end {
            g.add_edge(xa, w)?;
        }
    }
    let parts = BlowupParts {
        x,
        f,
        f_prime,
        t: Vec::new(),
        t_prime: Vec::new(),
        z: zv,
        v_k,
    };
    Ok((g, parts))
}

/// The (k-1)-clique blow-up with independent sets attached; its minimum
/// degree is `k`.
pub fn build_s_with_parts(k: usize) -> Result<(LabeledGraph, BlowupParts)> {
    let (mut g, mut parts) = build_r(k)?;
    let c = k - 1;
    let attach = |g: &mut LabeledGraph, part: Part, anchor: &[usize], xi: usize| -> Result<Vec<usize>> {
        let mut ids = Vec::new();
        for index in 1..=c {
            let t = g.add_vertex(Role::BlowupIndependent { part, index });
            for &a in anchor {
                g.add_edge(t, a)?;
            }
            g.add_edge(t, xi)?;
            ids.push(t);
        }
        Ok(ids)
    };
    for i in 1..k {
        let ids = attach(&mut g, Part::U(i), &parts.f[i - 1].clone(), parts.x[i - 1])?;
        parts.t.push(ids);
    }
    for i in 1..k - 1 {
        let ids = attach(&mut g, Part::V(i), &parts.f_prime[i - 1].clone(), parts.x[i - 1])?;
        parts.t_prime.push(ids);
    }
    debug_assert!(g.validate().is_ok());
    Ok((g, parts))
}

pub fn build_s(k: usize) -> Result<LabeledGraph> {
    build_s_with_parts(k).map(|(g, _)| g)
}

/// Base graph with the edge v_kz subdivided by `m` new vertices
/// v_{k+1}..v_{k+m}, each complete to x_1..x_k.
pub fn build_gkm(k: usize, m: usize) -> Result<LabeledGraph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k = {k} < 3")));
    }
    if m < 1 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut g = build_gk(k)?;
    g.remove_edge(v(k, k), z(k));
    let mut prev = v(k, k);
    for j in 1..=m {
        let w = g.add_vertex(Role::V(k + j));
        g.add_edge(prev, w)?;
        for i in 1..=k {
            g.add_edge(w, x(k, i))?;
        }
        prev = w;
    }
    g.add_edge(prev, z(k))?;
    debug_assert!(g.validate().is_ok());
    Ok(g)
}

pub fn build_hkm(k: usize, m: usize, clique_sizes: &[usize]) -> Result<LabeledGraph> {
    HkSpec::new(k, clique_sizes.to_vec())?;
    paste_all(build_gkm(k, m)?, clique_sizes)
}

/// [`build_hk`] with a clique of order `x_order` pasted onto x_1..x_k, z, v_k.
pub fn build_jk(k: usize, clique_sizes: &[usize], x_order: usize) -> Result<LabeledGraph> {
    let spec = HkSpec::new(k, clique_sizes.to_vec())?;
    if x_order < k + 3 {
        return Err(Error::InvalidParameter(format!(
            "x_order {x_order} < k + 3 = {}",
            k + 3
        )));
    }
    let mut g = build_hk(&spec)?;
    let mut base: Vec<usize> = (1..=k).map(|i| x(k, i)).collect();
    base.push(z(k));
    base.push(v(k, k));
    let first = g.n();
    for i in 1..=x_order - (k + 2) {
        let w = g.add_vertex(Role::XExtra(i));
        for &b in &base {
            g.add_edge(w, b)?;
        }
        for prev in first..w {
            g.add_edge(prev, w)?;
        }
    }
    Ok(g)
}

/// Member of the k = 3 family with cliques (3, 3, 3, 3, n - 12).
pub fn build_dn(n: usize) -> Result<LabeledGraph> {
    if n < 15 {
        return Err(Error::InvalidParameter(format!("n = {n} < 15")));
    }
    build_hk(&HkSpec::new(3, vec![3, 3, 3, 3, n - 12])?)
}

/// The three dense exceptional graphs:
/// 1. K_1 ∨ (K_1 ∪ K_{n-2}),
/// 2. K_2 ∨ complement(K_3) (n = 5 only),
/// 3. complement(K_2) ∨ (K_1 ∪ K_{n-3}).
pub fn build_hendry_exception(which: u8, n: usize) -> Result<LabeledGraph> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!("n = {n} < 5")));
    }
    let k1 = LabeledGraph::complete(1);
    match which {
        1 => Ok(join(&k1, &k1.disjoint_union(&LabeledGraph::complete(n - 2)))),
        2 if n == 5 => Ok(join(&LabeledGraph::complete(2), &LabeledGraph::empty(3))),
        2 => Err(Error::InvalidParameter(format!("exception 2 has 5 vertices, not {n}"))),
        3 => Ok(join(
            &LabeledGraph::empty(2),
            &k1.disjoint_union(&LabeledGraph::complete(n - 3)),
        )),
        _ => Err(Error::InvalidParameter(format!("no exception number {which}"))),
    }
}

/// Consecutive pairs (a_j, a_{j+1}) for j = from, from+2, .. while j+1 <= to.
fn pairs(from: usize, to: usize, vertex: impl Fn(usize) -> usize) -> Vec<(usize, usize)> {
    (from..to)
        .step_by(2)
        .filter(|&j| j < to)
        .map(|j| (vertex(j), vertex(j + 1)))
        .collect()
}

fn heavy_cycle_from(k: usize, mut extra: Vec<(usize, usize)>) -> Result<Cycle> {
    let g = build_gk(k)?;
    extra.extend_from_slice(g.heavy_edges());
    Cycle::from_edges(&g, &extra)
}

/// Hamiltonian cycle of `G_k` through every heavy edge.
///
/// Odd k: u_1u_2, u_3u_4, .., u_{k-2}u_{k-1}, u_kz, zv_k, v_kv_{k-1}, ..,
/// v_3v_2, v_1x_k. Even k: u_1x_k, u_2u_3, .., u_{k-2}u_{k-1}, u_kz, zv_k,
/// v_kv_{k-1}, .., v_2v_1.
pub fn witness_heavy_ham_cycle(k: usize) -> Result<Cycle> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut extra = vec![(u(k, k), z(k)), (z(k), v(k, k))];
    if k % 2 == 1 {
        extra.extend(pairs(1, k - 1, |j| u(k, j)));
        extra.extend(pairs(2, k, |j| v(k, j)));
        extra.push((v(k, 1), x(k, k)));
    } else {
        extra.push((u(k, 1), x(k, k)));
        extra.extend(pairs(2, k - 1, |j| u(k, j)));
        extra.extend(pairs(1, k, |j| v(k, j)));
    }
    heavy_cycle_from(k, extra)
}

/// Heavy cycle of `G_k` spanning everything except z and v_k.
///
/// Even k: u_1u_2, .., u_{k-1}u_k, v_{k-1}v_{k-2}, .., v_3v_2, v_1x_k.
/// Odd k: u_1x_k, u_2u_3, .., u_{k-1}u_k, v_{k-1}v_{k-2}, .., v_2v_1.
pub fn witness_long_heavy_cycle(k: usize) -> Result<Cycle> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k} < 2")));
    }
    let mut extra = Vec::new();
    if k.is_multiple_of(2) {
        extra.extend(pairs(1, k, |j| u(k, j)));
        extra.extend(pairs(2, k - 1, |j| v(k, j)));
        extra.push((v(k, 1), x(k, k)));
    } else {
        extra.push((u(k, 1), x(k, k)));
        extra.extend(pairs(2, k, |j| u(k, j)));
        extra.extend(pairs(1, k - 1, |j| v(k, j)));
    }
    heavy_cycle_from(k, extra)
}

/// Replaces every heavy edge of `cycle` by a path through the clique pasted
/// on it in `h`. `h` must extend the graph `cycle` lives in, with pasted
/// vertices tagged by heavy-edge index.
pub fn lift_cycle(cycle: &Cycle, h: &LabeledGraph) -> Result<Cycle> {
    for &(a, b) in h.heavy_edges() {
        if !cycle.contains_edge(a, b) {
            return Err(Error::MissingHeavyEdge(a, b));
        }
    }
    let mut pasted: Vec<Vec<(usize, usize)>> = vec![Vec::new(); h.heavy_edges().len()];
    for (w, role) in h.roles().iter().enumerate() {
        if let Role::Pasted { edge, copy } = *role {
            pasted[edge].push((copy, w));
        }
    }
    for p in &mut pasted {
        p.sort_unstable();
    }
    let seq = cycle.vertices();
    let mut out = Vec::with_capacity(seq.len());
    for i in 0..seq.len() {
        let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
        out.push(a);
        let key = if a < b { (a, b) } else { (b, a) };
        if let Some(e) = h.heavy_edges().iter().position(|&h| h == key) {
            out.extend(pasted[e].iter().map(|&(_, w)| w));
        }
    }
    Cycle::new(h, out)
}
