//! Labeled simple graphs, cycles, and the construction primitives the
//! generators are assembled from (join, clique pasting, contraction).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Fixed-capacity bitset over vertex ids.
#[derive(Clone, Debug, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_members(other)
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let used = self.words.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
        self.words[..used].hash(state);
    }
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(capacity: usize, items: I) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in items {
            s.insert(v);
        }
        s
    }

    fn ensure(&mut self, v: usize) {
        let w = v / 64 + 1;
        if self.words.len() < w {
            self.words.resize(w, 0);
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.ensure(v);
        let had = self.contains(v);
        self.words[v / 64] |= 1 << (v % 64);
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let had = self.contains(v);
        if had {
            self.words[v / 64] &= !(1 << (v % 64));
        }
        had
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words.get(v / 64).is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().enumerate().all(|(i, &w)| w & !other.word(i) == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().enumerate().any(|(i, &w)| w & other.word(i) != 0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            words: self.words.iter().enumerate().map(|(i, &w)| w & other.word(i)).collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let len = self.words.len().max(other.words.len());
        VertexSet {
            words: (0..len).map(|i| self.word(i) | other.word(i)).collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, &w)| w & !other.word(i))
                .collect(),
        }
    }

    /// Same members, regardless of word capacity.
    pub fn same_members(&self, other: &VertexSet) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

/// Side of the blow-up a part belongs to: `U(i)` is the clique F_i (and its
/// independent set T_i), `V(i)` is F'_i (and T'_i).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    U(usize),
    V(usize),
}

/// Name carried by a vertex of a generated graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    X(usize),
    U(usize),
    V(usize),
    Z,
    /// Interior vertex of the clique pasted on heavy edge `edge` (index into
    /// `heavy_edges`), copy number `copy` starting at 1.
    Pasted {
        edge: usize,
        copy: usize,
    },
    BlowupClique {
        part: Part,
        index: usize,
    },
    BlowupIndependent {
        part: Part,
        index: usize,
    },
    XExtra(usize),
    Plain,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |p: &Part| match p {
            Part::U(i) => ("", *i),
            Part::V(i) => ("'", *i),
        };
        match self {
            Role::X(i) => write!(f, "x{i}"),
            Role::U(i) => write!(f, "u{i}"),
            Role::V(i) => write!(f, "v{i}"),
            Role::Z => write!(f, "z"),
            Role::Pasted { edge, copy } => write!(f, "w{edge}.{copy}"),
            Role::BlowupClique { part: p, index } => {
                let (prime, i) = part(p);
                write!(f, "F{prime}{i}.{index}")
            }
            Role::BlowupIndependent { part: p, index } => {
                let (prime, i) = part(p);
                write!(f, "T{prime}{i}.{index}")
            }
            Role::XExtra(i) => write!(f, "X{i}"),
            Role::Plain => write!(f, "-"),
        }
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Role> {
        let bad = || Error::Sidecar(format!("unrecognized role tag {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let pair = |t: &str| -> Result<(usize, usize)> {
            let (a, b) = t.split_once('.').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        let blowup = |t: &str| -> Result<(Part, usize)> {
            let (prime, rest) = match t.strip_prefix('\'') {
                Some(r) => (true, r),
                None => (false, t),
            };
            let (i, index) = pair(rest)?;
            Ok((if prime { Part::V(i) } else { Part::U(i) }, index))
        };
        if s == "z" {
            return Ok(Role::Z);
        }
        if s == "-" {
            return Ok(Role::Plain);
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        match head {
            'x' => Ok(Role::X(num(rest)?)),
            'u' => Ok(Role::U(num(rest)?)),
            'v' => Ok(Role::V(num(rest)?)),
            'X' => Ok(Role::XExtra(num(rest)?)),
            'w' => {
                let (edge, copy) = pair(rest)?;
                Ok(Role::Pasted { edge, copy })
            }
            'F' => {
                let (part, index) = blowup(rest)?;
                Ok(Role::BlowupClique { part, index })
            }
            'T' => {
                let (part, index) = blowup(rest)?;
                Ok(Role::BlowupIndependent { part, index })
            }
            _ => Err(bad()),
        }
    }
}

/// Simple undirected graph on vertices `0..n` with role tags and a
/// distinguished set of heavy edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    rows: Vec<VertexSet>,
    roles: Vec<Role>,
    heavy: Vec<(usize, usize)>,
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Self {
        LabeledGraph {
            rows: vec![VertexSet::new(n); n],
            roles: vec![Role::Plain; n],
            heavy: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = LabeledGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = LabeledGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = LabeledGraph::empty(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = LabeledGraph::path(n);
        if n >= 3 {
            g.link(0, n - 1);
        }
        g
    }

    /// Disjoint union; `other`'s ids are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &LabeledGraph) -> LabeledGraph {
        let n0 = self.n();
        let n = n0 + other.n();
        let mut g = LabeledGraph::empty(n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + n0, v + n0);
        }
        g.roles = self.roles.iter().chain(other.roles.iter()).copied().collect();
        g.heavy = self
            .heavy
            .iter()
            .copied()
            .chain(other.heavy.iter().map(|&(u, v)| (u + n0, v + n0)))
            .collect();
        g
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    fn link(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.link(u, v);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
        self.heavy.retain(|&e| e != norm(u, v));
    }

    pub(crate) fn add_vertex(&mut self, role: Role) -> usize {
        let id = self.n();
        self.rows.push(VertexSet::new(id + 1));
        self.roles.push(role);
        id
    }

    pub(crate) fn set_role(&mut self, v: usize, role: Role) {
        self.roles[v] = role;
    }

    pub(crate) fn add_heavy_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let e = norm(u, v);
        if !self.heavy.contains(&e) {
            self.heavy.push(e);
        }
        Ok(())
    }

    /// Copy of this graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<LabeledGraph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Copy of this graph with new roles and heavy edges attached.
    pub fn with_labels(&self, roles: Vec<Role>, heavy: &[(usize, usize)]) -> Result<LabeledGraph> {
        if roles.len() != self.n() {
            return Err(Error::Sidecar(format!(
                "{} roles for {} vertices",
                roles.len(),
                self.n()
            )));
        }
        let mut g = self.clone();
        g.roles = roles;
        g.heavy.clear();
        for &(u, v) in heavy {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            g.add_heavy_edge(u, v)?;
        }
        g.validate()?;
        Ok(g)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    /// Vertex carrying `role`, if any.
    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    /// Like [`vertex`](Self::vertex) for roles a generator guarantees.
    pub fn expect_vertex(&self, role: Role) -> usize {
        self.vertex(role)
            .unwrap_or_else(|| panic!("no vertex with role {role}"))
    }

    pub fn heavy_edges(&self) -> &[(usize, usize)] {
        &self.heavy
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, items: I) -> VertexSet {
        VertexSet::from_iter(self.n(), items)
    }

    /// Induced subgraph on `set`; vertex `i` of the result is the `i`-th
    /// smallest member of `set`. Returns the id map alongside.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (LabeledGraph, Vec<usize>) {
        let ids: Vec<usize> = set.iter().filter(|&v| v < self.n()).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = LabeledGraph::empty(ids.len());
        for (i, &v) in ids.iter().enumerate() {
            for w in self.rows[v].iter() {
                if pos[w] != usize::MAX && pos[w] > i {
                    g.link(i, pos[w]);
                }
            }
            g.roles[i] = self.roles[v];
        }
        g.heavy = self
            .heavy
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| norm(pos[u], pos[v]))
            .collect();
        (g, ids)
    }

    /// Whether `set` induces a connected subgraph (the empty set does not).
    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        let mut seen = VertexSet::new(self.n());
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.rows[v].iter() {
                if set.contains(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == set.len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.is_connected_within(&self.all_vertices())
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let members: Vec<usize> = set.iter().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Checks adjacency symmetry and irreflexivity, that heavy edges are
    /// edges, and that every non-plain role tag is used at most once.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.roles.len() != n {
            return Err(Error::InvalidParameter("role table size mismatch".into()));
        }
        for u in 0..n {
            if self.rows[u].contains(u) {
                return Err(Error::SelfLoop(u));
            }
            for v in self.rows[u].iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if !self.rows[v].contains(u) {
                    return Err(Error::InvalidParameter(format!("asymmetric adjacency {u}->{v}")));
                }
            }
        }
        for &(u, v) in &self.heavy {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        let mut seen = BTreeSet::new();
        for r in &self.roles {
            if *r != Role::Plain && !seen.insert(*r) {
                return Err(Error::InvalidParameter(format!("duplicate role {r}")));
            }
        }
        Ok(())
    }

    /// Adjacency-only equality (roles and heavy edges ignored).
    pub fn same_adjacency(&self, other: &LabeledGraph) -> bool {
        self.n() == other.n() && (0..self.n()).all(|v| self.rows[v].same_members(&other.rows[v]))
    }

    /// Role name of `v`, falling back to its id.
    pub fn name(&self, v: usize) -> String {
        match self.roles[v] {
            Role::Plain => v.to_string(),
            r => r.to_string(),
        }
    }
}

/// G ∨ H: disjoint union plus every edge between the two sides.
pub fn join(g: &LabeledGraph, h: &LabeledGraph) -> LabeledGraph {
    let mut out = g.disjoint_union(h);
    let n0 = g.n();
    for u in 0..n0 {
        for v in 0..h.n() {
            out.link(u, v + n0);
        }
    }
    out
}

/// Pastes a copy of K_r onto edge `e`: `r - 2` fresh vertices adjacent to each
/// other and to both ends of `e`. New vertices are tagged `Pasted` when `e` is
/// heavy and `Plain` otherwise.
pub fn paste_clique(g: &LabeledGraph, e: (usize, usize), r: usize) -> Result<LabeledGraph> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("clique order {r} < 2")));
    }
    let (a, b) = e;
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    let heavy_index = g.heavy.iter().position(|&h| h == norm(a, b));
    let mut out = g.clone();
    let first = out.n();
    for copy in 1..=r - 2 {
        let role = match heavy_index {
            Some(edge) => Role::Pasted { edge, copy },
            None => Role::Plain,
        };
        let w = out.add_vertex(role);
        out.link(w, a);
        out.link(w, b);
        for prev in first..w {
            out.link(prev, w);
        }
    }
    Ok(out)
}

/// Quotient graph of a partition into connected parts: part `i` becomes
/// vertex `i`; parts are adjacent when any cross edge joins them. Singleton
/// parts keep their role; merged parts become `Plain`.
pub fn contract_parts(g: &LabeledGraph, parts: &[Vec<usize>]) -> Result<LabeledGraph> {
    quotient(g, parts, true)
}

/// Like [`contract_parts`] but parts need not be connected, so independent
/// sets can be identified to a single vertex.
pub fn identify_parts(g: &LabeledGraph, parts: &[Vec<usize>]) -> Result<LabeledGraph> {
    quotient(g, parts, false)
}

fn quotient(g: &LabeledGraph, parts: &[Vec<usize>], connected: bool) -> Result<LabeledGraph> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::NotAPartition(format!("part {i} is empty")));
        }
        for &v in part {
            g.check_vertex(v)?;
            if owner[v] != usize::MAX {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
    }
    for (i, part) in parts.iter().enumerate().filter(|_| connected) {
        if !g.is_connected_within(&g.vertex_set(part.iter().copied())) {
            return Err(Error::DisconnectedPart(i));
        }
    }
    let mut out = LabeledGraph::empty(parts.len());
    for (u, v) in g.edges() {
        let (a, b) = (owner[u], owner[v]);
        if a != b {
            out.link(a, b);
        }
    }
    for (i, part) in parts.iter().enumerate() {
        if part.len() == 1 {
            out.roles[i] = g.roles[part[0]];
        }
    }
    for &(u, v) in &g.heavy {
        let (a, b) = (owner[u], owner[v]);
        if a != b {
            let e = norm(a, b);
            if !out.heavy.contains(&e) {
                out.heavy.push(e);
            }
        }
    }
    Ok(out)
}

/// A cycle given by its cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Validates that `seq` is a cycle of `g`: at least three distinct
    /// vertices, consecutive ones adjacent, last adjacent to first.
    pub fn new(g: &LabeledGraph, seq: Vec<usize>) -> Result<Cycle> {
        if seq.len() < 3 {
            return Err(Error::InvalidCycle(format!("length {} < 3", seq.len())));
        }
        let mut seen = VertexSet::new(g.n());
        for &v in &seq {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
            }
        }
        for i in 0..seq.len() {
            let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidCycle(format!("{a}-{b} is not an edge")));
            }
        }
        Ok(Cycle(seq))
    }

    /// Orders an edge set forming a single cycle, starting at its smallest
    /// vertex and heading to the smaller of that vertex's two neighbours.
    pub fn from_edges(g: &LabeledGraph, edges: &[(usize, usize)]) -> Result<Cycle> {
        let mut incident: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &(u, v) in edges {
            incident.entry(u).or_default().push(v);
            incident.entry(v).or_default().push(u);
        }
        if let Some((v, ns)) = incident.iter().find(|(_, ns)| ns.len() != 2) {
            return Err(Error::InvalidCycle(format!(
                "vertex {v} has degree {} in the edge set",
                ns.len()
            )));
        }
        let Some((&start, first)) = incident.iter().next() else {
            return Err(Error::InvalidCycle("empty edge set".into()));
        };
        let mut seq = vec![start];
        let mut prev = start;
        let mut cur = *first.iter().min().unwrap();
        while cur != start {
            seq.push(cur);
            let ns = &incident[&cur];
            let next = if ns[0] == prev { ns[1] } else { ns[0] };
            prev = cur;
            cur = next;
            if seq.len() > incident.len() {
                break;
            }
        }
        if seq.len() != incident.len() {
            return Err(Error::InvalidCycle("edge set is not a single cycle".into()));
        }
        Cycle::new(g, seq)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.0.iter().copied())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.0.len()).map(move |i| norm(self.0[i], self.0[(i + 1) % self.0.len()]))
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges().any(|e| e == norm(u, v))
    }

    pub fn contains_all_heavy(&self, g: &LabeledGraph) -> bool {
        g.heavy_edges().iter().all(|&(u, v)| self.contains_edge(u, v))
    }
}
