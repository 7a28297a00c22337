//! Subtree intersection models of chordal graphs.
//!
//! A model is a host tree plus one node set per graph vertex; it represents
//! `g` when every node set is a subtree and two vertices are adjacent exactly
//! when their subtrees meet.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::HkSpec;
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Role, VertexSet};
use crate::recognition::{chordality, Chordality};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostTree {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl HostTree {
    /// Builds a tree on `labels.len()` nodes; rejects anything that is not
    /// connected and acyclic.
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<HostTree> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidParameter("host tree needs a node".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidParameter(format!("bad host edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let tree = HostTree { adj, labels };
        if edges.len() != n - 1 || !tree.spans(&(0..n).collect::<Vec<_>>()) {
            return Err(Error::InvalidParameter("host edges do not form a tree".into()));
        }
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn node(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    /// Whether `nodes` is nonempty and induces a connected subtree.
    pub fn spans(&self, nodes: &[usize]) -> bool {
        let Some(&start) = nodes.first() else {
            return false;
        };
        let mut inside = vec![false; self.len()];
        for &v in nodes {
            if v >= self.len() {
                return false;
            }
            inside[v] = true;
        }
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut reached = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            for &b in &self.adj[a] {
                if inside[b] && !seen[b] {
                    seen[b] = true;
                    reached += 1;
                    queue.push_back(b);
                }
            }
        }
        let distinct = inside.iter().filter(|&&i| i).count();
        reached == distinct
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeModel {
    pub host: HostTree,
    /// Sorted host nodes for each graph vertex.
    pub assign: Vec<Vec<usize>>,
}

/// First way in which a model fails to represent a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    VertexCount {
        model: usize,
        graph: usize,
    },
    EmptySet(usize),
    NotASubtree(usize),
    /// Adjacent vertices with disjoint subtrees.
    MissingIntersection(usize, usize),
    /// Non-adjacent vertices whose subtrees meet.
    SpuriousIntersection(usize, usize),
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::VertexCount { model, graph } => {
                write!(f, "model assigns {model} vertices, graph has {graph}")
            }
            Discrepancy::EmptySet(v) => write!(f, "vertex {v} has an empty node set"),
            Discrepancy::NotASubtree(v) => write!(f, "vertex {v}: not a subtree"),
            Discrepancy::MissingIntersection(u, v) => {
                write!(f, "edge {u}-{v} but the subtrees are disjoint")
            }
            Discrepancy::SpuriousIntersection(u, v) => {
                write!(f, "non-edge {u}-{v} but the subtrees meet")
            }
        }
    }
}

/// `Ok(())` when `model` represents `g` with the same vertex ids.
pub fn verify_model(model: &SubtreeModel, g: &LabeledGraph) -> std::result::Result<(), Discrepancy> {
    if model.assign.len() != g.n() {
        return Err(Discrepancy::VertexCount {
            model: model.assign.len(),
            graph: g.n(),
        });
    }
    let sets: Vec<VertexSet> = model
        .assign
        .iter()
        .map(|nodes| {
            VertexSet::from_iter(
                model.host.len(),
                nodes.iter().copied().filter(|&x| x < model.host.len()),
            )
        })
        .collect();
    for (v, nodes) in model.assign.iter().enumerate() {
        if nodes.is_empty() {
            return Err(Discrepancy::EmptySet(v));
        }
        if !model.host.spans(nodes) {
            return Err(Discrepancy::NotASubtree(v));
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            match (g.has_edge(u, v), sets[u].intersects(&sets[v])) {
                (true, false) => return Err(Discrepancy::MissingIntersection(u, v)),
                (false, true) => return Err(Discrepancy::SpuriousIntersection(u, v)),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Maximal cliques of a chordal graph, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &LabeledGraph) -> Result<Vec<Vec<usize>>> {
    let peo = match chordality(g) {
        Chordality::Chordal(order) => order.into_vec(),
        Chordality::InducedCycle(_) => return Err(Error::NotChordal),
    };
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let sets: Vec<VertexSet> = candidates.iter().map(|c| g.vertex_set(c.iter().copied())).collect();
    let cliques = candidates
        .iter()
        .enumerate()
        .filter(|(i, _)| !sets.iter().enumerate().any(|(j, s)| j != *i && sets[*i].is_subset(s)))
        .map(|(_, c)| c.clone())
        .collect();
    Ok(cliques)
}

/// Clique tree: a maximum-weight spanning tree of the clique intersection
/// graph, ties broken by clique index.
pub fn clique_tree(g: &LabeledGraph) -> Result<SubtreeModel> {
    let cliques = maximal_cliques(g)?;
    if cliques.is_empty() {
        return Ok(SubtreeModel {
            host: HostTree::new(vec!["C0".into()], &[])?,
            assign: Vec::new(),
        });
    }
    let sets: Vec<VertexSet> = cliques.iter().map(|c| g.vertex_set(c.iter().copied())).collect();
    let mut weighted = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            weighted.push((sets[i].intersection(&sets[j]).len(), i, j));
        }
    }
    weighted.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut root: Vec<usize> = (0..cliques.len()).collect();
    fn find(root: &mut [usize], mut a: usize) -> usize {
        while root[a] != a {
            root[a] = root[root[a]];
            a = root[a];
        }
        a
    }
    let mut edges = Vec::new();
    for (_, i, j) in weighted {
        let (ri, rj) = (find(&mut root, i), find(&mut root, j));
        if ri != rj {
            root[ri] = rj;
            edges.push((i, j));
        }
    }
    let labels = (0..cliques.len()).map(|i| format!("C{i}")).collect();
    let host = HostTree::new(labels, &edges)?;
    let mut assign = vec![Vec::new(); g.n()];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            assign[v].push(i);
        }
    }
    Ok(SubtreeModel { host, assign })
}

/// Host node ids of the explicit model: `p_1..p_2k` along a path, then one
/// leaf `q_i` per `p_i` (skipping `p_{k+1}` unless `with_centre_leaf`).
struct ExplicitHost {
    k: usize,
    q: Vec<Option<usize>>,
    tree: HostTree,
}

impl ExplicitHost {
    fn new(k: usize, with_centre_leaf: bool) -> Result<ExplicitHost> {
        let mut labels: Vec<String> = (1..=2 * k).map(|i| format!("p{i}")).collect();
        let mut edges: Vec<(usize, usize)> = (1..2 * k).map(|i| (i - 1, i)).collect();
        let mut q = vec![None; 2 * k + 1];
        for (i, slot) in q.iter_mut().enumerate().skip(1) {
            if i == k + 1 && !with_centre_leaf {
                continue;
            }
            *slot = Some(labels.len());
            edges.push((i - 1, labels.len()));
            labels.push(format!("q{i}"));
        }
        Ok(ExplicitHost {
            k,
            q,
            tree: HostTree::new(labels, &edges)?,
        })
    }

    fn p(&self, i: usize) -> usize {
        i - 1
    }

    fn q(&self, i: usize) -> usize {
        self.q[i].expect("leaf present")
    }

    fn path(&self) -> Vec<usize> {
        (0..2 * self.k).collect()
    }

    /// Leaf carrying heavy edge `index` (order x_iu_i, then x_iv_i).
    fn heavy_leaf(&self, index: usize) -> usize {
        let k = self.k;
        if index < k {
            self.q(index + 1)
        } else {
            let j = index - k + 1;
            self.q(2 * k + 1 - j)
        }
    }

    /// Node sets for the base-graph roles; the centre leaf, if present, is
    /// added to the X-clique members.
    fn base_set(&self, role: Role) -> Option<Vec<usize>> {
        let k = self.k;
        let centre = self.q.get(k + 1).copied().flatten();
        let set = match role {
            Role::U(1) => vec![self.p(1), self.q(1)],
            Role::U(i) if i <= k => vec![self.p(i - 1), self.p(i), self.q(i)],
            Role::Z => {
                let mut s = vec![self.p(k), self.p(k + 1)];
                s.extend(centre);
                s
            }
            Role::V(i) if i == k => {
                let mut s = vec![self.p(k + 1), self.p(k + 2)];
                s.extend(centre);
                s
            }
            Role::V(1) => vec![self.p(2 * k), self.q(2 * k)],
            Role::V(j) if j < k => {
                let i = 2 * k + 1 - j;
                vec![self.p(i), self.p(i + 1), self.q(i)]
            }
            Role::X(j) if j <= k => {
                let mut s = self.path();
                s.push(self.q(j));
                if j < k {
                    s.push(self.q(2 * k + 1 - j));
                }
                s.extend(centre);
                s
            }
            Role::Pasted { edge, .. } => vec![self.heavy_leaf(edge)],
            Role::XExtra(_) => vec![centre?],
            _ => return None,
        };
        Some(set)
    }

    fn model_for(self, g: &LabeledGraph) -> Result<SubtreeModel> {
        let assign = (0..g.n())
            .map(|v| {
                let mut s = self
                    .base_set(g.role(v))
                    .ok_or_else(|| Error::InvalidParameter(format!("no explicit subtree for role {}", g.role(v))))?;
                s.sort_unstable();
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SubtreeModel {
            host: self.tree,
            assign,
        })
    }
}

/// Explicit model of a pasted-family member: a path `p_1..p_2k` with a leaf
/// `q_i` on every `p_i` except `p_{k+1}`. Each pasted clique lives on the
/// leaf of its heavy edge, so all copies of a larger clique share that leaf.
pub fn paper_model_hk(spec: &HkSpec) -> Result<SubtreeModel> {
    spec.validate()?;
    let g = crate::constructions::build_hk(spec)?;
    ExplicitHost::new(spec.k, false)?.model_for(&g)
}

/// [`paper_model_hk`] plus a centre leaf `q_{k+1}` holding the X-clique.
pub fn paper_model_jk(k: usize, clique_sizes: &[usize], x_order: usize) -> Result<SubtreeModel> {
    let g = crate::constructions::build_jk(k, clique_sizes, x_order)?;
    ExplicitHost::new(k, true)?.model_for(&g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeStats {
    pub leaves: usize,
    pub branch_vertices: usize,
    pub max_degree: usize,
    /// Set for a one-node tree, reported as (1, 0, 0).
    pub single_node: bool,
}

pub fn tree_stats(t: &HostTree) -> TreeStats {
    if t.len() == 1 {
        return TreeStats {
            leaves: 1,
            branch_vertices: 0,
            max_degree: 0,
            single_node: true,
        };
    }
    let degrees: Vec<usize> = (0..t.len()).map(|v| t.degree(v)).collect();
    TreeStats {
        leaves: degrees.iter().filter(|&&d| d == 1).count(),
        branch_vertices: degrees.iter().filter(|&&d| d >= 3).count(),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        single_node: false,
    }
}

/// Wire form: host edges, node labels and each vertex's node list keyed by
/// vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub host_nodes: Vec<String>,
    pub host_edges: Vec<[usize; 2]>,
    pub assign: BTreeMap<String, Vec<usize>>,
}

impl SubtreeModel {
    pub fn to_json(&self) -> ModelJson {
        ModelJson {
            host_nodes: self.host.labels.clone(),
            host_edges: self.host.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            assign: self
                .assign
                .iter()
                .enumerate()
                .map(|(v, nodes)| (v.to_string(), nodes.clone()))
                .collect(),
        }
    }

    pub fn from_json(json: &ModelJson) -> Result<SubtreeModel> {
        let edges: Vec<(usize, usize)> = json.host_edges.iter().map(|e| (e[0], e[1])).collect();
        let host = HostTree::new(json.host_nodes.clone(), &edges)?;
        let mut assign = vec![Vec::new(); json.assign.len()];
        for (key, nodes) in &json.assign {
            let v: usize = key
                .parse()
                .ok()
                .filter(|&v| v < assign.len())
                .ok_or_else(|| Error::InvalidParameter(format!("bad vertex key {key:?}")))?;
            let mut nodes = nodes.clone();
            nodes.sort_unstable();
            assign[v] = nodes;
        }
        Ok(SubtreeModel { host, assign })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_hk, build_jk};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn host_validation() {
        assert!(HostTree::new(labels(3), &[(0, 1), (1, 2)]).is_ok());
        assert!(HostTree::new(labels(3), &[(0, 1)]).is_err());
        assert!(HostTree::new(labels(3), &[(0, 1), (1, 0)]).is_err());
        assert!(HostTree::new(labels(0), &[]).is_err());
    }

    #[test]
    fn stats() {
        let path = HostTree::new(labels(5), &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let s = tree_stats(&path);
        assert_eq!((s.leaves, s.branch_vertices, s.max_degree), (2, 0, 2));
        let star = HostTree::new(labels(5), &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s = tree_stats(&star);
        assert_eq!((s.leaves, s.branch_vertices, s.max_degree), (4, 1, 4));
        let one = tree_stats(&HostTree::new(labels(1), &[]).unwrap());
        assert!(one.single_node);
        assert_eq!((one.leaves, one.branch_vertices, one.max_degree), (1, 0, 0));
    }

    #[test]
    fn clique_trees_of_small_graphs() {
        let k4 = LabeledGraph::complete(4);
        let m = clique_tree(&k4).unwrap();
        assert_eq!(m.host.len(), 1);
        assert!(m.assign.iter().all(|a| a == &vec![0]));
        let p4 = LabeledGraph::path(4);
        let m = clique_tree(&p4).unwrap();
        assert_eq!(m.host.len(), 3);
        assert_eq!(tree_stats(&m.host).leaves, 2);
        assert_eq!(verify_model(&m, &p4), Ok(()));
        assert_eq!(clique_tree(&LabeledGraph::cycle(4)), Err(Error::NotChordal));
        // disconnected: zero-weight host edges join the pieces
        let two = LabeledGraph::path(3).disjoint_union(&LabeledGraph::complete(3));
        assert_eq!(verify_model(&clique_tree(&two).unwrap(), &two), Ok(()));
    }

    #[test]
    fn clique_tree_of_pasted_family() {
        let h = build_hk(&HkSpec::triangles(3).unwrap()).unwrap();
        let m = clique_tree(&h).unwrap();
        assert_eq!(verify_model(&m, &h), Ok(()));
    }

    #[test]
    fn broken_models_are_reported() {
        let p4 = LabeledGraph::path(4);
        let mut m = clique_tree(&p4).unwrap();
        // cliques in lexicographic order: {0,1}, {1,2}, {2,3}; host is a path
        m.assign[1] = vec![0, 2];
        assert_eq!(verify_model(&m, &p4), Err(Discrepancy::NotASubtree(1)));
        let mut m = clique_tree(&p4).unwrap();
        m.assign[3] = vec![1, 2];
        assert_eq!(verify_model(&m, &p4), Err(Discrepancy::SpuriousIntersection(1, 3)));
        let mut m = clique_tree(&p4).unwrap();
        m.assign.pop();
        assert!(matches!(verify_model(&m, &p4), Err(Discrepancy::VertexCount { .. })));
    }

    #[test]
    fn explicit_models() {
        let spec = HkSpec::triangles(3).unwrap();
        let m = paper_model_hk(&spec).unwrap();
        assert_eq!(verify_model(&m, &build_hk(&spec).unwrap()), Ok(()));
        let s = tree_stats(&m.host);
        assert_eq!((s.leaves, s.branch_vertices, s.max_degree), (5, 3, 3));

        let j = paper_model_jk(3, &[3; 5], 6).unwrap();
        let g = build_jk(3, &[3; 5], 6).unwrap();
        assert_eq!(verify_model(&j, &g), Ok(()));
        let s = tree_stats(&j.host);
        assert_eq!((s.leaves, s.branch_vertices), (6, 4));
        let z = g.expect_vertex(Role::Z);
        let names: Vec<&str> = j.assign[z].iter().map(|&n| j.host.label(n)).collect();
        assert_eq!(names, vec!["p3", "p4", "q4"]);
    }

    #[test]
    fn larger_pasted_cliques_share_a_leaf() {
        let spec = HkSpec::new(4, vec![3, 5, 3, 4, 3, 3, 6]).unwrap();
        let m = paper_model_hk(&spec).unwrap();
        assert_eq!(verify_model(&m, &build_hk(&spec).unwrap()), Ok(()));
        assert_eq!(tree_stats(&m.host).leaves, 7);
    }

    #[test]
    fn json_round_trip() {
        let m = paper_model_hk(&HkSpec::triangles(3).unwrap()).unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        let back: ModelJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SubtreeModel::from_json(&back).unwrap(), m);
    }
}
