use hendry_core::cycles::{
    every_vertex_on_triangle, extension_candidates, hamiltonian_cycle, is_cycle_extendible, is_s_cycle_extendible,
    subset_cap, ExtensionVerdict,
};
use hendry_core::recognition::{chordality, find_bull, strong_chordality, Chordality, StrongChordality};
use hendry_core::structure::{longest_induced_path, vertex_connectivity};
use hendry_core::{Error, LabeledGraph, VertexSet};
use serde_json::{json, Value};

use crate::report::{self, Report};

pub fn chordal(r: &mut Report, g: &LabeledGraph) -> anyhow::Result<()> {
    r.run("chordal", || {
        Ok(match chordality(g) {
            Chordality::Chordal(peo) => (
                true,
                json!({ "perfect_elimination_order": report::vertices(g, peo.into_vec()) }),
            ),
            Chordality::InducedCycle(c) => (false, json!({ "induced_cycle": report::vertices(g, c) })),
        })
    })
}

pub fn strongly_chordal(r: &mut Report, g: &LabeledGraph) -> anyhow::Result<()> {
    r.run("strongly_chordal", || {
        Ok(match strong_chordality(g) {
            StrongChordality::Strong(order) => (
                true,
                json!({ "simple_elimination_order": report::vertices(g, order.into_vec()) }),
            ),
            StrongChordality::NoSimpleVertex(rest) => {
                let mut cert = json!({ "no_simple_vertex": report::vertices(g, rest) });
                if let Chordality::InducedCycle(c) = chordality(g) {
                    cert["induced_cycle"] = report::vertices(g, c);
                }
                (false, cert)
            }
        })
    })
}

pub fn hamiltonian(r: &mut Report, g: &LabeledGraph) -> anyhow::Result<()> {
    r.run("hamiltonian", || {
        let all = g.all_vertices();
        if g.n() > subset_cap() {
            return Err(Error::CapExceeded {
                what: "Hamiltonian cycle",
                size: g.n(),
                cap: subset_cap(),
            });
        }
        Ok(match hamiltonian_cycle(g, &all)? {
            Some(c) => (true, json!({ "cycle": report::cycle(g, &c) })),
            None => (
                false,
                json!({ "exhausted": "every Hamiltonian path of the subset table", "n": g.n() }),
            ),
        })
    })
}

pub fn connectivity(r: &mut Report, g: &LabeledGraph, min: Option<usize>) -> anyhow::Result<()> {
    r.run("connectivity", || {
        let cert = vertex_connectivity(g);
        let holds = min.is_none_or(|m| cert.kappa >= m);
        let cut = cert.cut.as_ref().map(|c| report::vertices(g, c.iter().copied()));
        Ok((holds, json!({ "kappa": cert.kappa, "cut": cut, "required": min })))
    })
}

pub fn induced_path(r: &mut Report, g: &LabeledGraph, pt: Option<usize>) -> anyhow::Result<()> {
    let mut found = None;
    r.run("longest_induced_path", || {
        let (len, path) = longest_induced_path(g)?;
        let cert = json!({ "vertices": len, "path": report::vertices(g, path.iter().copied()) });
        found = Some((len, path));
        Ok((true, cert))
    })?;
    if let Some(t) = pt {
        r.run("pt_free", || {
            let (len, path) = match &found {
                Some(f) => f.clone(),
                None => longest_induced_path(g)?,
            };
            let holds = len < t;
            let mut cert = json!({ "t": t, "longest": len });
            if !holds {
                cert["induced_path"] = report::vertices(g, path[..t].iter().copied());
            }
            Ok((holds, cert))
        })?;
    }
    Ok(())
}

pub fn bull_free(r: &mut Report, g: &LabeledGraph) -> anyhow::Result<()> {
    r.run("bull_free", || {
        Ok(match find_bull(g) {
            None => (true, json!({ "checked": "every 5-vertex subset" })),
            Some(b) => (false, json!({ "bull": report::vertices(g, b) })),
        })
    })
}

/// Whether `set` carries a spanning cycle, plus the vertices whose addition
/// keeps it cyclable. Used to replay extension witnesses.
pub fn cyclable_set(r: &mut Report, g: &LabeledGraph, set: &VertexSet) -> anyhow::Result<()> {
    r.run("cyclable_set", || {
        Ok(match hamiltonian_cycle(g, set)? {
            Some(c) => {
                let ext = extension_candidates(g, set)?;
                (
                    true,
                    json!({ "cycle": report::cycle(g, &c), "one_vertex_extensions": report::set(g, &ext) }),
                )
            }
            None => (false, json!({ "set": report::set(g, set), "cycle": null })),
        })
    })
}

fn verdict_cert(g: &LabeledGraph, v: &ExtensionVerdict) -> hendry_core::Result<Value> {
    Ok(match &v.witness {
        None => json!({ "witness": null }),
        Some(w) => {
            let c = hamiltonian_cycle(g, w)?.ok_or(Error::NotCyclable)?;
            json!({
                "witness": report::set(g, w),
                "omitted": report::complement(g, w),
                "cycle": report::cycle(g, &c),
            })
        }
    })
}

pub fn extendibility(r: &mut Report, g: &LabeledGraph) -> anyhow::Result<()> {
    r.run("cycle_extendible", || {
        let v = is_cycle_extendible(g)?;
        Ok((v.extendible, verdict_cert(g, &v)?))
    })
}

pub fn full_extendibility(r: &mut Report, g: &LabeledGraph) -> anyhow::Result<()> {
    r.run("fully_cycle_extendible", || {
        let triangles = every_vertex_on_triangle(g);
        let v = is_cycle_extendible(g)?;
        let mut cert = verdict_cert(g, &v)?;
        cert["every_vertex_on_triangle"] = json!(triangles);
        if !triangles {
            let bare: Vec<usize> = (0..g.n())
                .filter(|&u| {
                    let nb: Vec<usize> = g.neighbors(u).iter().collect();
                    !nb.iter().any(|&a| nb.iter().any(|&b| a < b && g.has_edge(a, b)))
                })
                .collect();
            cert["not_on_triangle"] = report::vertices(g, bare);
        }
        Ok((triangles && v.extendible, cert))
    })
}

pub fn s_extendibility(r: &mut Report, g: &LabeledGraph, gaps: &[usize]) -> anyhow::Result<()> {
    r.run("s_cycle_extendible", || {
        let v = is_s_cycle_extendible(g, gaps)?;
        let mut cert = verdict_cert(g, &v)?;
        cert["gaps"] = json!(gaps);
        Ok((v.extendible, cert))
    })
}
