//! Scripted verifications, one per named claim about the constructions.

use std::fmt;
use std::str::FromStr;

use hendry_core::constructions::{
    base_elimination_order, build_gk, build_gk_plus, build_h_plus, build_hk, build_hkm, build_jk, build_s, lift_cycle,
    witness_heavy_ham_cycle, witness_long_heavy_cycle, HkSpec,
};
use hendry_core::cycles::{heavy_cycles_on, is_s_cycle_extendible};
use hendry_core::recognition::is_simple_elimination_order;
use hendry_core::search::spanning_cycles;
use hendry_core::structure::{is_pt_free, longest_induced_path, vertex_connectivity};
use hendry_core::tree_model::{paper_model_hk, paper_model_jk, tree_stats, verify_model, SubtreeModel};
use hendry_core::{LabeledGraph, Role, VertexSet};
use serde_json::{json, Value};

use crate::checks;
use crate::report::{self, Report};
use crate::source::FamilyParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    BaseSimpleOrder,
    HeavyHamiltonian,
    LongHeavyCycle,
    HeavyMissOne,
    Counterexample,
    ChordVariant,
    Blowup,
    SExtension,
    SubtreeModels,
}

impl Lemma {
    pub const ALL: [Lemma; 9] = [
        Lemma::BaseSimpleOrder,
        Lemma::HeavyHamiltonian,
        Lemma::LongHeavyCycle,
        Lemma::HeavyMissOne,
        Lemma::Counterexample,
        Lemma::ChordVariant,
        Lemma::Blowup,
        Lemma::SExtension,
        Lemma::SubtreeModels,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::BaseSimpleOrder => "base-simple-order",
            Lemma::HeavyHamiltonian => "heavy-hamiltonian",
            Lemma::LongHeavyCycle => "long-heavy-cycle",
            Lemma::HeavyMissOne => "heavy-miss-one",
            Lemma::Counterexample => "counterexample",
            Lemma::ChordVariant => "chord-variant",
            Lemma::Blowup => "blowup",
            Lemma::SExtension => "s-extension",
            Lemma::SubtreeModels => "subtree-models",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Lemma {
    type Err = String;

    fn from_str(s: &str) -> Result<Lemma, String> {
        Lemma::ALL.into_iter().find(|l| l.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Lemma::ALL.iter().map(|l| l.id()).collect();
            format!("unknown lemma id {s:?}; known ids: {}", ids.join(", "))
        })
    }
}

/// Options a lemma run reads besides the family parameters.
#[derive(Clone, Debug, Default)]
pub struct LemmaArgs {
    pub params: FamilyParams,
    pub gaps: Option<Vec<usize>>,
}

impl LemmaArgs {
    fn ks(&self, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        match self.params.k {
            Some(k) => vec![k],
            None => default.collect(),
        }
    }

    fn spec(&self, k: usize) -> hendry_core::Result<HkSpec> {
        HkSpec::new(k, self.params.sizes_for(k))
    }
}

pub fn run(lemma: Lemma, args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    match lemma {
        Lemma::BaseSimpleOrder => base_simple_order(args, r),
        Lemma::HeavyHamiltonian => heavy_hamiltonian(args, r),
        Lemma::LongHeavyCycle => long_heavy_cycle(args, r),
        Lemma::HeavyMissOne => heavy_miss_one(args, r),
        Lemma::Counterexample => counterexample(args, r),
        Lemma::ChordVariant => chord_variant(args, r),
        Lemma::Blowup => blowup(args, r),
        Lemma::SExtension => s_extension(args, r),
        Lemma::SubtreeModels => subtree_models(args, r),
    }
}

fn without(g: &LabeledGraph, roles: &[Role]) -> VertexSet {
    let mut s = g.all_vertices();
    for &role in roles {
        s.remove(g.expect_vertex(role));
    }
    s
}

fn count(c: u128) -> u64 {
    u64::try_from(c).unwrap_or(u64::MAX)
}

/// Prefixes every check name recorded by `body` with `prefix`.
fn scoped(r: &mut Report, prefix: &str, body: impl FnOnce(&mut Report) -> anyhow::Result<()>) -> anyhow::Result<()> {
    let start = r.checks.len();
    body(r)?;
    for c in &mut r.checks[start..] {
        c.name = format!("{prefix}.{}", c.name);
    }
    Ok(())
}

fn base_simple_order(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    for k in args.ks(1..=6) {
        let g = build_gk(k)?;
        scoped(r, &format!("k{k}"), |r| {
            r.run("base_order_simple", || {
                let order = base_elimination_order(&g, k)?;
                let holds = is_simple_elimination_order(&g, &order)?;
                Ok((holds, json!({ "order": report::vertices(&g, order) })))
            })?;
            checks::strongly_chordal(r, &g)
        })?;
    }
    Ok(())
}

fn heavy_hamiltonian(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    for k in args.ks(1..=8) {
        let g = build_gk(k)?;
        r.run(&format!("k{k}.heavy_hamiltonian_cycle"), || {
            let c = witness_heavy_ham_cycle(k)?;
            let holds = c.len() == g.n() && c.contains_all_heavy(&g);
            Ok((holds, json!({ "cycle": report::cycle(&g, &c) })))
        })?;
    }
    Ok(())
}

fn long_heavy_cycle(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    for k in args.ks(2..=8) {
        let g = build_gk(k)?;
        let c = witness_long_heavy_cycle(k)?;
        r.run(&format!("k{k}.long_heavy_cycle"), || {
            let expected = without(&g, &[Role::Z, Role::V(k)]);
            let holds = c.vertex_set(g.n()).same_members(&expected) && c.contains_all_heavy(&g);
            Ok((
                holds,
                json!({ "cycle": report::cycle(&g, &c), "omitted": report::complement(&g, &expected) }),
            ))
        })?;
        if k >= 3 {
            let h = build_hk(&args.spec(k)?)?;
            r.run(&format!("k{k}.lifted_cycle_has_no_extension"), || {
                let lifted = lift_cycle(&c, &h)?;
                let on = lifted.vertex_set(h.n());
                let mut extensions = Vec::new();
                for v in h.all_vertices().difference(&on).iter() {
                    let mut bigger = on.clone();
                    bigger.insert(v);
                    if spanning_cycles(&h, &bigger, &[])?.exists() {
                        extensions.push(v);
                    }
                }
                Ok((
                    extensions.is_empty(),
                    json!({ "cycle": report::cycle(&h, &lifted), "extensions": report::vertices(&h, extensions) }),
                ))
            })?;
        }
    }
    Ok(())
}

fn heavy_miss_one(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    for k in args.ks(3..=6) {
        for (tag, g) in [("base", build_gk(k)?), ("chord", build_gk_plus(k)?)] {
            for (name, role) in [("without_z", Role::Z), ("without_vk", Role::V(k))] {
                r.run(&format!("k{k}.{tag}.{name}"), || {
                    let found = heavy_cycles_on(&g, &without(&g, &[role]))?;
                    let witness = found.witness.as_ref().map(|c| report::cycle(&g, c));
                    Ok((
                        found.count == 0,
                        json!({ "heavy_cycles": found.count, "witness": witness }),
                    ))
                })?;
            }
        }
    }
    Ok(())
}

/// A cycle on V minus {z, v_k} that no single vertex extends; this alone
/// shows the graph is not cycle extendible.
fn stuck_cycle(r: &mut Report, h: &LabeledGraph, k: usize) -> anyhow::Result<()> {
    r.run("not_cycle_extendible", || {
        let s = without(h, &[Role::Z, Role::V(k)]);
        let found = spanning_cycles(h, &s, &[])?;
        let mut extensions = Vec::new();
        for role in [Role::Z, Role::V(k)] {
            let v = h.expect_vertex(role);
            let mut bigger = s.clone();
            bigger.insert(v);
            extensions.push((role.to_string(), count(spanning_cycles(h, &bigger, &[])?.count)));
        }
        let holds = found.exists() && extensions.iter().all(|(_, c)| *c == 0);
        let cycle = found.witness.as_ref().map(|c| report::cycle(h, c));
        let counts: Value = extensions
            .into_iter()
            .map(|(name, c)| (name, json!(c)))
            .collect::<serde_json::Map<_, _>>()
            .into();
        Ok((
            holds,
            json!({
                "witness": report::set(h, &s),
                "omitted": report::complement(h, &s),
                "cycle": cycle,
                "cycles_after_adding": counts,
            }),
        ))
    })
}

fn lifted_hamiltonian(r: &mut Report, h: &LabeledGraph, k: usize) -> anyhow::Result<()> {
    r.run("hamiltonian", || {
        let c = lift_cycle(&witness_heavy_ham_cycle(k)?, h)?;
        Ok((c.len() == h.n(), json!({ "cycle": report::cycle(h, &c) })))
    })
}

fn counterexample(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    let k = args.params.k.unwrap_or(3);
    let h = build_hk(&args.spec(k)?)?;
    checks::chordal(r, &h)?;
    checks::strongly_chordal(r, &h)?;
    lifted_hamiltonian(r, &h, k)?;
    stuck_cycle(r, &h, k)
}

fn chord_variant(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    let base = build_gk_plus(3)?;
    r.run("base.longest_induced_path", || {
        let (len, path) = longest_induced_path(&base)?;
        Ok((
            len == 6,
            json!({ "vertices": len, "path": report::vertices(&base, path) }),
        ))
    })?;
    let h = build_h_plus(&args.spec(3)?)?;
    r.run("p9_free", || {
        let free = is_pt_free(&h, 9)?;
        let (len, path) = longest_induced_path(&h)?;
        Ok((free, json!({ "longest": len, "path": report::vertices(&h, path) })))
    })?;
    checks::chordal(r, &h)?;
    checks::strongly_chordal(r, &h)?;
    lifted_hamiltonian(r, &h, 3)?;
    stuck_cycle(r, &h, 3)
}

fn blowup(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    for k in args.ks(3..=4) {
        let s = build_s(k)?;
        scoped(r, &format!("k{k}"), |r| {
            checks::chordal(r, &s)?;
            r.run("hamiltonian", || {
                let found = spanning_cycles(&s, &s.all_vertices(), &[])?;
                let cycle = found.witness.as_ref().map(|c| report::cycle(&s, c));
                Ok((found.exists(), json!({ "cycles": count(found.count), "cycle": cycle })))
            })?;
            r.run("connectivity_is_k", || {
                let cert = vertex_connectivity(&s);
                let cut = cert.cut.as_ref().map(|c| report::vertices(&s, c.iter().copied()));
                Ok((
                    cert.kappa == k && cert.validates(&s),
                    json!({ "kappa": cert.kappa, "cut": cut }),
                ))
            })?;
            let cases = [
                ("cyclable_without_z_vk", vec![Role::Z, Role::V(k)], true),
                ("without_z_not_cyclable", vec![Role::Z], false),
                ("without_vk_not_cyclable", vec![Role::V(k)], false),
            ];
            for (name, roles, expect) in cases {
                r.run(name, || {
                    let set = without(&s, &roles);
                    let found = spanning_cycles(&s, &set, &[])?;
                    let cycle = found.witness.as_ref().map(|c| report::cycle(&s, c));
                    Ok((
                        found.exists() == expect,
                        json!({ "omitted": report::complement(&s, &set), "cycles": count(found.count), "cycle": cycle }),
                    ))
                })?;
            }
            Ok(())
        })?;
    }
    Ok(())
}

fn s_extension(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    let sets = match &args.gaps {
        Some(g) => vec![g.clone()],
        None => vec![vec![1], vec![1, 2], vec![2, 3]],
    };
    let k = args.params.k.unwrap_or(3);
    for gaps in sets {
        let m = match args.params.m {
            Some(m) => m,
            None => gaps.iter().copied().max().unwrap_or(0) + 1,
        };
        let h = build_hkm(k, m, &args.params.sizes_for(k))?;
        let tag: Vec<String> = gaps.iter().map(usize::to_string).collect();
        r.run(&format!("gaps_{}.not_s_extendible", tag.join("_")), || {
            let v = is_s_cycle_extendible(&h, &gaps)?;
            let witness = v.witness.as_ref().map(|w| report::set(&h, w));
            let omitted = v.witness.as_ref().map(|w| report::complement(&h, w));
            Ok((!v.extendible, json!({ "m": m, "witness": witness, "omitted": omitted })))
        })?;
    }
    Ok(())
}

fn model_check(
    r: &mut Report,
    name: &str,
    model: &SubtreeModel,
    g: &LabeledGraph,
    leaves: usize,
    branch: usize,
) -> anyhow::Result<()> {
    r.run(name, || {
        let verified = verify_model(model, g);
        let stats = tree_stats(&model.host);
        let holds = verified.is_ok() && stats.leaves == leaves && stats.branch_vertices == branch;
        Ok((
            holds,
            json!({
                "stats": stats,
                "expected": { "leaves": leaves, "branch_vertices": branch },
                "discrepancy": verified.err().map(|d| d.to_string()),
            }),
        ))
    })
}

fn subtree_models(args: &LemmaArgs, r: &mut Report) -> anyhow::Result<()> {
    for k in args.ks(3..=6) {
        let sizes = args.params.sizes_for(k);
        let spec = args.spec(k)?;
        let x_order = args.params.x_order.unwrap_or(k + 3);
        model_check(
            r,
            &format!("k{k}.hk_model"),
            &paper_model_hk(&spec)?,
            &build_hk(&spec)?,
            2 * k - 1,
            2 * k - 3,
        )?;
        let j = build_jk(k, &sizes, x_order)?;
        model_check(
            r,
            &format!("k{k}.jk_model"),
            &paper_model_jk(k, &sizes, x_order)?,
            &j,
            2 * k,
            2 * k - 2,
        )?;
    }
    Ok(())
}
