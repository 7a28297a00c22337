mod checks;
mod lemmas;
mod report;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail};
use clap::{Parser, Subcommand};
use hendry_core::constructions::HkSpec;
use hendry_core::tree_model::{clique_tree, paper_model_hk, paper_model_jk, tree_stats, verify_model};
use hendry_core::Error;
use serde_json::json;

use lemmas::{Lemma, LemmaArgs};
use report::Report;
use source::{build_family, family_name, write_graph, Family, FamilyParams, GraphSource};

#[derive(Parser)]
#[command(
    name = "hendry",
    version,
    about = "Generate and certify chordal graphs that are not cycle extendible"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member as graph6 plus a JSON sidecar.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        params: FamilyParams,
        /// Output path prefix; defaults to the family name.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run recognizers on a graph and print a JSON report.
    Check {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        chordal: bool,
        #[arg(long)]
        strongly_chordal: bool,
        #[arg(long)]
        hamiltonian: bool,
        #[arg(long)]
        connectivity: bool,
        /// Fail the connectivity check below this value.
        #[arg(long)]
        min_connectivity: Option<usize>,
        #[arg(long)]
        induced_path: bool,
        /// Also decide P_t-freeness for this t.
        #[arg(long)]
        pt: Option<usize>,
        #[arg(long)]
        bull_free: bool,
        /// Decide whether these vertex ids carry a spanning cycle and list
        /// their one-vertex extensions.
        #[arg(long, value_delimiter = ',')]
        cyclable_set: Option<Vec<usize>>,
    },
    /// Decide extendibility properties or replay a named claim.
    Certify {
        #[command(flatten)]
        source: GraphSource,
        /// extendibility | full-extendibility | s-extendibility | lemma:<id>
        #[arg(long)]
        mode: Mode,
        /// Allowed extension gaps for s-extendibility.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Build and verify a subtree intersection model.
    Model {
        #[command(flatten)]
        source: GraphSource,
        /// Use the clique tree even for hk and jk.
        #[arg(long)]
        clique_tree: bool,
        /// Exit 1 when the model does not represent the graph.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Clone, Debug)]
enum Mode {
    Extendibility,
    FullExtendibility,
    SExtendibility,
    Lemma(Lemma),
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Mode, String> {
        match s {
            "extendibility" => Ok(Mode::Extendibility),
            "full-extendibility" => Ok(Mode::FullExtendibility),
            "s-extendibility" => Ok(Mode::SExtendibility),
            _ => match s.strip_prefix("lemma:") {
                Some(id) => id.parse().map(Mode::Lemma),
                None => Err(format!(
                    "unknown mode {s:?}; expected extendibility, full-extendibility, s-extendibility or lemma:<id>"
                )),
            },
        }
    }
}

fn print(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn generate(family: Family, params: FamilyParams, out: Option<PathBuf>) -> anyhow::Result<i32> {
    let g = build_family(family, &params)?;
    let prefix = out.unwrap_or_else(|| PathBuf::from(family_name(family)));
    let (g6, side) = write_graph(&prefix, &g)?;
    print(&json!({
        "family": family_name(family),
        "n": g.n(),
        "m": g.edge_count(),
        "heavy_edges": g.heavy_edges().len(),
        "graph6": g6.display().to_string(),
        "sidecar": side.display().to_string(),
    }));
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn check(
    source: GraphSource,
    chordal: bool,
    strongly_chordal: bool,
    hamiltonian: bool,
    connectivity: bool,
    min_connectivity: Option<usize>,
    induced_path: bool,
    pt: Option<usize>,
    bull_free: bool,
    cyclable_set: Option<Vec<usize>>,
) -> anyhow::Result<i32> {
    let selected = chordal
        || strongly_chordal
        || hamiltonian
        || connectivity
        || min_connectivity.is_some()
        || induced_path
        || pt.is_some()
        || bull_free
        || cyclable_set.is_some();
    if !selected {
        bail!("select at least one check");
    }
    let loaded = source.load()?;
    let g = &loaded.graph;
    let mut r = Report::new("check", loaded.description, loaded.parameters);
    if chordal {
        checks::chordal(&mut r, g)?;
    }
    if strongly_chordal {
        checks::strongly_chordal(&mut r, g)?;
    }
    if hamiltonian {
        checks::hamiltonian(&mut r, g)?;
    }
    if connectivity || min_connectivity.is_some() {
        checks::connectivity(&mut r, g, min_connectivity)?;
    }
    if induced_path || pt.is_some() {
        checks::induced_path(&mut r, g, pt)?;
    }
    if bull_free {
        checks::bull_free(&mut r, g)?;
    }
    if let Some(ids) = cyclable_set {
        if let Some(&bad) = ids.iter().find(|&&v| v >= g.n()) {
            bail!(Error::VertexOutOfRange { vertex: bad, n: g.n() });
        }
        checks::cyclable_set(&mut r, g, &g.vertex_set(ids))?;
    }
    let r = r.finish();
    print(&r);
    Ok(r.exit_code())
}

fn certify(source: GraphSource, mode: Mode, set: Option<Vec<usize>>) -> anyhow::Result<i32> {
    let r = match mode {
        Mode::Lemma(lemma) => {
            let params = json!({ "lemma": lemma.id(), "params": source.params.to_json(), "set": set });
            let mut r = Report::new("certify", format!("lemma {lemma}"), params);
            let args = LemmaArgs {
                params: source.params,
                gaps: set,
            };
            lemmas::run(lemma, &args, &mut r)?;
            r
        }
        mode => {
            let loaded = source.load()?;
            let g = &loaded.graph;
            let mut r = Report::new("certify", loaded.description, loaded.parameters);
            match mode {
                Mode::Extendibility => checks::extendibility(&mut r, g)?,
                Mode::FullExtendibility => checks::full_extendibility(&mut r, g)?,
                Mode::SExtendibility => {
                    let gaps = set.ok_or_else(|| anyhow!("s-extendibility needs --set"))?;
                    checks::s_extendibility(&mut r, g, &gaps)?;
                }
                Mode::Lemma(_) => unreachable!(),
            }
            r
        }
    };
    let r = r.finish();
    print(&r);
    Ok(r.exit_code())
}

fn model(source: GraphSource, force_clique_tree: bool, verify: bool) -> anyhow::Result<i32> {
    let loaded = source.load()?;
    let g = &loaded.graph;
    let p = &source.params;
    let (method, built) = match source.family {
        Some(Family::Hk) if !force_clique_tree => {
            let k = p.k()?;
            ("explicit", paper_model_hk(&HkSpec::new(k, p.sizes_for(k))?))
        }
        Some(Family::Jk) if !force_clique_tree => {
            let k = p.k()?;
            (
                "explicit",
                paper_model_jk(k, &p.sizes_for(k), p.x_order.unwrap_or(k + 3)),
            )
        }
        _ => ("clique_tree", clique_tree(g)),
    };
    let m = match built {
        Ok(m) => m,
        Err(Error::NotChordal) => {
            eprintln!("error: {} is not chordal, so it has no clique tree", loaded.description);
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let verified = verify_model(&m, g);
    print(&json!({
        "toolkit": report::TOOLKIT,
        "command": "model",
        "input": loaded.description,
        "parameters": loaded.parameters,
        "method": method,
        "model": m.to_json(),
        "stats": tree_stats(&m.host),
        "verified": verified.is_ok(),
        "discrepancy": verified.as_ref().err().map(|d| d.to_string()),
    }));
    Ok(if verify && verified.is_err() { 1 } else { 0 })
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Generate { family, params, out } => generate(family, params, out),
        Command::Check {
            source,
            chordal,
            strongly_chordal,
            hamiltonian,
            connectivity,
            min_connectivity,
            induced_path,
            pt,
            bull_free,
            cyclable_set,
        } => check(
            source,
            chordal,
            strongly_chordal,
            hamiltonian,
            connectivity,
            min_connectivity,
            induced_path,
            pt,
            bull_free,
            cyclable_set,
        ),
        Command::Certify { source, mode, set } => certify(source, mode, set),
        Command::Model {
            source,
            clique_tree,
            verify,
        } => model(source, clique_tree, verify),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    ExitCode::from(code as u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_parse() {
        assert!(matches!("extendibility".parse(), Ok(Mode::Extendibility)));
        assert!(matches!("lemma:blowup".parse(), Ok(Mode::Lemma(Lemma::Blowup))));
        for lemma in Lemma::ALL {
            assert_eq!(
                format!("lemma:{lemma}")
                    .parse::<Mode>()
                    .map(|m| matches!(m, Mode::Lemma(l) if l == lemma)),
                Ok(true)
            );
        }
        assert!("lemma:".parse::<Mode>().is_err());
        assert!("extend".parse::<Mode>().is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
