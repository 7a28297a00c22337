use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, ValueEnum};
use hendry_core::constructions::{
    build_dn, build_gk, build_gkm, build_h_plus, build_hendry_exception, build_hk, build_hkm, build_jk, build_s, HkSpec,
};
use hendry_core::graph6::{self, Sidecar};
use hendry_core::LabeledGraph;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gk,
    Hk,
    Hplus,
    S,
    Gkm,
    Hkm,
    Jk,
    Dn,
    HendryException,
}

/// Parameters shared by every family; each family reads the ones it needs.
#[derive(Clone, Debug, Default, Args)]
pub struct FamilyParams {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Pasted clique orders, comma separated, in heavy-edge order.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "x-order")]
    pub x_order: Option<usize>,
    /// Which exceptional graph (1, 2 or 3).
    #[arg(long)]
    pub which: Option<u8>,
}

impl FamilyParams {
    pub fn k(&self) -> anyhow::Result<usize> {
        self.k.ok_or_else(|| anyhow!("--k is required"))
    }

    /// Clique orders, defaulting to triangles on all 2k - 1 heavy edges.
    pub fn sizes_for(&self, k: usize) -> Vec<usize> {
        self.sizes.clone().unwrap_or_else(|| vec![3; (2 * k).saturating_sub(1)])
    }

    pub fn to_json(&self) -> Value {
        let mut out = serde_json::Map::new();
        let mut put = |key: &str, v: Option<Value>| {
            if let Some(v) = v {
                out.insert(key.to_string(), v);
            }
        };
        put("k", self.k.map(Value::from));
        put("m", self.m.map(Value::from));
        put("sizes", self.sizes.clone().map(Value::from));
        put("n", self.n.map(Value::from));
        put("x_order", self.x_order.map(Value::from));
        put("which", self.which.map(Value::from));
        Value::Object(out)
    }
}

pub fn build_family(family: Family, p: &FamilyParams) -> anyhow::Result<LabeledGraph> {
    let g = match family {
        Family::Gk => build_gk(p.k()?)?,
        Family::Hk => {
            let k = p.k()?;
            build_hk(&HkSpec::new(k, p.sizes_for(k))?)?
        }
        Family::Hplus => {
            let k = p.k()?;
            build_h_plus(&HkSpec::new(k, p.sizes_for(k))?)?
        }
        Family::S => build_s(p.k()?)?,
        Family::Gkm => build_gkm(p.k()?, p.m.ok_or_else(|| anyhow!("--m is required"))?)?,
        Family::Hkm => {
            let k = p.k()?;
            build_hkm(k, p.m.ok_or_else(|| anyhow!("--m is required"))?, &p.sizes_for(k))?
        }
        Family::Jk => {
            let k = p.k()?;
            build_jk(k, &p.sizes_for(k), p.x_order.unwrap_or(k + 3))?
        }
        Family::Dn => build_dn(p.n.ok_or_else(|| anyhow!("--n is required"))?)?,
        Family::HendryException => {
            let which = p.which.ok_or_else(|| anyhow!("--which is required"))?;
            build_hendry_exception(which, p.n.unwrap_or(5))?
        }
    };
    Ok(g)
}

pub fn family_name(family: Family) -> String {
    family
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

/// Where a command's graph comes from: a graph6 file (with optional sidecar)
/// or a generated family.
#[derive(Clone, Debug, Args)]
pub struct GraphSource {
    /// graph6 file; a sidecar with the same stem and a .json extension is
    /// picked up when present.
    pub input: Option<PathBuf>,
    /// Explicit sidecar path.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
    #[arg(long, value_enum, conflicts_with = "input")]
    pub family: Option<Family>,
    #[command(flatten)]
    pub params: FamilyParams,
}

pub struct Loaded {
    pub graph: LabeledGraph,
    pub description: String,
    pub parameters: Value,
}

impl GraphSource {
    pub fn load(&self) -> anyhow::Result<Loaded> {
        match (&self.input, self.family) {
            (Some(path), _) => {
                let graph = read_graph(path, self.sidecar.as_deref())?;
                Ok(Loaded {
                    description: format!("file {}", path.display()),
                    parameters: json!({ "input": path.display().to_string() }),
                    graph,
                })
            }
            (None, Some(family)) => Ok(Loaded {
                graph: build_family(family, &self.params)?,
                description: format!("family {}", family_name(family)),
                parameters: json!({ "family": family_name(family), "params": self.params.to_json() }),
            }),
            (None, None) => bail!("give a graph6 file or --family"),
        }
    }
}

pub fn sidecar_path(graph6: &Path) -> PathBuf {
    graph6.with_extension("json")
}

pub fn read_graph(path: &Path, sidecar: Option<&Path>) -> anyhow::Result<LabeledGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let graph = graph6::decode(&text)?;
    let side = match sidecar {
        Some(p) => Some(p.to_path_buf()),
        None => Some(sidecar_path(path)).filter(|p| p.exists()),
    };
    match side {
        Some(p) => {
            let text = fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
            Ok(Sidecar::from_json(&text)?.apply(&graph)?)
        }
        None => Ok(graph),
    }
}

/// Writes `<prefix>.g6` and `<prefix>.json`, returning both paths.
pub fn write_graph(prefix: &Path, g: &LabeledGraph) -> anyhow::Result<(PathBuf, PathBuf)> {
    let g6 = prefix.with_extension("g6");
    let side = prefix.with_extension("json");
    fs::write(&g6, format!("{}\n", graph6::encode(g))).with_context(|| format!("writing {}", g6.display()))?;
    fs::write(&side, Sidecar::of(g).to_json()).with_context(|| format!("writing {}", side.display()))?;
    Ok((g6, side))
}
