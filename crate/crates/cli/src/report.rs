use std::time::Instant;

use hendry_core::{Cycle, Error, LabeledGraph, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};

pub const TOOLKIT: &str = concat!("hendry ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    CapExceeded,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Value of the property, absent when the cap stopped the computation.
    pub verdict: Option<bool>,
    pub certificate: Value,
    pub elapsed_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub toolkit: &'static str,
    pub command: String,
    pub input: String,
    pub parameters: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, input: String, parameters: Value) -> Report {
        Report {
            toolkit: TOOLKIT,
            command: command.to_string(),
            input,
            parameters,
            checks: Vec::new(),
        }
    }

    pub fn finish(mut self) -> Report {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    /// 0 when every check passes, 3 when any hit a cap, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::CapExceeded) {
            3
        } else if self.checks.iter().all(|c| c.status == Status::Pass) {
            0
        } else {
            1
        }
    }

    /// Runs `body` and records its outcome. The body returns whether the
    /// expected property holds and a certificate; a cap error becomes a
    /// `cap_exceeded` entry and any other error is propagated.
    pub fn run<F>(&mut self, name: &str, body: F) -> anyhow::Result<()>
    where
        F: FnOnce() -> hendry_core::Result<(bool, Value)>,
    {
        let start = Instant::now();
        let outcome = body();
        let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
        let check = match outcome {
            Ok((holds, certificate)) => Check {
                name: name.to_string(),
                status: if holds { Status::Pass } else { Status::Fail },
                verdict: Some(holds),
                certificate,
                elapsed_ms,
            },
            Err(e @ Error::CapExceeded { .. }) => Check {
                name: name.to_string(),
                status: Status::CapExceeded,
                verdict: None,
                certificate: json!({ "error": e.to_string() }),
                elapsed_ms,
            },
            Err(e) => return Err(e.into()),
        };
        self.checks.push(check);
        Ok(())
    }
}

/// Vertex ids with their role names.
pub fn vertices(g: &LabeledGraph, ids: impl IntoIterator<Item = usize>) -> Value {
    let ids: Vec<usize> = ids.into_iter().collect();
    let names: Vec<String> = ids.iter().map(|&v| g.name(v)).collect();
    json!({ "ids": ids, "names": names })
}

pub fn set(g: &LabeledGraph, s: &VertexSet) -> Value {
    vertices(g, s.iter())
}

pub fn cycle(g: &LabeledGraph, c: &Cycle) -> Value {
    vertices(g, c.vertices().iter().copied())
}

pub fn complement(g: &LabeledGraph, s: &VertexSet) -> Value {
    set(g, &g.all_vertices().difference(s))
}
