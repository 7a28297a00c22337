//! graph6 encoding of the unlabeled adjacency, plus the JSON sidecar that
//! carries role tags and heavy edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Role};

const HEADER: &str = ">>graph6<<";

fn size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    }
}

pub fn encode(g: &LabeledGraph) -> String {
    let n = g.n();
    let mut out = size_bytes(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sixbits(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside the graph6 alphabet")))
    }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and a single
/// trailing newline are accepted; anything else after the data is rejected.
pub fn decode(text: &str) -> Result<LabeledGraph> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let text = text
        .strip_suffix("\r\n")
        .or_else(|| text.strip_suffix('\n'))
        .unwrap_or(text);
    let bytes = text.as_bytes();
    let malformed = || Error::Graph6("malformed length header".into());
    let (n, body) = match bytes {
        [] => return Err(malformed()),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed());
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | sixbits(b).map_err(|_| malformed())? as usize;
            }
            if n <= 258_047 {
                return Err(malformed());
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed());
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | sixbits(b).map_err(|_| malformed())? as usize;
            }
            if n <= 62 {
                return Err(malformed());
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sixbits(*b).map_err(|_| malformed())? as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(Error::Graph6(format!(
            "truncated: {} data bytes, {needed} expected",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(Error::Graph6("trailing garbage after adjacency data".into()));
    }
    let mut values = Vec::with_capacity(needed);
    for &b in body {
        values.push(sixbits(b)?);
    }
    let pad = needed * 6 - bits;
    if pad > 0 && values[needed - 1] & ((1 << pad) - 1) != 0 {
        return Err(Error::Graph6("non-canonical padding bits set".into()));
    }
    let mut g = LabeledGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Role tags and heavy edges, stored next to the graph6 file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub n: usize,
    pub roles: Vec<String>,
    pub heavy_edges: Vec<[usize; 2]>,
}

impl Sidecar {
    pub fn of(g: &LabeledGraph) -> Sidecar {
        Sidecar {
            n: g.n(),
            roles: g.roles().iter().map(Role::to_string).collect(),
            heavy_edges: g.heavy_edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    /// Attaches these labels to an unlabeled graph of matching order.
    pub fn apply(&self, g: &LabeledGraph) -> Result<LabeledGraph> {
        if self.n != g.n() {
            return Err(Error::Sidecar(format!(
                "sidecar describes {} vertices, graph has {}",
                self.n,
                g.n()
            )));
        }
        let roles = self.roles.iter().map(|r| r.parse()).collect::<Result<Vec<Role>>>()?;
        let heavy: Vec<(usize, usize)> = self.heavy_edges.iter().map(|e| (e[0], e[1])).collect();
        g.with_labels(roles, &heavy)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sidecar serializes")
    }

    pub fn from_json(text: &str) -> Result<Sidecar> {
        serde_json::from_str(text).map_err(|e| Error::Sidecar(e.to_string()))
    }
}
