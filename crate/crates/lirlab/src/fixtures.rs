//! Colorings transcribed from drawings, stored as JSON plan documents.
//!
//! Every fixture carries `degree_labels`, the printed (blue, red) pair of each
//! vertex. Loading recomputes the color degrees and rejects the fixture unless
//! they match exactly and the coloring verifies.
//!
//! | name | graph |
//! |---|---|
//! | `k4`, `k6`, `k8`, `k9` | complete graphs with one or two doubled edges |
//! | `k11` | K11 with the edge 1–2 doubled |
//! | `split8_d1`..`split8_d3` | clique 0..8 with `d` pendant vertices at vertex 0 |
//! | `c11_3` | the cube of C11 in cyclic order |
//! | `k3_split_colors` | K3 with one doubled edge whose two copies differ in color |

use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{Color, DoublingPlan, Multigraph};
use crate::io::{from_document, parse_document, Decoded};

const BUILTIN: &[(&str, &str)] = &[
    ("k4", include_str!("../fixtures/k4.json")),
    ("k6", include_str!("../fixtures/k6.json")),
    ("k8", include_str!("../fixtures/k8.json")),
    ("k9", include_str!("../fixtures/k9.json")),
    ("k11", include_str!("../fixtures/k11.json")),
    ("split8_d1", include_str!("../fixtures/split8_d1.json")),
    ("split8_d2", include_str!("../fixtures/split8_d2.json")),
    ("split8_d3", include_str!("../fixtures/split8_d3.json")),
    ("c11_3", include_str!("../fixtures/c11_3.json")),
];

const K3_SPLIT_COLORS: &str = include_str!("../fixtures/k3_split_colors.json");

static DIR: OnceLock<PathBuf> = OnceLock::new();

/// Names of the plan fixtures.
pub fn names() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(n, _)| *n)
}

/// Makes later loads read `<dir>/<name>.json` instead of the embedded copies.
/// Only the first call has an effect.
pub fn use_directory(dir: impl Into<PathBuf>) -> bool {
    DIR.set(dir.into()).is_ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub base: Multigraph,
    pub plan: DoublingPlan,
    /// (blue, red) per vertex.
    pub labels: Vec<(u32, u32)>,
}

fn bad(name: &str, reason: impl Into<String>) -> Error {
    Error::Fixture {
        name: name.to_string(),
        reason: reason.into(),
    }
}

/// Parses a fixture and checks its labels and coloring.
pub fn parse(name: &str, text: &str) -> Result<Fixture> {
    let doc = parse_document(text)?;
    let labels = doc
        .degree_labels
        .clone()
        .ok_or_else(|| bad(name, "missing degree_labels"))?;
    let (base, plan) = match from_document(&doc)? {
        Decoded::Plan(g, p) => (g, p),
        _ => return Err(bad(name, "not a plan document")),
    };
    let got = plan.degrees(&base)?.blue_red_pairs();
    if got != labels {
        let v = (0..labels.len().min(got.len()))
            .find(|&v| got[v] != labels[v])
            .unwrap_or(labels.len().min(got.len()));
        return Err(bad(name, format!("degree labels differ first at vertex {v}")));
    }
    let report = plan.verify(&base)?;
    if !report.ok {
        return Err(bad(name, format!("{} violated bundles", report.violations.len())));
    }
    Ok(Fixture {
        name: name.to_string(),
        base,
        plan,
        labels,
    })
}

pub fn load_from(dir: &Path, name: &str) -> Result<Fixture> {
    let text = std::fs::read_to_string(dir.join(format!("{name}.json")))?;
    parse(name, &text)
}

pub fn load(name: &str) -> Result<Fixture> {
    if let Some(dir) = DIR.get() {
        return load_from(dir, name);
    }
    let text = BUILTIN
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| bad(name, "unknown fixture"))?;
    parse(name, text)
}

/// A multigraph whose parallel copies carry their own colors. This lies
/// outside the bundle model and exists only to hold the K3 example.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct CopyColoring {
    pub n: usize,
    pub edges: Vec<(usize, usize, Color)>,
    pub degree_labels: Vec<(u32, u32)>,
}

impl CopyColoring {
    /// (blue, red) per vertex.
    pub fn degrees(&self) -> Vec<(u32, u32)> {
        let mut d = vec![(0, 0); self.n];
        for &(u, v, c) in &self.edges {
            for x in [u, v] {
                match c {
                    Color::Blue => d[x].0 += 1,
                    Color::Red => d[x].1 += 1,
                }
            }
        }
        d
    }

    pub fn is_liec(&self) -> bool {
        let d = self.degrees();
        let of = |v: usize, c: Color| if c == Color::Blue { d[v].0 } else { d[v].1 };
        self.edges.iter().all(|&(u, v, c)| of(u, c) != of(v, c))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for &(u, v, c) in &self.edges {
            out.push_str(&format!("  {u} -- {v} [color={c}];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// K3 with the edge 1–2 doubled, one copy blue and one red.
pub fn k3_split_colors() -> Result<CopyColoring> {
    let name = "k3_split_colors";
    let c: CopyColoring = serde_json::from_str(K3_SPLIT_COLORS).map_err(|e| bad(name, e.to_string()))?;
    if c.degrees() != c.degree_labels {
        return Err(bad(name, "degree labels differ"));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load() {
        for name in names() {
            load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn tampered_label_is_rejected() {
        let text = BUILTIN[0].1.replace("[[0,4]", "[[0,3]");
        assert!(matches!(parse("k4", &text), Err(Error::Fixture { .. })));
    }

    #[test]
    fn k3_copies() {
        let c = k3_split_colors().unwrap();
        assert!(c.is_liec());
        assert_eq!(c.to_dot().matches(" -- ").count(), 4);
    }
}
