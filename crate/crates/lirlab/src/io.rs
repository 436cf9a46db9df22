//! JSON and DOT encodings.
//!
//! JSON layout: `{"n": 4, "edges": [[0,1,2],[1,2,1]], "coloring": ["R","B"], "doubled": [0]}`.
//! Edges appear in canonical order. `coloring` and `doubled` are optional.
//! A document with `doubled` describes a simple base graph plus a plan; the
//! multiplicities in `edges` then record the doubled multigraph.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, DoublingPlan, EdgeColoring, Multigraph};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Document {
    pub n: usize,
    pub edges: Vec<(usize, usize, u8)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<Color>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub doubled: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_labels: Option<Vec<(u32, u32)>>,
}

/// What a decoded document carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decoded {
    Graph(Multigraph),
    Colored(Multigraph, EdgeColoring),
    Plan(Multigraph, DoublingPlan),
}

impl Decoded {
    /// The graph as stored (for plans: the simple base graph).
    pub fn graph(&self) -> &Multigraph {
        match self {
            Decoded::Graph(g) | Decoded::Colored(g, _) | Decoded::Plan(g, _) => g,
        }
    }
}

fn edges_of(g: &Multigraph) -> Vec<(usize, usize, u8)> {
    g.bundles().iter().map(|b| (b.u, b.v, b.mult)).collect()
}

pub fn graph_document(g: &Multigraph) -> Document {
    Document {
        n: g.n(),
        edges: edges_of(g),
        coloring: None,
        doubled: None,
        degree_labels: None,
    }
}

pub fn colored_document(g: &Multigraph, c: &EdgeColoring) -> Document {
    Document {
        coloring: Some(c.colors().to_vec()),
        ..graph_document(g)
    }
}

/// Plan documents list the doubled multigraph's edges, the coloring and the doubled ids.
pub fn plan_document(base: &Multigraph, plan: &DoublingPlan) -> Result<Document> {
    let m = plan.multigraph(base)?;
    Ok(Document {
        n: m.n(),
        edges: edges_of(&m),
        coloring: Some(plan.coloring.colors().to_vec()),
        doubled: Some(plan.doubled.clone()),
        degree_labels: None,
    })
}

pub fn to_json(doc: &Document) -> String {
    serde_json::to_string(doc).expect("document serializes")
}

pub fn encode_graph(g: &Multigraph) -> String {
    to_json(&graph_document(g))
}

pub fn encode_colored(g: &Multigraph, c: &EdgeColoring) -> String {
    to_json(&colored_document(g, c))
}

pub fn encode_plan(base: &Multigraph, plan: &DoublingPlan) -> Result<String> {
    Ok(to_json(&plan_document(base, plan)?))
}

pub fn parse_document(text: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn decode(text: &str) -> Result<Decoded> {
    from_document(&parse_document(text)?)
}

pub fn from_document(doc: &Document) -> Result<Decoded> {
    let g = Multigraph::new(doc.n, doc.edges.iter().copied())?;
    let coloring = match &doc.coloring {
        None => None,
        Some(cs) => {
            if cs.len() != g.bundle_count() {
                return Err(Error::ColoringLength {
                    expected: g.bundle_count(),
                    got: cs.len(),
                });
            }
            Some(EdgeColoring::new(cs.clone()))
        }
    };
    match (&doc.doubled, coloring) {
        (None, None) => Ok(Decoded::Graph(g)),
        (None, Some(c)) => Ok(Decoded::Colored(g, c)),
        (Some(_), None) => Err(Error::Parse("`doubled` given without `coloring`".into())),
        (Some(d), Some(c)) => {
            let mut doubled = d.clone();
            doubled.sort_unstable();
            doubled.dedup();
            let marked = g.doubled_ids();
            if doubled.iter().any(|&i| i >= g.bundle_count()) || marked != doubled {
                return Err(Error::Parse(
                    "`doubled` must list exactly the bundles with multiplicity 2".into(),
                ));
            }
            Ok(Decoded::Plan(g.underlying(), DoublingPlan::new(doubled, c)))
        }
    }
}

/// DOT text; doubled bundles become two parallel edges.
pub fn export_dot(g: &Multigraph, c: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (i, b) in g.bundles().iter().enumerate() {
        let attr = match c {
            Some(c) => format!(" [color={}]", c.get(i)),
            None => String::new(),
        };
        for _ in 0..b.mult {
            let _ = writeln!(out, "  {} -- {}{};", b.u, b.v, attr);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_round_trip() {
        let g = Multigraph::simple(3, [(1, 2), (0, 1)]).unwrap();
        let text = encode_graph(&g);
        assert_eq!(text, r#"{"n":3,"edges":[[0,1,1],[1,2,1]]}"#);
        assert_eq!(decode(&text).unwrap(), Decoded::Graph(g));
    }

    #[test]
    fn loop_is_rejected() {
        assert!(decode(r#"{"n":2,"edges":[[1,1,1]]}"#).is_err());
        assert!(decode(r#"{"n":2,"edges":[[0,1,1],[1,0,1]]}"#).is_err());
        assert!(decode("not json").is_err());
    }

    #[test]
    fn plan_round_trip() {
        let g = Multigraph::simple(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let plan = DoublingPlan::new([0], EdgeColoring::uniform(3, Color::Red));
        let text = encode_plan(&g, &plan).unwrap();
        assert_eq!(decode(&text).unwrap(), Decoded::Plan(g, plan));
    }

    #[test]
    fn dot_draws_parallel_edges() {
        let g = Multigraph::new(3, [(0, 1, 2), (1, 2, 1)]).unwrap();
        let dot = export_dot(&g, Some(&EdgeColoring::new(vec![Color::Red, Color::Blue])));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.matches("color=red").count(), 2);
    }
}
