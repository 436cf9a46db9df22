//! Build scripts for cacti grown from a cycle by attaching paths at degree-2
//! cycle vertices, each path either ending in a pendant vertex or in a new cycle.
//!
//! Vertex order: the base cycle is `0..base` in cyclic order. Each step then
//! appends its path vertices from the attachment point outwards, and, if the
//! step closes a new cycle, the remaining vertices of that cycle in cyclic
//! order starting after the path end.
//!
//! JSON form: `{"base": 5, "steps": [{"at": 0, "len": 2, "cycle": 4}, {"at": 3, "len": 1}]}`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauStep {
    /// Existing vertex of degree two lying on a cycle.
    pub at: usize,
    /// Path length, at least 1.
    pub len: usize,
    /// Length of the new cycle closed at the far end of the path.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauStarScript {
    pub base: usize,
    #[serde(default)]
    pub steps: Vec<TauStep>,
}

/// A path hanging from a cycle vertex. `path` lists the vertices after `at`;
/// when `to_cycle` is set, the last one lies on that cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    pub at: usize,
    pub path: Vec<usize>,
    pub to_cycle: Option<usize>,
}

/// The graph of a script together with its cycles and attachments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cactus {
    pub graph: Multigraph,
    pub cycles: Vec<Vec<usize>>,
    pub attachments: Vec<Attachment>,
}

impl TauStarScript {
    pub fn from_json(text: &str) -> Result<TauStarScript> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("cactus script: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("script serializes")
    }

    pub fn cycle_count(&self) -> usize {
        1 + self.steps.iter().filter(|s| s.cycle.is_some()).count()
    }

    pub fn build(&self) -> Result<Cactus> {
        if self.base < 3 {
            return Err(invalid("base cycle needs length >= 3"));
        }
        let mut n = self.base;
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let mut degree = vec![2usize; n];
        let mut on_cycle = vec![true; n];
        let mut cycles = vec![(0..n).collect::<Vec<_>>()];
        let mut attachments = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            if s.at >= n || degree[s.at] != 2 || !on_cycle[s.at] {
                return Err(invalid(format!(
                    "step {i}: vertex {} is not a degree-2 cycle vertex",
                    s.at
                )));
            }
            if s.len == 0 {
                return Err(invalid(format!("step {i}: path length must be positive")));
            }
            let mut path = Vec::with_capacity(s.len);
            let mut prev = s.at;
            for _ in 0..s.len {
                edges.push((prev, n));
                degree[prev] += 1;
                degree.push(1);
                on_cycle.push(false);
                path.push(n);
                prev = n;
                n += 1;
            }
            let end = prev;
            let to_cycle = match s.cycle {
                None => None,
                Some(c) if c < 3 => {
                    return Err(invalid(format!("step {i}: new cycle needs length >= 3")));
                }
                Some(c) => {
                    let mut cyc = vec![end];
                    let mut last = end;
                    for _ in 1..c {
                        edges.push((last, n));
                        degree.push(2);
                        on_cycle.push(true);
                        cyc.push(n);
                        last = n;
                        n += 1;
                    }
                    edges.push((last, end));
                    degree[end] = 3;
                    on_cycle[end] = true;
                    cycles.push(cyc);
                    Some(cycles.len() - 1)
                }
            };
            attachments.push(Attachment {
                at: s.at,
                path,
                to_cycle,
            });
        }
        Ok(Cactus {
            graph: Multigraph::simple(n, edges)?,
            cycles,
            attachments,
        })
    }

    /// Random script with at most `max_cycles` cycles.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_cycles: usize, max_steps: usize) -> TauStarScript {
        let base = rng.gen_range(3..=8);
        let mut script = TauStarScript {
            base,
            steps: Vec::new(),
        };
        let target = rng.gen_range(1..=max_steps.max(1));
        for _ in 0..target {
            let cactus = script.build().expect("script stays valid");
            let free: Vec<usize> = cactus
                .cycles
                .iter()
                .flatten()
                .copied()
                .filter(|&v| cactus.graph.degree(v) == 2)
                .collect();
            if free.is_empty() {
                break;
            }
            let at = free[rng.gen_range(0..free.len())];
            let len = rng.gen_range(1..=5);
            let cycle = (script.cycle_count() < max_cycles && rng.gen_bool(0.5))
                .then(|| rng.gen_range(3..=7));
            script.steps.push(TauStep { at, len, cycle });
        }
        if script.steps.is_empty() {
            script.steps.push(TauStep {
                at: 0,
                len: 1,
                cycle: None,
            });
        }
        script
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn two_cycles_joined_by_an_edge() {
        let s = TauStarScript {
            base: 4,
            steps: vec![TauStep {
                at: 1,
                len: 1,
                cycle: Some(3),
            }],
        };
        let c = s.build().unwrap();
        assert_eq!(c.graph.n(), 7);
        assert_eq!(c.graph.bundle_count(), 8);
        assert_eq!(c.cycles, vec![vec![0, 1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(c.graph.degree(4), 3);
    }

    #[test]
    fn attaching_twice_at_one_vertex_fails() {
        let s = TauStarScript {
            base: 3,
            steps: vec![
                TauStep { at: 0, len: 1, cycle: None },
                TauStep { at: 0, len: 2, cycle: None },
            ],
        };
        assert!(s.build().is_err());
        let s = TauStarScript {
            base: 3,
            steps: vec![
                TauStep { at: 1, len: 2, cycle: None },
                TauStep { at: 3, len: 2, cycle: None },
            ],
        };
        assert!(s.build().is_err(), "path vertices are not on a cycle");
    }

    #[test]
    fn json_round_trip() {
        let s = TauStarScript::from_json(r#"{"base":5,"steps":[{"at":0,"len":2,"cycle":4}]}"#).unwrap();
        assert_eq!(TauStarScript::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn random_scripts_build() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let s = TauStarScript::random(&mut rng, 4, 8);
            let c = s.build().unwrap();
            assert!(c.graph.is_connected());
            assert!(c.cycles.len() <= 4);
            assert_eq!(c.graph.bundle_count() + 1, c.graph.n() + c.cycles.len());
        }
    }
}
