//! Resumable exhaustive 2-liec searches for instances too large for one sitting
//! (the K9 and K10 lower-bound runs).
//!
//! The search space is split on the first `depth` bundles of the search order,
//! giving `2^depth` independent subproblems, or `2^(depth-1)` when the engine
//! breaks color symmetry and the first bundle is fixed to red.
//! Finished subproblems are recorded in a checkpoint file:
//!
//! ```text
//! magic   8 bytes  "LIRCKPT\0"
//! version u32 LE   1
//! graph   u64 LE   FNV-1a fingerprint of n and the bundle list
//! depth   u32 LE
//! count   u32 LE
//! done    count x u32 LE, indices of exhausted subproblems
//! ```

use std::collections::BTreeSet;
use std::fs;
use std::io::{Read, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::engine::{search_order, Engine, Limits, Outcome};
use super::{to_coloring, Existence, SolveBudget};
use crate::error::{invalid, Error, Result};
use crate::graph::Multigraph;

const MAGIC: &[u8; 8] = b"LIRCKPT\0";
const VERSION: u32 = 1;
/// Minimum time between checkpoint writes; stops and completion always write.
const SAVE_EVERY: Duration = Duration::from_secs(5);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub fingerprint: u64,
    pub depth: u32,
    pub done: BTreeSet<u32>,
}

impl Checkpoint {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(28 + 4 * self.done.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&self.fingerprint.to_le_bytes());
        out.extend_from_slice(&self.depth.to_le_bytes());
        out.extend_from_slice(&(self.done.len() as u32).to_le_bytes());
        for &i in &self.done {
            out.extend_from_slice(&i.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(mut bytes: &[u8]) -> Result<Checkpoint> {
        let bad = |why: &str| Error::Parse(format!("checkpoint: {why}"));
        let mut magic = [0u8; 8];
        bytes.read_exact(&mut magic).map_err(|_| bad("truncated"))?;
        if &magic != MAGIC {
            return Err(bad("bad magic"));
        }
        let mut u32buf = [0u8; 4];
        let mut u64buf = [0u8; 8];
        bytes.read_exact(&mut u32buf).map_err(|_| bad("truncated"))?;
        if u32::from_le_bytes(u32buf) != VERSION {
            return Err(bad("unsupported version"));
        }
        bytes.read_exact(&mut u64buf).map_err(|_| bad("truncated"))?;
        let fingerprint = u64::from_le_bytes(u64buf);
        bytes.read_exact(&mut u32buf).map_err(|_| bad("truncated"))?;
        let depth = u32::from_le_bytes(u32buf);
        bytes.read_exact(&mut u32buf).map_err(|_| bad("truncated"))?;
        let count = u32::from_le_bytes(u32buf);
        let mut done = BTreeSet::new();
        for _ in 0..count {
            bytes.read_exact(&mut u32buf).map_err(|_| bad("truncated"))?;
            done.insert(u32::from_le_bytes(u32buf));
        }
        Ok(Checkpoint {
            fingerprint,
            depth,
            done,
        })
    }

    fn save(&self, path: &Path) -> Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&self.to_bytes())?;
        f.sync_all()?;
        fs::rename(tmp, path)?;
        Ok(())
    }
}

pub fn fingerprint(g: &Multigraph) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(g.n() as u64);
    for b in g.bundles() {
        eat(b.u as u64);
        eat(b.v as u64);
        eat(b.mult as u64);
    }
    h
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongRunReport {
    pub existence: Existence,
    pub subproblems: u32,
    pub completed: u32,
    pub nodes: u64,
}

/// Exhaustive 2-liec search split into resumable subproblems.
///
/// `progress` is called after every batch with (completed, total).
pub fn exists_2liec_resumable(
    m: &Multigraph,
    depth: usize,
    checkpoint: Option<&Path>,
    budget: &SolveBudget,
    mut progress: impl FnMut(u32, u32),
) -> Result<LongRunReport> {
    budget.validate()?;
    let order = search_order(m);
    if depth == 0 || depth > order.len() || depth > 24 {
        return Err(invalid("split depth must be in 1..=min(24, bundles)"));
    }
    let twins = Engine::with_order(m, 2, Limits { node_limit: 0, deadline: None }, order.clone()).twin_ordering();
    let free_bits = if twins { depth } else { depth - 1 };
    let total: u32 = 1 << free_bits;
    let fp = fingerprint(m);
    let mut state = match checkpoint {
        Some(p) if p.exists() => {
            let ck = Checkpoint::from_bytes(&fs::read(p)?)?;
            if ck.fingerprint != fp || ck.depth as usize != depth {
                return Err(invalid("checkpoint belongs to another graph or depth"));
            }
            ck
        }
        _ => Checkpoint {
            fingerprint: fp,
            depth: depth as u32,
            done: BTreeSet::new(),
        },
    };
    let start = Instant::now();
    let limits = Limits {
        node_limit: budget.node_limit,
        deadline: budget.time_limit.map(|t| start + t),
    };
    let pending: Vec<u32> = (0..total).filter(|i| !state.done.contains(i)).collect();
    let batch = rayon::current_num_threads().max(1) * 4;
    let mut nodes = 0;
    let mut last_save = Instant::now();
    for chunk in pending.chunks(batch) {
        let solve = |&idx: &u32| {
            let mut eng = Engine::with_order(m, 2, limits, order.clone());
            let (first, skip) = if twins { (0, 0) } else { (1, 1) };
            if !twins {
                eng.fix_branch(order[0], 0);
            }
            for (j, &e) in order.iter().enumerate().take(depth).skip(skip) {
                eng.fix_branch(e, ((idx >> (j - first)) & 1) as u8);
            }
            let out = eng.run();
            (idx, out, eng.nodes)
        };
        let results: Vec<(u32, Outcome, u64)> = if budget.parallel {
            chunk.par_iter().map(solve).collect()
        } else {
            chunk.iter().map(solve).collect()
        };
        let mut stopped = false;
        for (idx, out, cnt) in results {
            nodes += cnt;
            match out {
                Outcome::Found(c) => {
                    return Ok(LongRunReport {
                        existence: Existence::Found(to_coloring(&c)),
                        subproblems: total,
                        completed: state.done.len() as u32,
                        nodes,
                    });
                }
                Outcome::Exhausted => {
                    state.done.insert(idx);
                }
                Outcome::Stopped => stopped = true,
            }
        }
        let finished = state.done.len() as u32 == total;
        if let Some(p) = checkpoint {
            if stopped || finished || last_save.elapsed() >= SAVE_EVERY {
                state.save(p)?;
                last_save = Instant::now();
            }
        }
        progress(state.done.len() as u32, total);
        if stopped {
            return Ok(LongRunReport {
                existence: Existence::BudgetExceeded,
                subproblems: total,
                completed: state.done.len() as u32,
                nodes,
            });
        }
    }
    Ok(LongRunReport {
        existence: Existence::Absent,
        subproblems: total,
        completed: total,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Multigraph {
        Multigraph::simple(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn checkpoint_round_trip() {
        let ck = Checkpoint {
            fingerprint: 42,
            depth: 5,
            done: [1, 3, 7].into_iter().collect(),
        };
        assert_eq!(Checkpoint::from_bytes(&ck.to_bytes()).unwrap(), ck);
        assert!(Checkpoint::from_bytes(b"garbage").is_err());
    }

    #[test]
    fn split_search_agrees_with_direct_search() {
        let g = complete(5);
        let r = exists_2liec_resumable(&g, 4, None, &SolveBudget::default(), |_, _| {}).unwrap();
        assert_eq!(r.existence, Existence::Absent);
        let d = crate::graph::apply_doubling(&g, &[0]).unwrap();
        let r = exists_2liec_resumable(&d, 4, None, &SolveBudget::default(), |_, _| {}).unwrap();
        assert!(matches!(r.existence, Existence::Found(_)));
    }

    #[test]
    fn resume_skips_finished_work() {
        let dir = std::env::temp_dir().join(format!("lirlab-ck-{}", std::process::id()));
        let _ = fs::remove_file(&dir);
        let g = complete(5);
        let first = exists_2liec_resumable(&g, 3, Some(&dir), &SolveBudget::default(), |_, _| {}).unwrap();
        assert_eq!(first.completed, first.subproblems);
        assert_eq!(first.subproblems, 8);
        let again = exists_2liec_resumable(&g, 3, Some(&dir), &SolveBudget::default(), |_, _| {}).unwrap();
        assert_eq!(again.nodes, 0);
        assert_eq!(again.existence, Existence::Absent);
        let _ = fs::remove_file(&dir);
    }
}
