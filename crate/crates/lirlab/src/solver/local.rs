//! Randomized local search for 2-liecs. It can only find colorings, never
//! prove absence, and serves as a fast first attempt before the exact search.
//!
//! Each step picks a random violated bundle and flips the bundle at either end
//! of it that leaves the fewest violations, with a small chance of a random
//! flip instead.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::graph::{Color, EdgeColoring, Multigraph};

struct State<'a> {
    g: &'a Multigraph,
    /// true for blue
    col: Vec<bool>,
    deg: Vec<[u32; 2]>,
    /// Position of each violated bundle in `bad`, or `usize::MAX`.
    pos: Vec<usize>,
    bad: Vec<usize>,
}

impl<'a> State<'a> {
    fn new(g: &'a Multigraph, col: Vec<bool>) -> State<'a> {
        let mut deg = vec![[0u32; 2]; g.n()];
        for (i, b) in g.bundles().iter().enumerate() {
            let c = col[i] as usize;
            deg[b.u][c] += b.mult as u32;
            deg[b.v][c] += b.mult as u32;
        }
        let mut s = State {
            g,
            col,
            deg,
            pos: vec![usize::MAX; g.bundle_count()],
            bad: Vec::new(),
        };
        for i in 0..g.bundle_count() {
            s.refresh(i);
        }
        s
    }

    fn violated(&self, i: usize) -> bool {
        let b = self.g.bundle(i);
        let c = self.col[i] as usize;
        self.deg[b.u][c] == self.deg[b.v][c]
    }

    fn refresh(&mut self, i: usize) {
        let now = self.violated(i);
        let was = self.pos[i] != usize::MAX;
        if now && !was {
            self.pos[i] = self.bad.len();
            self.bad.push(i);
        } else if !now && was {
            let p = self.pos[i];
            self.bad.swap_remove(p);
            if p < self.bad.len() {
                self.pos[self.bad[p]] = p;
            }
            self.pos[i] = usize::MAX;
        }
    }

    fn flip_raw(&mut self, f: usize) {
        let b = self.g.bundle(f);
        let c = self.col[f] as usize;
        let w = b.mult as u32;
        for x in [b.u, b.v] {
            self.deg[x][c] -= w;
            self.deg[x][1 - c] += w;
        }
        self.col[f] = !self.col[f];
    }

    fn flip(&mut self, f: usize) {
        self.flip_raw(f);
        let b = self.g.bundle(f);
        for x in [b.u, b.v] {
            for j in 0..self.g.incident(x).len() {
                let e = self.g.incident(x)[j];
                self.refresh(e);
            }
        }
    }

    /// Violations among bundles touching the ends of `f` after flipping it.
    fn local_cost_after(&mut self, f: usize) -> usize {
        self.flip_raw(f);
        let b = self.g.bundle(f);
        let mut cost = 0;
        for x in [b.u, b.v] {
            for &e in self.g.incident(x) {
                let be = self.g.bundle(e);
                // count bundle u-v once
                if x == b.v && (be.u == b.u || be.v == b.u) {
                    continue;
                }
                cost += self.violated(e) as usize;
            }
        }
        self.flip_raw(f);
        cost
    }
}

/// Tries to find a 2-liec of `g` within `steps` flips.
pub fn local_search_2liec(g: &Multigraph, seed: u64, steps: u64) -> Option<EdgeColoring> {
    let mut rng = StdRng::seed_from_u64(seed);
    let col: Vec<bool> = (0..g.bundle_count()).map(|_| rng.gen()).collect();
    let mut s = State::new(g, col);
    let mut cands = Vec::new();
    for _ in 0..steps {
        if s.bad.is_empty() {
            break;
        }
        let e = s.bad[rng.gen_range(0..s.bad.len())];
        let b = g.bundle(e);
        cands.clear();
        cands.extend(g.incident(b.u).iter().chain(g.incident(b.v)).copied());
        cands.sort_unstable();
        cands.dedup();
        let f = if rng.gen_bool(0.1) {
            cands[rng.gen_range(0..cands.len())]
        } else {
            let mut best = (usize::MAX, e);
            for &f in &cands {
                let k = s.local_cost_after(f);
                if k < best.0 || (k == best.0 && rng.gen_bool(0.5)) {
                    best = (k, f);
                }
            }
            best.1
        };
        s.flip(f);
    }
    if !s.bad.is_empty() {
        return None;
    }
    let colors = s.col.iter().map(|&c| if c { Color::Blue } else { Color::Red }).collect();
    Some(EdgeColoring::new(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::split_graph;
    use crate::graph::verify_liec;

    #[test]
    fn finds_split_colorings() {
        for (n, d) in [(12, vec![3, 1]), (9, vec![1, 1]), (7, vec![3])] {
            let g = split_graph(n, &d).unwrap();
            let c = (0..5).find_map(|s| local_search_2liec(&g, s, 200_000)).expect("found");
            assert!(verify_liec(&g, &c).unwrap().ok);
        }
    }

    #[test]
    fn gives_up_on_complete_graphs() {
        let g = crate::families::complete(5).unwrap();
        assert!(local_search_2liec(&g, 1, 2_000).is_none());
    }
}
