//! Test helpers on top of the reference implementations.

#![allow(dead_code)]

pub use lirlab::reference::*;
use lirlab::Multigraph;
use rand::Rng;

/// A connected random graph on `n` vertices with edge probability `p`.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Multigraph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Multigraph::simple(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}
