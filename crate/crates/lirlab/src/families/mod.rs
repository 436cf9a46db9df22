//! Graph family generators and their textual spec grammar.
//!
//! Grammar (no whitespace):
//!
//! ```text
//! path:n | cycle:n | complete:n | kpartite:a,b,... | powcycle:n,k
//! split:n;d1,d2,... | bowtie | almostirr:t,connected|disconnected
//! taustar:@file | trianglechain:m | eighth:m
//! ```
//!
//! Vertex orders:
//! - paths and cycles: along the path / cyclic order;
//! - powers of cycles: cyclic order, `i ~ j` iff cyclic distance `<= k`;
//! - complete multipartite: parts consecutively, in the given order;
//! - split graphs: clique `0..n`, then the pendants of clique vertex 0, then of 1, ...;
//! - almost irregular graphs: ascending target degree;
//! - cactus scripts, triangle chains and the eighth gadget: see their modules.

pub mod gadgets;
pub mod recognize;
pub mod taustar;

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::graph::Multigraph;

pub use gadgets::{eighth_gadget, triangle_chain, triangle_chain_script};
pub use recognize::{in_triangle_family, is_uncolorable};
pub use taustar::{TauStarScript, TauStep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    PowerOfCycle { n: usize, k: usize },
    Split { clique: usize, pendants: Vec<usize> },
    Bowtie,
    AlmostIrregular { t: usize, connected: bool },
    TauStar(TauStarScript),
    TriangleChain(usize),
    EighthGadget(usize),
}

fn num(s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {s:?}")))
}

fn nums(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(num).collect()
}

impl FamilySpec {
    /// Parses a spec; `taustar:@file` reads the script through `load`.
    pub fn parse_with(text: &str, load: impl Fn(&str) -> Result<String>) -> Result<FamilySpec> {
        let (name, arg) = match text.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (text, None),
        };
        let need = || arg.ok_or_else(|| Error::Parse(format!("{name} needs parameters")));
        let spec = match name {
            "path" => FamilySpec::Path(num(need()?)?),
            "cycle" => FamilySpec::Cycle(num(need()?)?),
            "complete" => FamilySpec::Complete(num(need()?)?),
            "kpartite" => FamilySpec::CompleteMultipartite(nums(need()?)?),
            "powcycle" => match nums(need()?)?.as_slice() {
                &[n, k] => FamilySpec::PowerOfCycle { n, k },
                _ => return Err(Error::Parse("powcycle:n,k".into())),
            },
            "split" => {
                let a = need()?;
                let (n, ds) = a.split_once(';').unwrap_or((a, ""));
                FamilySpec::Split {
                    clique: num(n)?,
                    pendants: nums(ds)?,
                }
            }
            "bowtie" if arg.is_none() => FamilySpec::Bowtie,
            "almostirr" => {
                let a = need()?;
                let (t, c) = a
                    .split_once(',')
                    .ok_or_else(|| Error::Parse("almostirr:t,connected|disconnected".into()))?;
                let connected = match c {
                    "connected" | "c" => true,
                    "disconnected" | "d" => false,
                    _ => return Err(Error::Parse(format!("bad connectivity flag {c:?}"))),
                };
                FamilySpec::AlmostIrregular {
                    t: num(t)?,
                    connected,
                }
            }
            "taustar" => {
                let a = need()?;
                let path = a
                    .strip_prefix('@')
                    .ok_or_else(|| Error::Parse("taustar:@file".into()))?;
                FamilySpec::TauStar(TauStarScript::from_json(&load(path)?)?)
            }
            "trianglechain" => FamilySpec::TriangleChain(num(need()?)?),
            "eighth" => FamilySpec::EighthGadget(num(need()?)?),
            _ => return Err(Error::Parse(format!("unknown family {text:?}"))),
        };
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        FamilySpec::parse_with(s, |p| Ok(std::fs::read_to_string(p)?))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteMultipartite(s) => write!(f, "kpartite:{}", join(s)),
            FamilySpec::PowerOfCycle { n, k } => write!(f, "powcycle:{n},{k}"),
            FamilySpec::Split { clique, pendants } => write!(f, "split:{clique};{}", join(pendants)),
            FamilySpec::Bowtie => write!(f, "bowtie"),
            FamilySpec::AlmostIrregular { t, connected } => write!(
                f,
                "almostirr:{t},{}",
                if *connected { "connected" } else { "disconnected" }
            ),
            FamilySpec::TauStar(s) => write!(f, "taustar:<{} cycles>", s.cycle_count()),
            FamilySpec::TriangleChain(m) => write!(f, "trianglechain:{m}"),
            FamilySpec::EighthGadget(m) => write!(f, "eighth:{m}"),
        }
    }
}

/// Builds the simple graph named by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Multigraph> {
    match spec {
        FamilySpec::Path(n) => path(*n),
        FamilySpec::Cycle(n) => cycle(*n),
        FamilySpec::Complete(n) => complete(*n),
        FamilySpec::CompleteMultipartite(sizes) => complete_multipartite(sizes),
        FamilySpec::PowerOfCycle { n, k } => power_of_cycle(*n, *k, false),
        FamilySpec::Split { clique, pendants } => split_graph(*clique, pendants),
        FamilySpec::Bowtie => Ok(bowtie()),
        FamilySpec::AlmostIrregular { t, connected } => almost_irregular(*t, *connected),
        FamilySpec::TauStar(s) => Ok(s.build()?.graph),
        FamilySpec::TriangleChain(m) => triangle_chain(*m),
        FamilySpec::EighthGadget(m) => Ok(eighth_gadget(*m)?.0),
    }
}

pub fn path(n: usize) -> Result<Multigraph> {
    if n < 2 {
        return Err(invalid("path needs n >= 2"));
    }
    Multigraph::simple(n, (0..n - 1).map(|i| (i, i + 1)))
}

pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Multigraph::simple(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    Multigraph::simple(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Part index of every vertex.
pub fn part_of(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect()
}

pub fn complete_multipartite(sizes: &[usize]) -> Result<Multigraph> {
    if sizes.len() < 2 || sizes.contains(&0) {
        return Err(invalid("need at least two non-empty parts"));
    }
    let part = part_of(sizes);
    let n = part.len();
    Multigraph::simple(
        n,
        (0..n).flat_map(|u| {
            let part = &part;
            (u + 1..n).filter(move |&v| part[u] != part[v]).map(move |v| (u, v))
        }),
    )
}

/// `C_n^k`. With `allow_complete`, `n < 2k + 2` is accepted (the result is
/// then complete or nearly so).
pub fn power_of_cycle(n: usize, k: usize, allow_complete: bool) -> Result<Multigraph> {
    if k < 1 || n < 3 {
        return Err(invalid("power of cycle needs k >= 1 and n >= 3"));
    }
    if n < 2 * k + 2 && !allow_complete {
        return Err(invalid(format!("power of cycle needs n >= 2k+2, got n={n}, k={k}")));
    }
    let dist = |u: usize, v: usize| (v - u).min(n - (v - u));
    Multigraph::simple(
        n,
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| dist(u, v) <= k).map(move |v| (u, v))),
    )
}

/// Clique on `0..clique` with `pendants[i]` pendant vertices at clique vertex `i`.
pub fn split_graph(clique: usize, pendants: &[usize]) -> Result<Multigraph> {
    if clique < 1 {
        return Err(invalid("split graph needs a non-empty clique"));
    }
    if pendants.len() > clique {
        return Err(invalid("more pendant counts than clique vertices"));
    }
    let mut edges: Vec<(usize, usize)> = (0..clique)
        .flat_map(|u| (u + 1..clique).map(move |v| (u, v)))
        .collect();
    let mut next = clique;
    for (i, &d) in pendants.iter().enumerate() {
        for _ in 0..d {
            edges.push((i, next));
            next += 1;
        }
    }
    Multigraph::simple(next, edges)
}

/// The bow-tie graph: triangles 0-2-3 and 0-4-5 at vertex 0, triangles 1-7-8
/// and 1-6-9 at vertex 1, joined by the edge 0-1.
pub fn bowtie() -> Multigraph {
    Multigraph::simple(10, BOWTIE_EDGES.iter().copied()).expect("static graph")
}

pub(crate) const BOWTIE_EDGES: [(usize, usize); 13] = [
    (2, 0),
    (0, 1),
    (0, 5),
    (5, 4),
    (4, 0),
    (1, 9),
    (9, 6),
    (0, 3),
    (3, 2),
    (7, 8),
    (8, 1),
    (7, 1),
    (1, 6),
];

/// Target degrees of the almost irregular graph of order `t`, ascending.
pub fn almost_irregular_degrees(t: usize, connected: bool) -> Vec<usize> {
    let (lo, hi, rep) = if connected {
        (1, t - 1, t / 2)
    } else {
        (0, t - 2, (t - 1) / 2)
    };
    let mut d: Vec<usize> = (lo..=hi).collect();
    d.push(rep);
    d.sort_unstable();
    d
}

/// The almost irregular graph of order `t`: the connected one has degrees
/// `1..t-1` with `floor(t/2)` repeated, the disconnected one `0..t-2` with
/// `floor((t-1)/2)` repeated.
pub fn almost_irregular(t: usize, connected: bool) -> Result<Multigraph> {
    if t < 2 {
        return Err(invalid("almost irregular graph needs t >= 2"));
    }
    let d = almost_irregular_degrees(t, connected);
    let threshold = if connected { t } else { t - 1 };
    Multigraph::simple(
        t,
        (0..t).flat_map(|u| {
            let d = &d;
            (u + 1..t)
                .filter(move |&v| d[u] + d[v] >= threshold)
                .map(move |v| (u, v))
        }),
    )
}

/// Uniform random labeled tree on `n >= 2` vertices via a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Multigraph> {
    if n < 2 {
        return Err(invalid("tree needs n >= 2"));
    }
    if n == 2 {
        return Multigraph::simple(2, [(0, 1)]);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Multigraph::simple(n, prufer_edges(n, &seq))
}

fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = *leaves.iter().next().expect("a leaf exists");
        leaves.remove(&leaf);
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

pub fn is_tree(g: &Multigraph) -> bool {
    g.n() >= 1 && g.bundle_count() + 1 == g.n() && g.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn grammar_round_trips() {
        for s in [
            "path:7",
            "cycle:17",
            "complete:6",
            "kpartite:3,3,2",
            "powcycle:11,3",
            "split:8;1",
            "bowtie",
            "almostirr:5,disconnected",
            "trianglechain:2",
            "eighth:3",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("cycle:x".parse::<FamilySpec>().is_err());
        assert!("nothing:3".parse::<FamilySpec>().is_err());
        assert!("powcycle:11".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn basic_counts() {
        assert_eq!(path(10).unwrap().bundle_count(), 9);
        let c = cycle(9).unwrap();
        assert!((0..9).all(|v| c.degree(v) == 2));
        assert_eq!(complete(7).unwrap().bundle_count(), 21);
    }

    #[test]
    fn octahedron() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(g.bundle_count(), 12);
        assert!((0..6).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn c11_cubed_is_six_regular() {
        let g = power_of_cycle(11, 3, false).unwrap();
        assert_eq!(g.n(), 11);
        assert!((0..11).all(|v| g.degree(v) == 6));
        assert!(power_of_cycle(7, 3, false).is_err());
        assert_eq!(power_of_cycle(7, 3, true).unwrap().bundle_count(), 21);
    }

    #[test]
    fn almost_irregular_degree_multiset() {
        let g = almost_irregular(5, false).unwrap();
        let mut d: Vec<u32> = (0..5).map(|v| g.degree(v)).collect();
        d.sort();
        assert_eq!(d, vec![0, 1, 2, 2, 3]);
        let g = almost_irregular(6, true).unwrap();
        let mut d: Vec<u32> = (0..6).map(|v| g.degree(v)).collect();
        d.sort();
        assert_eq!(d, vec![1, 2, 3, 3, 4, 5]);
    }

    #[test]
    fn split_layout() {
        let g = split_graph(4, &[2, 1]).unwrap();
        assert_eq!(g.n(), 7);
        assert!(g.has_edge(0, 4) && g.has_edge(0, 5) && g.has_edge(1, 6));
    }

    #[test]
    fn prufer_trees_are_trees() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 2..30 {
            assert!(is_tree(&random_tree(n, &mut rng).unwrap()));
        }
    }

    #[test]
    fn bowtie_shape() {
        let g = bowtie();
        assert_eq!((g.n(), g.bundle_count()), (10, 13));
        assert_eq!((g.degree(0), g.degree(1)), (5, 5));
    }
}
