//! Exact search: lir(G), 2-liec existence and the minimum number of doublings.

mod engine;
pub mod longrun;
pub mod local;
pub mod orbits;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::graph::{apply_doubling, is_locally_irregular, Color, DoublingPlan, EdgeColoring, Multigraph};

pub use local::local_search_2liec;
pub use orbits::Symmetry;

use engine::{Engine, Limits, Outcome};

/// Local search length per bundle before an exact doubling-candidate search.
const PROBE_STEPS_PER_BUNDLE: u64 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveBudget {
    pub max_colors: usize,
    pub max_doublings: usize,
    /// Node limit for each individual coloring search.
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
    /// Run the candidate searches of one doubling level in parallel.
    pub parallel: bool,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_colors: 4,
            max_doublings: 3,
            node_limit: 2_000_000_000,
            time_limit: None,
            parallel: false,
        }
    }
}

impl SolveBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_colors == 0 || self.node_limit == 0 {
            return Err(invalid("budget values must be positive"));
        }
        if self.max_colors >= 255 {
            return Err(invalid("at most 254 colors"));
        }
        if self.time_limit.is_some_and(|t| t.is_zero()) {
            return Err(invalid("time limit must be positive"));
        }
        Ok(())
    }

    fn limits(&self, start: Instant) -> Limits {
        Limits {
            node_limit: self.node_limit,
            deadline: self.time_limit.map(|t| start + t),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Found,
    ExhaustedNoSolution,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Color class index per bundle.
    Coloring(Vec<usize>),
    Plan(DoublingPlan),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub value: Option<usize>,
    pub certificate: Option<Certificate>,
    pub nodes: u64,
}

impl SolveResult {
    fn found(value: usize, certificate: Certificate, nodes: u64) -> SolveResult {
        SolveResult {
            status: SolveStatus::Found,
            value: Some(value),
            certificate: Some(certificate),
            nodes,
        }
    }

    fn without(status: SolveStatus, nodes: u64) -> SolveResult {
        SolveResult {
            status,
            value: None,
            certificate: None,
            nodes,
        }
    }

    pub fn plan(&self) -> Option<&DoublingPlan> {
        match &self.certificate {
            Some(Certificate::Plan(p)) => Some(p),
            _ => None,
        }
    }
}

/// Outcome of a 2-liec existence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Existence {
    Found(EdgeColoring),
    Absent,
    BudgetExceeded,
}

/// True iff every color class of `classes` is locally irregular in `g`.
pub fn is_liec(g: &Multigraph, classes: &[usize]) -> bool {
    if classes.len() != g.bundle_count() {
        return false;
    }
    let k = classes.iter().max().map_or(0, |m| m + 1);
    let mut deg = vec![0u32; g.n() * k.max(1)];
    for (i, b) in g.bundles().iter().enumerate() {
        deg[b.u * k + classes[i]] += b.mult as u32;
        deg[b.v * k + classes[i]] += b.mult as u32;
    }
    g.bundles()
        .iter()
        .enumerate()
        .all(|(i, b)| deg[b.u * k + classes[i]] != deg[b.v * k + classes[i]])
}

fn to_coloring(colors: &[u8]) -> EdgeColoring {
    EdgeColoring::new(
        colors
            .iter()
            .map(|&c| if c == 0 { Color::Red } else { Color::Blue })
            .collect(),
    )
}

fn two_coloring(m: &Multigraph, limits: Limits) -> (Existence, u64) {
    if m.bundle_count() == 0 {
        return (Existence::Found(EdgeColoring::new(vec![])), 0);
    }
    let mut eng = Engine::new(m, 2, limits);
    let out = eng.run();
    let ex = match out {
        Outcome::Found(c) => {
            let col = to_coloring(&c);
            assert!(
                crate::graph::verify_liec(m, &col).map(|r| r.ok).unwrap_or(false),
                "search returned an invalid coloring"
            );
            Existence::Found(col)
        }
        Outcome::Exhausted => Existence::Absent,
        Outcome::Stopped => Existence::BudgetExceeded,
    };
    (ex, eng.nodes)
}

/// Searches for a 2-liec of a multigraph (one color per bundle).
pub fn exists_2liec(m: &Multigraph, budget: &SolveBudget) -> Existence {
    two_coloring(m, budget.limits(Instant::now())).0
}

/// Like [`exists_2liec`] with some bundles forced to a color.
pub fn exists_2liec_fixed(m: &Multigraph, fixed: &[(usize, Color)], budget: &SolveBudget) -> Existence {
    if m.bundle_count() == 0 {
        return Existence::Found(EdgeColoring::new(vec![]));
    }
    let mut eng = Engine::new(m, 2, budget.limits(Instant::now()));
    for &(e, c) in fixed {
        eng.fix(e, u8::from(c == Color::Blue));
    }
    match eng.run() {
        Outcome::Found(c) => Existence::Found(to_coloring(&c)),
        Outcome::Exhausted => Existence::Absent,
        Outcome::Stopped => Existence::BudgetExceeded,
    }
}

/// Smallest number of colors admitting a locally irregular coloring, up to `max_colors`.
pub fn exact_lir(g: &Multigraph, budget: &SolveBudget) -> Result<SolveResult> {
    budget.validate()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = Instant::now();
    if g.bundle_count() == 0 {
        return Ok(SolveResult::found(0, Certificate::Coloring(vec![]), 0));
    }
    if is_locally_irregular(g) {
        return Ok(SolveResult::found(
            1,
            Certificate::Coloring(vec![0; g.bundle_count()]),
            0,
        ));
    }
    let mut nodes = 0;
    for k in 2..=budget.max_colors.min(g.bundle_count()) {
        let mut eng = Engine::new(g, k, budget.limits(start));
        let out = eng.run();
        nodes += eng.nodes;
        match out {
            Outcome::Found(c) => {
                let classes: Vec<usize> = c.iter().map(|&x| x as usize).collect();
                assert!(is_liec(g, &classes), "search returned an invalid coloring");
                let used = classes.iter().max().map_or(0, |m| m + 1);
                return Ok(SolveResult::found(used, Certificate::Coloring(classes), nodes));
            }
            Outcome::Exhausted => {}
            Outcome::Stopped => return Ok(SolveResult::without(SolveStatus::BudgetExceeded, nodes)),
        }
    }
    Ok(SolveResult::without(SolveStatus::ExhaustedNoSolution, nodes))
}

/// Minimum number of doubled edges admitting a 2-liec, up to `max_doublings`.
///
/// Doubling subsets are enumerated by size, one per symmetry orbit. Each
/// candidate gets a short seeded local search before the exact search, so
/// only candidates without a 2-liec pay for exhaustive enumeration.
pub fn exact_d_lir(g: &Multigraph, budget: &SolveBudget) -> Result<SolveResult> {
    exact_d_lir_with(g, budget, orbits::detect(g))
}

pub fn exact_d_lir_with(g: &Multigraph, budget: &SolveBudget, sym: Symmetry) -> Result<SolveResult> {
    budget.validate()?;
    if !g.is_simple() {
        return Err(invalid("expected a simple graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if (n == 2 || n == 3) && g.bundle_count() == n * (n - 1) / 2 {
        return Err(invalid("K2 and K3 admit no 2-liec at any doubling"));
    }
    let start = Instant::now();
    let limits = budget.limits(start);
    let mut nodes = 0;
    for size in 0..=budget.max_doublings.min(g.bundle_count()) {
        let reps = orbits::representatives(g, sym, size);
        let run = |rep: &Vec<usize>| {
            let m = apply_doubling(g, rep).expect("valid subset");
            match local_search_2liec(&m, 0, PROBE_STEPS_PER_BUNDLE * m.bundle_count() as u64) {
                Some(c) => (Existence::Found(c), 0),
                None => two_coloring(&m, limits),
            }
        };
        let outcomes: Vec<(Existence, u64)> = if budget.parallel {
            reps.par_iter().map(run).collect()
        } else {
            let mut v = Vec::new();
            for rep in &reps {
                let r = run(rep);
                let stop = matches!(r.0, Existence::Found(_));
                v.push(r);
                if stop {
                    break;
                }
            }
            v
        };
        let mut exceeded = false;
        for (rep, (ex, cnt)) in reps.iter().zip(outcomes) {
            nodes += cnt;
            match ex {
                Existence::Found(c) => {
                    let plan = DoublingPlan::new(rep.iter().copied(), c);
                    debug_assert!(plan.is_valid(g));
                    return Ok(SolveResult::found(size, Certificate::Plan(plan), nodes));
                }
                Existence::Absent => {}
                Existence::BudgetExceeded => exceeded = true,
            }
        }
        if exceeded {
            return Ok(SolveResult::without(SolveStatus::BudgetExceeded, nodes));
        }
    }
    Ok(SolveResult::without(SolveStatus::ExhaustedNoSolution, nodes))
}

/// Number of pendant triangles with no degree-two vertex, a lower bound on
/// the doubling number of members of the uncolorable triangle family.
pub fn pendant_triangle_bound(g: &Multigraph) -> Result<usize> {
    let tree = crate::families::recognize::triangle_tree(g)
        .ok_or_else(|| invalid("graph is not in the uncolorable triangle family"))?;
    tree.pendant_triangle_bound()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        Multigraph::simple(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Multigraph {
        Multigraph::simple(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn lir_of_small_cycles_and_paths() {
        let b = SolveBudget::default();
        assert_eq!(exact_lir(&cycle(6), &b).unwrap().value, Some(3));
        assert_eq!(exact_lir(&cycle(8), &b).unwrap().value, Some(2));
        let p5 = Multigraph::simple(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(exact_lir(&p5, &b).unwrap().value, Some(2));
        let c5 = SolveBudget {
            max_colors: 5,
            ..b
        };
        assert_eq!(
            exact_lir(&cycle(5), &c5).unwrap().status,
            SolveStatus::ExhaustedNoSolution
        );
    }

    #[test]
    fn k4_needs_a_doubling() {
        let b = SolveBudget::default();
        let g = complete(4);
        assert_eq!(exists_2liec(&g, &b), Existence::Absent);
        let d = apply_doubling(&g, &[0]).unwrap();
        assert!(matches!(exists_2liec(&d, &b), Existence::Found(_)));
        assert_eq!(exact_d_lir(&g, &b).unwrap().value, Some(1));
    }

    #[test]
    fn c7_needs_two() {
        let r = exact_d_lir(&cycle(7), &SolveBudget::default()).unwrap();
        assert_eq!(r.value, Some(2));
        assert!(r.plan().unwrap().is_valid(&cycle(7)));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = complete(6);
        let seq = exact_d_lir(&g, &SolveBudget::default()).unwrap();
        let par = exact_d_lir(
            &g,
            &SolveBudget {
                parallel: true,
                ..SolveBudget::default()
            },
        )
        .unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.value, Some(2));
    }

    #[test]
    fn triangle_is_refused() {
        assert!(exact_d_lir(&complete(3), &SolveBudget::default()).is_err());
    }

    #[test]
    fn zero_budget_is_invalid() {
        let b = SolveBudget {
            node_limit: 0,
            ..SolveBudget::default()
        };
        assert!(exact_lir(&cycle(4), &b).is_err());
    }
}
