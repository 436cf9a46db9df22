//! Named sweeps over parameter grids, each checking constructive plans
//! against their promised counts, the verifier and the exact solver.
//!
//! A suite returns a one-line summary on success and the first offending
//! instance on failure.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::colorers::powcycle::mode_for;
use crate::colorers::{
    build_a, build_b, build_degree_list, color_complete, color_complete_multipartite, color_cycle, color_path,
    color_power_of_cycle, color_special_cactus, color_split, color_tree, cycle_doublings, distance_properties,
    needs_doubling, path_doublings,
};
use crate::families::{bowtie, complete, eighth_gadget, random_tree, triangle_chain, TauStarScript};
use crate::fixtures;
use crate::graph::{Color, DoublingPlan, Multigraph};
use crate::reference::{naive_coloring, naive_lir, small_connected_graphs};
use crate::solver::{
    exact_d_lir, exact_lir, exists_2liec, is_liec, pendant_triangle_bound, Certificate, Existence, SolveBudget,
    SolveStatus,
};

pub type Outcome = std::result::Result<String, String>;

pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub limit: Duration,
    run: fn(u64) -> Outcome,
}

impl Suite {
    /// Runs the suite; exceeding the time limit counts as a failure.
    pub fn run(&self, seed: Option<u64>) -> (Outcome, Duration) {
        let start = Instant::now();
        let out = (self.run)(seed.unwrap_or(DEFAULT_SEED));
        let took = start.elapsed();
        let out = out.and_then(|s| {
            if took > self.limit {
                Err(format!("took {took:.2?}, limit {:?}", self.limit))
            } else {
                Ok(s)
            }
        });
        (out, took)
    }
}

pub const DEFAULT_SEED: u64 = 2;

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const SUITES: &[Suite] = &[
    Suite { name: "thm-paths", about: "paths 3..=5000 against the table", limit: secs(10), run: paths },
    Suite { name: "thm-cycles", about: "cycles 4..=5000 against the table", limit: secs(10), run: cycles },
    Suite { name: "thm-trees", about: "1000 random trees, exact value up to 12 vertices", limit: secs(120), run: trees },
    Suite { name: "thm-kn", about: "K4..K30 counts, one doubling refuted for K6..K8", limit: secs(900), run: complete_graphs },
    Suite { name: "bowtie", about: "the bow-tie needs four colors", limit: secs(60), run: bowtie_needs_four },
    Suite { name: "thm-powcycle", about: "powers of cycles k <= 10, n <= 200", limit: secs(600), run: powers_of_cycles },
    Suite { name: "lemma-a6-validator", about: "block and list validators for k <= 40", limit: secs(60), run: block_validators },
    Suite { name: "thm-multipartite", about: "complete multipartite, parts <= 5", limit: secs(300), run: multipartite },
    Suite { name: "thm-split", about: "split graphs with clique order <= 12", limit: secs(600), run: split_graphs },
    Suite { name: "thm-cactus", about: "special cacti and pendant-triangle gadgets", limit: secs(900), run: cacti },
    Suite { name: "fixture-labels", about: "degree labels of the stored colorings", limit: secs(1), run: fixture_labels },
    Suite { name: "oracle", about: "solver against brute force up to 6 vertices", limit: secs(600), run: oracle },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verified(what: &str, g: &Multigraph, p: &DoublingPlan) -> std::result::Result<(), String> {
    ensure(p.is_valid(g), || format!("{what}: plan fails verification"))
}

fn budget(max_doublings: usize) -> SolveBudget {
    SolveBudget {
        max_doublings,
        parallel: true,
        ..SolveBudget::default()
    }
}

fn value(what: &str, status: SolveStatus, v: Option<usize>) -> std::result::Result<Option<usize>, String> {
    match status {
        SolveStatus::Found => Ok(v),
        SolveStatus::ExhaustedNoSolution => Ok(None),
        SolveStatus::BudgetExceeded => Err(format!("{what}: solver budget exceeded")),
    }
}

fn d_lir(what: &str, g: &Multigraph, max_doublings: usize) -> std::result::Result<Option<usize>, String> {
    let r = exact_d_lir(g, &budget(max_doublings)).map_err(|e| format!("{what}: {e}"))?;
    value(what, r.status, r.value)
}

fn lir(what: &str, g: &Multigraph) -> std::result::Result<Option<usize>, String> {
    let r = exact_lir(g, &SolveBudget::default()).map_err(|e| format!("{what}: {e}"))?;
    value(what, r.status, r.value)
}

fn paths(_: u64) -> Outcome {
    for n in 3..=5000 {
        let (g, p) = color_path(n).map_err(|e| format!("path {n}: {e}"))?;
        verified(&format!("path {n}"), &g, &p)?;
        ensure(p.count() == path_doublings(n), || format!("path {n}: {} doublings", p.count()))?;
    }
    Ok("paths 3..=5000 match the table".into())
}

fn cycles(_: u64) -> Outcome {
    ensure(color_cycle(3).is_err(), || "cycle 3 was colored".into())?;
    for n in 4..=5000 {
        let (g, p) = color_cycle(n).map_err(|e| format!("cycle {n}: {e}"))?;
        verified(&format!("cycle {n}"), &g, &p)?;
        ensure(p.count() == cycle_doublings(n), || format!("cycle {n}: {} doublings", p.count()))?;
    }
    Ok("cycles 4..=5000 match the table, cycle 3 rejected".into())
}

fn trees(seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut small = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(3..=60);
        let t = random_tree(n, &mut rng).map_err(|e| e.to_string())?;
        let what = format!("tree {:?}", t.pairs());
        let p = color_tree(&t).map_err(|e| format!("{what}: {e}"))?;
        verified(&what, &t, &p)?;
        ensure(p.count() <= 1, || format!("{what}: {} doublings", p.count()))?;
        if n <= 12 {
            small += 1;
            let exact = d_lir(&what, &t, 1)?;
            ensure(exact == Some(p.count()), || format!("{what}: {} vs exact {exact:?}", p.count()))?;
        }
    }
    Ok(format!("1000 trees, {small} compared with the solver"))
}

fn complete_graphs(_: u64) -> Outcome {
    for n in 4..=30 {
        let (g, p) = color_complete(n).map_err(|e| format!("K{n}: {e}"))?;
        verified(&format!("K{n}"), &g, &p)?;
        let want = if (6..=10).contains(&n) { 2 } else { 1 };
        ensure(p.count() == want, || format!("K{n}: {} doublings", p.count()))?;
    }
    for n in 6..=8 {
        let g = complete(n).map_err(|e| e.to_string())?;
        let r = exact_d_lir(&g, &budget(1)).map_err(|e| e.to_string())?;
        ensure(r.status == SolveStatus::ExhaustedNoSolution, || {
            format!("K{n}: one doubling not refuted ({:?})", r.status)
        })?;
    }
    Ok("K4..K30 counts, one doubling refuted for K6, K7, K8".into())
}

fn bowtie_needs_four(_: u64) -> Outcome {
    let g = bowtie();
    let r = exact_lir(&g, &SolveBudget::default()).map_err(|e| e.to_string())?;
    ensure(r.value == Some(4), || format!("lir = {:?}", r.value))?;
    match &r.certificate {
        Some(Certificate::Coloring(c)) if is_liec(&g, c) && c.iter().max() == Some(&3) => {
            Ok("lir = 4 with a verified certificate".into())
        }
        other => Err(format!("bad certificate {other:?}")),
    }
}

fn powers_of_cycles(_: u64) -> Outcome {
    let mut count = 0;
    for k in 2..=10 {
        for n in 2 * k + 2..=200 {
            let what = format!("C{n}^{k}");
            let (g, p) = color_power_of_cycle(n, k).map_err(|e| format!("{what}: {e}"))?;
            verified(&what, &g, &p)?;
            ensure(p.count() == 0, || format!("{what}: {} doublings", p.count()))?;
            let blue: Vec<(usize, usize)> = g
                .bundles()
                .iter()
                .enumerate()
                .filter(|&(i, _)| p.coloring.get(i) == Color::Blue)
                .map(|(_, b)| (b.u, b.v))
                .collect();
            distance_properties(n, k, &blue).map_err(|e| format!("{what}: {e}"))?;
            if n <= 12 {
                ensure(lir(&what, &g)? == Some(2), || format!("{what}: lir is not 2"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn block_validators(_: u64) -> Outcome {
    let mut count = 0;
    for k in 2..=40 {
        for t in k..=(8 * k - 5) / 5 {
            let mode = mode_for(t, k).ok_or_else(|| format!("({t},{k}) has no mode"))?;
            let list = build_degree_list(t, k, mode).map_err(|e| e.to_string())?;
            list.check().map_err(|e| format!("list ({t},{k}): {e}"))?;
            let a = build_a(t, k).map_err(|e| e.to_string())?;
            a.validate_a(k).map_err(|e| format!("A({t},{k}): {e}"))?;
            let b = build_b(t, k).map_err(|e| e.to_string())?;
            b.validate_b(k).map_err(|e| format!("B({t},{k}): {e}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} admissible pairs"))
}

/// Non-increasing part sizes in 1..=5 with 2..=5 parts.
fn partitions() -> Vec<Vec<usize>> {
    fn rec(max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for s in 1..=max {
            cur.push(s);
            rec(s, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(5, 5, &mut Vec::new(), &mut out);
    out
}

fn multipartite(_: u64) -> Outcome {
    let (mut count, mut solved) = (0, 0);
    for sizes in partitions().into_iter().filter(|s| s.iter().any(|&x| x > 1)) {
        let what = format!("K{sizes:?}");
        let (g, p) = color_complete_multipartite(&sizes).map_err(|e| format!("{what}: {e}"))?;
        verified(&what, &g, &p)?;
        ensure(p.count() == 0, || format!("{what}: {} doublings", p.count()))?;
        if g.n() <= 10 {
            let v = lir(&what, &g)?;
            ensure(matches!(v, Some(1 | 2)), || format!("{what}: lir = {v:?}"))?;
            solved += 1;
        }
        count += 1;
    }
    Ok(format!("{count} partitions, {solved} confirmed by the solver"))
}

fn split_graphs(seed: u64) -> Outcome {
    let mut listed = 0;
    for clique in 2..=12 {
        for d1 in 1..=clique {
            for d2 in 0..=d1 {
                for d3 in 0..=d2.min(1) {
                    let prof: Vec<usize> = [d1, d2, d3].into_iter().filter(|&d| d > 0).collect();
                    if prof.len() > clique || !needs_doubling(clique, &prof) {
                        continue;
                    }
                    let what = format!("split {clique};{prof:?}");
                    let (g, p) = color_split(clique, &prof).map_err(|e| format!("{what}: {e}"))?;
                    verified(&what, &g, &p)?;
                    ensure(p.count() == 1, || format!("{what}: {} doublings", p.count()))?;
                    ensure(d_lir(&what, &g, 1)? == Some(1), || format!("{what}: exact value is not 1"))?;
                    listed += 1;
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut off = 0;
    while off < 200 {
        let clique = rng.gen_range(2..=12);
        let holders = rng.gen_range(1..=clique);
        let prof: Vec<usize> = (0..holders).map(|_| rng.gen_range(0..=4)).collect();
        if prof.iter().all(|&d| d == 0) || needs_doubling(clique, &prof) {
            continue;
        }
        let what = format!("split {clique};{prof:?}");
        let (g, p) = color_split(clique, &prof).map_err(|e| format!("{what}: {e}"))?;
        verified(&what, &g, &p)?;
        ensure(p.count() == 0, || format!("{what}: {} doublings", p.count()))?;
        off += 1;
    }
    Ok(format!("{listed} listed profiles, {off} off-list profiles"))
}

fn cacti(seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..200 {
        let s = TauStarScript::random(&mut rng, 6, 10);
        let what = format!("cactus {}", s.to_json());
        let (g, p) = color_special_cactus(&s).map_err(|e| format!("{what}: {e}"))?;
        verified(&what, &g, &p)?;
        ensure(p.count() <= s.cycle_count(), || format!("{what}: {} doublings", p.count()))?;
        ensure(p.is_independent(&g), || format!("{what}: doubled edges share a vertex"))?;
        ensure(p.avoids_pendant_edges(&g), || format!("{what}: a pendant edge is doubled"))?;
    }
    let chain = triangle_chain(2).map_err(|e| e.to_string())?;
    let bound = pendant_triangle_bound(&chain).map_err(|e| e.to_string())?;
    let exact = d_lir("triangle chain", &chain, 2)?;
    ensure(bound == 2 && exact == Some(2), || format!("triangle chain: bound {bound}, exact {exact:?}"))?;
    for m in [2, 3] {
        let (g, p) = eighth_gadget(m).map_err(|e| e.to_string())?;
        verified(&format!("gadget {m}"), &g, &p)?;
        ensure(p.count() == m, || format!("gadget {m}: {} doublings", p.count()))?;
        if m == 2 {
            ensure(d_lir("gadget 2", &g, 2)? == Some(2), || "gadget 2: not minimal".into())?;
        }
    }
    Ok("200 scripts, triangle chain and gadgets".into())
}

fn fixture_labels(_: u64) -> Outcome {
    let expected: [(&str, &[(u32, u32)]); 2] = [
        ("c11_3", &[(0, 6), (0, 6), (1, 5), (1, 5), (2, 4), (3, 3), (3, 3), (4, 2), (4, 2), (5, 1), (5, 1)]),
        ("k11", &[(1, 9), (2, 8), (3, 7), (4, 6), (5, 5), (5, 6), (6, 4), (6, 5), (7, 3), (8, 2), (9, 1)]),
    ];
    for (name, want) in expected {
        let f = fixtures::load(name).map_err(|e| e.to_string())?;
        let mut got = f.plan.degrees(&f.base).map_err(|e| e.to_string())?.blue_red_pairs();
        got.sort_unstable();
        ensure(got == want, || format!("{name}: {got:?}"))?;
        verified(name, &f.base, &f.plan)?;
    }
    Ok("c11_3 and k11 labels reproduced".into())
}

fn oracle(_: u64) -> Outcome {
    let graphs = small_connected_graphs();
    for g in &graphs {
        let want = naive_lir(g, 4);
        let got = lir("oracle", g)?;
        ensure(got == want, || format!("{:?}: lir {got:?} vs {want:?}", g.pairs()))?;
        let two = match exists_2liec(g, &SolveBudget::default()) {
            Existence::Found(_) => true,
            Existence::Absent => false,
            Existence::BudgetExceeded => return Err("budget exceeded".into()),
        };
        ensure(two == naive_coloring(g, 2).is_some(), || format!("{:?}: 2-liec existence differs", g.pairs()))?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        for (i, a) in SUITES.iter().enumerate() {
            assert!(SUITES[i + 1..].iter().all(|b| b.name != a.name));
        }
        assert!(find("thm-kn").is_some() && find("nope").is_none());
    }

    #[test]
    fn partition_count() {
        // multisets of 2..=5 sizes from 1..=5: 15 + 35 + 70 + 126
        assert_eq!(partitions().len(), 246);
    }

    #[test]
    fn quick_suites_pass() {
        for name in ["bowtie", "lemma-a6-validator", "fixture-labels"] {
            let (out, _) = find(name).unwrap().run(None);
            assert!(out.is_ok(), "{name}: {out:?}");
        }
    }
}
