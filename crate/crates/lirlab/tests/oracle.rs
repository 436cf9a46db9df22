//! The pruned solver against brute force.

mod common;

use common::*;
use lirlab::families::is_uncolorable;
use lirlab::solver::{exact_d_lir, exact_lir, exists_2liec, Existence, SolveBudget, SolveStatus};
use lirlab::{apply_doubling, Multigraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_COLORS: usize = 4;

fn solver_lir(g: &Multigraph) -> Option<usize> {
    let r = exact_lir(g, &SolveBudget::default()).unwrap();
    match r.status {
        SolveStatus::Found => r.value,
        SolveStatus::ExhaustedNoSolution => None,
        SolveStatus::BudgetExceeded => panic!("budget exceeded on a small graph"),
    }
}

fn solver_has_2liec(g: &Multigraph) -> bool {
    match exists_2liec(g, &SolveBudget::default()) {
        Existence::Found(_) => true,
        Existence::Absent => false,
        Existence::BudgetExceeded => panic!("budget exceeded on a small graph"),
    }
}

#[test]
fn isomorphism_class_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
}

#[test]
fn lir_matches_brute_force_up_to_six_vertices() {
    for g in small_connected_graphs() {
        assert_eq!(solver_lir(&g), naive_lir(&g, MAX_COLORS), "{:?}", g.pairs());
        assert_eq!(solver_has_2liec(&g), naive_coloring(&g, 2).is_some(), "{:?}", g.pairs());
    }
}

#[test]
fn lir_matches_brute_force_on_random_seven_vertex_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let p = rng.gen_range(0.2..0.45);
        let g = random_connected(7, p, &mut rng);
        assert_eq!(solver_lir(&g), naive_lir(&g, MAX_COLORS), "{:?}", g.pairs());
    }
}

#[test]
fn existence_matches_on_doubled_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in (2..=5).flat_map(connected_graphs) {
        for _ in 0..4 {
            let d: Vec<usize> = (0..g.bundle_count()).filter(|_| rng.gen_bool(0.3)).collect();
            let m = apply_doubling(&g, &d).unwrap();
            assert_eq!(solver_has_2liec(&m), naive_coloring(&m, 2).is_some(), "{:?} {d:?}", g.pairs());
        }
    }
}

#[test]
fn doubling_number_matches_brute_force() {
    let budget = SolveBudget {
        max_doublings: 2,
        ..SolveBudget::default()
    };
    for g in (4..=5).flat_map(connected_graphs) {
        let r = exact_d_lir(&g, &budget).unwrap();
        let got = match r.status {
            SolveStatus::Found => {
                assert!(r.plan().unwrap().is_valid(&g));
                r.value
            }
            SolveStatus::ExhaustedNoSolution => None,
            SolveStatus::BudgetExceeded => panic!("budget exceeded"),
        };
        assert_eq!(got, naive_d_lir(&g, 2), "{:?}", g.pairs());
        // no doubling needed exactly when two colors suffice
        let two = naive_lir(&g, 2).is_some();
        assert_eq!(got == Some(0), two);
    }
}

/// Every connected graph on 7 vertices, up to isomorphism and with repeats:
/// removing a non-cut vertex leaves a connected graph on 6 vertices.
fn seven_vertex_graphs() -> Vec<Multigraph> {
    let mut out = Vec::new();
    for h in connected_graphs(6) {
        for s in 1u32..1 << 6 {
            let extra = (0..6).filter(|&v| s >> v & 1 == 1).map(|v| (v, 6));
            out.push(Multigraph::simple(7, h.pairs().into_iter().chain(extra)).unwrap());
        }
    }
    out
}

#[test]
fn uncolorable_recognition_matches_the_solver() {
    let graphs = small_connected_graphs().into_iter().chain(seven_vertex_graphs());
    for g in graphs.filter(|g| g.n() >= 2) {
        let budget = SolveBudget {
            max_colors: g.bundle_count(),
            ..SolveBudget::default()
        };
        let r = exact_lir(&g, &budget).unwrap();
        assert_ne!(r.status, SolveStatus::BudgetExceeded);
        let none = r.status == SolveStatus::ExhaustedNoSolution;
        assert_eq!(is_uncolorable(&g).unwrap(), none, "{:?}", g.pairs());
    }
}
