//! Split graphs made of a clique with pendant vertices.
//!
//! A short list of profiles (sorted pendant counts `d1 >= d2 >= ...`) has no
//! 2-liec; those get one doubling. Starting from a complete-graph coloring:
//!
//! - when K_n needs one doubling, the vertex of maximum red degree takes all
//!   pendants as red edges;
//! - otherwise a red doubled edge `ab` of K_n is made single again and the
//!   pendants at `a` (and `b`) become red edges, which restores the degrees;
//! - the clique of order 8 with up to three pendants at one vertex uses
//!   stored colorings.
//!
//! Every other profile has a 2-liec, found by local search with the exact
//! search as fallback.

use crate::colorers::complete::{table, Table};
use crate::error::{invalid, Error, Result};
use crate::families::split_graph;
use crate::fixtures;
use crate::graph::{Color, DoublingPlan, Multigraph, PlanBuilder};
use crate::solver::{exists_2liec, local_search_2liec, Existence, SolveBudget};

const LOCAL_SEEDS: u64 = 16;
const LOCAL_STEPS: u64 = 200_000;

/// Pendant counts sorted non-increasingly, padded with zeros to the clique order.
pub fn sorted_profile(clique: usize, pendants: &[usize]) -> Vec<usize> {
    let mut d = pendants.to_vec();
    d.resize(clique, 0);
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// True when the profile has no 2-liec, so one doubling is needed.
pub fn needs_doubling(clique: usize, pendants: &[usize]) -> bool {
    let d = sorted_profile(clique, pendants);
    let at = |i: usize| d.get(i).copied().unwrap_or(0);
    let (n, d1, d2, d3) = (clique, at(0), at(1), at(2));
    let path4 = n == 2 && d1 == 1 && d2 == 1;
    path4
        || ((4..=10).contains(&n) && d1 == 1 && d2 == 0)
        || ((6..=10).contains(&n) && d1 == 2 && d2 == 0)
        || ((8..=10).contains(&n) && d1 == 3 && d2 == 0)
        || ((6..=8).contains(&n) && d1 == 1 && d2 == 1 && d3 == 0)
        || (n == 10 && d1 == 4 && d2 == 0)
        || (n >= 11 && d1 >= 1 && d1 < n / 2 && d2 == 0)
}

fn check_profile(clique: usize, pendants: &[usize]) -> Result<()> {
    if clique < 2 {
        return Err(invalid("the clique needs at least two vertices"));
    }
    if pendants.len() > clique {
        return Err(invalid("more pendant counts than clique vertices"));
    }
    if pendants.iter().all(|&d| d == 0) {
        return Err(invalid("no pendant vertices; this is a complete graph"));
    }
    Ok(())
}

/// At most one doubling, and none outside the exceptional profiles.
pub fn color_split(clique: usize, pendants: &[usize]) -> Result<(Multigraph, DoublingPlan)> {
    check_profile(clique, pendants)?;
    let g = split_graph(clique, pendants)?;
    let plan = if needs_doubling(clique, pendants) {
        one_doubling(&g, clique, pendants)?
    } else {
        no_doubling(&g)?
    };
    if !plan.is_valid(&g) {
        return Err(Error::Construction("split coloring failed to verify".into()));
    }
    Ok((g, plan))
}

fn no_doubling(g: &Multigraph) -> Result<DoublingPlan> {
    if let Some(c) = (0..LOCAL_SEEDS).find_map(|s| local_search_2liec(g, s, LOCAL_STEPS)) {
        return Ok(DoublingPlan::new([], c));
    }
    match exists_2liec(g, &SolveBudget::default()) {
        Existence::Found(c) => Ok(DoublingPlan::new([], c)),
        Existence::Absent => Err(Error::Construction("split graph without a 2-liec".into())),
        Existence::BudgetExceeded => Err(Error::Construction("split search ran out of budget".into())),
    }
}

/// Clique vertices that carry pendants, most pendants first.
fn holders(clique: usize, pendants: &[usize]) -> Vec<usize> {
    let mut h: Vec<usize> = (0..clique).filter(|&i| pendants.get(i).copied().unwrap_or(0) > 0).collect();
    h.sort_by_key(|&i| std::cmp::Reverse(pendants[i]));
    h
}

/// Copies a complete-graph table onto the clique with table vertex `t`
/// placed at `place[t]`, optionally dropping one doubled pair, and colors
/// every pendant edge red.
fn realize(g: &Multigraph, t: &Table, place: &[usize], undouble: Option<(usize, usize)>) -> Result<DoublingPlan> {
    let n = t.color.len();
    let mut pb = PlanBuilder::new(g);
    pb.fill(Color::Red);
    for a in 0..n {
        for b in a + 1..n {
            pb.color(place[a], place[b], t.color[a][b]);
        }
    }
    for &(a, b) in &t.doubled {
        let same = |x: (usize, usize)| (x.0 == a && x.1 == b) || (x.0 == b && x.1 == a);
        if !undouble.is_some_and(same) {
            pb.double(place[a], place[b]);
        }
    }
    pb.build()
}

/// A placement sending table vertices `from` to graph vertices `to` and
/// filling the rest in order.
fn placement(n: usize, from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut place = vec![usize::MAX; n];
    for (&f, &t) in from.iter().zip(to) {
        place[f] = t;
    }
    let mut free = (0..n).filter(|v| !to.contains(v));
    for p in place.iter_mut().filter(|p| **p == usize::MAX) {
        *p = free.next().expect("enough clique vertices");
    }
    place
}

fn swapped(t: &Table) -> Table {
    Table {
        color: t.color.iter().map(|row| row.iter().map(|c| c.other()).collect()).collect(),
        doubled: t.doubled.clone(),
    }
}

fn one_doubling(g: &Multigraph, clique: usize, pendants: &[usize]) -> Result<DoublingPlan> {
    if clique == 2 {
        // the path y0 - 0 - 1 - y1, all red, with the pendant edge at 0 doubled
        let mut pb = PlanBuilder::new(g);
        pb.fill(Color::Red).double(0, 2);
        return pb.build();
    }
    let owners = holders(clique, pendants);
    if clique == 8 && owners.len() == 1 && pendants[owners[0]] <= 3 {
        return from_fixture(g, owners[0], pendants[owners[0]]);
    }
    let base = table(clique)?;
    let tables = [base.clone(), swapped(&base)];
    if base.doubled.len() == 1 {
        for t in &tables {
            let red = |v: usize| t.color[v].iter().enumerate().filter(|&(w, &c)| w != v && c == Color::Red).count();
            let mut order: Vec<usize> = (0..clique).collect();
            order.sort_by_key(|&v| std::cmp::Reverse(red(v)));
            for &h in &order {
                let plan = realize(g, t, &placement(clique, &[h], &owners), None)?;
                if plan.is_valid(g) {
                    return Ok(plan);
                }
            }
        }
    }
    for t in &tables {
        for &(a, b) in &t.doubled {
            if t.color[a][b] != Color::Red {
                continue;
            }
            for (x, y) in [(a, b), (b, a)] {
                let from: Vec<usize> = [x, y].into_iter().take(owners.len()).collect();
                let plan = realize(g, t, &placement(clique, &from, &owners), Some((a, b)))?;
                if plan.is_valid(g) {
                    return Ok(plan);
                }
            }
        }
    }
    Err(Error::Construction(format!("no one-doubling repair for clique {clique}, pendants {pendants:?}")))
}

/// Stored colorings of the clique of order 8 with `d` pendants at vertex 0.
fn from_fixture(g: &Multigraph, owner: usize, d: usize) -> Result<DoublingPlan> {
    let f = fixtures::load(&format!("split8_d{d}"))?;
    // fixture vertex 0 holds the pendants; swap it with `owner`, pendant
    // vertices are numbered alike
    let map = |v: usize| if v == 0 { owner } else if v == owner { 0 } else { v };
    let mut pb = PlanBuilder::new(g);
    for (i, b) in f.base.bundles().iter().enumerate() {
        let (u, v) = (map(b.u), map(b.v));
        pb.color(u, v, f.plan.coloring.get(i));
        if f.plan.doubled.contains(&i) {
            pb.double(u, v);
        }
    }
    pb.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_membership() {
        assert!(needs_doubling(2, &[1, 1]));
        assert!(needs_doubling(8, &[0, 1]));
        assert!(needs_doubling(12, &[5]));
        assert!(!needs_doubling(12, &[6]));
        assert!(!needs_doubling(12, &[3, 1]));
        assert!(!needs_doubling(3, &[1]));
        assert!(needs_doubling(7, &[1, 1]));
        assert!(!needs_doubling(9, &[1, 1]));
    }

    #[test]
    fn path_of_length_three() {
        let (g, p) = color_split(2, &[1, 1]).unwrap();
        assert_eq!(p.count(), 1);
        assert!(p.is_valid(&g));
    }

    #[test]
    fn order_eight_uses_stored_colorings() {
        // the holder's (blue, red) pair as drawn, one to three pendants
        for (d, pair) in [(1, (3, 6)), (3, (2, 9))] {
            let (g, p) = color_split(8, &[0, d]).unwrap();
            assert_eq!(p.count(), 1);
            assert_eq!(p.degrees(&g).unwrap().blue_red_pairs()[1], pair);
        }
    }

    #[test]
    fn order_twelve_with_two_pendants() {
        let (g, p) = color_split(12, &[2]).unwrap();
        assert_eq!(p.count(), 1);
        assert!(p.is_valid(&g));
    }

    #[test]
    fn every_listed_profile_up_to_twelve() {
        for n in 2..=12 {
            for d1 in 1..=n {
                for d2 in 0..=d1.min(1) {
                    let prof = [d1, d2];
                    if !needs_doubling(n, &prof) {
                        continue;
                    }
                    let (g, p) = color_split(n, &prof).unwrap_or_else(|e| panic!("{n} {prof:?}: {e}"));
                    assert_eq!(p.count(), 1);
                    assert!(p.is_valid(&g));
                }
            }
        }
    }

    #[test]
    fn profiles_off_the_list() {
        for (n, d) in [(3, vec![1]), (9, vec![1, 1]), (12, vec![3, 1]), (5, vec![2, 2, 2])] {
            let (g, p) = color_split(n, &d).unwrap();
            assert_eq!(p.count(), 0);
            assert!(p.is_valid(&g));
        }
    }
}
