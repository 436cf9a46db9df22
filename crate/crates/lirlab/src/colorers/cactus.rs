//! Cacti grown by build scripts: at most one doubling per cycle, with the
//! doubled edges pairwise disjoint and never pendant.
//!
//! The cactus is cut into unicyclic pieces along its cycle tree and the
//! pieces are colored parent first. Take a path from a cycle vertex `v_R` to
//! the first vertex `v_C` of a child cycle.
//!
//! - Length at least two: cut at the neighbor `u` of `v_C`. The parent keeps
//!   the path up to `u`, the child gets the edge `u v_C`, and the two edges at
//!   `u` get different colors.
//! - Length one: both pieces contain `v_R v_C`. The parent's coloring fixes
//!   the degree `q` of `v_R` in the color `X` of that edge, so the child must
//!   avoid `X`-degree `q` at `v_C`. The child models this with `q - 1` extra
//!   leaves at `v_R`, colored like the edge.
//!
//! A piece is colored around its cycle `v_1 .. v_n`, where `v_1` carries a
//! path (the root path in child pieces). Pendant paths are first shortened
//! to length 1 or 2 of the same parity. `v_n v_1`, `v_1 v_2` and `P_1` start
//! blue. For `i = 2 .. n-1`, let `c` be the color of `v_{i-1} v_i` and `d`
//! the `c`-degree of `v_{i-1}`:
//!
//! - `d = 1`: `v_i v_{i+1}` and `P_i` get `c`;
//! - `d >= 2` and `|P_i| <= 1`: both get the other color;
//! - `d = 2` and `|P_i| = 2`: both get `c`;
//! - `d = 3` and `|P_i| = 2`: `v_i v_{i+1}` gets `c`, `P_i` the other color.
//!
//! The closing cases are settled by trying the edits they use: recolor any of
//! `v_{n-2} v_{n-1}`, `v_{n-1} v_n`, `v_n v_1` and `P_{n-1}`, pick the color
//! of `P_n`, and double at most one of `v_1 v_2`, `v_{n-2} v_{n-1}`,
//! `v_{n-1} v_n`, `v_n v_1`. Recoloring `P_2` is tried as well: with
//! `|P_1| = 1` and `|P_2| = 2`, recoloring `v_n v_1` leaves `v_1` and `v_2`
//! both with blue degree 2. An exact search over the piece is the fallback.
//! Before any doubling is accepted, the piece is searched exactly for a
//! coloring without one.
//!
//! A cactus that has a 2-liec gets it with no doubling: local search and a
//! bounded exact search over the whole graph run before the construction.
//! Shortened paths grow back by pairs of edges colored alternately, starting
//! with the color opposite to the last edge.

use crate::error::{invalid, Error, Result};
use crate::families::taustar::Cactus;
use crate::families::TauStarScript;
use crate::graph::{apply_doubling, Color, DoublingPlan, EdgeColoring, Multigraph};
use crate::solver::{exists_2liec, exists_2liec_fixed, local_search_2liec, Existence, SolveBudget};

const LOCAL_SEEDS: u64 = 4;
const LOCAL_STEPS: u64 = 20_000;
/// Node limit for the whole-graph search; past it the construction is used.
const WHOLE_NODES: u64 = 2_000_000;

/// How a child piece meets its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Root {
    /// Single edge to `v_R`, whose degree in the edge's color is `q`.
    Edge { q: u32 },
    /// The root edge ends at the cut vertex.
    Cut,
}

struct Piece {
    /// Global vertices `v_1 .. v_n`.
    cycle: Vec<usize>,
    /// Global vertices of the path at each cycle vertex, outwards.
    paths: Vec<Vec<usize>>,
    root: Option<Root>,
    /// Whether the piece's colors must be swapped before use (its root edge
    /// is colored blue locally).
    swap: bool,
}

/// A piece with shortened paths, on local vertex ids.
struct Local {
    g: Multigraph,
    n: usize,
    /// Bundle of `v_i v_{i+1}`.
    cyc: Vec<usize>,
    /// Bundles of the shortened `P_i`, from the cycle outwards.
    path: Vec<Vec<usize>>,
    leaves: Vec<usize>,
}

fn short_len(len: usize) -> usize {
    if len <= 2 {
        len
    } else {
        2 - len % 2
    }
}

impl Local {
    fn new(p: &Piece) -> Result<Local> {
        let n = p.cycle.len();
        let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let mut next = n;
        let mut path_pairs = Vec::with_capacity(n);
        for (i, gp) in p.paths.iter().enumerate() {
            let mut prev = i;
            let mut mine = Vec::new();
            for _ in 0..short_len(gp.len()) {
                mine.push((prev, next));
                prev = next;
                next += 1;
            }
            pairs.extend(&mine);
            path_pairs.push(mine);
        }
        let mut leaf_pairs = Vec::new();
        if let Some(Root::Edge { q }) = p.root {
            // the root path is a single edge and its end is local vertex n
            for _ in 1..q {
                leaf_pairs.push((n, next));
                next += 1;
            }
            pairs.extend(&leaf_pairs);
        }
        let g = Multigraph::simple(next, pairs)?;
        let id = |&(a, b): &(usize, usize)| g.find(a, b).expect("local edge");
        Ok(Local {
            n,
            cyc: (0..n).map(|i| id(&(i, (i + 1) % n))).collect(),
            path: path_pairs.iter().map(|ps| ps.iter().map(id).collect()).collect(),
            leaves: leaf_pairs.iter().map(id).collect(),
            g,
        })
    }

    /// Colors from per-edge cycle colors and per-path colors.
    fn coloring(&self, cyc: &[Color], pc: &[Color]) -> EdgeColoring {
        let mut col = vec![Color::Blue; self.g.bundle_count()];
        for i in 0..self.n {
            col[self.cyc[i]] = cyc[i];
            for &e in &self.path[i] {
                col[e] = pc[i];
            }
        }
        EdgeColoring::new(col)
    }

    /// Root path edges and leaves, which keep the root color.
    fn fixed(&self, rooted: bool) -> Vec<usize> {
        let mut f = self.leaves.clone();
        if rooted {
            f.extend(&self.path[0]);
        }
        f
    }
}

/// Cycle and path colors from the four rules; `P_n` is left blue.
fn rules(l: &Local) -> (Vec<Color>, Vec<Color>) {
    let n = l.n;
    let len = |i: usize| l.path[i].len();
    let mut cyc = vec![Color::Blue; n];
    let mut pc = vec![Color::Blue; n];
    for i in 1..n - 1 {
        let c = cyc[i - 1];
        let d = [cyc[(i + n - 2) % n], cyc[i - 1]].iter().filter(|&&x| x == c).count()
            + usize::from(len(i - 1) > 0 && pc[i - 1] == c);
        let (e, p) = match (d, len(i)) {
            (1, _) => (c, c),
            (_, 0 | 1) => (c.other(), c.other()),
            (2, _) => (c, c),
            _ => (c, c.other()),
        };
        cyc[i] = e;
        pc[i] = p;
    }
    (cyc, pc)
}

/// The rules followed by the closing edits, with or without a doubling.
fn by_rules(l: &Local, double: bool) -> Option<DoublingPlan> {
    let n = l.n;
    let (cyc, pc) = rules(l);
    let mut doublings = Vec::new();
    if double {
        for i in [0, n - 3, n - 2, n - 1] {
            if !doublings.contains(&Some(l.cyc[i])) {
                doublings.push(Some(l.cyc[i]));
            }
        }
    } else {
        doublings.push(None);
    }
    let mut masks: Vec<u32> = (0..64).collect();
    masks.sort_by_key(|m| m.count_ones());
    for dbl in doublings {
        for &m in &masks {
            let (mut cyc, mut pc) = (cyc.clone(), pc.clone());
            let flip = |bit: u32, c: &mut Color| {
                if m & (1 << bit) != 0 {
                    *c = c.other();
                }
            };
            flip(0, &mut cyc[n - 1]);
            flip(1, &mut cyc[n - 2]);
            flip(2, &mut cyc[n - 3]);
            flip(3, &mut pc[n - 2]);
            flip(4, &mut pc[n - 1]);
            flip(5, &mut pc[1]);
            let plan = DoublingPlan::new(dbl, l.coloring(&cyc, &pc));
            if plan.is_valid(&l.g) {
                return Some(plan);
            }
        }
    }
    None
}

/// Exact search with no doubling, or with one doubling on a non-pendant
/// edge outside the root path.
fn exact(l: &Local, rooted: bool, double: bool) -> Result<DoublingPlan> {
    let fixed: Vec<(usize, Color)> = l.fixed(rooted).into_iter().map(|e| (e, Color::Blue)).collect();
    let movable = |e: usize| {
        let b = l.g.bundle(e);
        l.g.degree(b.u) > 1 && l.g.degree(b.v) > 1 && !fixed.iter().any(|&(f, _)| f == e)
    };
    let budget = SolveBudget::default();
    let mut stopped = false;
    let choices: Vec<Option<usize>> = if double {
        (0..l.g.bundle_count()).filter(|&e| movable(e)).map(Some).collect()
    } else {
        vec![None]
    };
    for dbl in choices {
        let m = apply_doubling(&l.g, &Vec::from_iter(dbl))?;
        match exists_2liec_fixed(&m, &fixed, &budget) {
            Existence::Found(c) => return Ok(DoublingPlan::new(dbl, c)),
            Existence::Absent => {}
            Existence::BudgetExceeded => stopped = true,
        }
    }
    Err(Error::Construction(if stopped {
        "cactus piece search ran out of budget".into()
    } else {
        "cactus piece has no coloring with one doubling".into()
    }))
}

/// Returns the local plan and whether the exact fallback with a doubling
/// was needed. A coloring without doubling is used whenever one exists.
fn color_piece(p: &Piece) -> Result<(Local, DoublingPlan, bool)> {
    let l = Local::new(p)?;
    let rooted = p.root.is_some();
    if let Some(plan) = by_rules(&l, false) {
        return Ok((l, plan, false));
    }
    if let Ok(plan) = exact(&l, rooted, false) {
        return Ok((l, plan, false));
    }
    if let Some(plan) = by_rules(&l, true) {
        return Ok((l, plan, false));
    }
    let plan = exact(&l, rooted, true)?;
    Ok((l, plan, true))
}

fn edge(g: &Multigraph, a: usize, b: usize) -> usize {
    g.find(a, b).expect("cactus edge")
}

/// Cuts out the piece of cycle `c` given the colors chosen so far.
fn piece(cactus: &Cactus, c: usize, colors: &[Option<Color>], doubled: &[usize]) -> Piece {
    let g = &cactus.graph;
    let mut cycle = cactus.cycles[c].clone();
    let hang = |x: usize| cactus.attachments.iter().find(|a| a.at == x);
    let mut paths: Vec<Vec<usize>> = cycle
        .iter()
        .map(|&x| match hang(x) {
            None => Vec::new(),
            Some(a) if a.to_cycle.is_none() => a.path.clone(),
            // keep the path up to the cut vertex, or the single edge
            Some(a) => a.path[..a.path.len().max(2) - 1].to_vec(),
        })
        .collect();
    if c == 0 {
        let first = paths.iter().position(|p| !p.is_empty()).expect("script has a step");
        cycle.rotate_left(first);
        paths.rotate_left(first);
        return Piece {
            cycle,
            paths,
            root: None,
            swap: false,
        };
    }
    let a = cactus
        .attachments
        .iter()
        .find(|a| a.to_cycle == Some(c))
        .expect("every later cycle has a path");
    let len = a.path.len();
    let color = |x: usize, y: usize| colors[edge(g, x, y)].expect("parent colored first");
    let (root, swap, end) = if len == 1 {
        let (vr, vc) = (a.at, cycle[0]);
        let x = color(vr, vc);
        let q = g
            .incident(vr)
            .iter()
            .filter(|&&e| colors[e] == Some(x))
            .map(|e| if doubled.contains(e) { 2 } else { 1 })
            .sum();
        (Root::Edge { q }, x == Color::Red, vr)
    } else {
        let u = a.path[len - 2];
        let prev = if len >= 3 { a.path[len - 3] } else { a.at };
        (Root::Cut, color(prev, u) == Color::Blue, u)
    };
    paths[0] = vec![end];
    Piece {
        cycle,
        paths,
        root: Some(root),
        swap,
    }
}

/// Copies a piece's local plan onto the cactus, growing shortened paths back.
fn write_back(
    g: &Multigraph,
    p: &Piece,
    l: &Local,
    plan: &DoublingPlan,
    colors: &mut [Option<Color>],
    doubled: &mut Vec<usize>,
) {
    let get = |e: usize| {
        let c = plan.coloring.get(e);
        if p.swap {
            c.other()
        } else {
            c
        }
    };
    let n = l.n;
    let mut global = vec![usize::MAX; l.g.bundle_count()];
    for i in 0..n {
        global[l.cyc[i]] = edge(g, p.cycle[i], p.cycle[(i + 1) % n]);
        let mut prev = p.cycle[i];
        for (j, &w) in p.paths[i].iter().enumerate() {
            let e = edge(g, prev, w);
            prev = w;
            if let Some(&le) = l.path[i].get(j) {
                global[le] = e;
                continue;
            }
            let r = l.path[i].len();
            let last = get(l.path[i][r - 1]);
            let pair = (j - r) / 2;
            colors[e] = Some(if pair.is_multiple_of(2) { last.other() } else { last });
        }
    }
    for (le, &ge) in global.iter().enumerate() {
        if ge != usize::MAX {
            colors[ge] = Some(get(le));
        }
    }
    doubled.extend(plan.doubled.iter().map(|&le| global[le]));
}

/// A 2-liec of the whole cactus, from local search or a bounded exact search.
fn whole_2liec(g: &Multigraph) -> Option<EdgeColoring> {
    if let Some(c) = (0..LOCAL_SEEDS).find_map(|s| local_search_2liec(g, s, LOCAL_STEPS)) {
        return Some(c);
    }
    let budget = SolveBudget {
        node_limit: WHOLE_NODES,
        ..SolveBudget::default()
    };
    match exists_2liec(g, &budget) {
        Existence::Found(c) => Some(c),
        _ => None,
    }
}

fn in_gap(l: &Local) -> bool {
    l.path[0].len() == 1 && l.path[1].len() == 2
}

/// Colors the cactus of `script` with at most one doubling per cycle.
pub fn color_special_cactus(script: &TauStarScript) -> Result<(Multigraph, DoublingPlan)> {
    color_traced(script, true).map(|(g, plan, _)| (g, plan))
}

/// Also reports whether each piece that needed the exact fallback starts
/// with `|P_1| = 1` and `|P_2| = 2`. There the fourth rule leaves `v_2` with
/// blue degree 2, which the closing edits cannot always repair. With `whole`
/// unset the construction runs even when the cactus has a 2-liec.
fn color_traced(script: &TauStarScript, whole: bool) -> Result<(Multigraph, DoublingPlan, Vec<bool>)> {
    if script.steps.is_empty() {
        return Err(invalid("a bare cycle is not a member of this family"));
    }
    let cactus = script.build()?;
    let g = &cactus.graph;
    if let Some(c) = whole.then(|| whole_2liec(g)).flatten() {
        return Ok((cactus.graph, DoublingPlan::new([], c), Vec::new()));
    }
    let mut colors = vec![None; g.bundle_count()];
    let mut doubled = Vec::new();
    let mut fallbacks = Vec::new();
    for c in 0..cactus.cycles.len() {
        let p = piece(&cactus, c, &colors, &doubled);
        let (l, plan, fell) = color_piece(&p)?;
        if fell {
            fallbacks.push(in_gap(&l));
        }
        write_back(g, &p, &l, &plan, &mut colors, &mut doubled);
    }
    let coloring = EdgeColoring::new(colors.into_iter().map(|c| c.expect("every edge colored")).collect());
    let plan = DoublingPlan::new(doubled, coloring);
    if plan.count() > cactus.cycles.len() || !plan.is_independent(g) || !plan.avoids_pendant_edges(g) {
        return Err(Error::Construction("cactus doublings break the placement rules".into()));
    }
    if !plan.is_valid(g) {
        return Err(Error::Construction("cactus coloring failed to verify".into()));
    }
    Ok((cactus.graph, plan, fallbacks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::TauStep;
    use rand::SeedableRng;

    fn step(at: usize, len: usize, cycle: Option<usize>) -> TauStep {
        TauStep { at, len, cycle }
    }

    #[test]
    fn bare_cycle_is_rejected() {
        let s = TauStarScript { base: 5, steps: vec![] };
        assert!(color_special_cactus(&s).is_err());
    }

    #[test]
    fn shortening_keeps_parity() {
        assert_eq!((1..=7).map(short_len).collect::<Vec<_>>(), [1, 2, 1, 2, 1, 2, 1]);
    }

    #[test]
    fn triangle_with_pendant_edge() {
        let s = TauStarScript {
            base: 3,
            steps: vec![step(0, 1, None)],
        };
        let (g, p) = color_special_cactus(&s).unwrap();
        assert!(p.is_valid(&g));
        assert!(p.count() <= 1);
    }

    #[test]
    fn no_doubling_when_a_2liec_exists() {
        // the parent piece's choice forces a doubling in the child, but
        // another parent coloring avoids it
        let s = TauStarScript {
            base: 4,
            steps: vec![step(3, 1, Some(6))],
        };
        let (g, p) = color_special_cactus(&s).unwrap();
        assert_eq!(p.count(), 0);
        assert!(p.is_valid(&g));
        let (_, built, _) = color_traced(&s, false).unwrap();
        assert_eq!(built.count(), 1);
    }

    #[test]
    fn both_cut_kinds() {
        for len in 1..=4 {
            let s = TauStarScript {
                base: 4,
                steps: vec![step(1, len, Some(5)), step(3, 2, None)],
            };
            let (g, p) = color_special_cactus(&s).unwrap();
            assert!(p.is_valid(&g) && p.count() <= 2 && p.is_independent(&g));
        }
    }

    #[test]
    fn child_piece_avoids_any_root_degree() {
        // unicyclic pieces whose first vertex hangs on a single edge, for
        // every degree the other end can have
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rand::Rng::gen_range(&mut rng, 3..=9);
            let mut paths: Vec<Vec<usize>> = vec![vec![]; n];
            let mut next = n;
            for (i, p) in paths.iter_mut().enumerate() {
                let len = if i == 0 { 1 } else { rand::Rng::gen_range(&mut rng, 0..=4) };
                p.extend(next..next + len);
                next += len;
            }
            for q in 2..=4 {
                let p = Piece {
                    cycle: (0..n).collect(),
                    paths: paths.clone(),
                    root: Some(Root::Edge { q }),
                    swap: false,
                };
                let (l, plan, fell) = color_piece(&p).unwrap();
                assert!(!fell || in_gap(&l), "n={n} q={q} {paths:?}");
                assert!(plan.is_valid(&l.g));
                assert!(plan.count() <= 1);
                assert_eq!(plan.coloring.get(l.path[0][0]), Color::Blue);
                let d = plan.degrees(&l.g).unwrap();
                assert_ne!(d.blue(0), q, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn random_scripts() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for _ in 0..300 {
            let s = TauStarScript::random(&mut rng, 6, 12);
            let (g, p, f) = color_traced(&s, false).unwrap_or_else(|e| panic!("{}: {e}", s.to_json()));
            assert!(f.iter().all(|&gap| gap), "{}", s.to_json());
            assert!(p.is_valid(&g));
            assert!(p.count() <= s.cycle_count());
            assert!(p.is_independent(&g));
            assert!(p.avoids_pendant_edges(&g));
        }
    }
}
