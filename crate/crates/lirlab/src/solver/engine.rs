//! Backtracking search for k-colorings whose color classes are locally irregular.
//!
//! Bundles are colored in an order that completes vertices early. Each vertex
//! keeps, per color, a count of forbidden final degrees (the final degrees of
//! completed neighbors joined by a bundle of that color). A branch dies as soon
//! as some vertex has no admissible final degree left in its remaining range.
//!
//! Two symmetry reductions exist and at most one is active. Color breaking
//! only lets a bundle open a new color if all lower colors are in use. Twin
//! ordering applies when the graph has large classes of twins (vertices with
//! identical multiplicities to every other vertex): any permutation of a
//! class is an automorphism, so the search may insist that the color-0
//! degrees inside a class do not decrease with the vertex index. With two
//! colors, adjacent vertices of equal degree always differ in both color
//! degrees, so inside a class that is a clique the order is strict.

use std::time::Instant;

use crate::graph::Multigraph;

const NONE: u8 = u8::MAX;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Limits {
    pub node_limit: u64,
    pub deadline: Option<Instant>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found(Vec<u8>),
    Exhausted,
    Stopped,
}

enum Flow {
    Found,
    Exhausted,
    Stopped,
}

/// Bundle order used by the search: repeatedly pick the vertex with the most
/// already-ordered incident bundles (ties: higher degree, then lower index)
/// and append its remaining bundles.
pub(crate) fn search_order(g: &Multigraph) -> Vec<usize> {
    let n = g.n();
    let mut added = vec![false; g.bundle_count()];
    let mut progress = vec![0usize; n];
    let mut chosen = vec![false; n];
    let mut order = Vec::with_capacity(g.bundle_count());
    while order.len() < g.bundle_count() {
        let v = (0..n)
            .filter(|&v| !chosen[v] && g.simple_degree(v) > progress[v])
            .max_by_key(|&v| (progress[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("some vertex has unordered bundles");
        chosen[v] = true;
        for &e in g.incident(v) {
            if !added[e] {
                added[e] = true;
                order.push(e);
                let b = g.bundle(e);
                progress[b.u] += 1;
                progress[b.v] += 1;
            }
        }
    }
    order
}

pub(crate) struct Engine<'a> {
    g: &'a Multigraph,
    k: usize,
    order: Vec<usize>,
    width: usize,
    cur: Vec<u32>,
    rem: Vec<u32>,
    done: Vec<bool>,
    forbid: Vec<u16>,
    trail: Vec<usize>,
    done_trail: Vec<usize>,
    color: Vec<u8>,
    fixed: Vec<Option<u8>>,
    break_symmetry: bool,
    /// Twin class members in index order, per vertex its class id.
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// Per class, whether color-0 degrees must strictly increase.
    strict: Vec<bool>,
    /// Bounds on the final color-0 degree.
    lo: Vec<u32>,
    hi: Vec<u32>,
    bound_trail: Vec<(usize, u32, u32)>,
    pub nodes: u64,
    limits: Limits,
}

impl<'a> Engine<'a> {
    pub fn new(g: &'a Multigraph, k: usize, limits: Limits) -> Engine<'a> {
        Engine::with_order(g, k, limits, search_order(g))
    }

    pub fn with_order(g: &'a Multigraph, k: usize, limits: Limits, order: Vec<usize>) -> Engine<'a> {
        assert!(k >= 1 && k < NONE as usize);
        let n = g.n();
        let width = g.max_degree() as usize + 1;
        let twins = twin_classes(g);
        let use_twins = twin_gain(&twins) > factorial(k);
        let classes: Vec<Vec<usize>> = if use_twins {
            twins.into_iter().filter(|c| c.len() > 1).collect()
        } else {
            Vec::new()
        };
        let mut class_of = vec![usize::MAX; n];
        let strict: Vec<bool> = classes.iter().map(|c| k == 2 && g.has_edge(c[0], c[1])).collect();
        let mut lo = vec![0; n];
        let mut hi: Vec<u32> = (0..n).map(|v| g.degree(v)).collect();
        for (i, c) in classes.iter().enumerate() {
            for (j, &v) in c.iter().enumerate() {
                class_of[v] = i;
                if strict[i] {
                    lo[v] = j as u32;
                    hi[v] = hi[v].saturating_sub((c.len() - 1 - j) as u32);
                }
            }
        }
        Engine {
            g,
            k,
            order,
            width,
            cur: vec![0; n * k],
            rem: (0..n).map(|v| g.degree(v)).collect(),
            done: vec![false; n],
            forbid: vec![0; n * k * width],
            trail: Vec::new(),
            done_trail: Vec::new(),
            color: vec![NONE; g.bundle_count()],
            fixed: vec![None; g.bundle_count()],
            break_symmetry: !use_twins,
            classes,
            class_of,
            strict,
            lo,
            hi,
            bound_trail: Vec::new(),
            nodes: 0,
            limits,
        }
    }

    /// True when twin ordering is active and color breaking is off.
    pub fn twin_ordering(&self) -> bool {
        !self.classes.is_empty()
    }

    fn drop_twins(&mut self) {
        if self.twin_ordering() {
            self.classes.clear();
            self.class_of.fill(usize::MAX);
            self.strict.clear();
            self.lo.fill(0);
            for v in 0..self.g.n() {
                self.hi[v] = self.g.degree(v);
            }
            self.break_symmetry = true;
        }
    }

    /// Forces a color on a bundle and disables twin ordering.
    pub fn fix(&mut self, bundle: usize, color: u8) {
        self.drop_twins();
        self.fix_branch(bundle, color);
    }

    /// Forces a color on a bundle; disables color-permutation symmetry
    /// breaking unless only the first bundle of the order is fixed to color 0.
    /// With twin ordering this is only sound when the caller tries every
    /// assignment of the fixed bundles, so the fixes split the search space
    /// instead of restricting it.
    pub fn fix_branch(&mut self, bundle: usize, color: u8) {
        self.fixed[bundle] = Some(color);
        let first = self.order.first().copied();
        let only_canonical_first = self
            .fixed
            .iter()
            .enumerate()
            .all(|(i, f)| f.is_none() || (Some(i) == first && *f == Some(0)));
        if !only_canonical_first {
            self.break_symmetry = false;
        }
    }

    pub fn run(&mut self) -> Outcome {
        match self.dfs(0, 0) {
            Flow::Found => {
                let colors = self.color.clone();
                Outcome::Found(colors)
            }
            Flow::Exhausted => Outcome::Exhausted,
            Flow::Stopped => Outcome::Stopped,
        }
    }

    fn out_of_budget(&self) -> bool {
        if self.nodes > self.limits.node_limit {
            return true;
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.limits.deadline {
                return Instant::now() >= d;
            }
        }
        false
    }

    fn dfs(&mut self, pos: usize, used: usize) -> Flow {
        if pos == self.order.len() {
            return Flow::Found;
        }
        let e = self.order[pos];
        let (lo, hi) = match self.fixed[e] {
            Some(c) => (c as usize, c as usize + 1),
            None if self.break_symmetry => (0, (used + 1).min(self.k)),
            None => (0, self.k),
        };
        for c in lo..hi {
            self.nodes += 1;
            if self.out_of_budget() {
                return Flow::Stopped;
            }
            let marks = (self.trail.len(), self.done_trail.len(), self.bound_trail.len());
            if self.assign(e, c) {
                match self.dfs(pos + 1, used.max(c + 1)) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
            self.unassign(e, c, marks);
        }
        Flow::Exhausted
    }

    #[inline]
    fn slot(&self, v: usize, c: usize, value: u32) -> usize {
        (v * self.k + c) * self.width + value as usize
    }

    fn assign(&mut self, e: usize, c: usize) -> bool {
        let b = self.g.bundle(e);
        let m = b.mult as u32;
        self.color[e] = c as u8;
        for x in [b.u, b.v] {
            self.cur[x * self.k + c] += m;
            self.rem[x] -= m;
        }
        for x in [b.u, b.v] {
            let ok = if self.rem[x] == 0 {
                self.complete(x)
            } else {
                self.feasible(x)
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn unassign(&mut self, e: usize, c: usize, (t, d, bt): (usize, usize, usize)) {
        while self.bound_trail.len() > bt {
            let (v, lo, hi) = self.bound_trail.pop().unwrap();
            self.lo[v] = lo;
            self.hi[v] = hi;
        }
        while self.trail.len() > t {
            let i = self.trail.pop().unwrap();
            self.forbid[i] -= 1;
        }
        while self.done_trail.len() > d {
            let v = self.done_trail.pop().unwrap();
            self.done[v] = false;
        }
        let b = self.g.bundle(e);
        let m = b.mult as u32;
        for x in [b.u, b.v] {
            self.cur[x * self.k + c] -= m;
            self.rem[x] += m;
        }
        self.color[e] = NONE;
    }

    fn complete(&mut self, x: usize) -> bool {
        for c in 0..self.k {
            let d = self.cur[x * self.k + c];
            if d > 0 && self.forbid[self.slot(x, c, d)] > 0 {
                return false;
            }
        }
        let r = self.cur[x * self.k];
        if r < self.lo[x] || r > self.hi[x] {
            return false;
        }
        self.done[x] = true;
        self.done_trail.push(x);
        if self.class_of[x] != usize::MAX {
            let class = self.class_of[x];
            let gap = self.strict[class] as u32;
            for i in 0..self.classes[class].len() {
                let w = self.classes[class][i];
                if w == x || self.done[w] {
                    continue;
                }
                let (lo, hi) = (self.lo[w], self.hi[w]);
                let (nlo, nhi) = if w > x {
                    (lo.max(r + gap), hi)
                } else if r < gap {
                    return false;
                } else {
                    (lo, hi.min(r - gap))
                };
                if (nlo, nhi) != (lo, hi) {
                    self.bound_trail.push((w, lo, hi));
                    self.lo[w] = nlo;
                    self.hi[w] = nhi;
                    if !self.feasible(w) {
                        return false;
                    }
                }
            }
        }
        for i in 0..self.g.incident(x).len() {
            let f = self.g.incident(x)[i];
            let w = self.g.bundle(f).other(x);
            if self.done[w] {
                continue;
            }
            let cf = self.color[f] as usize;
            let s = self.slot(w, cf, self.cur[x * self.k + cf]);
            self.forbid[s] += 1;
            self.trail.push(s);
            if self.rem[w] > 0 && !self.feasible(w) {
                return false;
            }
        }
        true
    }

    fn feasible(&self, w: usize) -> bool {
        let rem = self.rem[w];
        let (lo, hi) = (self.lo[w], self.hi[w]);
        if self.k == 2 {
            let deg = self.g.degree(w);
            let r0 = self.cur[w * 2];
            return (r0.max(lo)..=(r0 + rem).min(hi)).any(|r| {
                let b = deg - r;
                (r == 0 || self.forbid[self.slot(w, 0, r)] == 0)
                    && (b == 0 || self.forbid[self.slot(w, 1, b)] == 0)
            });
        }
        (0..self.k).all(|c| {
            let c0 = self.cur[w * self.k + c];
            let (a, b) = if c == 0 { (c0.max(lo), (c0 + rem).min(hi)) } else { (c0, c0 + rem) };
            (a..=b).any(|x| x == 0 || self.forbid[self.slot(w, c, x)] == 0)
        })
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Size of the symmetry group generated by permuting twin classes.
fn twin_gain(classes: &[Vec<usize>]) -> f64 {
    classes.iter().map(|c| factorial(c.len())).product()
}

/// Multiplicity of the bundle between `a` and `b`, 0 if none.
fn mult(g: &Multigraph, a: usize, b: usize) -> u8 {
    g.find(a, b).map_or(0, |i| g.bundle(i).mult)
}

fn are_twins(g: &Multigraph, a: usize, b: usize) -> bool {
    if g.degree(a) != g.degree(b) {
        return false;
    }
    let others = |x: usize, y: usize| -> Vec<(usize, u8)> {
        g.incident(x)
            .iter()
            .map(|&e| (g.bundle(e).other(x), g.bundle(e).mult))
            .filter(|&(z, _)| z != y)
            .collect()
    };
    let (mut na, mut nb) = (others(a, b), others(b, a));
    na.sort_unstable();
    nb.sort_unstable();
    na == nb
}

/// Classes of pairwise twins, each in increasing vertex order.
pub(crate) fn twin_classes(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        assigned[u] = true;
        let mut class = vec![u];
        for w in u + 1..n {
            if assigned[w] || !are_twins(g, u, w) {
                continue;
            }
            let inner = mult(g, u, w);
            if class.iter().all(|&x| are_twins(g, x, w) && (x == u || mult(g, x, w) == inner)) {
                assigned[w] = true;
                class.push(w);
            }
        }
        out.push(class);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unlimited() -> Limits {
        Limits {
            node_limit: u64::MAX,
            deadline: None,
        }
    }

    #[test]
    fn order_covers_every_bundle_once() {
        let g = Multigraph::simple(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let mut o = search_order(&g);
        o.sort();
        assert_eq!(o, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn p5_two_colors() {
        let g = Multigraph::simple(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(matches!(Engine::new(&g, 2, unlimited()).run(), Outcome::Found(_)));
        assert_eq!(Engine::new(&g, 1, unlimited()).run(), Outcome::Exhausted);
    }

    #[test]
    fn node_limit_stops_search() {
        let g = Multigraph::simple(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let limits = Limits {
            node_limit: 2,
            deadline: None,
        };
        assert_eq!(Engine::new(&g, 2, limits).run(), Outcome::Stopped);
    }

    #[test]
    fn twin_classes_of_split_graph() {
        let g = crate::families::split_graph(4, &[2]).unwrap();
        let classes = twin_classes(&g);
        assert!(classes.contains(&vec![1, 2, 3]));
        assert!(classes.contains(&vec![4, 5]));
    }

    #[test]
    fn twin_ordering_agrees_with_color_breaking() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..300 {
            // Blow up a small random graph so twins appear.
            let base = rng.gen_range(2..5);
            let sizes: Vec<usize> = (0..base).map(|_| rng.gen_range(1..4)).collect();
            if sizes.iter().sum::<usize>() > 8 {
                continue;
            }
            let mut owner = Vec::new();
            for (i, &s) in sizes.iter().enumerate() {
                owner.extend(std::iter::repeat_n(i, s));
            }
            let n = owner.len();
            let link: Vec<Vec<u8>> = (0..base).map(|_| (0..base).map(|_| rng.gen_range(0..3)).collect()).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let (a, b) = (owner[u].min(owner[v]), owner[u].max(owner[v]));
                    let m = link[a][b].min(if a == b { 1 } else { 2 });
                    if m > 0 {
                        edges.push((u, v, m));
                    }
                }
            }
            let g = Multigraph::new(n, edges).unwrap();
            for k in [2, 3] {
                let mut twin = Engine::new(&g, k, unlimited());
                let mut plain = Engine::new(&g, k, unlimited());
                plain.drop_twins();
                let (a, b) = (twin.run(), plain.run());
                assert_eq!(matches!(a, Outcome::Found(_)), matches!(b, Outcome::Found(_)), "{g:?} k={k}");
            }
        }
    }
}
