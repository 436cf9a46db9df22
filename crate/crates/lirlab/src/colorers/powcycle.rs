//! Powers of cycles: a 2-liec of `C_n^k` with no doubling.
//!
//! The blue graph is glued from ordered blocks `A(t,k)` (vertices
//! `a_0..a_{t+1}`) and `B(t,k)` (one more vertex of degree 0). Each block is
//! built on the disconnected almost irregular graph `H_t`, whose vertices are
//! ordered by a degree list `L`. Inner vertices of a block have distinct
//! degrees `1..t`, so equal blue degrees only occur `t+1 >= k+1` apart along
//! the cycle, while every blue edge spans at most `k` steps. The red graph
//! `C_n^k - G` is then locally irregular too, as `C_n^k` is regular.
//!
//! Blocks may carry half-edges (stubs) on their first and last `ℓ` inner
//! vertices. Consecutive blocks share an end vertex and pair their facing
//! stubs into edges.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::families::power_of_cycle;
use crate::fixtures;
use crate::graph::{Color, DoublingPlan, Multigraph, PlanBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    NoHalfEdges,
    HalfEdges,
}

/// `floor((t-1)/2)` and `ceil((t-1)/2)` for `t >= 1`.
fn half_down(t: usize) -> usize {
    (t - 1) / 2
}

fn half_up(t: usize) -> usize {
    t / 2
}

/// Block sizes without stubs fit when `3t <= 4k-2` (`t` even) or
/// `3t <= 4k-3` (`t` odd).
pub fn no_half_edges_admissible(t: usize, k: usize) -> bool {
    let bound = if t.is_multiple_of(2) { 4 * k - 2 } else { 4 * k - 3 };
    k >= 2 && t >= k && 3 * t <= bound
}

/// Blocks with stubs need `k >= 4` and `4k-1 <= 3t`, `5t <= 8k-5`.
pub fn half_edges_admissible(t: usize, k: usize) -> bool {
    k >= 4 && 3 * t >= 4 * k - 1 && 5 * t <= 8 * k - 5
}

/// The mode used for `(t,k)`, stub-free when both apply.
pub fn mode_for(t: usize, k: usize) -> Option<Mode> {
    if no_half_edges_admissible(t, k) {
        Some(Mode::NoHalfEdges)
    } else if half_edges_admissible(t, k) {
        Some(Mode::HalfEdges)
    } else {
        None
    }
}

/// The degree list ordering the vertices of `H_t` inside a block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeList {
    pub t: usize,
    pub k: usize,
    pub mode: Mode,
    pub list: Vec<usize>,
    /// Lengths of the consecutive sublists: `L1 L2 L3` without stubs,
    /// `L1 L2 L3 L4 (0) L5` with stubs (the singleton 0 counted separately).
    pub parts: Vec<usize>,
    /// `s1..s4` with stubs.
    pub s: Option<[usize; 4]>,
}

/// The degree multiset of `H_t`: `0..=t-2` with `floor((t-1)/2)` twice.
pub fn degree_multiset(t: usize) -> Vec<usize> {
    let mut m: Vec<usize> = (0..t.saturating_sub(1)).collect();
    m.push(half_down(t));
    m.sort_unstable();
    m
}

pub fn build_degree_list(t: usize, k: usize, mode: Mode) -> Result<DegreeList> {
    match mode {
        Mode::NoHalfEdges if !no_half_edges_admissible(t, k) => {
            return Err(invalid(format!("(t,k) = ({t},{k}) outside the stub-free range")))
        }
        Mode::HalfEdges if !half_edges_admissible(t, k) => {
            return Err(invalid(format!("(t,k) = ({t},{k}) outside the stub range")))
        }
        _ => {}
    }
    let m = degree_multiset(t);
    let h = half_down(t);
    if mode == Mode::NoHalfEdges {
        let mut list: Vec<usize> = m.iter().copied().filter(|x| x % 2 == 1).collect();
        list.extend(m.iter().rev().copied().filter(|x| x % 2 == 0));
        let x = t / 4;
        let parts = match t % 4 {
            0 => vec![x, 2 * x, x],
            1 => vec![x, 2 * x, x + 1],
            2 => vec![x, 2 * x + 1, x + 1],
            _ => vec![x + 1, 2 * x + 1, x + 1],
        };
        return Ok(DegreeList { t, k, mode, list, parts, s: None });
    }
    let s1 = t + half_up(t) + 1 - 2 * k;
    let s2 = k - half_up(t);
    let s3 = 2 * k - 1 - t;
    let s4 = k - 1 - half_up(t);
    let mut list = Vec::with_capacity(t);
    list.extend(h..h + s1);
    list.extend((h + 1 - s2..=h).rev());
    list.extend(h + s1..=t - 2);
    let top4 = h - s2;
    list.extend((0..s4 - 1).map(|i| top4 - i));
    list.push(0);
    list.extend((1..=top4 + 1 - s4).rev());
    Ok(DegreeList {
        t,
        k,
        mode,
        list,
        parts: vec![s1, s2, s3, s4 - 1, s1],
        s: Some([s1, s2, s3, s4]),
    })
}

impl DegreeList {
    /// Checks the list against its defining properties: it is a permutation
    /// of the degree multiset, the sublist lengths add up, pairs that will be
    /// adjacent sit at most `k` apart, and the sublist conditions of each mode.
    pub fn check(&self) -> std::result::Result<(), String> {
        let (t, k) = (self.t, self.k);
        let mut sorted = self.list.clone();
        sorted.sort_unstable();
        if sorted != degree_multiset(t) {
            return Err("list is not a permutation of the degree multiset".into());
        }
        let singleton = usize::from(self.mode == Mode::HalfEdges);
        if self.parts.iter().sum::<usize>() + singleton != t {
            return Err("sublist lengths do not add up to t".into());
        }
        let l = &self.list;
        let last5 = t - self.s.map_or(0, |s| s[0]);
        for i in 0..t {
            for j in i + 1..t {
                if l[i] + l[j] + 1 >= t {
                    if j - i > k {
                        return Err(format!("positions {} and {} are adjacent but {} apart", i + 1, j + 1, j - i));
                    }
                    if self.mode == Mode::HalfEdges && i < last5 && j >= last5 && j - i > k - 1 {
                        return Err(format!("positions {} and {} straddle the last sublist too far", i + 1, j + 1));
                    }
                }
            }
        }
        match self.mode {
            Mode::NoHalfEdges => self.check_three_parts(),
            Mode::HalfEdges => self.check_five_parts(),
        }
    }

    fn check_three_parts(&self) -> std::result::Result<(), String> {
        let (t, k) = (self.t, self.k);
        let (a, b, c) = (self.parts[0], self.parts[1], self.parts[2]);
        if a + c != t.div_ceil(2) {
            return Err("|L1| + |L3| differs from ceil(t/2)".into());
        }
        let outer: BTreeSet<usize> = self.list[..a].iter().chain(&self.list[a + b..]).copied().collect();
        if (0..=half_down(t)).any(|x| !outer.contains(&x)) {
            return Err("a small degree is missing from L1 and L3".into());
        }
        let (left, right) = if matches!(t % 4, 0 | 3) { (k, k - 1) } else { (k - 1, k) };
        if a + b > left || b + c > right {
            return Err("sublist lengths exceed the span allowed by k".into());
        }
        Ok(())
    }

    fn check_five_parts(&self) -> std::result::Result<(), String> {
        let t = self.t;
        let [s1, s2, s3, s4] = self.s.ok_or("missing s values")?;
        if 2 * s1 + s2 + s3 + s4 != t || s2 == 0 || s3 == 0 || s4 == 0 {
            return Err("s values do not describe the list".into());
        }
        let h = half_down(t);
        let l = &self.list;
        let high: Vec<usize> = l[..s1].iter().chain(&l[s1 + s2..s1 + s2 + s3]).copied().collect();
        if high != (h..=t - 2).collect::<Vec<_>>() {
            return Err("L1 L3 is not the increasing run of large degrees".into());
        }
        let zero = s1 + s2 + s3 + s4 - 1;
        if l[zero] != 0 {
            return Err("the singleton 0 is misplaced".into());
        }
        let low: Vec<usize> = l[s1..s1 + s2].iter().chain(&l[s1 + s2 + s3..zero]).chain(&l[zero + 1..]).copied().collect();
        if low != (1..=h).rev().collect::<Vec<_>>() {
            return Err("L2 L4 L5 is not the decreasing run of small degrees".into());
        }
        Ok(())
    }
}

/// An ordered block with stubs. Vertex `i` is `a_i` (or `b_i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfEdgeGraph {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub stubs: Vec<bool>,
    pub ell: usize,
}

impl HalfEdgeGraph {
    /// Degree counting the stub.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count() + usize::from(self.stubs[v])
    }

    fn stub_set(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.stubs[v]).collect()
    }

    /// Conditions on an `A` block, `t = order - 2`.
    pub fn validate_a(&self, k: usize) -> std::result::Result<(), String> {
        let t = self.order - 2;
        let last = t + 1;
        if self.degree(0) + self.degree(last) < t + 1 {
            return Err("(a1) end degrees sum below t+1".into());
        }
        let mut inner: Vec<usize> = (1..=t).map(|i| self.degree(i)).collect();
        inner.sort_unstable();
        if inner != (1..=t).collect::<Vec<_>>() {
            return Err("(a2) inner degrees are not 1..t".into());
        }
        if self.stubs[0] || self.stubs[last] {
            return Err("(a3) an end vertex carries a stub".into());
        }
        let ell = self.ell;
        let expect: Vec<usize> = (1..=ell).chain(t + 1 - ell..=t).collect();
        if ell > t / 2 || self.stub_set() != expect {
            return Err("(a4) stubs are not on the first and last ℓ inner vertices".into());
        }
        for &(i, j) in &self.edges {
            let (i, j) = (i.min(j), i.max(j));
            if j - i > k {
                return Err(format!("(a5) edge a{i}a{j} spans more than k"));
            }
            if i < t + 1 - ell && t + 1 - ell <= j && j - i > k - 1 {
                return Err(format!("(a6) edge a{i}a{j} reaches the stub tail too far"));
            }
        }
        Ok(())
    }

    /// Conditions on a `B` block, `t = order - 3`.
    pub fn validate_b(&self, k: usize) -> std::result::Result<(), String> {
        let t = self.order - 3;
        let last = t + 2;
        if self.degree(0) + self.degree(last) < t + 1 {
            return Err("(b1) end degrees sum below t+1".into());
        }
        let mut inner: Vec<usize> = (1..=t + 1).map(|i| self.degree(i)).collect();
        inner.sort_unstable();
        if inner != (0..=t).collect::<Vec<_>>() {
            return Err("(b2) inner degrees are not 0..t".into());
        }
        if self.stubs[0] || self.stubs[last] {
            return Err("(b3) an end vertex carries a stub".into());
        }
        let ell = self.ell;
        let expect: Vec<usize> = (1..=ell).chain(t + 2 - ell..=t + 1).collect();
        if self.stub_set() != expect {
            return Err("(b4) stubs are not on the first and last ℓ inner vertices".into());
        }
        if let Some(&(i, j)) = self.edges.iter().find(|&&(i, j)| i.abs_diff(j) > k) {
            return Err(format!("(b5) edge b{i}b{j} spans more than k"));
        }
        Ok(())
    }
}

/// `A(t,k)` in the mode [`mode_for`] picks.
pub fn build_a(t: usize, k: usize) -> Result<HalfEdgeGraph> {
    let mode = mode_for(t, k).ok_or_else(|| invalid(format!("(t,k) = ({t},{k}) admits no block")))?;
    let dl = build_degree_list(t, k, mode)?;
    // h[i] is the degree in H_t of a_i, i in 1..=t
    let mut h = vec![0; t + 2];
    let mut edges = Vec::new();
    let mut stubs = vec![false; t + 2];
    let mut ell = 0;
    let mut from0 = Vec::new();
    let mut to_last = Vec::new();
    match mode {
        Mode::NoHalfEdges => {
            let (l1, l2, l3) = (dl.parts[0], dl.parts[1], dl.parts[2]);
            if matches!(t % 4, 0 | 3) {
                for i in 1..=t {
                    h[i] = dl.list[i - 1];
                }
                from0.extend(1..=l1 + l2);
                to_last.extend(l1 + 1..=t);
            } else {
                for i in 1..=t {
                    h[i] = dl.list[t - i];
                }
                from0.extend(1..=l2 + l3);
                to_last.extend(l3 + 1..=t);
            }
        }
        Mode::HalfEdges => {
            let [s1, s2, s3, s4] = dl.s.expect("stub mode has s values");
            for i in 1..=t {
                h[i] = dl.list[i - 1];
            }
            from0.extend(1..=s1 + s2 + s3);
            to_last.extend(s1 + s2 + 1..=s1 + s2 + s3 + s4);
            for i in (1..=s1).chain(s1 + s2 + s3 + s4 + 1..=t) {
                stubs[i] = true;
            }
            ell = s1;
        }
    }
    for i in 1..=t {
        for j in i + 1..=t {
            if h[i] + h[j] + 1 >= t {
                edges.push((i, j));
            }
        }
    }
    for i in 1..=t {
        let d = edges.iter().filter(|&&(a, b)| a == i || b == i).count();
        if d != h[i] {
            return Err(Error::Construction(format!("almost irregular graph of order {t} has the wrong degrees")));
        }
    }
    edges.extend(from0.iter().map(|&i| (0, i)));
    edges.extend(to_last.iter().map(|&i| (i, t + 1)));
    Ok(HalfEdgeGraph {
        order: t + 2,
        edges,
        stubs,
        ell,
    })
}

/// `B(t,k)`: `A(t,k)` with a vertex of degree 0 inserted before its last
/// `ℓ + 1` vertices.
pub fn build_b(t: usize, k: usize) -> Result<HalfEdgeGraph> {
    let a = build_a(t, k)?;
    let at = t + 1 - a.ell;
    let shift = |v: usize| if v >= at { v + 1 } else { v };
    let mut stubs = vec![false; t + 3];
    for v in 0..a.order {
        stubs[shift(v)] = a.stubs[v];
    }
    Ok(HalfEdgeGraph {
        order: t + 3,
        edges: a.edges.iter().map(|&(u, v)| (shift(u), shift(v))).collect(),
        stubs,
        ell: a.ell,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerCycleParams {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    /// Number of `A` blocks.
    pub p: usize,
    /// Number of `B` blocks.
    pub q: usize,
}

/// Smallest admissible `t`, then smallest `q`, with `n = p(t+1) + q(t+2)`
/// and `p + q >= 2`.
pub fn choose_parameters(n: usize, k: usize) -> Result<PowerCycleParams> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    if n < 2 * k + 2 {
        return Err(invalid(format!("n = {n} < 2k+2: the power of the cycle is complete")));
    }
    let top = (8 * k - 5) / 5;
    for t in k..=top.max(k) {
        if mode_for(t, k).is_none() {
            continue;
        }
        for q in 0..=n / (t + 2) {
            let rest = n - q * (t + 2);
            if rest.is_multiple_of(t + 1) && rest / (t + 1) + q >= 2 {
                return Ok(PowerCycleParams {
                    n,
                    k,
                    t,
                    p: rest / (t + 1),
                    q,
                });
            }
        }
    }
    Err(Error::Construction(format!("no block decomposition of C_{n}^{k}")))
}

/// The blue graph on cycle positions `0..n`.
pub fn assemble(params: &PowerCycleParams) -> Result<Vec<(usize, usize)>> {
    let PowerCycleParams { n, t, k, p, q } = *params;
    let a = build_a(t, k)?;
    let b = build_b(t, k)?;
    let blocks: Vec<&HalfEdgeGraph> = std::iter::repeat_n(&a, p).chain(std::iter::repeat_n(&b, q)).collect();
    let ell = a.ell;
    // block j covers its vertices 1..=m at positions off[j]..off[j]+m-1;
    // its vertex 0 is the previous block's vertex m
    let mut off = Vec::with_capacity(blocks.len());
    let mut pos = 0;
    for blk in &blocks {
        off.push(pos);
        pos += blk.order - 1;
    }
    if pos != n {
        return Err(Error::Construction("blocks do not cover the cycle".into()));
    }
    let at = |j: usize, v: usize| (off[j] + n + v - 1) % n;
    let mut edges = BTreeSet::new();
    let mut add = |u: usize, v: usize| -> Result<()> {
        if u == v || !edges.insert((u.min(v), u.max(v))) {
            return Err(Error::Construction(format!("assembly repeats the pair {u}-{v}")));
        }
        Ok(())
    };
    for (j, blk) in blocks.iter().enumerate() {
        for &(u, v) in &blk.edges {
            add(at(j, u), at(j, v))?;
        }
        let next = (j + 1) % blocks.len();
        let m = blk.order - 1;
        for i in 1..=ell {
            let tail = m - 1 - ell + i;
            if !blk.stubs[tail] || !blocks[next].stubs[i] {
                return Err(Error::Construction("stub pairing hits a vertex without a stub".into()));
            }
            add(at(j, tail), at(next, i))?;
        }
    }
    Ok(edges.into_iter().collect())
}

fn cyclic_distance(n: usize, u: usize, v: usize) -> usize {
    let d = u.abs_diff(v);
    d.min(n - d)
}

/// The two facts the coloring rests on: blue edges join vertices at most
/// `k` apart on the cycle, and vertices of equal blue degree are more than
/// `k` apart.
pub fn distance_properties(n: usize, k: usize, blue: &[(usize, usize)]) -> std::result::Result<(), String> {
    if let Some(&(u, v)) = blue.iter().find(|&&(u, v)| cyclic_distance(n, u, v) > k) {
        return Err(format!("blue edge {u}-{v} is not an edge of the power"));
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in blue {
        deg[u] += 1;
        deg[v] += 1;
    }
    for u in 0..n {
        for v in u + 1..n {
            if deg[u] == deg[v] && cyclic_distance(n, u, v) <= k {
                return Err(format!("vertices {u} and {v} share blue degree {} within distance k", deg[u]));
            }
        }
    }
    Ok(())
}

/// A 2-liec of `C_n^k` without doublings.
pub fn color_power_of_cycle(n: usize, k: usize) -> Result<(Multigraph, DoublingPlan)> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    let g = power_of_cycle(n, k, false)?;
    let mut pb = PlanBuilder::new(&g);
    pb.fill(Color::Red);
    if (n, k) == (11, 3) {
        let f = fixtures::load("c11_3")?;
        for (i, b) in f.base.bundles().iter().enumerate() {
            pb.color(b.u, b.v, f.plan.coloring.get(i));
        }
    } else {
        let params = choose_parameters(n, k)?;
        let blue = assemble(&params)?;
        distance_properties(n, k, &blue).map_err(Error::Construction)?;
        for (u, v) in blue {
            pb.color(u, v, Color::Blue);
        }
    }
    let plan = pb.build()?;
    if !plan.is_valid(&g) {
        return Err(Error::Construction(format!("coloring of C_{n}^{k} failed to verify")));
    }
    Ok((g, plan))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stub_lists() {
        let l = build_degree_list(5, 4, Mode::HalfEdges).unwrap();
        assert_eq!(l.s, Some([0, 2, 2, 1]));
        assert_eq!(l.list, vec![2, 1, 2, 3, 0]);
        let l = build_degree_list(7, 5, Mode::HalfEdges).unwrap();
        assert_eq!(l.s, Some([1, 2, 2, 1]));
        assert_eq!(l.list, vec![3, 3, 2, 4, 5, 0, 1]);
        l.check().unwrap();
        let a = build_a(7, 5).unwrap();
        assert_eq!(a.ell, 1);
        assert_eq!(a.stub_set(), vec![1, 7]);
        a.validate_a(5).unwrap();
    }

    #[test]
    fn stub_free_list() {
        let l = build_degree_list(4, 4, Mode::NoHalfEdges).unwrap();
        assert_eq!(l.parts, vec![1, 2, 1]);
        assert_eq!(l.list, vec![1, 1, 2, 0]);
        l.check().unwrap();
    }

    #[test]
    fn smallest_blocks() {
        let a = build_a(2, 2).unwrap();
        let mut e = a.edges.clone();
        e.sort_unstable();
        assert_eq!(e, vec![(0, 1), (0, 2), (2, 3)]);
        a.validate_a(2).unwrap();
        let b = build_b(2, 2).unwrap();
        let inner: Vec<usize> = (0..5).map(|v| b.degree(v)).collect();
        assert_eq!(inner, vec![2, 1, 2, 0, 1]);
        b.validate_b(2).unwrap();
        let b = build_b(7, 5).unwrap();
        assert_eq!(b.degree(7), 0);
    }

    #[test]
    fn parameter_choice() {
        let p = choose_parameters(10, 4).unwrap();
        assert_eq!((p.t, p.p, p.q), (4, 2, 0));
        let p = choose_parameters(7, 2).unwrap();
        assert_eq!((p.t, p.p, p.q), (2, 1, 1));
        for k in 2..=12 {
            if k != 3 {
                choose_parameters(2 * k + 2, k).unwrap();
            }
        }
        assert!(choose_parameters(11, 3).is_err());
        assert!(choose_parameters(5, 2).is_err());
    }

    #[test]
    fn cube_of_c11_matches_labels() {
        let (g, p) = color_power_of_cycle(11, 3).unwrap();
        let pairs = p.degrees(&g).unwrap().blue_red_pairs();
        let want = [(5, 1), (0, 6), (2, 4), (4, 2), (1, 5), (3, 3), (5, 1), (0, 6), (4, 2), (3, 3), (1, 5)];
        assert_eq!(pairs, want);
    }

    #[test]
    fn small_powers() {
        for k in 2..=6 {
            for n in 2 * k + 2..=60 {
                let (g, p) = color_power_of_cycle(n, k).unwrap_or_else(|e| panic!("({n},{k}): {e}"));
                assert_eq!(p.count(), 0);
                assert!(p.is_valid(&g));
            }
        }
    }

    #[test]
    fn every_admissible_block_validates() {
        for k in 2..=40 {
            for t in k..=(8 * k - 5) / 5 {
                let mode = mode_for(t, k).unwrap_or_else(|| panic!("({t},{k}) has no mode"));
                let l = build_degree_list(t, k, mode).unwrap();
                l.check().unwrap_or_else(|e| panic!("list ({t},{k}): {e}"));
                build_a(t, k).unwrap().validate_a(k).unwrap_or_else(|e| panic!("A({t},{k}): {e}"));
                build_b(t, k).unwrap().validate_b(k).unwrap_or_else(|e| panic!("B({t},{k}): {e}"));
            }
        }
    }
}
