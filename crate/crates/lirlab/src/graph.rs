//! Multigraphs with doubled-edge bundles, red/blue colorings and the verifier.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Edge color. A doubled bundle carries a single color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "B")]
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_letter(c: &str) -> Option<Color> {
        match c {
            "R" | "r" => Some(Color::Red),
            "B" | "b" => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// An unordered vertex pair with multiplicity 1 or 2. Always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bundle {
    pub u: usize,
    pub v: usize,
    pub mult: u8,
}

impl Bundle {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A loopless multigraph on vertices `0..n` whose bundles are kept in
/// canonical order (lexicographic by `(min, max)`), so bundle ids are stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    bundles: Vec<Bundle>,
    adj: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Multigraph>
    where
        I: IntoIterator<Item = (usize, usize, u8)>,
    {
        let mut bundles = Vec::new();
        for (a, b, mult) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            if mult != 1 && mult != 2 {
                return Err(Error::BadMultiplicity { u: a, v: b, mult });
            }
            bundles.push(Bundle {
                u: a.min(b),
                v: a.max(b),
                mult,
            });
        }
        bundles.sort();
        for w in bundles.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
                return Err(Error::DuplicateBundle(w[0].u, w[0].v));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (i, b) in bundles.iter().enumerate() {
            adj[b.u].push(i);
            adj[b.v].push(i);
        }
        Ok(Multigraph { n, bundles, adj })
    }

    /// Simple graph from a list of vertex pairs.
    pub fn simple<I>(n: usize, pairs: I) -> Result<Multigraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Multigraph::new(n, pairs.into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bundle_count(&self) -> usize {
        self.bundles.len()
    }

    pub fn bundles(&self) -> &[Bundle] {
        &self.bundles
    }

    pub fn bundle(&self, id: usize) -> Bundle {
        self.bundles[id]
    }

    /// Bundle ids incident to `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(move |&e| self.bundles[e].other(v))
    }

    pub fn find(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.bundles.binary_search_by(|x| (x.u, x.v).cmp(&key)).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.find(a, b).is_some()
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].iter().map(|&e| self.bundles[e].mult as u32).sum()
    }

    /// Number of distinct neighbors.
    pub fn simple_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> u32 {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Total edge count counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.bundles.iter().map(|b| b.mult as usize).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.bundles.iter().all(|b| b.mult == 1)
    }

    pub fn doubled_ids(&self) -> Vec<usize> {
        (0..self.bundles.len())
            .filter(|&i| self.bundles[i].mult == 2)
            .collect()
    }

    /// The simple graph underlying this multigraph.
    pub fn underlying(&self) -> Multigraph {
        let mut g = self.clone();
        for b in &mut g.bundles {
            b.mult = 1;
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.bundles.iter().map(|b| (b.u, b.v)).collect()
    }
}

/// Red/blue assignment indexed by bundle id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColoring(Vec<Color>);

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> EdgeColoring {
        EdgeColoring(colors)
    }

    pub fn uniform(len: usize, c: Color) -> EdgeColoring {
        EdgeColoring(vec![c; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, id: usize) -> Color {
        self.0[id]
    }

    pub fn set(&mut self, id: usize, c: Color) {
        self.0[id] = c;
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn swapped(&self) -> EdgeColoring {
        EdgeColoring(self.0.iter().map(|c| c.other()).collect())
    }

    fn check(&self, g: &Multigraph) -> Result<()> {
        if self.0.len() != g.bundle_count() {
            return Err(Error::ColoringLength {
                expected: g.bundle_count(),
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

/// Per-vertex red and blue degrees, counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorDegrees {
    red: Vec<u32>,
    blue: Vec<u32>,
}

impl ColorDegrees {
    pub fn red(&self, v: usize) -> u32 {
        self.red[v]
    }

    pub fn blue(&self, v: usize) -> u32 {
        self.blue[v]
    }

    pub fn of(&self, v: usize, c: Color) -> u32 {
        match c {
            Color::Red => self.red[v],
            Color::Blue => self.blue[v],
        }
    }

    pub fn len(&self) -> usize {
        self.red.len()
    }

    pub fn is_empty(&self) -> bool {
        self.red.is_empty()
    }

    /// (blue, red) pairs by vertex, the order used on figure labels.
    pub fn blue_red_pairs(&self) -> Vec<(u32, u32)> {
        self.blue.iter().copied().zip(self.red.iter().copied()).collect()
    }
}

pub fn color_degrees(g: &Multigraph, c: &EdgeColoring) -> Result<ColorDegrees> {
    c.check(g)?;
    let mut red = vec![0u32; g.n()];
    let mut blue = vec![0u32; g.n()];
    for (i, b) in g.bundles().iter().enumerate() {
        let slot = match c.get(i) {
            Color::Red => &mut red,
            Color::Blue => &mut blue,
        };
        slot[b.u] += b.mult as u32;
        slot[b.v] += b.mult as u32;
    }
    Ok(ColorDegrees { red, blue })
}

pub fn is_locally_irregular(g: &Multigraph) -> bool {
    g.bundles().iter().all(|b| g.degree(b.u) != g.degree(b.v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub bundle: usize,
    pub u: usize,
    pub v: usize,
    pub color: Color,
    pub deg_u: u32,
    pub deg_v: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

pub fn verify_liec(g: &Multigraph, c: &EdgeColoring) -> Result<VerificationReport> {
    let deg = color_degrees(g, c)?;
    let violations: Vec<Violation> = g
        .bundles()
        .iter()
        .enumerate()
        .filter_map(|(i, b)| {
            let col = c.get(i);
            let (du, dv) = (deg.of(b.u, col), deg.of(b.v, col));
            (du == dv).then_some(Violation {
                bundle: i,
                u: b.u,
                v: b.v,
                color: col,
                deg_u: du,
                deg_v: dv,
            })
        })
        .collect();
    Ok(VerificationReport {
        ok: violations.is_empty(),
        violations,
    })
}

/// Doubles the listed bundles of a simple graph.
pub fn apply_doubling(g: &Multigraph, doubled: &[usize]) -> Result<Multigraph> {
    if !g.is_simple() {
        return Err(Error::AlreadyDoubled);
    }
    let mut out = g.clone();
    for &id in doubled {
        if id >= out.bundles.len() {
            return Err(Error::UnknownBundle(id));
        }
        out.bundles[id].mult = 2;
    }
    Ok(out)
}

/// The doubled set of a simple base graph together with a coloring of the
/// doubled multigraph. Bundle ids are shared between base and doubled graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingPlan {
    pub doubled: Vec<usize>,
    pub coloring: EdgeColoring,
}

impl DoublingPlan {
    pub fn new(doubled: impl IntoIterator<Item = usize>, coloring: EdgeColoring) -> DoublingPlan {
        let set: BTreeSet<usize> = doubled.into_iter().collect();
        DoublingPlan {
            doubled: set.into_iter().collect(),
            coloring,
        }
    }

    pub fn count(&self) -> usize {
        self.doubled.len()
    }

    pub fn multigraph(&self, base: &Multigraph) -> Result<Multigraph> {
        apply_doubling(base, &self.doubled)
    }

    pub fn verify(&self, base: &Multigraph) -> Result<VerificationReport> {
        verify_liec(&self.multigraph(base)?, &self.coloring)
    }

    pub fn is_valid(&self, base: &Multigraph) -> bool {
        self.verify(base).map(|r| r.ok).unwrap_or(false)
    }

    pub fn degrees(&self, base: &Multigraph) -> Result<ColorDegrees> {
        color_degrees(&self.multigraph(base)?, &self.coloring)
    }

    /// No two doubled bundles share a vertex.
    pub fn is_independent(&self, base: &Multigraph) -> bool {
        let mut used = BTreeSet::new();
        self.doubled.iter().all(|&id| {
            let b = base.bundle(id);
            used.insert(b.u) && used.insert(b.v)
        })
    }

    /// No doubled bundle has a degree-1 endpoint in the base graph.
    pub fn avoids_pendant_edges(&self, base: &Multigraph) -> bool {
        self.doubled.iter().all(|&id| {
            let b = base.bundle(id);
            base.degree(b.u) > 1 && base.degree(b.v) > 1
        })
    }
}

/// Incremental builder that colors edges of a simple base graph by endpoints.
#[derive(Debug, Clone)]
pub struct PlanBuilder<'a> {
    g: &'a Multigraph,
    colors: Vec<Option<Color>>,
    doubled: BTreeSet<usize>,
}

impl<'a> PlanBuilder<'a> {
    pub fn new(g: &'a Multigraph) -> PlanBuilder<'a> {
        PlanBuilder {
            g,
            colors: vec![None; g.bundle_count()],
            doubled: BTreeSet::new(),
        }
    }

    fn id(&self, u: usize, v: usize) -> usize {
        self.g
            .find(u, v)
            .unwrap_or_else(|| panic!("no edge {u}-{v} in base graph"))
    }

    pub fn color(&mut self, u: usize, v: usize, c: Color) -> &mut Self {
        let id = self.id(u, v);
        self.colors[id] = Some(c);
        self
    }

    pub fn double(&mut self, u: usize, v: usize) -> &mut Self {
        let id = self.id(u, v);
        self.doubled.insert(id);
        self
    }

    pub fn undouble(&mut self, u: usize, v: usize) -> &mut Self {
        let id = self.id(u, v);
        self.doubled.remove(&id);
        self
    }

    pub fn get(&self, u: usize, v: usize) -> Option<Color> {
        self.colors[self.id(u, v)]
    }

    pub fn is_doubled(&self, u: usize, v: usize) -> bool {
        self.doubled.contains(&self.id(u, v))
    }

    /// Colors every still-uncolored bundle with `c`.
    pub fn fill(&mut self, c: Color) -> &mut Self {
        for x in &mut self.colors {
            x.get_or_insert(c);
        }
        self
    }

    /// Current color degree of `v`, counting only colored bundles.
    pub fn degree(&self, v: usize, c: Color) -> u32 {
        self.g
            .incident(v)
            .iter()
            .filter(|&&e| self.colors[e] == Some(c))
            .map(|&e| if self.doubled.contains(&e) { 2 } else { 1 })
            .sum()
    }

    pub fn build(&self) -> Result<DoublingPlan> {
        let colors = self
            .colors
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| {
                    let b = self.g.bundle(i);
                    Error::Uncolored(b.u, b.v)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DoublingPlan::new(
            self.doubled.iter().copied(),
            EdgeColoring::new(colors),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Multigraph {
        Multigraph::simple(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        Multigraph::simple(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn p3_all_red_degrees() {
        let g = path(3);
        let d = color_degrees(&g, &EdgeColoring::uniform(2, Color::Red)).unwrap();
        assert_eq!((0..3).map(|v| d.red(v)).collect::<Vec<_>>(), vec![1, 2, 1]);
        assert_eq!((0..3).map(|v| d.blue(v)).collect::<Vec<_>>(), vec![0, 0, 0]);
    }

    #[test]
    fn empty_graph_has_zero_degrees() {
        let g = Multigraph::simple(4, []).unwrap();
        let d = color_degrees(&g, &EdgeColoring::new(vec![])).unwrap();
        assert!((0..4).all(|v| d.red(v) == 0 && d.blue(v) == 0));
    }

    #[test]
    fn coloring_length_is_checked() {
        let g = path(3);
        assert!(color_degrees(&g, &EdgeColoring::uniform(1, Color::Red)).is_err());
    }

    #[test]
    fn local_irregularity_of_small_graphs() {
        assert!(is_locally_irregular(&path(3)));
        assert!(!is_locally_irregular(&cycle(4)));
        let p4 = path(4);
        let d = apply_doubling(&p4, &[p4.find(0, 1).unwrap()]).unwrap();
        assert!(is_locally_irregular(&d));
    }

    #[test]
    fn doubling_p2_gives_regular_multigraph() {
        let g = path(2);
        let d = apply_doubling(&g, &[0]).unwrap();
        assert_eq!(d.degree(0), 2);
        assert!(!is_locally_irregular(&d));
        assert_eq!(apply_doubling(&g, &[]).unwrap(), g);
        assert!(apply_doubling(&d, &[0]).is_err());
        assert!(apply_doubling(&g, &[3]).is_err());
    }

    #[test]
    fn c8_alternating_pairs_verifies() {
        let g = cycle(8);
        let mut b = PlanBuilder::new(&g);
        for i in 0..8 {
            let c = if (i / 2) % 2 == 0 { Color::Red } else { Color::Blue };
            b.color(i, (i + 1) % 8, c);
        }
        assert!(b.build().unwrap().is_valid(&g));
    }

    #[test]
    fn c6_has_no_two_coloring() {
        let g = cycle(6);
        for mask in 0u32..64 {
            let c = EdgeColoring::new(
                (0..6)
                    .map(|i| if mask >> i & 1 == 1 { Color::Blue } else { Color::Red })
                    .collect(),
            );
            assert!(!verify_liec(&g, &c).unwrap().ok);
        }
    }

    #[test]
    fn invalid_bundles_are_rejected() {
        assert!(matches!(Multigraph::simple(3, [(1, 1)]), Err(Error::Loop(1))));
        assert!(Multigraph::simple(3, [(0, 1), (1, 0)]).is_err());
        assert!(Multigraph::new(3, [(0, 1, 3)]).is_err());
        assert!(Multigraph::simple(3, [(0, 3)]).is_err());
    }

    #[test]
    fn violations_list_offending_bundles() {
        let g = path(4);
        let r = verify_liec(&g, &EdgeColoring::uniform(3, Color::Blue)).unwrap();
        assert!(!r.ok);
        assert_eq!(r.violations.len(), 1);
        assert_eq!((r.violations[0].u, r.violations[0].v), (1, 2));
    }
}
