//! Trees: an exact dynamic program for 2-liecs and 2-aliecs of shrubs, and
//! the one-doubling repair when no 2-liec exists.
//!
//! The program roots the tree at a pendant vertex. For a vertex `v` whose
//! parent edge has color `c`, `ok[v][c][d]` says whether the subtree below `v`
//! can be colored when the parent's final degree in `c` is `d`. Choosing how
//! many children take color `c` fixes both degrees of `v`, and every child
//! then only needs a table lookup.

use crate::error::{invalid, Error, Result};
use crate::families::is_tree;
use crate::graph::{Color, DoublingPlan, EdgeColoring, Multigraph};

const COLORS: [Color; 2] = [Color::Red, Color::Blue];

fn idx(c: Color) -> usize {
    (c == Color::Blue) as usize
}

struct Rooted {
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    /// Vertices in BFS order from the root.
    order: Vec<usize>,
}

fn root_at(t: &Multigraph, root: usize) -> Rooted {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                children[v].push(w);
                order.push(w);
            }
        }
    }
    Rooted { parent, children, order }
}

struct Program<'a> {
    r: &'a Rooted,
    width: usize,
    /// ok[(v * 2 + c) * width + d]
    ok: Vec<bool>,
}

impl<'a> Program<'a> {
    fn new(t: &Multigraph, r: &'a Rooted) -> Program<'a> {
        let width = t.max_degree() as usize + 2;
        let mut p = Program {
            r,
            width,
            ok: vec![false; t.n() * 2 * width],
        };
        for &v in r.order.iter().rev().take(t.n() - 1) {
            for c in COLORS {
                for d in 1..width {
                    let val = p.choose(v, c, d).is_some();
                    p.ok[(v * 2 + idx(c)) * width + d] = val;
                }
            }
        }
        p
    }

    fn get(&self, v: usize, c: Color, d: usize) -> bool {
        d < self.width && self.ok[(v * 2 + idx(c)) * self.width + d]
    }

    /// Colors for the children of `v` when its parent edge has color `c` and
    /// the parent's final `c`-degree is `d`.
    fn choose(&self, v: usize, c: Color, d: usize) -> Option<Vec<Color>> {
        let ch = &self.r.children[v];
        (0..=ch.len()).find_map(|k| {
            let (dc, dother) = (1 + k, ch.len() - k);
            if dc == d {
                return None;
            }
            self.split(ch, c, dc, dother, k)
        })
    }

    /// Gives exactly `k` of `ch` color `c` (`dc` is then `v`'s `c`-degree and
    /// `dother` its other degree), if every child accepts its color.
    fn split(&self, ch: &[usize], c: Color, dc: usize, dother: usize, k: usize) -> Option<Vec<Color>> {
        let mut out = vec![c; ch.len()];
        let mut free = Vec::new();
        let mut taken = 0;
        for (i, &w) in ch.iter().enumerate() {
            match (self.get(w, c, dc), self.get(w, c.other(), dother)) {
                (false, false) => return None,
                (true, false) => taken += 1,
                (false, true) => out[i] = c.other(),
                (true, true) => free.push(i),
            }
        }
        if taken > k || taken + free.len() < k {
            return None;
        }
        for &i in &free[k - taken..] {
            out[i] = c.other();
        }
        Some(out)
    }

    /// Colors every edge below `v` given its parent edge color and the
    /// parent's degree in that color.
    fn fill(&self, t: &Multigraph, colors: &mut [Color], v: usize, c: Color, d: usize) {
        let mut stack = vec![(v, c, d)];
        while let Some((v, c, d)) = stack.pop() {
            let pick = self.choose(v, c, d).expect("table promised a coloring");
            self.apply(t, colors, v, c, &pick, &mut stack);
        }
    }

    fn apply(
        &self,
        t: &Multigraph,
        colors: &mut [Color],
        v: usize,
        c: Color,
        pick: &[Color],
        stack: &mut Vec<(usize, Color, usize)>,
    ) {
        let ch = &self.r.children[v];
        let same = pick.iter().filter(|&&x| x == c).count();
        let deg = |x: Color| if x == c { 1 + same } else { ch.len() - same };
        for (&w, &x) in ch.iter().zip(pick) {
            colors[t.find(v, w).unwrap()] = x;
            stack.push((w, x, deg(x)));
        }
    }
}

fn check_shrub(t: &Multigraph, root: usize) -> Result<()> {
    if !is_tree(t) || t.n() < 2 {
        return Err(invalid("expected a tree with at least two vertices"));
    }
    if root >= t.n() || t.degree(root) != 1 {
        return Err(invalid("the root must be a pendant vertex"));
    }
    Ok(())
}

/// A 2-coloring of the shrub rooted at the pendant `root` whose monochromatic
/// components are locally irregular, except possibly the single root edge.
/// The root edge is red.
pub fn two_aliec_shrub(t: &Multigraph, root: usize) -> Result<EdgeColoring> {
    check_shrub(t, root)?;
    let r = root_at(t, root);
    let p = Program::new(t, &r);
    let u = r.children[root][0];
    let mut colors = vec![Color::Red; t.bundle_count()];
    if p.get(u, Color::Red, 1) {
        p.fill(t, &mut colors, u, Color::Red, 1);
        return Ok(EdgeColoring::new(colors));
    }
    exceptional(t, &r, &p, &mut colors)?;
    Ok(EdgeColoring::new(colors))
}

/// The aliec in which the root edge is its own red component: every other
/// edge at `u` is blue.
fn exceptional(t: &Multigraph, r: &Rooted, p: &Program, colors: &mut [Color]) -> Result<()> {
    let root = r.order[0];
    let u = r.children[root][0];
    let ch = &r.children[u];
    let k = ch.len();
    if !ch.iter().all(|&w| p.get(w, Color::Blue, k)) {
        return Err(Error::Construction("shrub without a 2-aliec".into()));
    }
    colors[t.find(root, u).unwrap()] = Color::Red;
    let mut stack = Vec::new();
    let pick = vec![Color::Blue; k];
    for (&w, &x) in ch.iter().zip(&pick) {
        colors[t.find(u, w).unwrap()] = x;
        stack.push((w, x, k));
    }
    while let Some((v, c, d)) = stack.pop() {
        let pick = p.choose(v, c, d).expect("table promised a coloring");
        p.apply(t, colors, v, c, &pick, &mut stack);
    }
    Ok(())
}

/// A 2-liec of a tree, if one exists.
pub fn tree_2liec(t: &Multigraph) -> Result<Option<EdgeColoring>> {
    if !is_tree(t) {
        return Err(invalid("expected a tree"));
    }
    if t.n() < 2 {
        return Ok(Some(EdgeColoring::new(vec![])));
    }
    let root = (0..t.n()).find(|&v| t.degree(v) == 1).unwrap();
    let r = root_at(t, root);
    let p = Program::new(t, &r);
    let u = r.children[root][0];
    if !p.get(u, Color::Red, 1) {
        return Ok(None);
    }
    let mut colors = vec![Color::Red; t.bundle_count()];
    p.fill(t, &mut colors, u, Color::Red, 1);
    Ok(Some(EdgeColoring::new(colors)))
}

/// At most one doubling; none whenever the tree has a 2-liec.
///
/// Otherwise take the aliec whose root edge `ux` is alone in red and recolor
/// `ux` blue. With `deg(u) = 2` or `4`, double `ux`. With `deg(u) = 3` and
/// children `v1, v2`, double `ux` unless some child has blue degree 4, in
/// which case double the edge to that child instead. (The case headed
/// "blue degree of u is 4" in the source argument is the tree-degree case.)
pub fn color_tree(t: &Multigraph) -> Result<DoublingPlan> {
    if t.n() < 3 {
        return Err(invalid("tree coloring needs at least three vertices"));
    }
    if let Some(c) = tree_2liec(t)? {
        return Ok(DoublingPlan::new([], c));
    }
    let root = (0..t.n()).find(|&v| t.degree(v) == 1).unwrap();
    let r = root_at(t, root);
    let p = Program::new(t, &r);
    let mut colors = vec![Color::Red; t.bundle_count()];
    exceptional(t, &r, &p, &mut colors)?;
    let u = r.children[root][0];
    let ux = t.find(root, u).unwrap();
    colors[ux] = Color::Blue;
    let coloring = EdgeColoring::new(colors);
    let degrees = crate::graph::color_degrees(t, &coloring)?;
    let mut target = ux;
    if t.degree(u) == 3 {
        if let Some(&v) = r.children[u].iter().find(|&&v| degrees.blue(v) == 4) {
            target = t.find(u, v).unwrap();
        }
    }
    let plan = DoublingPlan::new([target], coloring);
    if !plan.is_valid(t) {
        return Err(Error::Construction(format!(
            "tree repair failed at root neighbor of degree {}",
            t.degree(u)
        )));
    }
    debug_assert_eq!(r.parent[u], root);
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, random_tree};
    use crate::graph::verify_liec;
    use rand::SeedableRng;

    fn star_with_root() -> Multigraph {
        // root 0 - 1, 1 is a leaf of the star centered at 2 with leaves 1,3,4,5
        Multigraph::simple(6, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn shrub_examples() {
        let p2 = path(2).unwrap();
        assert_eq!(two_aliec_shrub(&p2, 0).unwrap().get(0), Color::Red);
        let p3 = path(3).unwrap();
        let c = two_aliec_shrub(&p3, 0).unwrap();
        assert!(verify_liec(&p3, &c).unwrap().ok);
        let s = star_with_root();
        let c = two_aliec_shrub(&s, 0).unwrap();
        assert!(verify_liec(&s, &c).unwrap().ok);
        assert!(two_aliec_shrub(&s, 2).is_err());
    }

    #[test]
    fn paths_match_the_closed_form() {
        for n in 3..20 {
            let t = path(n).unwrap();
            let p = color_tree(&t).unwrap();
            assert!(p.is_valid(&t));
            assert_eq!(p.count(), usize::from(n % 2 == 0), "P{n}");
        }
    }

    #[test]
    fn random_trees_need_at_most_one() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let n = 3 + (rand::Rng::gen_range(&mut rng, 0..40));
            let t = random_tree(n, &mut rng).unwrap();
            let p = color_tree(&t).unwrap();
            assert!(p.is_valid(&t));
            assert!(p.count() <= 1);
        }
    }
}
