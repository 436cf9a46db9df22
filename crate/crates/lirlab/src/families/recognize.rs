//! Membership in the uncolorable triangle family by peeling, and the tree of
//! triangles of its members.
//!
//! Peeling undoes the recursive construction: a pendant path of even length
//! ending at a degree-3 triangle vertex is removed, and once no pendant paths
//! remain, a triangle with two degree-2 vertices hanging on an odd path from
//! another triangle is removed. The graph is a member iff this ends at a
//! single triangle.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::graph::Multigraph;

struct Peeler {
    adj: Vec<BTreeSet<usize>>,
    alive: usize,
}

impl Peeler {
    fn new(g: &Multigraph) -> Peeler {
        Peeler {
            adj: (0..g.n()).map(|v| g.neighbors(v).collect()).collect(),
            alive: g.n(),
        }
    }

    fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn remove(&mut self, v: usize) {
        let ns: Vec<usize> = self.adj[v].iter().copied().collect();
        for w in ns {
            self.adj[w].remove(&v);
        }
        self.adj[v].clear();
        self.alive -= 1;
    }

    /// Walks from `from` into `start` through degree-2 vertices. Returns the
    /// inner vertices, the stop vertex and the number of edges walked.
    fn walk(&self, from: usize, start: usize) -> (Vec<usize>, usize, usize) {
        let (mut prev, mut cur) = (from, start);
        let mut inner = Vec::new();
        let mut len = 1;
        while self.deg(cur) == 2 {
            let next = *self.adj[cur].iter().find(|&&x| x != prev).expect("degree two");
            if next == from {
                return (inner, cur, len);
            }
            inner.push(cur);
            prev = cur;
            cur = next;
            len += 1;
        }
        (inner, cur, len)
    }

    /// `v` has degree 3 and its two neighbors other than `skip` are adjacent.
    fn on_triangle_besides(&self, v: usize, skip: usize) -> bool {
        if self.deg(v) != 3 {
            return false;
        }
        let rest: Vec<usize> = self.adj[v].iter().copied().filter(|&x| x != skip).collect();
        rest.len() == 2 && self.adj[rest[0]].contains(&rest[1])
    }

    fn is_triangle(&self) -> bool {
        self.alive == 3 && (0..self.adj.len()).filter(|&v| self.deg(v) == 2).count() == 3
    }

    fn step(&mut self) -> Option<bool> {
        if self.is_triangle() {
            return Some(true);
        }
        let n = self.adj.len();
        if let Some(x) = (0..n).find(|&v| self.deg(v) == 1) {
            let first = *self.adj[x].iter().next().unwrap();
            let (inner, end, len) = self.walk(x, first);
            let last = inner.last().copied().unwrap_or(x);
            if self.deg(end) < 3 || len % 2 == 1 || !self.on_triangle_besides(end, last) {
                return Some(false);
            }
            self.remove(x);
            for v in inner {
                self.remove(v);
            }
            return None;
        }
        for c in 0..n {
            if self.deg(c) != 3 {
                continue;
            }
            let ns: Vec<usize> = self.adj[c].iter().copied().collect();
            for i in 0..3 {
                let (a, b, out) = (ns[(i + 1) % 3], ns[(i + 2) % 3], ns[i]);
                if self.deg(a) != 2 || self.deg(b) != 2 || !self.adj[a].contains(&b) {
                    continue;
                }
                let (inner, end, len) = self.walk(c, out);
                let last = inner.last().copied().unwrap_or(c);
                if end == c || len % 2 == 0 || !self.on_triangle_besides(end, last) {
                    return Some(false);
                }
                for v in [a, b, c].into_iter().chain(inner) {
                    self.remove(v);
                }
                return None;
            }
        }
        Some(false)
    }
}

/// Membership in the recursively defined family grown from a triangle.
pub fn in_triangle_family(g: &Multigraph) -> bool {
    if !g.is_simple() || !g.is_connected() || g.n() < 3 {
        return false;
    }
    let mut p = Peeler::new(g);
    loop {
        if let Some(ans) = p.step() {
            return ans;
        }
    }
}

fn is_path_graph(g: &Multigraph) -> bool {
    g.bundle_count() + 1 == g.n() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

fn is_cycle_graph(g: &Multigraph) -> bool {
    g.bundle_count() == g.n() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// True iff the connected simple graph `g` has no locally irregular coloring:
/// odd-length paths, odd cycles and members of the triangle family.
pub fn is_uncolorable(g: &Multigraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_simple() {
        return Err(invalid("expected a simple graph"));
    }
    if g.bundle_count() == 0 {
        return Ok(false);
    }
    if is_path_graph(g) {
        return Ok(g.bundle_count() % 2 == 1);
    }
    if is_cycle_graph(g) {
        return Ok(g.n() % 2 == 1);
    }
    Ok(in_triangle_family(g))
}

/// Triangles of a family member and the odd paths linking them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTree {
    pub triangles: Vec<[usize; 3]>,
    /// (triangle, triangle, path length)
    pub links: Vec<(usize, usize, usize)>,
    degrees: Vec<u32>,
}

impl TriangleTree {
    pub fn tree_degree(&self, t: usize) -> usize {
        self.links.iter().filter(|&&(a, b, _)| a == t || b == t).count()
    }

    /// Leaves of the triangle tree.
    pub fn pendant_triangles(&self) -> Vec<usize> {
        (0..self.triangles.len()).filter(|&t| self.tree_degree(t) == 1).collect()
    }

    /// Pendant triangles without degree-2 vertices. Defined for at least three
    /// triangles, or for two triangles joined by a path of length at least 3
    /// (with a single link edge both triangles would share one block edge).
    pub fn pendant_triangle_bound(&self) -> Result<usize> {
        match self.triangles.len() {
            0 | 1 => return Err(invalid("need at least two triangles")),
            2 if self.links[0].2 < 3 => {
                return Err(invalid("two triangles joined by a single edge"));
            }
            _ => {}
        }
        Ok(self
            .pendant_triangles()
            .into_iter()
            .filter(|&t| self.triangles[t].iter().all(|&v| self.degrees[v] >= 3))
            .count())
    }
}

/// The triangle tree of a member of the triangle family, `None` for non-members.
pub fn triangle_tree(g: &Multigraph) -> Option<TriangleTree> {
    if !in_triangle_family(g) {
        return None;
    }
    let n = g.n();
    let mut triangles = Vec::new();
    for b in g.bundles() {
        for w in g.neighbors(b.v) {
            if w > b.v && g.has_edge(b.u, w) {
                triangles.push([b.u, b.v, w]);
            }
        }
    }
    let mut owner = vec![usize::MAX; n];
    for (t, tri) in triangles.iter().enumerate() {
        for &v in tri {
            owner[v] = t;
        }
    }
    let mut links = Vec::new();
    for (t, tri) in triangles.iter().enumerate() {
        for &v in tri {
            let Some(out) = g.neighbors(v).find(|w| !tri.contains(w)) else {
                continue;
            };
            let (mut prev, mut cur, mut len) = (v, out, 1);
            while owner[cur] == usize::MAX && g.degree(cur) == 2 {
                let next = g.neighbors(cur).find(|&x| x != prev).unwrap();
                prev = cur;
                cur = next;
                len += 1;
            }
            if owner[cur] != usize::MAX && owner[cur] > t {
                links.push((t, owner[cur], len));
            }
        }
    }
    Some(TriangleTree {
        triangles,
        links,
        degrees: (0..n).map(|v| g.degree(v)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bowtie, cycle, path, triangle_chain};

    #[test]
    fn small_members() {
        assert!(is_uncolorable(&path(4).unwrap()).unwrap());
        assert!(!is_uncolorable(&path(5).unwrap()).unwrap());
        assert!(is_uncolorable(&cycle(3).unwrap()).unwrap());
        assert!(is_uncolorable(&cycle(7).unwrap()).unwrap());
        assert!(!is_uncolorable(&cycle(8).unwrap()).unwrap());
        assert!(!is_uncolorable(&bowtie()).unwrap());
    }

    #[test]
    fn triangle_with_even_pendant_path() {
        let g = Multigraph::simple(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        assert!(in_triangle_family(&g));
        let odd = Multigraph::simple(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert!(!in_triangle_family(&odd));
    }

    #[test]
    fn chains_are_members() {
        for m in 2..6 {
            let g = triangle_chain(m).unwrap();
            assert!(in_triangle_family(&g));
            let t = triangle_tree(&g).unwrap();
            assert_eq!(t.pendant_triangle_bound().unwrap(), m);
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Multigraph::simple(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_uncolorable(&g).is_err());
    }
}
