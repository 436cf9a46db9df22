//! One representative per orbit of bundle subsets under a known symmetry group.

use std::collections::BTreeSet;

use crate::graph::Multigraph;

/// Symmetry group used to reduce doubling subsets. Any subgroup of the
/// automorphism group gives a sound reduction; larger groups give fewer orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// No reduction.
    Trivial,
    /// Rotations and reflections of the vertex order `0..n` (cycles and their powers).
    Dihedral,
    /// All vertex permutations (complete graphs).
    Full,
    /// Permutations inside twin classes: vertices with the same neighbors
    /// apart from each other. Applies to every simple graph.
    Twins,
}

/// Picks the largest group this module can certify for `g`.
pub fn detect(g: &Multigraph) -> Symmetry {
    let n = g.n();
    if n >= 2 && g.bundle_count() == n * (n - 1) / 2 {
        return Symmetry::Full;
    }
    if n >= 3 && g.bundle_count() > 0 && is_circulant_power(g) {
        return Symmetry::Dihedral;
    }
    if g.is_simple() && twin_classes(g).iter().enumerate().any(|(v, &c)| c != v) {
        return Symmetry::Twins;
    }
    Symmetry::Trivial
}

/// Class id per vertex; two vertices share a class iff their neighborhoods
/// agree apart from each other. Swapping them is an automorphism.
pub fn twin_classes(g: &Multigraph) -> Vec<usize> {
    let n = g.n();
    let nbrs: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let twins = |u: usize, v: usize| {
        let a = nbrs[u].iter().filter(|&&x| x != v);
        let b = nbrs[v].iter().filter(|&&x| x != u);
        a.eq(b)
    };
    let mut class = vec![usize::MAX; n];
    for u in 0..n {
        if class[u] == usize::MAX {
            class[u] = u;
            for v in u + 1..n {
                if class[v] == usize::MAX && twins(u, v) {
                    class[v] = u;
                }
            }
        }
    }
    class
}

fn is_circulant_power(g: &Multigraph) -> bool {
    let n = g.n();
    let dist = |u: usize, v: usize| {
        let d = u.abs_diff(v);
        d.min(n - d)
    };
    let k = g.bundles().iter().map(|b| dist(b.u, b.v)).max().unwrap_or(0);
    let expected: usize = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| dist(u, v) <= k)
        .count();
    expected == g.bundle_count() && g.bundles().iter().all(|b| dist(b.u, b.v) <= k)
}

/// Canonical representative (sorted bundle ids) of the orbit of `subset`.
pub fn canonical(g: &Multigraph, sym: Symmetry, subset: &[usize]) -> Vec<usize> {
    let mut base: Vec<usize> = subset.to_vec();
    base.sort_unstable();
    match sym {
        Symmetry::Trivial => base,
        Symmetry::Dihedral => {
            let n = g.n();
            let pairs: Vec<(usize, usize)> = base
                .iter()
                .map(|&id| {
                    let b = g.bundle(id);
                    (b.u, b.v)
                })
                .collect();
            let mut best = base;
            for r in 0..n {
                for flip in [false, true] {
                    let map = |x: usize| if flip { (r + n - x) % n } else { (x + r) % n };
                    let mut img: Vec<usize> = pairs
                        .iter()
                        .map(|&(u, v)| g.find(map(u), map(v)).expect("automorphism"))
                        .collect();
                    img.sort_unstable();
                    if img < best {
                        best = img;
                    }
                }
            }
            best
        }
        Symmetry::Full => {
            let pairs: Vec<(usize, usize)> = base
                .iter()
                .map(|&id| {
                    let b = g.bundle(id);
                    (b.u, b.v)
                })
                .collect();
            canonical_edge_set(&pairs)
                .into_iter()
                .map(|(u, v)| g.find(u, v).expect("complete graph"))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        }
        Symmetry::Twins => canonical_twins(g, &twin_classes(g), &base),
    }
}

/// Least image of `subset` when its vertices are moved onto the lowest
/// members of their twin classes, in every order.
fn canonical_twins(g: &Multigraph, class: &[usize], subset: &[usize]) -> Vec<usize> {
    let pairs: Vec<(usize, usize)> = subset.iter().map(|&id| (g.bundle(id).u, g.bundle(id).v)).collect();
    let touched: BTreeSet<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for c in touched.iter().map(|&v| class[v]).collect::<BTreeSet<_>>() {
        let from: Vec<usize> = touched.iter().copied().filter(|&v| class[v] == c).collect();
        let to: Vec<usize> = (0..g.n()).filter(|&v| class[v] == c).take(from.len()).collect();
        groups.push((from, to));
    }
    let mut label: Vec<usize> = (0..g.n()).collect();
    let mut best = subset.to_vec();
    assign_twins(g, &groups, 0, &mut label, &pairs, &mut best);
    best
}

fn assign_twins(
    g: &Multigraph,
    groups: &[(Vec<usize>, Vec<usize>)],
    gi: usize,
    label: &mut Vec<usize>,
    pairs: &[(usize, usize)],
    best: &mut Vec<usize>,
) {
    if gi == groups.len() {
        let mut img: Vec<usize> = pairs
            .iter()
            .map(|&(u, v)| g.find(label[u], label[v]).expect("twin swap is an automorphism"))
            .collect();
        img.sort_unstable();
        if img < *best {
            *best = img;
        }
        return;
    }
    let (from, to) = &groups[gi];
    let mut order = from.clone();
    permute(&mut order, 0, &mut |perm| {
        for (&x, &y) in perm.iter().zip(to) {
            label[x] = y;
        }
        assign_twins(g, groups, gi + 1, label, pairs, best);
    });
}

/// Lexicographically least relabeling of a small edge set onto `0..m`.
/// Only permutations that sort vertices by non-increasing degree are tried.
fn canonical_edge_set(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let verts: Vec<usize> = pairs
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let deg = |x: usize| pairs.iter().filter(|&&(u, v)| u == x || v == x).count();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_deg = verts.clone();
    by_deg.sort_by_key(|&x| std::cmp::Reverse(deg(x)));
    for x in by_deg {
        match classes.last_mut() {
            Some(c) if deg(c[0]) == deg(x) => c.push(x),
            _ => classes.push(vec![x]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut label = vec![usize::MAX; verts.iter().max().map_or(0, |m| m + 1)];
    assign_classes(&classes, 0, 0, &mut label, pairs, &mut best);
    best.unwrap_or_default()
}

fn assign_classes(
    classes: &[Vec<usize>],
    ci: usize,
    next: usize,
    label: &mut Vec<usize>,
    pairs: &[(usize, usize)],
    best: &mut Option<Vec<(usize, usize)>>,
) {
    if ci == classes.len() {
        let mut img: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (label[u], label[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        img.sort_unstable();
        if best.as_ref().is_none_or(|b| img < *b) {
            *best = Some(img);
        }
        return;
    }
    let mut class = classes[ci].clone();
    permute(&mut class, 0, &mut |perm| {
        for (i, &x) in perm.iter().enumerate() {
            label[x] = next + i;
        }
        assign_classes(classes, ci + 1, next + perm.len(), label, pairs, best);
    });
}

fn permute(items: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == items.len() {
        f(items);
        return;
    }
    for j in i..items.len() {
        items.swap(i, j);
        permute(items, i + 1, f);
        items.swap(i, j);
    }
}

/// Orbit representatives of `size`-subsets, sorted.
pub fn representatives(g: &Multigraph, sym: Symmetry, size: usize) -> Vec<Vec<usize>> {
    let m = g.bundle_count();
    if size > m {
        return Vec::new();
    }
    if sym == Symmetry::Trivial {
        return combinations(m, size);
    }
    let class = if sym == Symmetry::Twins { twin_classes(g) } else { Vec::new() };
    let mut level: BTreeSet<Vec<usize>> = BTreeSet::new();
    level.insert(Vec::new());
    for _ in 0..size {
        let mut next = BTreeSet::new();
        for rep in &level {
            for e in 0..m {
                if rep.binary_search(&e).is_err() {
                    let mut s = rep.clone();
                    s.push(e);
                    s.sort_unstable();
                    next.insert(if sym == Symmetry::Twins {
                        canonical_twins(g, &class, &s)
                    } else {
                        canonical(g, sym, &s)
                    });
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

pub fn combinations(m: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(start: usize, m: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for e in start..m {
            if m - e < size - cur.len() {
                break;
            }
            cur.push(e);
            rec(e + 1, m, size, cur, out);
            cur.pop();
        }
    }
    rec(0, m, size, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Multigraph {
        Multigraph::simple(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        Multigraph::simple(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn detects_groups() {
        assert_eq!(detect(&complete(5)), Symmetry::Full);
        assert_eq!(detect(&cycle(7)), Symmetry::Dihedral);
        let p = Multigraph::simple(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(detect(&p), Symmetry::Trivial);
        let star = Multigraph::simple(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(detect(&star), Symmetry::Twins);
    }

    #[test]
    fn twin_orbits_of_a_clique_with_pendants() {
        // K5 with two pendants at vertex 0: clique vertices 1..5 are twins,
        // and so are the two pendants
        let mut pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        pairs.extend([(0, 5), (0, 6)]);
        let g = Multigraph::simple(7, pairs).unwrap();
        assert_eq!(twin_classes(&g), vec![0, 1, 1, 1, 1, 5, 5]);
        // single edges: hub-clique, clique-clique, pendant
        assert_eq!(representatives(&g, Symmetry::Twins, 1).len(), 3);
    }

    #[test]
    fn twin_orbits_cover_every_subset() {
        let mut pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        pairs.extend([(0, 4), (0, 5), (1, 6)]);
        let g = Multigraph::simple(7, pairs).unwrap();
        for size in 0..=3 {
            let reps: BTreeSet<Vec<usize>> = representatives(&g, Symmetry::Twins, size).into_iter().collect();
            for s in combinations(g.bundle_count(), size) {
                assert!(reps.contains(&canonical(&g, Symmetry::Twins, &s)));
            }
        }
    }

    #[test]
    fn complete_graph_orbit_counts() {
        // graphs with s edges and no isolated vertices: 1, 2, 5 for s = 1, 2, 3
        let g = complete(8);
        assert_eq!(representatives(&g, Symmetry::Full, 1).len(), 1);
        assert_eq!(representatives(&g, Symmetry::Full, 2).len(), 2);
        assert_eq!(representatives(&g, Symmetry::Full, 3).len(), 5);
    }

    #[test]
    fn cycle_orbit_counts() {
        let g = cycle(8);
        assert_eq!(representatives(&g, Symmetry::Dihedral, 1).len(), 1);
        // edge pairs of C8 up to dihedral symmetry: gaps 0,1,2,3
        assert_eq!(representatives(&g, Symmetry::Dihedral, 2).len(), 4);
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(6, 2).len(), 15);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
