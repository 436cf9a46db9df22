//! Reference implementations for cross-checks: brute force over every
//! coloring with no pruning, and small graphs up to isomorphism. Nothing here
//! shares code with the solver.

use std::collections::BTreeSet;

use crate::graph::{apply_doubling, Multigraph};

/// True iff every color class of `classes` is locally irregular.
pub fn naive_is_liec(g: &Multigraph, classes: &[usize], k: usize) -> bool {
    let mut deg = vec![vec![0u32; k]; g.n()];
    for (b, &c) in g.bundles().iter().zip(classes) {
        deg[b.u][c] += b.mult as u32;
        deg[b.v][c] += b.mult as u32;
    }
    g.bundles()
        .iter()
        .zip(classes)
        .all(|(b, &c)| deg[b.u][c] != deg[b.v][c])
}

/// The first locally irregular coloring with `k` colors in counting order.
pub fn naive_coloring(g: &Multigraph, k: usize) -> Option<Vec<usize>> {
    let m = g.bundle_count();
    let mut c = vec![0usize; m];
    loop {
        if naive_is_liec(g, &c, k) {
            return Some(c);
        }
        let mut i = 0;
        loop {
            if i == m {
                return None;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Smallest number of colors up to `max_k`, `None` if there is none.
pub fn naive_lir(g: &Multigraph, max_k: usize) -> Option<usize> {
    if g.bundle_count() == 0 {
        return Some(0);
    }
    (1..=max_k).find(|&k| naive_coloring(g, k).is_some())
}

fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, size, &mut Vec::new(), &mut out);
    out
}

/// Smallest number of doubled edges admitting a 2-liec, up to `max`.
pub fn naive_d_lir(g: &Multigraph, max: usize) -> Option<usize> {
    (0..=max.min(g.bundle_count())).find(|&s| {
        subsets(g.bundle_count(), s).iter().any(|d| {
            let m = apply_doubling(g, d).unwrap();
            naive_coloring(&m, 2).is_some()
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn connected_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut seen = 1u32;
    let mut changed = true;
    while changed {
        changed = false;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 && (seen >> u & 1) != (seen >> v & 1) {
                seen |= 1 << u | 1 << v;
                changed = true;
            }
        }
    }
    seen == (1 << n) - 1
}

/// All connected simple graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    // bit i of a mask maps to bit maps[p][i] under permutation p
    let maps: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if !connected_mask(n, &pairs, mask) {
            continue;
        }
        let canon = maps
            .iter()
            .map(|map| {
                map.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            out.push(Multigraph::simple(n, edges).unwrap());
        }
    }
    out
}

/// Connected graphs on 1..=6 vertices up to isomorphism.
pub fn small_connected_graphs() -> Vec<Multigraph> {
    (1..=6).flat_map(connected_graphs).collect()
}
