//! Complete multipartite graphs other than complete graphs: a 2-liec with no
//! doubling.
//!
//! Parts are handled largest first. Two parts: the edges at an `s`-subset of
//! the larger part are blue, with `s` chosen so neither class has an edge with
//! equal end degrees. Three parts follow the four size patterns. Every further
//! part `A_k` is joined in blue for even `k` and in red for odd `k`.

use crate::error::{invalid, Error, Result};
use crate::families::{complete_multipartite, part_of};
use crate::graph::{Color, DoublingPlan, Multigraph, PlanBuilder};

/// Part sizes sorted non-increasingly, remembering the original part index.
fn sorted_parts(sizes: &[usize]) -> Vec<(usize, usize)> {
    let mut parts: Vec<(usize, usize)> = sizes.iter().copied().enumerate().map(|(i, s)| (s, i)).collect();
    parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    parts
}

/// Blue-subset size for K_{a,b}, `a >= b`: the edges at `s` vertices of the
/// larger part are blue. Tries `ceil(b/2)` first.
pub fn bipartite_subset(a: usize, b: usize) -> Option<usize> {
    let first = b.div_ceil(2);
    std::iter::once(first)
        .chain(0..=a)
        .find(|&s| s <= a && s != b && a - s != b && !(s == 0 && a == b))
}

/// Vertices of each part in the generated graph.
fn members(sizes: &[usize]) -> Vec<Vec<usize>> {
    let owner = part_of(sizes);
    let mut m = vec![Vec::new(); sizes.len()];
    for (v, &p) in owner.iter().enumerate() {
        m[p].push(v);
    }
    m
}

pub fn color_complete_multipartite(sizes: &[usize]) -> Result<(Multigraph, DoublingPlan)> {
    if sizes.len() < 2 {
        return Err(invalid("need at least two parts"));
    }
    if sizes.contains(&0) {
        return Err(invalid("parts must be non-empty"));
    }
    if sizes.iter().all(|&s| s == 1) {
        return Err(invalid("all parts have size 1; this is a complete graph"));
    }
    let g = complete_multipartite(sizes)?;
    let parts = sorted_parts(sizes);
    let mem = members(sizes);
    // A[i] = vertices of the i-th largest part
    let a: Vec<&Vec<usize>> = parts.iter().map(|&(_, i)| &mem[i]).collect();
    let n: Vec<usize> = parts.iter().map(|&(s, _)| s).collect();
    let mut pb = PlanBuilder::new(&g);
    let join = |pb: &mut PlanBuilder, x: &[usize], y: &[usize], c: Color| {
        for &u in x {
            for &v in y {
                pb.color(u, v, c);
            }
        }
    };
    if n.len() == 2 {
        let s = bipartite_subset(n[0], n[1]).ok_or_else(|| Error::Construction("no bipartite subset".into()))?;
        join(&mut pb, &a[0][..s], a[1], Color::Blue);
        join(&mut pb, &a[0][s..], a[1], Color::Red);
    } else {
        pb.fill(Color::Red);
        let (n1, n2, n3) = (n[0], n[1], n[2]);
        if n1 == n2 && n2 > n3 {
            join(&mut pb, a[0], a[2], Color::Blue);
        } else if n1 > n2 && n2 == n3 {
            join(&mut pb, a[0], a[1], Color::Blue);
        } else if n1 == n2 && n2 == n3 {
            join(&mut pb, a[0], a[1], Color::Blue);
            for (&u, &v) in a[0].iter().zip(a[2].iter()) {
                pb.color(u, v, Color::Blue);
            }
        }
        for k in 4..=n.len() {
            let c = if k % 2 == 0 { Color::Blue } else { Color::Red };
            for prev in &a[..k - 1] {
                join(&mut pb, prev, a[k - 1], c);
            }
        }
    }
    let plan = pb.build()?;
    Ok((g, plan))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_blue_degrees() {
        let (g, p) = color_complete_multipartite(&[3, 3, 3]).unwrap();
        assert!(p.is_valid(&g));
        let d = p.degrees(&g).unwrap();
        let blue: Vec<u32> = [0, 3, 6].iter().map(|&v| d.blue(v)).collect();
        assert_eq!(blue, vec![4, 3, 1]);
    }

    #[test]
    fn irregular_three_parts_all_red() {
        let (g, p) = color_complete_multipartite(&[3, 2, 1]).unwrap();
        assert!(p.coloring.colors().iter().all(|&c| c == Color::Red));
        assert!(p.is_valid(&g));
    }

    #[test]
    fn many_partitions() {
        for sizes in [vec![1, 1, 2], vec![2, 2, 2, 2], vec![1, 2], vec![2, 2], vec![5, 1, 1, 1, 1], vec![3, 3, 1, 2]] {
            let (g, p) = color_complete_multipartite(&sizes).unwrap();
            assert!(p.is_valid(&g), "{sizes:?}");
            assert_eq!(p.count(), 0);
        }
        assert!(color_complete_multipartite(&[1, 1, 1]).is_err());
    }
}
