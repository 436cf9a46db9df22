//! Paths and cycles, cut into monochromatic pieces.
//!
//! A piece of length 2 is locally irregular on its own. A piece of length 3
//! with one pendant edge doubled has degrees 2,3,2,1; length 4 with its first
//! two edges doubled has 2,4,3,2,1; length 5 with its 2nd and 3rd edges doubled
//! has 1,3,4,3,2,1. Consecutive pieces alternate colors.

use crate::error::{invalid, Result};
use crate::families::{cycle, path};
use crate::graph::{Color, DoublingPlan, EdgeColoring, Multigraph};

/// Pieces as (length, doubled offsets within the piece).
fn lay_out(g: &Multigraph, edges: &[(usize, usize)], pieces: &[(usize, &[usize])], first: Color) -> DoublingPlan {
    let mut colors = vec![Color::Red; g.bundle_count()];
    let mut doubled = Vec::new();
    let mut pos = 0;
    let mut c = first;
    for &(len, dbl) in pieces {
        for i in 0..len {
            let (u, v) = edges[pos + i];
            let id = g.find(u, v).expect("edge of the walk");
            colors[id] = c;
            if dbl.contains(&i) {
                doubled.push(id);
            }
        }
        pos += len;
        c = c.other();
    }
    debug_assert_eq!(pos, edges.len());
    DoublingPlan::new(doubled, EdgeColoring::new(colors))
}

/// Path `0..n`; no doubling for odd `n`, one for even `n`.
pub fn color_path(n: usize) -> Result<(Multigraph, DoublingPlan)> {
    if n < 3 {
        return Err(invalid("path coloring needs n >= 3"));
    }
    let g = path(n)?;
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    let mut pieces: Vec<(usize, &[usize])> = Vec::new();
    if n.is_multiple_of(2) {
        pieces.push((3, &[0]));
    }
    let laid: usize = pieces.iter().map(|p| p.0).sum();
    pieces.extend((laid..n - 1).step_by(2).map(|_| (2, &[] as &[usize])));
    let plan = lay_out(&g, &edges, &pieces, Color::Red);
    Ok((g, plan))
}

/// Cycle `0..n`; 0, 1, 2 or 2 doublings for `n` congruent to 0, 1, 2, 3 mod 4.
pub fn color_cycle(n: usize) -> Result<(Multigraph, DoublingPlan)> {
    if n < 4 {
        return Err(invalid("cycle coloring needs n >= 4"));
    }
    let g = cycle(n)?;
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let head: Option<(usize, &[usize])> = match n % 4 {
        0 => None,
        1 => Some((3, &[0])),
        2 => Some((4, &[0, 1])),
        _ => Some((5, &[1, 2])),
    };
    let mut pieces: Vec<(usize, &[usize])> = head.into_iter().collect();
    let laid: usize = pieces.iter().map(|p| p.0).sum();
    pieces.extend((laid..n).step_by(2).map(|_| (2, &[] as &[usize])));
    let plan = lay_out(&g, &edges, &pieces, Color::Red);
    Ok((g, plan))
}

/// Doublings the path and cycle counts prescribe.
pub fn path_doublings(n: usize) -> usize {
    usize::from(n.is_multiple_of(2))
}

pub fn cycle_doublings(n: usize) -> usize {
    [0, 1, 2, 2][n % 4]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_paths() {
        for n in 3..40 {
            let (g, p) = color_path(n).unwrap();
            assert!(p.is_valid(&g), "P{n}");
            assert_eq!(p.count(), path_doublings(n));
        }
        assert!(color_path(2).is_err());
    }

    #[test]
    fn small_cycles() {
        for n in 4..40 {
            let (g, p) = color_cycle(n).unwrap();
            assert!(p.is_valid(&g), "C{n}");
            assert_eq!(p.count(), cycle_doublings(n));
        }
        assert!(color_cycle(3).is_err());
    }
}
