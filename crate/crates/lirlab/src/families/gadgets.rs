//! Lower-bound gadgets: chains of triangles from the uncolorable family and
//! copies of the eight-edge block glued at one vertex.

use crate::error::{invalid, Result};
use crate::graph::{Color, DoublingPlan, Multigraph, PlanBuilder};

use super::taustar::{TauStarScript, TauStep};

struct ScriptWriter {
    steps: Vec<TauStep>,
    next: usize,
}

impl ScriptWriter {
    /// Path of length 3 from `at` closing a new triangle; returns its two free vertices.
    fn triangle(&mut self, at: usize) -> (usize, usize) {
        self.steps.push(TauStep {
            at,
            len: 3,
            cycle: Some(3),
        });
        let q = self.next + 3;
        self.next += 5;
        (q, q + 1)
    }

    /// Triangle whose two free vertices carry pendant paths of length 2.
    fn pendant_triangle(&mut self, at: usize) {
        let (q, s) = self.triangle(at);
        for v in [q, s] {
            self.steps.push(TauStep {
                at: v,
                len: 2,
                cycle: None,
            });
            self.next += 2;
        }
    }
}

/// Script of the triangle chain with `m >= 2` pendant triangles.
///
/// For `m = 2` the base triangle `0,1,2` is joined by a path of length 3 to a
/// second triangle and every other triangle vertex gets a pendant path of
/// length 2. For `m >= 3` there are `m - 2` hub triangles in a row (the base
/// triangle first), consecutive hubs and each hub-to-pendant pair joined by
/// paths of length 3; every vertex of every triangle has degree 3.
pub fn triangle_chain_script(m: usize) -> Result<TauStarScript> {
    if m < 2 {
        return Err(invalid("triangle chain needs m >= 2"));
    }
    let mut w = ScriptWriter {
        steps: Vec::new(),
        next: 3,
    };
    if m == 2 {
        let (q, s) = w.triangle(0);
        for v in [1, 2, q, s] {
            w.steps.push(TauStep {
                at: v,
                len: 2,
                cycle: None,
            });
        }
    } else if m == 3 {
        for v in 0..3 {
            w.pendant_triangle(v);
        }
    } else {
        w.pendant_triangle(1);
        w.pendant_triangle(2);
        let (mut q, mut s) = w.triangle(0);
        for _ in 0..m - 4 {
            w.pendant_triangle(s);
            (q, s) = w.triangle(q);
        }
        w.pendant_triangle(q);
        w.pendant_triangle(s);
    }
    Ok(TauStarScript {
        base: 3,
        steps: w.steps,
    })
}

pub fn triangle_chain(m: usize) -> Result<Multigraph> {
    Ok(triangle_chain_script(m)?.build()?.graph)
}

/// `m >= 2` copies of the block `x0,y0,z0,y1,y2,z1,z2` (triangle `x0 y0 z0`,
/// paths `y0 y1 y2` and `z0 z1 z2`) all joined to the shared vertex 0 by the
/// edge `0 x0`. Copy `j` uses vertices `1 + 7j .. 8 + 7j` in the order above.
///
/// The returned plan doubles every edge at vertex 0. In each copy the doubled
/// edge, the triangle and the `y` path share one color and the `z` path takes
/// the other; all copies use red as that color except for `m = 2`, where the
/// second copy is swapped so the shared vertex does not tie with an `x0`.
pub fn eighth_gadget(m: usize) -> Result<(Multigraph, DoublingPlan)> {
    if m < 2 {
        return Err(invalid("eighth gadget needs m >= 2"));
    }
    let mut edges = Vec::with_capacity(8 * m);
    for j in 0..m {
        let b = 1 + 7 * j;
        let (x0, y0, z0, y1, y2, z1, z2) = (b, b + 1, b + 2, b + 3, b + 4, b + 5, b + 6);
        edges.extend([
            (0, x0),
            (x0, y0),
            (x0, z0),
            (y0, z0),
            (y0, y1),
            (y1, y2),
            (z0, z1),
            (z1, z2),
        ]);
    }
    let g = Multigraph::simple(1 + 7 * m, edges)?;
    let mut pb = PlanBuilder::new(&g);
    for j in 0..m {
        let b = 1 + 7 * j;
        let main = if m == 2 && j == 1 { Color::Blue } else { Color::Red };
        let (x0, y0, z0, y1, y2, z1, z2) = (b, b + 1, b + 2, b + 3, b + 4, b + 5, b + 6);
        pb.color(0, x0, main).double(0, x0);
        for (u, v) in [(x0, y0), (x0, z0), (y0, z0), (y0, y1), (y1, y2)] {
            pb.color(u, v, main);
        }
        pb.color(z0, z1, main.other()).color(z1, z2, main.other());
    }
    let plan = pb.build()?;
    Ok((g, plan))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_sizes() {
        let g2 = triangle_chain(2).unwrap();
        assert_eq!((g2.n(), g2.bundle_count()), (16, 17));
        let g3 = triangle_chain(3).unwrap();
        let g4 = triangle_chain(4).unwrap();
        let g5 = triangle_chain(5).unwrap();
        assert_eq!(g4.n() - g3.n(), g5.n() - g4.n());
    }

    #[test]
    fn chain_triangle_vertices_have_degree_three() {
        for m in 2..7 {
            let c = triangle_chain_script(m).unwrap().build().unwrap();
            assert_eq!(c.cycles.len(), m + m.saturating_sub(2));
            assert!(c.cycles.iter().flatten().all(|&v| c.graph.degree(v) == 3));
        }
    }

    #[test]
    fn eighth_gadget_counts_and_plan() {
        for m in 2..6 {
            let (g, plan) = eighth_gadget(m).unwrap();
            assert_eq!(g.bundle_count(), 8 * m);
            assert_eq!(plan.count(), m);
            assert!(plan.is_valid(&g), "m = {m}");
            assert!(plan.doubled.iter().all(|&e| g.bundle(e).u == 0));
        }
        assert!(eighth_gadget(1).is_err());
    }
}
