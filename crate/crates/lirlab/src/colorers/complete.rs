//! Complete graphs: stored colorings for small orders, then one vertex at a time.
//!
//! K5, K7 and K10 add a vertex joined in blue to K4, K6 and K9. From K11 on,
//! the new vertex `v_m` (1-based) is joined in red for even `m` and in blue for
//! odd `m`; the single doubled edge stays the red edge `1–2` of K11.

use crate::error::{invalid, Result};
use crate::families::complete;
use crate::fixtures;
use crate::graph::{Color, DoublingPlan, Multigraph, PlanBuilder};

/// Colors of a complete graph as a dense matrix plus doubled pairs.
#[derive(Debug, Clone)]
pub(crate) struct Table {
    pub color: Vec<Vec<Color>>,
    pub doubled: Vec<(usize, usize)>,
}

impl Table {
    fn from_fixture(name: &str) -> Result<Table> {
        let f = fixtures::load(name)?;
        let n = f.base.n();
        let mut color = vec![vec![Color::Red; n]; n];
        for (i, b) in f.base.bundles().iter().enumerate() {
            let c = f.plan.coloring.get(i);
            color[b.u][b.v] = c;
            color[b.v][b.u] = c;
        }
        let doubled = f.plan.doubled.iter().map(|&i| (f.base.bundle(i).u, f.base.bundle(i).v)).collect();
        Ok(Table { color, doubled })
    }

    fn push(&mut self, c: Color) {
        for row in &mut self.color {
            row.push(c);
        }
        let n = self.color.len();
        self.color.push(vec![c; n + 1]);
    }

    fn plan(&self) -> Result<(Multigraph, DoublingPlan)> {
        let n = self.color.len();
        let g = complete(n)?;
        let mut pb = PlanBuilder::new(&g);
        for u in 0..n {
            for v in u + 1..n {
                pb.color(u, v, self.color[u][v]);
            }
        }
        for &(u, v) in &self.doubled {
            pb.double(u, v);
        }
        let plan = pb.build()?;
        Ok((g, plan))
    }
}

pub(crate) fn table(n: usize) -> Result<Table> {
    if n < 4 {
        return Err(invalid("complete graph coloring needs n >= 4"));
    }
    let (name, blue_extra) = match n {
        4 | 5 => ("k4", n - 4),
        6 | 7 => ("k6", n - 6),
        8 => ("k8", 0),
        9 | 10 => ("k9", n - 9),
        _ => ("k11", 0),
    };
    let mut t = Table::from_fixture(name)?;
    for _ in 0..blue_extra {
        t.push(Color::Blue);
    }
    for m in 12..=n {
        t.push(if m % 2 == 0 { Color::Red } else { Color::Blue });
    }
    Ok(t)
}

/// K_n with two doublings for `6 <= n <= 10` and one otherwise.
pub fn color_complete(n: usize) -> Result<(Multigraph, DoublingPlan)> {
    table(n)?.plan()
}

pub fn complete_doublings(n: usize) -> usize {
    if (6..=10).contains(&n) {
        2
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_4_to_30() {
        for n in 4..=30 {
            let (g, p) = color_complete(n).unwrap();
            assert!(p.is_valid(&g), "K{n}");
            assert_eq!(p.count(), complete_doublings(n), "K{n}");
        }
        assert!(color_complete(3).is_err());
    }

    #[test]
    fn k4_labels() {
        let (g, p) = color_complete(4).unwrap();
        let mut pairs = p.degrees(&g).unwrap().blue_red_pairs();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 4), (1, 2), (1, 3), (2, 1)]);
    }
}
