//! Incremental (beneath-beyond) placement of points.
//!
//! Points are inserted one at a time. A point outside the current affine hull
//! is coned over every existing cell; a point inside the affine hull is coned
//! over every boundary ridge it sees strictly. The resulting cells form the
//! placing triangulation for the given insertion order, and the boundary
//! ridges grouped by hyperplane give the facets of the hull.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::exact::{dot_rat, nullspace, primitive_integer_vector, rref, Int, Rational};

#[derive(Clone, Debug)]
pub(crate) struct Placement {
    /// Maximal cells as sorted point indices, each of size `dim + 1`.
    pub cells: Vec<Vec<usize>>,
    pub dim: usize,
    /// Rational normals spanning the orthogonal complement of the hull's
    /// direction space.
    pub equations: Vec<Vec<Rational>>,
    base: Vec<Rational>,
    directions: Vec<Vec<Rational>>,
}

/// A boundary ridge together with the cell vertex opposite to it.
#[derive(Clone, Debug)]
pub(crate) struct Ridge {
    pub vertices: Vec<usize>,
    pub opposite: usize,
}

/// Outward hyperplane `normal · x <= offset` in primitive integer form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct HullFacet {
    pub normal: Vec<Int>,
    pub offset: Int,
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn identity_rows(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

impl Placement {
    pub fn place(points: &[Vec<Rational>], order: &[usize]) -> Option<Placement> {
        let (&first, rest) = order.split_first()?;
        let ambient = points[first].len();
        let mut pl = Placement {
            cells: vec![vec![first]],
            dim: 0,
            equations: identity_rows(ambient),
            base: points[first].clone(),
            directions: Vec::new(),
        };
        for &p in rest {
            pl.insert(points, p);
        }
        Some(pl)
    }

    fn insert(&mut self, points: &[Vec<Rational>], p: usize) {
        let offset = sub(&points[p], &self.base);
        if self.equations.iter().any(|e| !dot_rat(e, &offset).is_zero()) {
            for cell in &mut self.cells {
                cell.push(p);
                cell.sort_unstable();
            }
            self.directions.push(offset);
            self.dim += 1;
            self.equations = nullspace(&self.directions, self.base.len());
            return;
        }
        if self.dim == 0 {
            // coincides with the existing point
            return;
        }
        let mut added = Vec::new();
        for ridge in self.boundary_ridges() {
            let normal = self.ridge_normal(points, &ridge.vertices);
            let anchor = &points[ridge.vertices[0]];
            let side_inner = dot_rat(&normal, &sub(&points[ridge.opposite], anchor));
            let side_new = dot_rat(&normal, &sub(&points[p], anchor));
            if side_new.is_zero() || side_new.signum() == side_inner.signum() {
                continue;
            }
            let mut cell = ridge.vertices.clone();
            cell.push(p);
            cell.sort_unstable();
            added.push(cell);
        }
        self.cells.extend(added);
    }

    /// Ridges (codimension-one faces of cells) lying in exactly one cell.
    pub fn boundary_ridges(&self) -> Vec<Ridge> {
        if self.dim == 0 {
            return Vec::new();
        }
        let mut seen: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        let mut order = Vec::new();
        for cell in &self.cells {
            for (k, &opp) in cell.iter().enumerate() {
                let mut ridge = cell.clone();
                ridge.remove(k);
                let entry = seen.entry(ridge.clone()).or_insert_with(|| {
                    order.push(ridge);
                    (0, opp)
                });
                entry.0 += 1;
            }
        }
        order
            .into_iter()
            .filter_map(|r| {
                let (count, opposite) = seen[&r];
                (count == 1).then_some(Ridge {
                    vertices: r,
                    opposite,
                })
            })
            .collect()
    }

    /// Linear functional vanishing on the ridge directions and on the hull's
    /// orthogonal complement, unique up to scale.
    fn ridge_normal(&self, points: &[Vec<Rational>], ridge: &[usize]) -> Vec<Rational> {
        let anchor = &points[ridge[0]];
        let mut rows: Vec<Vec<Rational>> = ridge[1..]
            .iter()
            .map(|&v| sub(&points[v], anchor))
            .collect();
        rows.extend(self.equations.iter().cloned());
        let mut ns = nullspace(&rows, anchor.len());
        debug_assert_eq!(ns.len(), 1, "ridge must span a hyperplane of the hull");
        ns.swap_remove(0)
    }

    /// Facets of the hull, in order of first appearance among the boundary
    /// ridges, each with the ridges it contains.
    pub fn facets(&self, points: &[Vec<Rational>]) -> Vec<(HullFacet, Vec<Ridge>)> {
        let mut out: Vec<(HullFacet, Vec<Ridge>)> = Vec::new();
        for ridge in self.boundary_ridges() {
            let mut normal = self.ridge_normal(points, &ridge.vertices);
            let anchor = &points[ridge.vertices[0]];
            let mut offset = dot_rat(&normal, anchor);
            if dot_rat(&normal, &points[ridge.opposite]) > offset {
                normal.iter_mut().for_each(|x| *x = -x.clone());
                offset = -offset;
            }
            let mut all = normal;
            all.push(offset);
            let mut prim = primitive_integer_vector(&all);
            let offset = prim.pop().expect("offset entry");
            let facet = HullFacet {
                normal: prim,
                offset,
            };
            match out.iter_mut().find(|(f, _)| *f == facet) {
                Some((_, ridges)) => ridges.push(ridge),
                None => out.push((facet, vec![ridge])),
            }
        }
        out
    }

    /// Affine hull equations `e · x = c` in canonical primitive integer form.
    pub fn affine_equations(&self) -> Vec<HullFacet> {
        let mut rows: Vec<Vec<Rational>> = self
            .equations
            .iter()
            .map(|e| {
                let mut r = e.clone();
                r.push(dot_rat(e, &self.base));
                r
            })
            .collect();
        let ncols = self.base.len() + 1;
        rref(&mut rows, ncols);
        rows.iter()
            .map(|r| {
                let mut prim = primitive_integer_vector(r);
                // leading entry positive
                if prim.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                    prim.iter_mut().for_each(|x| *x = -x.clone());
                }
                let offset = prim.pop().expect("offset entry");
                HullFacet {
                    normal: prim,
                    offset,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<Rational>> {
        raw.iter()
            .map(|p| p.iter().map(|&x| rat(x, 1)).collect())
            .collect()
    }

    #[test]
    fn square_two_triangles_four_facets() {
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let pl = Placement::place(&p, &[0, 1, 2, 3]).unwrap();
        assert_eq!(pl.dim, 2);
        assert_eq!(pl.cells, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(pl.facets(&p).len(), 4);
    }

    #[test]
    fn collinear_insertion_extends_segment() {
        let p = pts(&[&[0], &[1], &[2]]);
        let pl = Placement::place(&p, &[0, 1, 2]).unwrap();
        assert_eq!(pl.cells, vec![vec![0, 1], vec![1, 2]]);
        let facets = pl.facets(&p);
        assert_eq!(facets.len(), 2);
    }

    #[test]
    fn interior_point_is_ignored() {
        let p = pts(&[&[0, 0], &[4, 0], &[0, 4], &[1, 1]]);
        let pl = Placement::place(&p, &[0, 1, 2, 3]).unwrap();
        assert_eq!(pl.cells.len(), 1);
    }

    #[test]
    fn lower_dimensional_hull_in_space() {
        let p = pts(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]);
        let pl = Placement::place(&p, &[0, 1, 2]).unwrap();
        assert_eq!(pl.dim, 2);
        assert_eq!(pl.equations.len(), 1);
        let eqs = pl.affine_equations();
        assert_eq!(eqs[0].normal, vec![Int::from(0), Int::from(0), Int::from(1)]);
        assert_eq!(eqs[0].offset, Int::from(1));
        assert_eq!(pl.facets(&p).len(), 3);
    }
}
