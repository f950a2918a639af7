//! Rational polytopes in vertex representation.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot_int_rat, gcd_all, lcm_all, rat_from_int, Int, Rational};
use crate::hull::Placement;
use crate::scan::{LinearSystem, ScanLimit};

/// Half-space `normal · x <= offset`, stored as a primitive integer vector
/// (the gcd of all normal entries and the offset is one) with the normal
/// pointing out of the polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetInequality {
    pub normal: Vec<Int>,
    pub offset: Int,
}

impl FacetInequality {
    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        dot_int_rat(&self.normal, x)
    }

    /// The normal divided by its content together with the matching offset,
    /// so that the normal is a primitive lattice vector.
    pub fn primitive_normal(&self) -> (Vec<Int>, Rational) {
        let g = gcd_all(self.normal.iter());
        let normal = self.normal.iter().map(|x| x / &g).collect();
        (normal, Rational::new(self.offset.clone(), g))
    }
}

/// Affine hull equation `normal · x = offset`, primitive integer form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineEquation {
    pub normal: Vec<Int>,
    pub offset: Int,
}

/// Convex hull of finitely many rational points.
#[derive(Clone, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<FacetInequality>,
    equations: Vec<AffineEquation>,
    name: Option<String>,
}

impl Polytope {
    /// Builds the hull of `points`, keeping only extreme points (in input
    /// order) as vertices.
    pub fn from_vertices(points: Vec<Vec<Rational>>) -> Result<Polytope> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyInput);
        };
        let ambient_dim = first.len();
        if ambient_dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(bad) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: bad.len(),
            });
        }
        let mut unique: Vec<Vec<Rational>> = Vec::with_capacity(points.len());
        for p in points {
            if !unique.contains(&p) {
                unique.push(p);
            }
        }
        let order: Vec<usize> = (0..unique.len()).collect();
        let placement = Placement::place(&unique, &order).expect("nonempty input");
        let facets: Vec<FacetInequality> = placement
            .facets(&unique)
            .into_iter()
            .map(|(f, _)| FacetInequality {
                normal: f.normal,
                offset: f.offset,
            })
            .collect();
        let equations: Vec<AffineEquation> = placement
            .affine_equations()
            .into_iter()
            .map(|e| AffineEquation {
                normal: e.normal,
                offset: e.offset,
            })
            .collect();
        let dim = placement.dim;
        let vertices = unique
            .into_iter()
            .filter(|v| is_extreme(v, dim, &facets))
            .collect();
        Ok(Polytope {
            ambient_dim,
            dim,
            vertices,
            facets,
            equations,
            name: None,
        })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_fractions(points: &[&[(i64, i64)]]) -> Result<Polytope> {
        Self::from_vertices(
            points
                .iter()
                .map(|p| p.iter().map(|&(n, d)| crate::exact::rat(n, d)).collect())
                .collect(),
        )
    }

    /// Convenience constructor from integer points.
    pub fn from_integer_points(points: &[&[i64]]) -> Result<Polytope> {
        Self::from_vertices(
            points
                .iter()
                .map(|p| p.iter().map(|&x| crate::exact::rat(x, 1)).collect())
                .collect(),
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetInequality] {
        &self.facets
    }

    pub fn equations(&self) -> &[AffineEquation] {
        &self.equations
    }

    /// Indices of the vertices lying on facet `i`.
    pub fn facet_vertices(&self, i: usize) -> Vec<usize> {
        let f = &self.facets[i];
        let offset = rat_from_int(&f.offset);
        (0..self.vertices.len())
            .filter(|&v| f.evaluate(&self.vertices[v]) == offset)
            .collect()
    }

    /// Least common multiple of all vertex coordinate denominators.
    pub fn denominator(&self) -> u64 {
        lcm_all(self.vertices.iter().flatten().map(|x| x.denom()))
            .to_u64()
            .expect("denominator fits in u64")
    }

    pub fn is_lattice(&self) -> bool {
        self.denominator() == 1
    }

    /// Whether every vertex set is equal as a set.
    pub fn same_vertex_set(&self, other: &Polytope) -> bool {
        self.vertices.len() == other.vertices.len()
            && self.vertices.iter().all(|v| other.vertices.contains(v))
    }

    /// `t * P` for a positive rational `t`.
    pub fn dilate(&self, t: &Rational) -> Polytope {
        assert!(t.is_positive(), "dilation factor must be positive");
        let pts = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * t).collect())
            .collect();
        Polytope::from_vertices(pts).expect("dilate of a valid polytope")
    }

    pub fn contains(&self, x: &[Rational], strict: bool) -> bool {
        assert_eq!(x.len(), self.ambient_dim, "point dimension mismatch");
        if strict && !self.is_full_dimensional() {
            return false;
        }
        if self
            .equations
            .iter()
            .any(|e| dot_int_rat(&e.normal, x) != rat_from_int(&e.offset))
        {
            return false;
        }
        self.facets.iter().all(|f| {
            let lhs = f.evaluate(x);
            let rhs = rat_from_int(&f.offset);
            if strict {
                lhs < rhs
            } else {
                lhs <= rhs
            }
        })
    }

    /// Integer constraint system whose solutions are the lattice points of
    /// `tP` (or of its interior).
    pub fn scan_system(&self, t: u64, interior: bool) -> LinearSystem {
        let t_int = Int::from(t);
        let t_rat = Rational::from_integer(t_int.clone());
        let lower = (0..self.ambient_dim)
            .map(|k| {
                let m = self.vertices.iter().map(|v| &v[k]).min().expect("vertices");
                (m * &t_rat).ceil().to_integer()
            })
            .collect();
        let upper = (0..self.ambient_dim)
            .map(|k| {
                let m = self.vertices.iter().map(|v| &v[k]).max().expect("vertices");
                (m * &t_rat).floor().to_integer()
            })
            .collect();
        let mut sys = LinearSystem::new(lower, upper);
        for f in &self.facets {
            let mut b = &f.offset * &t_int;
            if interior {
                b -= 1;
            }
            sys.inequalities.push((f.normal.clone(), b));
        }
        for e in &self.equations {
            sys.equalities.push((e.normal.clone(), &e.offset * &t_int));
        }
        sys
    }

    /// Exact `|tP ∩ Z^d|`, or `|tP° ∩ Z^d|` when `interior` is set.
    pub fn lattice_point_count(&self, t: u64, interior: bool) -> u64 {
        self.lattice_point_count_limited(t, interior, ScanLimit::UNLIMITED)
            .expect("unlimited scan")
    }

    pub fn lattice_point_count_limited(
        &self,
        t: u64,
        interior: bool,
        limit: ScanLimit,
    ) -> Result<u64> {
        if interior && !self.is_full_dimensional() {
            return Ok(0);
        }
        let sys = self.scan_system(t, interior);
        limit.check(sys.box_volume())?;
        Ok(sys.count())
    }

    /// Smallest `ell` such that `ell * P` has an interior lattice point,
    /// together with the lexicographically smallest such point.
    pub fn smallest_interior_dilate(&self) -> Result<(u64, Vec<Int>)> {
        self.smallest_interior_dilate_limited(ScanLimit::UNLIMITED)
    }

    pub fn smallest_interior_dilate_limited(&self, limit: ScanLimit) -> Result<(u64, Vec<Int>)> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional {
                dim: self.dim,
                ambient: self.ambient_dim,
            });
        }
        let bound = self.denominator() * (self.ambient_dim as u64 + 1);
        for ell in 1..=bound {
            let sys = self.scan_system(ell, true);
            limit.check(sys.box_volume())?;
            if let Some(a) = sys.first_point() {
                return Ok((ell, a));
            }
        }
        unreachable!("a dilate at most q(d+1) always has an interior lattice point")
    }

    fn origin(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.ambient_dim]
    }

    /// `{y : y · x <= 1 for all x in P}`.
    pub fn dual(&self) -> Result<Polytope> {
        if !self.contains(&self.origin(), true) {
            return Err(Error::OriginNotInterior);
        }
        let verts = self
            .facets
            .iter()
            .map(|f| {
                let b = rat_from_int(&f.offset);
                f.normal.iter().map(|a| rat_from_int(a) / &b).collect()
            })
            .collect();
        Polytope::from_vertices(verts)
    }

    /// Index `L` if this is an L-reflexive polytope: a lattice polytope with
    /// the origin in its interior, primitive vertices, and every facet at the
    /// same integral distance `L` from the origin.
    pub fn reflexive_index(&self) -> Option<u64> {
        if !self.is_lattice() || !self.contains(&self.origin(), true) {
            return None;
        }
        let primitive = self.vertices.iter().all(|v| {
            let coords: Vec<Int> = v.iter().map(|x| x.to_integer()).collect();
            gcd_all(coords.iter()).is_one()
        });
        if !primitive {
            return None;
        }
        let mut index: Option<Rational> = None;
        for f in &self.facets {
            let (_, dist) = f.primitive_normal();
            match &index {
                None => index = Some(dist),
                Some(l) if *l == dist => {}
                Some(_) => return None,
            }
        }
        index.filter(|l| l.is_integer()).and_then(|l| l.to_integer().to_u64())
    }
}

fn is_extreme(v: &[Rational], dim: usize, facets: &[FacetInequality]) -> bool {
    if dim == 0 {
        return true;
    }
    let tight: Vec<Vec<Rational>> = facets
        .iter()
        .filter(|f| f.evaluate(v) == rat_from_int(&f.offset))
        .map(|f| f.normal.iter().map(rat_from_int).collect())
        .collect();
    let ncols = v.len();
    crate::exact::rank_rational(&tight, ncols) == dim
}

/// The L-reflexive hexagon `conv{±(0,1), ±(L,2), ±(L,1)}` for odd `L`, or its
/// dual `conv{±(1/L,0), ±(2/L,-1), ±(1/L,-1)}`.
pub fn hexagon_family(index: u64, dual: bool) -> Result<Polytope> {
    if index == 0 {
        return Err(Error::InvalidIndex(index));
    }
    if index.is_even() {
        return Err(Error::EvenIndex(index));
    }
    let l = index as i64;
    let half: [(i64, i64, i64, i64); 3] = if dual {
        [(1, l, 0, 1), (2, l, -1, 1), (1, l, -1, 1)]
    } else {
        [(0, 1, 1, 1), (l, 1, 2, 1), (l, 1, 1, 1)]
    };
    let mut verts = Vec::new();
    for sign in [1, -1] {
        for &(xn, xd, yn, yd) in &half {
            verts.push(vec![
                crate::exact::rat(sign * xn, xd),
                crate::exact::rat(sign * yn, yd),
            ]);
        }
    }
    let name = if dual {
        format!("P*_{index}")
    } else {
        format!("P_{index}")
    };
    Ok(Polytope::from_vertices(verts)?.with_name(name))
}
