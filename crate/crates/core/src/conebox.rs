//! Simplicial cones over faces of a triangulation and the lattice points of
//! their parallelepipeds.
//!
//! A cone is given by integer generators in `Z^(d+1)` whose last coordinate is
//! the height. The open parallelepiped of `W = {w_1, …, w_n}` is
//! `{Σ λ_i w_i : 0 < λ_i < 1}` and the half-open one uses `0 <= λ_i < 1`.
//!
//! Enumeration works in the saturated lattice `lin(W) ∩ Z^(d+1)`: with a basis
//! `B` of that lattice, `W = B C` for an integer matrix `C`, and the Smith form
//! `U C V = S` yields one representative `λ = V (e / s)` per coset, where
//! `0 <= e_i < s_i`. Reducing `λ` modulo one gives every point exactly once.
//! [`box_points_scan`] recomputes the same set by brute force.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_from_int, saturation_basis, snf, solve_in_span, Int, IntMatrix, Rational};
use crate::poly::IntPolynomial;
use crate::polytope::Polytope;
use crate::scan::{LinearSystem, ScanLimit};
use crate::triangulation::{Simplex, Triangulation, TriangulationKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoxMode {
    Open,
    HalfOpen,
}

/// Linearly independent integer generators with positive last coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    ambient_dim: usize,
    generators: Vec<Vec<Int>>,
}

impl GeneratorSet {
    pub fn new(ambient_dim: usize, generators: Vec<Vec<Int>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(bad) = generators.iter().find(|g| g.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: bad.len(),
            });
        }
        if generators.iter().any(|g| !g[ambient_dim - 1].is_positive()) {
            return Err(Error::NonPositiveHeight);
        }
        if !generators.is_empty()
            && IntMatrix::from_columns(ambient_dim, &generators).rank() < generators.len()
        {
            return Err(Error::DependentGenerators);
        }
        Ok(GeneratorSet {
            ambient_dim,
            generators,
        })
    }

    pub fn from_i64(generators: &[&[i64]]) -> Result<Self> {
        let ambient = generators.first().map_or(0, |g| g.len());
        Self::new(
            ambient,
            generators
                .iter()
                .map(|g| g.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn empty(ambient_dim: usize) -> Self {
        GeneratorSet {
            ambient_dim,
            generators: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sum of the generator heights.
    pub fn total_height(&self) -> Int {
        self.generators
            .iter()
            .map(|g| g[self.ambient_dim - 1].clone())
            .sum()
    }

    /// Appends the auxiliary ray generator.
    pub fn with_ray(&self, ray: &[Int]) -> Result<GeneratorSet> {
        let mut gens = self.generators.clone();
        gens.push(ray.to_vec());
        GeneratorSet::new(self.ambient_dim, gens)
    }

    /// Coefficients of `x` in terms of the generators, if `x` lies in their
    /// linear span.
    pub fn coefficients(&self, x: &[Int]) -> Option<Vec<Rational>> {
        let cols: Vec<Vec<Rational>> = self
            .generators
            .iter()
            .map(|g| g.iter().map(rat_from_int).collect())
            .collect();
        let target: Vec<Rational> = x.iter().map(rat_from_int).collect();
        if cols.is_empty() {
            return target.iter().all(Zero::is_zero).then(Vec::new);
        }
        solve_in_span(&cols, &target)
    }

    fn combine(&self, lambda: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (g, l) in self.generators.iter().zip(lambda) {
            if l.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(g) {
                *o += rat_from_int(x) * l;
            }
        }
        out
    }

    /// Generators as columns expressed in a basis of the saturated lattice,
    /// together with that basis.
    fn lattice_coordinates(&self) -> (IntMatrix, IntMatrix) {
        let basis = saturation_basis(&self.generators).expect("independent generators");
        let basis_cols: Vec<Vec<Rational>> = basis
            .columns()
            .iter()
            .map(|c| c.iter().map(rat_from_int).collect())
            .collect();
        let n = self.generators.len();
        let mut coords = Vec::with_capacity(n);
        for g in &self.generators {
            let target: Vec<Rational> = g.iter().map(rat_from_int).collect();
            let c = solve_in_span(&basis_cols, &target).expect("generator in its own span");
            coords.push(
                c.into_iter()
                    .map(|x| {
                        assert!(x.is_integer(), "saturated basis must give integer coordinates");
                        x.to_integer()
                    })
                    .collect::<Vec<Int>>(),
            );
        }
        (basis, IntMatrix::from_columns(n, &coords))
    }

    /// Index of the sublattice spanned by the generators inside
    /// `lin(W) ∩ Z^(d+1)`, equal to the number of lattice points in the
    /// half-open parallelepiped.
    pub fn lattice_index(&self) -> Int {
        if self.is_empty() {
            return Int::one();
        }
        let (_, coords) = self.lattice_coordinates();
        snf(&coords).diagonal().iter().product()
    }
}

/// Lattice points of a parallelepiped, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelepipedPoints {
    pub points: Vec<Vec<Int>>,
    pub mode: BoxMode,
}

impl ParallelepipedPoints {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Generating function of the last coordinate.
    pub fn height_polynomial(&self) -> IntPolynomial {
        let mut coeffs: Vec<Int> = Vec::new();
        for p in &self.points {
            let h = p
                .last()
                .and_then(|h| h.to_usize())
                .expect("heights are small and nonnegative");
            if coeffs.len() <= h {
                coeffs.resize(h + 1, Int::zero());
            }
            coeffs[h] += 1;
        }
        IntPolynomial::new(coeffs)
    }
}

fn fractional(x: &Rational) -> Rational {
    x - x.floor()
}

/// Lattice points of the open or half-open parallelepiped of `w`, via Smith
/// normal form coset representatives.
pub fn box_points(w: &GeneratorSet, mode: BoxMode) -> ParallelepipedPoints {
    let origin = vec![Int::zero(); w.ambient_dim];
    if w.is_empty() {
        return ParallelepipedPoints {
            points: vec![origin],
            mode,
        };
    }
    let n = w.len();
    let (_, coords) = w.lattice_coordinates();
    let form = snf(&coords);
    let diag = form.diagonal();
    let v: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| rat_from_int(&form.v[(i, j)])).collect())
        .collect();
    let mut points = Vec::new();
    let mut e = vec![Int::zero(); n];
    loop {
        let scaled: Vec<Rational> = e
            .iter()
            .zip(&diag)
            .map(|(ei, si)| Rational::new(ei.clone(), si.clone()))
            .collect();
        let lambda: Vec<Rational> = v
            .iter()
            .map(|row| fractional(&row.iter().zip(&scaled).map(|(a, b)| a * b).sum()))
            .collect();
        if mode == BoxMode::HalfOpen || lambda.iter().all(|l| !l.is_zero()) {
            let p = w.combine(&lambda);
            points.push(
                p.into_iter()
                    .map(|x| {
                        assert!(x.is_integer(), "coset representative must be a lattice point");
                        x.to_integer()
                    })
                    .collect(),
            );
        }
        // odometer over 0 <= e_i < s_i
        let mut k = 0;
        loop {
            if k == n {
                points.sort();
                return ParallelepipedPoints { points, mode };
            }
            e[k] += 1;
            if e[k] < diag[k] {
                break;
            }
            e[k] = Int::zero();
            k += 1;
        }
    }
}

/// The same set as [`box_points`], found by scanning the bounding box of the
/// parallelepiped. Membership is decided with the adjugate of an invertible
/// square row-submatrix of `W`, so everything stays in integers.
pub fn box_points_scan(
    w: &GeneratorSet,
    mode: BoxMode,
    limit: ScanLimit,
) -> Result<ParallelepipedPoints> {
    let dim = w.ambient_dim;
    if w.is_empty() {
        return Ok(ParallelepipedPoints {
            points: vec![vec![Int::zero(); dim]],
            mode,
        });
    }
    let n = w.len();
    let full = IntMatrix::from_columns(dim, w.generators());
    let rows = independent_rows(&full, n);
    let square = IntMatrix::from_entries(
        n,
        n,
        rows.iter()
            .flat_map(|&r| full.row(r).iter().cloned())
            .collect(),
    );
    let delta = square.det();
    let sign = Int::from(if delta.is_negative() { -1 } else { 1 });
    let abs_delta = delta.abs();
    let adj = square.adjugate();

    let lower = (0..dim)
        .map(|k| full.row(k).iter().filter(|x| x.is_negative()).sum())
        .collect();
    let upper = (0..dim)
        .map(|k| full.row(k).iter().filter(|x| x.is_positive()).sum())
        .collect();
    let mut sys = LinearSystem::new(lower, upper);
    let low_bound = match mode {
        BoxMode::Open => Int::one(),
        BoxMode::HalfOpen => Int::zero(),
    };
    for i in 0..n {
        // sign * (adj x_r)_i = |δ| λ_i
        let mut a = vec![Int::zero(); dim];
        for (j, &r) in rows.iter().enumerate() {
            a[r] = &sign * &adj[(i, j)];
        }
        let neg: Vec<Int> = a.iter().map(|x| -x).collect();
        sys.inequalities.push((a, &abs_delta - Int::one()));
        sys.inequalities.push((neg, -low_bound.clone()));
    }
    // δ x = W adj(W_r) x_r keeps x in the span of the generators
    let w_adj = full.mul(&adj);
    for k in 0..dim {
        let mut a = vec![Int::zero(); dim];
        a[k] += &delta;
        for (j, &r) in rows.iter().enumerate() {
            a[r] -= &w_adj[(k, j)];
        }
        if a.iter().any(|x| !x.is_zero()) {
            sys.equalities.push((a, Int::zero()));
        }
    }
    limit.check(sys.box_volume())?;
    Ok(ParallelepipedPoints {
        points: sys.points(),
        mode,
    })
}

/// First `n` row indices (greedy) whose rows are linearly independent.
fn independent_rows(m: &IntMatrix, n: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for r in 0..m.rows() {
        let row: Vec<Rational> = m.row(r).iter().map(rat_from_int).collect();
        rows.push(row);
        if crate::exact::rank_rational(&rows, m.cols()) == chosen.len() + 1 {
            chosen.push(r);
            if chosen.len() == n {
                break;
            }
        } else {
            rows.pop();
        }
    }
    assert_eq!(chosen.len(), n, "generators must have full column rank");
    chosen
}

/// `B(W; z)`: height generating function of the open parallelepiped. The
/// empty generator set gives 1 (its only point is the origin).
pub fn box_polynomial(w: &GeneratorSet) -> IntPolynomial {
    box_points(w, BoxMode::Open).height_polynomial()
}

/// Generators `(q v, q)` of the cone over `face`.
pub fn ray_generators(face: &Simplex, host: &Polytope, q: u64) -> Result<GeneratorSet> {
    if q == 0 || !q.is_multiple_of(host.denominator()) {
        return Err(Error::NonIntegralGenerator { q });
    }
    let q_int = Int::from(q);
    let q_rat = rat_from_int(&q_int);
    let gens = face
        .vertex_ids()
        .iter()
        .map(|&i| {
            let mut g: Vec<Int> = host.vertices()[i]
                .iter()
                .map(|x| (x * &q_rat).to_integer())
                .collect();
            g.push(q_int.clone());
            g
        })
        .collect();
    GeneratorSet::new(host.ambient_dim() + 1, gens)
}

/// h*-polynomial of a simplex at height `q`, read off its half-open
/// parallelepiped. The point set is also checked to split as the disjoint
/// union of the open parallelepipeds of all faces.
pub fn simplex_hstar(face: &Simplex, host: &Polytope, q: u64) -> Result<IntPolynomial> {
    let w = ray_generators(face, host, q)?;
    let pi = box_points(&w, BoxMode::HalfOpen);
    let mut union: Vec<Vec<Int>> = Vec::with_capacity(pi.len());
    let mut face_sum = IntPolynomial::zero();
    for omega in face.faces() {
        let wo = ray_generators(&omega, host, q)?;
        let open = box_points(&wo, BoxMode::Open);
        face_sum = &face_sum + &open.height_polynomial();
        union.extend(open.points);
    }
    union.sort();
    if union != pi.points {
        return Err(Error::EngineMismatch(format!(
            "parallelepiped of {face} is not the disjoint union of open face boxes"
        )));
    }
    let direct = pi.height_polynomial();
    if direct != face_sum {
        return Err(Error::EngineMismatch(format!(
            "simplex h* of {face}: enumeration {direct} vs face sum {face_sum}"
        )));
    }
    Ok(direct)
}

/// Unique splitting of a lattice point `v` of the cone over `P`, relative to
/// the minimal face `Δ` of a boundary triangulation whose cone extended by
/// the ray `(a, ell)` contains `v`:
///
/// `v = frac + Σ_{i in I} w_i + Σ_i mu_i w_i + mu_ray (a, ell)`
///
/// where `I` collects the generators of `Δ` with integer coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointDecomposition {
    pub face: Simplex,
    /// Vertices of `Δ` whose coefficient is not an integer.
    pub omega: Simplex,
    pub fractional_part: Vec<Int>,
    /// Vertices of `Δ` whose coefficient is an integer.
    pub integer_indices: Vec<usize>,
    /// One entry per vertex of `Δ`, in vertex-id order.
    pub mu: Vec<Int>,
    pub mu_ray: Int,
    /// Whether the ray coefficient is an integer, in which case `frac` lies
    /// in the open box of `Ω`, and otherwise in that of `Ω` extended by the ray.
    pub ray_coefficient_integral: bool,
}

impl PointDecomposition {
    pub fn reconstruct(&self, generators: &GeneratorSet, ray: &[Int]) -> Vec<Int> {
        let mut v = self.fractional_part.clone();
        for (k, &id) in self.face.vertex_ids().iter().enumerate() {
            let mut mult = self.mu[k].clone();
            if self.integer_indices.contains(&id) {
                mult += 1;
            }
            for (x, g) in v.iter_mut().zip(&generators.generators()[k]) {
                *x += &mult * g;
            }
        }
        for (x, r) in v.iter_mut().zip(ray) {
            *x += &self.mu_ray * r;
        }
        v
    }
}

/// Finds the minimal face of the boundary triangulation `t` whose cone,
/// extended by `ray`, contains `v`, and splits `v` accordingly. Faces are
/// tried by dimension, then vertex ids.
pub fn decompose_point(
    v: &[Int],
    t: &Triangulation,
    ray: &[Int],
) -> Result<(Simplex, PointDecomposition)> {
    if t.kind() != TriangulationKind::Boundary {
        return Err(Error::TriangulationMismatch);
    }
    let host = t.host();
    let dim = host.ambient_dim() + 1;
    if v.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        });
    }
    if ray.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: ray.len(),
        });
    }
    let q = t.denominator();
    let mut found: Option<(Simplex, GeneratorSet, Vec<Rational>)> = None;
    for face in t.faces() {
        if let Some((f, _, _)) = &found {
            if face.len() > f.len() {
                break;
            }
        }
        let w = ray_generators(face, host, q)?;
        let primed = w.with_ray(ray)?;
        let Some(lambda) = primed.coefficients(v) else {
            continue;
        };
        if lambda.iter().any(|l| l.is_negative()) {
            continue;
        }
        if let Some((f, _, _)) = &found {
            return Err(Error::EngineMismatch(format!(
                "point lies in the primed cones of both {f} and {face}"
            )));
        }
        found = Some((face.clone(), w, lambda));
    }
    let Some((face, w, lambda)) = found else {
        return Err(Error::PointOutsideCone);
    };

    let m = face.len();
    let mut frac_lambda = vec![Rational::zero(); m + 1];
    let mut integer_indices = Vec::new();
    let mut omega = Vec::new();
    let mut mu = Vec::with_capacity(m);
    for (k, &id) in face.vertex_ids().iter().enumerate() {
        let l = &lambda[k];
        if l.is_integer() {
            integer_indices.push(id);
            mu.push(l.to_integer() - Int::one());
        } else {
            omega.push(id);
            frac_lambda[k] = fractional(l);
            mu.push(l.floor().to_integer());
        }
    }
    let ray_l = &lambda[m];
    frac_lambda[m] = fractional(ray_l);
    let mu_ray = ray_l.floor().to_integer();
    let primed = w.with_ray(ray)?;
    let frac: Vec<Int> = primed
        .combine(&frac_lambda)
        .into_iter()
        .map(|x| x.to_integer())
        .collect();
    let dec = PointDecomposition {
        face: face.clone(),
        omega: Simplex::new(omega),
        fractional_part: frac,
        integer_indices,
        mu,
        mu_ray,
        ray_coefficient_integral: ray_l.is_integer(),
    };

    if dec.reconstruct(&w, ray) != v {
        return Err(Error::EngineMismatch("decomposition does not reconstruct the point".into()));
    }
    // u(v) = u(frac) + q (dim Δ - dim Ω) + Σ q mu_i + mu_ray ell
    let q_int = Int::from(q);
    let height = &dec.fractional_part[dim - 1]
        + &q_int * Int::from(dec.integer_indices.len())
        + dec.mu.iter().map(|m| &q_int * m).sum::<Int>()
        + &dec.mu_ray * &ray[dim - 1];
    if height != v[dim - 1] {
        return Err(Error::EngineMismatch("height identity fails".into()));
    }
    Ok((face, dec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::polytope::hexagon_family;
    use crate::triangulation::boundary_triangulation;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn segment() -> Polytope {
        Polytope::from_fractions(&[&[(1, 3)], &[(2, 3)]]).unwrap()
    }

    #[test]
    fn segment_box() {
        let w = GeneratorSet::from_i64(&[&[1, 3], &[2, 3]]).unwrap();
        let open = box_points(&w, BoxMode::Open);
        assert_eq!(open.points, vec![ints(&[1, 2]), ints(&[2, 4])]);
        assert_eq!(box_polynomial(&w), IntPolynomial::from_i64(&[0, 0, 1, 0, 1]));
        assert_eq!(box_points(&w, BoxMode::HalfOpen).len(), 3);
        assert_eq!(w.lattice_index(), int(3));
    }

    #[test]
    fn odd_vertex_box_is_empty() {
        for l in [1, 3, 5, 7] {
            let w = GeneratorSet::from_i64(&[&[2, -l, l]]).unwrap();
            assert!(box_points(&w, BoxMode::Open).is_empty());
            assert!(box_polynomial(&w).is_zero());
        }
    }

    #[test]
    fn unimodular_halfopen_is_origin() {
        let w = GeneratorSet::from_i64(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(box_points(&w, BoxMode::HalfOpen).points, vec![ints(&[0, 0, 0])]);
        assert!(box_points(&w, BoxMode::Open).is_empty());
    }

    #[test]
    fn empty_generators() {
        let w = GeneratorSet::empty(3);
        assert_eq!(box_polynomial(&w), IntPolynomial::one());
        let scanned = box_points_scan(&w, BoxMode::Open, ScanLimit::UNLIMITED).unwrap();
        assert_eq!(scanned.points, vec![ints(&[0, 0, 0])]);
    }

    #[test]
    fn generator_validation() {
        assert_eq!(
            GeneratorSet::from_i64(&[&[1, 3], &[2, 6]]).unwrap_err(),
            Error::DependentGenerators
        );
        assert_eq!(
            GeneratorSet::from_i64(&[&[1, 0]]).unwrap_err(),
            Error::NonPositiveHeight
        );
    }

    #[test]
    fn scan_matches_snf() {
        let cases: Vec<Vec<&[i64]>> = vec![
            vec![&[1, 3], &[2, 3]],
            vec![&[2, -5, 5]],
            vec![&[1, -5, 5], &[2, -5, 5]],
            vec![&[-1, 5, 5], &[1, 0, 5]],
            vec![&[4, 0, 2], &[0, 6, 2], &[2, 2, 2]],
            vec![&[3, 6]],
        ];
        for gens in cases {
            let w = GeneratorSet::from_i64(&gens).unwrap();
            for mode in [BoxMode::Open, BoxMode::HalfOpen] {
                let scanned = box_points_scan(&w, mode, ScanLimit::UNLIMITED).unwrap();
                assert_eq!(box_points(&w, mode), scanned, "{gens:?} {mode:?}");
            }
            assert_eq!(
                Int::from(box_points(&w, BoxMode::HalfOpen).len()),
                w.lattice_index()
            );
        }
    }

    #[test]
    fn ray_generator_examples() {
        let s = segment();
        let w = ray_generators(&Simplex::new(vec![0, 1]), &s, 3).unwrap();
        assert_eq!(w.generators(), &[ints(&[1, 3]), ints(&[2, 3])]);
        let w = ray_generators(&Simplex::new(vec![0]), &s, 6).unwrap();
        assert_eq!(w.generators(), &[ints(&[2, 6])]);
        assert_eq!(
            ray_generators(&Simplex::new(vec![0]), &s, 4).unwrap_err(),
            Error::NonIntegralGenerator { q: 4 }
        );
    }

    #[test]
    fn hexagon_facet_generators() {
        let l = 5;
        let p = hexagon_family(l, true).unwrap();
        let find = |x: (i64, i64), y: i64| {
            let target = vec![crate::exact::rat(x.0, x.1), crate::exact::rat(y, 1)];
            p.vertices().iter().position(|v| *v == target).unwrap()
        };
        // F3 between (-1/L, 1) and (1/L, 0)
        let f3 = Simplex::new(vec![find((-1, l as i64), 1), find((1, l as i64), 0)]);
        let w = ray_generators(&f3, &p, l).unwrap();
        let mut gens = w.generators().to_vec();
        gens.sort();
        assert_eq!(gens, vec![ints(&[-1, 5, 5]), ints(&[1, 0, 5])]);
        // Σ_{i=1}^{L-1} z^{2i}
        assert_eq!(
            box_polynomial(&w),
            IntPolynomial::from_i64(&[0, 0, 1, 0, 1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn simplex_hstar_examples() {
        let s = segment();
        assert_eq!(
            simplex_hstar(&Simplex::new(vec![0, 1]), &s, 3).unwrap(),
            IntPolynomial::from_i64(&[1, 0, 1, 0, 1])
        );
        let unit = Polytope::from_integer_points(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(
            simplex_hstar(&Simplex::new(vec![0, 1, 2]), &unit, 1).unwrap(),
            IntPolynomial::one()
        );
        let half = Polytope::from_fractions(&[&[(0, 1)], &[(1, 2)]]).unwrap();
        assert_eq!(
            simplex_hstar(&Simplex::new(vec![0, 1]), &half, 2).unwrap(),
            IntPolynomial::from_i64(&[1, 1])
        );
    }

    #[test]
    fn involution_symmetry() {
        let w = GeneratorSet::from_i64(&[&[1, -5, 5], &[2, -5, 5]]).unwrap();
        let b = box_polynomial(&w);
        let total = w.total_height().to_usize().unwrap();
        assert!(b.is_palindromic(total));
    }

    #[test]
    fn decomposition_examples() {
        let s = segment();
        let t = boundary_triangulation(&s).unwrap();
        let ray = ints(&[2, 4]);

        let (face, d) = decompose_point(&ints(&[2, 4]), &t, &ray).unwrap();
        assert!(face.is_empty());
        assert_eq!(d.fractional_part, ints(&[0, 0]));
        assert_eq!(d.mu_ray, int(1));

        let (face, d) = decompose_point(&ints(&[1, 2]), &t, &ray).unwrap();
        assert!(face.is_empty());
        assert_eq!(d.fractional_part, ints(&[1, 2]));
        assert_eq!(d.mu_ray, int(0));
        assert!(!d.ray_coefficient_integral);

        // (3,6) = 3/2 (2,4) sits on the ray itself
        let (face, d) = decompose_point(&ints(&[3, 6]), &t, &ray).unwrap();
        assert!(face.is_empty());
        assert_eq!(d.fractional_part, ints(&[1, 2]));
        assert_eq!(d.mu_ray, int(1));

        // (4,9) = (1,3) + 3/2 (2,4)
        let (face, d) = decompose_point(&ints(&[4, 9]), &t, &ray).unwrap();
        assert_eq!(face, Simplex::new(vec![0]));
        assert_eq!(d.integer_indices, vec![0]);
        assert_eq!(d.mu, vec![int(0)]);
        assert_eq!(d.mu_ray, int(1));
        assert_eq!(d.fractional_part, ints(&[1, 2]));
        assert!(d.omega.is_empty());

        assert_eq!(
            decompose_point(&ints(&[0, 1]), &t, &ray).unwrap_err(),
            Error::PointOutsideCone
        );
    }
}
