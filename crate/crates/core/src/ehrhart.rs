//! h*-polynomials by three routes, Ehrhart quasipolynomials, the a/b
//! decomposition and the coefficient inequalities it implies.
//!
//! Throughout, `q` is the exponent base of the Ehrhart series denominator
//! `(1 - z^q)^(d+1)` and `N = q (d + 1)` bounds the length of h*.

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use num_traits::Zero;

use crate::conebox::{box_polynomial, ray_generators};
use crate::error::{Error, Result};
use crate::exact::{rat, rat_from_int, Int, Rational};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::polytope::Polytope;
use crate::scan::ScanLimit;
use crate::triangulation::{
    boundary_triangulation, placing_triangulation, Simplex, Triangulation, TriangulationKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Count,
    BetkeMcMullen,
    Stapledon,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Count, Method::BetkeMcMullen, Method::Stapledon];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Count => "count",
            Method::BetkeMcMullen => "betke_mcmullen",
            Method::Stapledon => "stapledon",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "count" => Ok(Method::Count),
            "bm" | "betke_mcmullen" => Ok(Method::BetkeMcMullen),
            "stapledon" => Ok(Method::Stapledon),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// Numerator of the Ehrhart series over `(1 - z^q)^(d+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HStarResult {
    pub q: u64,
    pub d: usize,
    pub hstar: IntPolynomial,
    pub s: usize,
    pub method: Method,
}

impl HStarResult {
    pub fn new(q: u64, d: usize, hstar: IntPolynomial, method: Method) -> Self {
        let s = hstar.degree().unwrap_or(0);
        HStarResult {
            q,
            d,
            hstar,
            s,
            method,
        }
    }

    /// `q (d + 1)`.
    pub fn window(&self) -> usize {
        self.q as usize * (self.d + 1)
    }

    /// Coefficients `h*_0, …, h*_{N-1}`.
    pub fn vector(&self) -> Vec<Int> {
        self.hstar.padded(self.window())
    }

    fn same_polynomial(&self, other: &HStarResult) -> bool {
        self.q == other.q && self.d == other.d && self.hstar == other.hstar
    }
}

fn resolve_q(p: &Polytope, q_override: Option<u64>) -> Result<u64> {
    let denominator = p.denominator();
    match q_override {
        None => Ok(denominator),
        Some(q) if q > 0 && q % denominator == 0 => Ok(q),
        Some(q) => Err(Error::InvalidDenominatorOverride { q, denominator }),
    }
}

/// h* from lattice-point counts of the dilates `tP`, `t < q (d + 1)`.
pub fn hstar_by_counting(p: &Polytope, q_override: Option<u64>) -> Result<HStarResult> {
    hstar_by_counting_limited(p, q_override, ScanLimit::UNLIMITED)
}

pub fn hstar_by_counting_limited(
    p: &Polytope,
    q_override: Option<u64>,
    limit: ScanLimit,
) -> Result<HStarResult> {
    let q = resolve_q(p, q_override)?;
    let d = p.dim();
    let n = q as usize * (d + 1);
    let counts: Vec<Int> = (0..=2 * n as u64)
        .map(|t| p.lattice_point_count_limited(t, false, limit).map(Int::from))
        .collect::<Result<_>>()?;
    let count_at = |t: i64| -> Int {
        if t < 0 {
            Int::zero()
        } else {
            counts[t as usize].clone()
        }
    };
    let mut coeffs = Vec::with_capacity(n);
    for j in 0..n as i64 {
        let mut h = Int::zero();
        for k in 0..=d + 1 {
            let term = Int::from(binomial(d + 1, k) as u64) * count_at(j - k as i64 * q as i64);
            if k % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        coeffs.push(h);
    }
    let hstar = IntPolynomial::new(coeffs);
    // Σ_t L(t) z^t = h*(z) Σ_m C(m + d, d) z^(qm)
    for (t, expected) in counts.iter().enumerate() {
        let mut total = Int::zero();
        for (j, h) in hstar.coeffs().iter().enumerate().take(t + 1) {
            if (t - j) % q as usize == 0 {
                let m = (t - j) / q as usize;
                total += h * Int::from(binomial(m + d, d) as u64);
            }
        }
        if &total != expected {
            return Err(Error::EngineMismatch(format!(
                "h* from counts does not reproduce L({t})"
            )));
        }
    }
    Ok(HStarResult::new(q, d, hstar, Method::Count))
}

fn check_triangulation(p: &Polytope, t: &Triangulation, kind: TriangulationKind) -> Result<()> {
    if t.kind() != kind || !t.host().same_vertex_set(p) || t.host().vertices() != p.vertices() {
        return Err(Error::TriangulationMismatch);
    }
    Ok(())
}

/// h* as `Σ_{Ω ∈ T} B(Ω; z) h(Ω; z^q)` over a full triangulation.
pub fn hstar_betke_mcmullen(
    p: &Polytope,
    q_override: Option<u64>,
    t: Option<&Triangulation>,
) -> Result<HStarResult> {
    let q = resolve_q(p, q_override)?;
    let owned;
    let t = match t {
        Some(t) => {
            check_triangulation(p, t, TriangulationKind::Full)?;
            t
        }
        None => {
            owned = placing_triangulation(p);
            &owned
        }
    };
    let mut hstar = IntPolynomial::zero();
    for face in t.faces() {
        let b = box_polynomial(&ray_generators(face, p, q)?);
        if b.is_zero() {
            continue;
        }
        let h = t.h_polynomial(face)?.inflate(q as usize);
        hstar = &hstar + &(&b * &h);
    }
    Ok(HStarResult::new(q, p.dim(), hstar, Method::BetkeMcMullen))
}

/// Interior ray `(a, ell)` with `a / ell` in the interior of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub a: Vec<Int>,
    pub ell: u64,
}

impl Ray {
    pub fn new(a: Vec<Int>, ell: u64) -> Self {
        Ray { a, ell }
    }

    /// The generator `(a, ell)` in `Z^(d+1)`.
    pub fn generator(&self) -> Vec<Int> {
        let mut g = self.a.clone();
        g.push(Int::from(self.ell));
        g
    }

    pub fn point(&self) -> Vec<Rational> {
        let ell = Rational::from_integer(Int::from(self.ell));
        self.a.iter().map(|x| rat_from_int(x) / &ell).collect()
    }

    /// Ray through the lexicographically first interior lattice point of the
    /// smallest dilate that has one.
    pub fn smallest(p: &Polytope) -> Result<Ray> {
        let (ell, a) = p.smallest_interior_dilate()?;
        Ok(Ray { a, ell })
    }
}

impl FromStr for Ray {
    type Err = Error;

    /// Parses `"a1,…,ad;ell"`.
    fn from_str(s: &str) -> Result<Self> {
        let (coords, ell) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("ray {s:?} must look like \"a1,...,ad;ell\"")))?;
        let a = coords
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<Int>()
                    .map_err(|_| Error::Parse(format!("bad ray coordinate {c:?}")))
            })
            .collect::<Result<Vec<Int>>>()?;
        let ell = ell
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad ray height {ell:?}")))?;
        Ok(Ray { a, ell })
    }
}

/// One face of a boundary triangulation with the pieces entering the
/// boundary sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryTerm {
    pub face: Simplex,
    pub box_poly: IntPolynomial,
    pub primed_box_poly: IntPolynomial,
    /// `h(Ω; z^q)`.
    pub h_inflated: IntPolynomial,
}

/// Per-face data `B(Ω)`, `B(Ω')` and `h(Ω; z^q)` over a boundary triangulation.
pub fn boundary_terms(
    p: &Polytope,
    q: u64,
    ray: &Ray,
    t: &Triangulation,
) -> Result<Vec<BoundaryTerm>> {
    check_triangulation(p, t, TriangulationKind::Boundary)?;
    if ray.ell == 0 || ray.a.len() != p.ambient_dim() || !p.contains(&ray.point(), true) {
        return Err(Error::RayNotInterior);
    }
    let generator = ray.generator();
    t.faces()
        .iter()
        .map(|face| {
            let w = ray_generators(face, p, q)?;
            Ok(BoundaryTerm {
                face: face.clone(),
                box_poly: box_polynomial(&w),
                primed_box_poly: box_polynomial(&w.with_ray(&generator)?),
                h_inflated: t.h_polynomial(face)?.inflate(q as usize),
            })
        })
        .collect()
}

/// h* as `(1 - z^q) / (1 - z^ell) Σ_{Ω ∈ T} (B(Ω) + B(Ω')) h(Ω; z^q)` over a
/// boundary triangulation.
pub fn hstar_stapledon(
    p: &Polytope,
    q_override: Option<u64>,
    ray: Option<&Ray>,
    t: Option<&Triangulation>,
) -> Result<HStarResult> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    let q = resolve_q(p, q_override)?;
    let owned_ray;
    let ray = match ray {
        Some(r) => r,
        None => {
            owned_ray = Ray::smallest(p)?;
            &owned_ray
        }
    };
    let owned;
    let t = match t {
        Some(t) => t,
        None => {
            owned = boundary_triangulation(p)?;
            &owned
        }
    };
    let terms = boundary_terms(p, q, ray, t)?;
    let sum: IntPolynomial = terms
        .iter()
        .map(|term| &(&term.box_poly + &term.primed_box_poly) * &term.h_inflated)
        .sum();
    let numerator = &sum * &IntPolynomial::one_minus_power(q as usize);
    let hstar = numerator
        .div_exact(&IntPolynomial::one_minus_power(ray.ell as usize))
        .ok_or(Error::InexactDivision)?;
    Ok(HStarResult::new(q, p.dim(), hstar, Method::Stapledon))
}

/// Runs `method` with default triangulations and ray.
pub fn hstar_with(
    p: &Polytope,
    method: Method,
    q_override: Option<u64>,
    limit: ScanLimit,
) -> Result<HStarResult> {
    match method {
        Method::Count => hstar_by_counting_limited(p, q_override, limit),
        Method::BetkeMcMullen => hstar_betke_mcmullen(p, q_override, None),
        Method::Stapledon => {
            let (ell, a) = p.smallest_interior_dilate_limited(limit)?;
            hstar_stapledon(p, q_override, Some(&Ray::new(a, ell)), None)
        }
    }
}

/// Runs every method and fails unless they agree.
pub fn hstar_all(p: &Polytope, q_override: Option<u64>, limit: ScanLimit) -> Result<Vec<HStarResult>> {
    let results = Method::ALL
        .iter()
        .map(|&m| hstar_with(p, m, q_override, limit))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = results.iter().find(|r| !r.same_polynomial(&results[0])) {
        return Err(Error::EngineMismatch(format!(
            "{} gives {} but {} gives {}",
            results[0].method, results[0].hstar, bad.method, bad.hstar
        )));
    }
    Ok(results)
}

/// Ehrhart quasipolynomial: constituent `r` agrees with `L(t)` for
/// `t ≡ r (mod period)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: u64,
    pub constituents: Vec<RatPolynomial>,
}

impl QuasiPolynomial {
    pub fn constituent(&self, t: i64) -> &RatPolynomial {
        &self.constituents[t.rem_euclid(self.period as i64) as usize]
    }

    pub fn eval(&self, t: i64) -> Rational {
        self.constituent(t).eval(&rat(t, 1))
    }

    /// `(-1)^d Q(-t)`, the interior count of `tP` for `t >= 1`.
    pub fn reciprocal(&self, t: i64, d: usize) -> Rational {
        let v = self.eval(-t);
        if d.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, c) in self.constituents.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "t ≡ {r} (mod {}): {}", self.period, fmt_in_t(c))?;
        }
        Ok(())
    }
}

fn fmt_in_t(p: &RatPolynomial) -> String {
    p.to_string().replace('z', "t")
}

pub fn ehrhart_quasipolynomial(p: &Polytope) -> Result<QuasiPolynomial> {
    ehrhart_quasipolynomial_limited(p, ScanLimit::UNLIMITED)
}

pub fn ehrhart_quasipolynomial_limited(p: &Polytope, limit: ScanLimit) -> Result<QuasiPolynomial> {
    let q = p.denominator();
    let d = p.dim();
    let volume = p
        .is_full_dimensional()
        .then(|| placing_triangulation(p).volume())
        .flatten();
    let mut constituents = Vec::with_capacity(q as usize);
    for r in 0..q {
        let samples = (0..=d as u64)
            .map(|k| {
                let t = r + k * q;
                let n = p.lattice_point_count_limited(t, false, limit)?;
                Ok((rat(t as i64, 1), rat(n as i64, 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let c = RatPolynomial::interpolate(&samples);
        if c.degree() != Some(d) {
            return Err(Error::EngineMismatch(format!(
                "constituent {r} has degree {:?}, expected {d}",
                c.degree()
            )));
        }
        if let Some(vol) = &volume {
            if &c.leading() != vol {
                return Err(Error::EngineMismatch(format!(
                    "constituent {r} leads with {} but the volume is {vol}",
                    c.leading()
                )));
            }
        }
        // one extra sample beyond the interpolation nodes
        let t = r + (d as u64 + 1) * q;
        let n = p.lattice_point_count_limited(t, false, limit)?;
        if c.eval(&rat(t as i64, 1)) != rat(n as i64, 1) {
            return Err(Error::EngineMismatch(format!("constituent {r} misses L({t})")));
        }
        constituents.push(c);
    }
    Ok(QuasiPolynomial {
        period: q,
        constituents,
    })
}

/// Split of `hbar = (1 + z + … + z^(ell-1)) h*` as `a(z) + z^ell b(z)` with
/// `a` symmetric in degree window `N - 1` and `b` symmetric in `N - 1 - ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbDecomposition {
    pub q: u64,
    pub d: usize,
    pub s: usize,
    pub ell: u64,
    pub hbar: IntPolynomial,
    /// Degree of `hbar`.
    pub f: usize,
    pub a: IntPolynomial,
    pub b: IntPolynomial,
}

fn prefix_sums(h: &IntPolynomial, len: usize) -> Vec<Int> {
    let mut out = Vec::with_capacity(len);
    let mut acc = Int::zero();
    for i in 0..len {
        acc += h.coeff(i);
        out.push(acc.clone());
    }
    out
}

/// `a` and `b` from their closed forms in the h* coefficients, with every
/// structural property checked.
pub fn ab_from_hstar(h: &HStarResult) -> Result<AbDecomposition> {
    let n = h.window();
    let s = h.s;
    if s >= n {
        return Err(Error::EngineMismatch(format!("deg h* = {s} is not below {n}")));
    }
    let ell = n - s;
    let coeff = |i: i64| h.hstar.coeff_at(i);
    let prefix = prefix_sums(&h.hstar, n);
    let mut a = Vec::with_capacity(n);
    let mut tail = Int::zero();
    for i in 0..n {
        // Σ_{j<i} h*_{N-1-j}
        if i > 0 {
            tail += coeff((n - i) as i64);
        }
        a.push(&prefix[i] - &tail);
    }
    let mut b = Vec::with_capacity(s);
    let mut top = Int::zero();
    for i in 0..s {
        top += coeff(s as i64 - i as i64);
        b.push(&top - &prefix[i]);
    }
    let a = IntPolynomial::new(a);
    let b = IntPolynomial::new(b);
    let hbar = &IntPolynomial::geometric(ell) * &h.hstar;

    let fail = |what: &str| Err(Error::EngineMismatch(format!("a/b decomposition: {what}")));
    if &a + &b.shift(ell) != hbar {
        return fail("a + z^ell b differs from hbar");
    }
    if !a.is_palindromic(n - 1) {
        return fail("a is not symmetric");
    }
    if !(b.is_zero() || (s >= 1 && b.is_palindromic(s - 1))) {
        return fail("b is not symmetric");
    }
    if !a.has_nonnegative_coeffs() || !b.has_nonnegative_coeffs() {
        return fail("negative coefficient");
    }
    Ok(AbDecomposition {
        q: h.q,
        d: h.d,
        s,
        ell: ell as u64,
        f: hbar.degree().unwrap_or(0),
        hbar,
        a,
        b,
    })
}

/// a/b decomposition from the counting h*. Also checks `ell` against the
/// smallest dilate with an interior lattice point, and recomputes `a` and `b`
/// from the boundary sums with that dilate's ray.
pub fn ab_decomposition(p: &Polytope) -> Result<AbDecomposition> {
    ab_decomposition_limited(p, ScanLimit::UNLIMITED)
}

pub fn ab_decomposition_limited(p: &Polytope, limit: ScanLimit) -> Result<AbDecomposition> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    let h = hstar_by_counting_limited(p, None, limit)?;
    let ab = ab_from_hstar(&h)?;
    let (ell, a) = p.smallest_interior_dilate_limited(limit)?;
    if ell != ab.ell {
        return Err(Error::EngineMismatch(format!(
            "q(d+1) - deg h* = {} but the smallest interior dilate is {ell}",
            ab.ell
        )));
    }
    let (a2, b2) = ab_from_boundary(p, h.q, &Ray::new(a, ell), None)?;
    if a2 != ab.a || b2 != ab.b {
        return Err(Error::EngineMismatch(format!(
            "closed-form a/b ({}, {}) differ from boundary sums ({a2}, {b2})",
            ab.a, ab.b
        )));
    }
    Ok(ab)
}

/// `a = (1 + … + z^(q-1)) Σ B(Ω) h(Ω; z^q)` and
/// `b = z^(-ell) (1 + … + z^(q-1)) Σ B(Ω') h(Ω; z^q)`.
pub fn ab_from_boundary(
    p: &Polytope,
    q: u64,
    ray: &Ray,
    t: Option<&Triangulation>,
) -> Result<(IntPolynomial, IntPolynomial)> {
    let owned;
    let t = match t {
        Some(t) => t,
        None => {
            owned = boundary_triangulation(p)?;
            &owned
        }
    };
    let terms = boundary_terms(p, q, ray, t)?;
    let geo = IntPolynomial::geometric(q as usize);
    let plain: IntPolynomial = terms.iter().map(|t| &t.box_poly * &t.h_inflated).sum();
    let primed: IntPolynomial = terms.iter().map(|t| &t.primed_box_poly * &t.h_inflated).sum();
    let a = &geo * &plain;
    let b = (&geo * &primed)
        .unshift(ray.ell as usize)
        .ok_or_else(|| Error::EngineMismatch("primed boxes below height ell".into()))?;
    Ok((a, b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub family: u8,
    pub index: usize,
    pub lhs: Int,
    pub rhs: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

/// Checks, with `N = q (d + 1)`:
///
/// 1. `h*_0 + … + h*_{i+1} >= h*_{N-1} + … + h*_{N-1-i}` for
///    `0 <= i < floor((N - 1) / 2)`,
/// 2. `h*_s + … + h*_{s-i} >= h*_0 + … + h*_i` for `0 <= i < N`.
pub fn check_inequalities(h: &HStarResult) -> InequalityReport {
    let n = h.window();
    let s = h.s as i64;
    let c = |i: i64| h.hstar.coeff_at(i);
    let mut violations = Vec::new();
    let mut lhs = c(0);
    let mut rhs = Int::zero();
    for i in 0..(n.saturating_sub(1) / 2) {
        lhs += c(i as i64 + 1);
        rhs += c(n as i64 - 1 - i as i64);
        if lhs < rhs {
            violations.push(Violation {
                family: 1,
                index: i,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
    }
    let mut lhs = Int::zero();
    let mut rhs = Int::zero();
    for i in 0..n {
        lhs += c(s - i as i64);
        rhs += c(i as i64);
        if lhs < rhs {
            violations.push(Violation {
                family: 2,
                index: i,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
    }
    InequalityReport {
        passed: violations.is_empty(),
        violations,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualCheck {
    pub is_dual_lattice: bool,
    pub b_is_zero: bool,
    pub hstar_palindromic: bool,
}

/// Lattice-dual test next to `b = 0` and symmetry of h*. The first two must
/// agree; h* is called palindromic when `deg h* = N - 1` and
/// `h*_i = h*_{N-1-i}`, i.e. when `hbar = h* = a`.
pub fn palindromic_dual_check(p: &Polytope) -> Result<DualCheck> {
    palindromic_dual_check_limited(p, ScanLimit::UNLIMITED)
}

pub fn palindromic_dual_check_limited(p: &Polytope, limit: ScanLimit) -> Result<DualCheck> {
    let dual = p.dual()?;
    let ab = ab_decomposition_limited(p, limit)?;
    let window = ab.q as usize * (ab.d + 1) - 1;
    let hstar = ab.hbar.clone();
    let check = DualCheck {
        is_dual_lattice: dual.is_lattice(),
        b_is_zero: ab.b.is_zero(),
        hstar_palindromic: ab.ell == 1 && hstar.is_palindromic(window),
    };
    if check.is_dual_lattice != check.b_is_zero {
        return Err(Error::EngineMismatch(format!(
            "dual is{} a lattice polytope but b = {}",
            if check.is_dual_lattice { "" } else { " not" },
            ab.b
        )));
    }
    Ok(check)
}

/// The two candidate closed forms for h* of the dual hexagon of odd index
/// `L = 2k + 1`: the boundary sum
/// `1 + 4z^L + z^{2L} + 4(Σ_{i=L-k}^{L-1} z^i + Σ_{i=L+1}^{L+k} z^i) + 2 Σ_{i=1}^{L-1} z^{2i}`
/// multiplied by `1 + z + … + z^(factor_top)`.
pub fn hexagon_closed_form(index: u64, factor_top: u64) -> Result<IntPolynomial> {
    if index == 0 {
        return Err(Error::InvalidIndex(index));
    }
    if index.is_multiple_of(2) {
        return Err(Error::EvenIndex(index));
    }
    let l = index as usize;
    let k = (l - 1) / 2;
    let mut coeffs = vec![Int::zero(); 2 * l + 1];
    coeffs[0] += 1;
    coeffs[l] += 4;
    coeffs[2 * l] += 1;
    for i in (l - k..l).chain(l + 1..=l + k) {
        coeffs[i] += 4;
    }
    for i in 1..l {
        coeffs[2 * i] += 2;
    }
    let inner = IntPolynomial::new(coeffs);
    Ok(&IntPolynomial::geometric(factor_top as usize + 1) * &inner)
}

/// `Σ_i B(F_i)` style sum used by the closed forms: boundary sum of `B(Ω) h(Ω; z^q)`.
pub fn boundary_box_sum(terms: &[BoundaryTerm]) -> IntPolynomial {
    terms.iter().map(|t| &t.box_poly * &t.h_inflated).sum()
}

/// Whether every coefficient of `a` is at most the matching one of `b`.
pub fn dominated(a: &HStarResult, b: &HStarResult) -> bool {
    a.q == b.q && a.hstar.dominated_by(&b.hstar)
}

/// Interior counts `L°(t)` for `t = 1..=t_max` against reciprocity.
pub fn reciprocity_holds(p: &Polytope, quasi: &QuasiPolynomial, t_max: u64) -> bool {
    (1..=t_max).all(|t| {
        let direct = rat(p.lattice_point_count(t, true) as i64, 1);
        quasi.reciprocal(t as i64, p.dim()) == direct
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::polytope::hexagon_family;

    fn segment() -> Polytope {
        Polytope::from_fractions(&[&[(1, 3)], &[(2, 3)]]).unwrap()
    }

    fn unit_square() -> Polytope {
        Polytope::from_integer_points(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    fn triangle() -> Polytope {
        Polytope::from_integer_points(&[&[0, 0], &[2, 0], &[0, 2]]).unwrap()
    }

    fn centered_square() -> Polytope {
        Polytope::from_integer_points(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]]).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn counting_examples() {
        let h = hstar_by_counting(&segment(), None).unwrap();
        assert_eq!((h.q, h.d, h.s), (3, 1, 4));
        assert_eq!(h.hstar, poly(&[1, 0, 1, 0, 1]));
        assert_eq!(h.vector(), vec![int(1), int(0), int(1), int(0), int(1), int(0)]);

        let unit = Polytope::from_integer_points(&[&[0], &[1]]).unwrap();
        let h = hstar_by_counting(&unit, Some(3)).unwrap();
        assert_eq!(h.hstar, poly(&[1, 2, 3, 2, 1]));
        assert_eq!(hstar_by_counting(&unit_square(), None).unwrap().hstar, poly(&[1, 1]));
        assert_eq!(
            hstar_by_counting(&segment(), Some(4)).unwrap_err(),
            Error::InvalidDenominatorOverride {
                q: 4,
                denominator: 3
            }
        );
    }

    #[test]
    fn betke_mcmullen_examples() {
        assert_eq!(
            hstar_betke_mcmullen(&segment(), None, None).unwrap().hstar,
            poly(&[1, 0, 1, 0, 1])
        );
        let simplex = Polytope::from_integer_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
            .unwrap();
        assert_eq!(
            hstar_betke_mcmullen(&simplex, None, None).unwrap().hstar,
            IntPolynomial::one()
        );
        let p = hexagon_family(3, true).unwrap();
        assert_eq!(
            hstar_betke_mcmullen(&p, None, None).unwrap().hstar,
            hstar_by_counting(&p, None).unwrap().hstar
        );
    }

    #[test]
    fn stapledon_examples() {
        let ray = Ray::new(vec![int(2)], 4);
        let h = hstar_stapledon(&segment(), None, Some(&ray), None).unwrap();
        assert_eq!(h.hstar, poly(&[1, 0, 1, 0, 1]));

        let ray = Ray::new(vec![int(0), int(0)], 1);
        let h = hstar_stapledon(&hexagon_family(1, true).unwrap(), None, Some(&ray), None).unwrap();
        assert_eq!(h.hstar, poly(&[1, 4, 1]));

        assert_eq!(hstar_stapledon(&triangle(), None, None, None).unwrap().hstar, poly(&[1, 3]));

        let outside = Ray::new(vec![int(0)], 1);
        assert_eq!(
            hstar_stapledon(&segment(), None, Some(&outside), None).unwrap_err(),
            Error::RayNotInterior
        );
    }

    #[test]
    fn stapledon_terms_for_segment() {
        let s = segment();
        let t = boundary_triangulation(&s).unwrap();
        let terms = boundary_terms(&s, 3, &Ray::new(vec![int(2)], 4), &t).unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].primed_box_poly, poly(&[0, 0, 1]));
        assert_eq!(terms[0].h_inflated, poly(&[1, 0, 0, 1]));
        for t in &terms[1..] {
            assert!(t.box_poly.is_zero() && t.primed_box_poly.is_zero());
            assert_eq!(t.h_inflated, IntPolynomial::one());
        }
    }

    #[test]
    fn quasipolynomials() {
        let half = Polytope::from_fractions(&[&[(0, 1)], &[(1, 2)]]).unwrap();
        let qp = ehrhart_quasipolynomial(&half).unwrap();
        assert_eq!(qp.period, 2);
        assert_eq!(qp.constituents[0].coeffs(), &[rat(1, 1), rat(1, 2)]);
        assert_eq!(qp.constituents[1].coeffs(), &[rat(1, 2), rat(1, 2)]);

        let qp = ehrhart_quasipolynomial(&unit_square()).unwrap();
        assert_eq!(qp.constituents.len(), 1);
        assert_eq!(qp.constituents[0].coeffs(), &[rat(1, 1), rat(2, 1), rat(1, 1)]);

        let qp = ehrhart_quasipolynomial(&segment()).unwrap();
        assert!(qp.constituents.iter().all(|c| c.leading() == rat(1, 3)));
        assert!(reciprocity_holds(&segment(), &qp, 6));
    }

    #[test]
    fn ab_examples() {
        let ab = ab_decomposition(&triangle()).unwrap();
        assert_eq!((ab.a.clone(), ab.b.clone(), ab.ell), (poly(&[1, 4, 1]), poly(&[2]), 2));
        assert_eq!(ab.hbar, poly(&[1, 4, 3]));

        let ab = ab_decomposition(&segment()).unwrap();
        assert_eq!((ab.a, ab.b, ab.ell), (poly(&[1, 1, 1, 1, 1, 1]), IntPolynomial::zero(), 2));

        let ab = ab_decomposition(&centered_square()).unwrap();
        assert_eq!((ab.a, ab.b, ab.ell), (poly(&[1, 6, 1]), IntPolynomial::zero(), 1));
    }

    #[test]
    fn inequality_examples() {
        let h = HStarResult::new(3, 1, poly(&[1, 0, 1, 0, 1]), Method::Count);
        assert!(check_inequalities(&h).passed);

        let bad = HStarResult::new(3, 1, poly(&[1, 0, 0, 0, 0, 2]), Method::Count);
        let report = check_inequalities(&bad);
        assert!(!report.passed);
        assert_eq!(
            report.violations[0],
            Violation {
                family: 1,
                index: 0,
                lhs: int(1),
                rhs: int(2)
            }
        );

        let point = HStarResult::new(1, 0, IntPolynomial::one(), Method::Count);
        assert!(check_inequalities(&point).passed);
    }

    #[test]
    fn dual_checks() {
        let all_true = DualCheck {
            is_dual_lattice: true,
            b_is_zero: true,
            hstar_palindromic: true,
        };
        assert_eq!(palindromic_dual_check(&centered_square()).unwrap(), all_true);
        assert_eq!(palindromic_dual_check(&hexagon_family(3, true).unwrap()).unwrap(), all_true);
        // dual has the vertex (1, 1/2)
        let diamond = Polytope::from_integer_points(&[&[1, 0], &[-1, 0], &[0, 2], &[0, -2]]).unwrap();
        let c = palindromic_dual_check(&diamond).unwrap();
        assert!(!c.is_dual_lattice && !c.b_is_zero && !c.hstar_palindromic);
        assert_eq!(
            palindromic_dual_check(&unit_square()).unwrap_err(),
            Error::OriginNotInterior
        );
    }

    #[test]
    fn ray_parsing() {
        let r: Ray = "1, -2;3".parse().unwrap();
        assert_eq!(r, Ray::new(vec![int(1), int(-2)], 3));
        assert!("1,2".parse::<Ray>().is_err());
        assert!("1,x;2".parse::<Ray>().is_err());
    }

    #[test]
    fn hexagon_closed_form_candidates() {
        // L = 1: boundary sum is 1 + 4z + z^2
        assert_eq!(hexagon_closed_form(1, 0).unwrap(), poly(&[1, 4, 1]));
        assert_eq!(hexagon_closed_form(1, 1).unwrap(), poly(&[1, 5, 5, 1]));
        assert_eq!(hexagon_closed_form(2, 1).unwrap_err(), Error::EvenIndex(2));
    }
}
