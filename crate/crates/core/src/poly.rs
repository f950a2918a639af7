//! Dense univariate polynomials with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exact::{format_rational, Int, Rational};

/// Polynomial with integer coefficients, `coeffs[i]` multiplying `z^i`.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Int>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Int::one(), 0)
    }

    pub fn monomial(c: Int, degree: usize) -> Self {
        let mut coeffs = vec![Int::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `1 + z + ... + z^(n-1)`; zero when `n == 0`.
    pub fn geometric(n: usize) -> Self {
        Self::new(vec![Int::one(); n])
    }

    /// `1 - z^k`.
    pub fn one_minus_power(k: usize) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[0] = Int::one();
        coeffs[k] = -Int::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Coefficient at a possibly negative or out-of-range index, zero outside.
    pub fn coeff_at(&self, i: i64) -> Int {
        if i < 0 {
            Int::zero()
        } else {
            self.coeff(i as usize)
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients `0..len`, zero-padded. Panics if the polynomial is longer.
    pub fn padded(&self, len: usize) -> Vec<Int> {
        assert!(self.coeffs.len() <= len, "polynomial longer than requested window");
        let mut v = self.coeffs.clone();
        v.resize(len, Int::zero());
        v
    }

    /// Substitutes `z -> z^q`.
    pub fn inflate(&self, q: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(q > 0);
        let mut coeffs = vec![Int::zero(); (self.coeffs.len() - 1) * q + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * q] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Int::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Divides by `z^k` when the low coefficients vanish.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let mut quot = vec![Int::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let f = top / lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &f * c;
            }
            quot[k] = f;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    pub fn eval(&self, z: &Int) -> Int {
        self.coeffs
            .iter()
            .rev()
            .fold(Int::zero(), |acc, c| acc * z + c)
    }

    /// `z^window * p(1/z)`, or `None` if the degree exceeds `window`.
    pub fn reflect(&self, window: usize) -> Option<Self> {
        if self.coeffs.len() > window + 1 {
            return None;
        }
        let mut v = self.padded(window + 1);
        v.reverse();
        Some(Self::new(v))
    }

    /// Whether `p(z) = z^window p(1/z)`.
    pub fn is_palindromic(&self, window: usize) -> bool {
        self.reflect(window).is_some_and(|r| &r == self)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient-wise `self <= other`.
    pub fn dominated_by(&self, other: &IntPolynomial) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) <= other.coeff(i))
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

fn write_terms<C: Clone>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[C],
    is_zero: impl Fn(&C) -> bool,
    is_negative: impl Fn(&C) -> bool,
    abs: impl Fn(&C) -> C,
    is_one: impl Fn(&C) -> bool,
    show: impl Fn(&C) -> String,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if is_zero(c) {
            continue;
        }
        let neg = is_negative(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let a = abs(c);
        match i {
            0 => write!(f, "{}", show(&a))?,
            _ => {
                if !is_one(&a) {
                    write!(f, "{}", show(&a))?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Sparse ascending form, e.g. `1 + z^2 + z^4`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            &self.coeffs,
            Zero::is_zero,
            Signed::is_negative,
            Signed::abs,
            One::is_one,
            ToString::to_string,
        )
    }
}

/// Polynomial with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// The unique polynomial of degree `< points.len()` through the points.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let n = points.len();
        let mut out = vec![Rational::zero(); n];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis polynomial prod_{j != i} (x - xj) / (xi - xj)
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (k, b) in basis.iter().enumerate() {
                out[k] += b * &scale;
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            &self.coeffs,
            Zero::is_zero,
            Signed::is_negative,
            Signed::abs,
            One::is_one,
            |c| {
                let s = format_rational(c);
                if c.is_integer() {
                    s
                } else {
                    format!("({s})")
                }
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn display_sparse() {
        assert_eq!(IntPolynomial::from_i64(&[0, 0, 1, 0, 1]).to_string(), "z^2 + z^4");
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 1, 0, 1, 0]).to_string(), "1 + z^2 + z^4");
        assert_eq!(IntPolynomial::from_i64(&[1, -3, 0, 2]).to_string(), "1 - 3z + 2z^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[0, -1]).to_string(), "-z");
    }

    #[test]
    fn exact_division() {
        let s = IntPolynomial::from_i64(&[1, 0, 1, 1, 0, 1]);
        let num = &s * &IntPolynomial::one_minus_power(3);
        let q = num.div_exact(&IntPolynomial::one_minus_power(4)).unwrap();
        assert_eq!(q, IntPolynomial::from_i64(&[1, 0, 1, 0, 1]));
        assert!(IntPolynomial::from_i64(&[1, 1])
            .div_exact(&IntPolynomial::from_i64(&[1, 0, 1]))
            .is_none());
        assert!(IntPolynomial::from_i64(&[1, 2, 1])
            .div_exact(&IntPolynomial::from_i64(&[1, 2]))
            .is_none());
    }

    #[test]
    fn inflate_shift_reflect() {
        let p = IntPolynomial::from_i64(&[1, 4, 1]);
        assert_eq!(p.inflate(3), IntPolynomial::from_i64(&[1, 0, 0, 4, 0, 0, 1]));
        assert_eq!(p.shift(2).unshift(2), Some(p.clone()));
        assert!(p.is_palindromic(2));
        assert!(!p.is_palindromic(3));
        assert!(IntPolynomial::from_i64(&[0, 1, 1]).is_palindromic(3));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // L(t) = floor(t/2) + 1 on even t is t/2 + 1
        let pts = vec![(rat(0, 1), rat(1, 1)), (rat(2, 1), rat(2, 1))];
        let p = RatPolynomial::interpolate(&pts);
        assert_eq!(p.coeffs(), &[rat(1, 1), rat(1, 2)]);
        assert_eq!(p.to_string(), "1 + (1/2)z");
    }
}
