//! Brute-force enumeration of integer points in a box cut out by linear
//! constraints. This is the independent counting oracle: it shares nothing
//! with the cone decompositions. The innermost coordinate is solved as an
//! interval instead of being stepped through point by point.

use std::ops::ControlFlow;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::Int;

/// Candidate-volume cap for box scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanLimit(pub Option<u128>);

impl ScanLimit {
    pub const UNLIMITED: ScanLimit = ScanLimit(None);
    pub const DEFAULT_CAP: u128 = 100_000_000;

    pub fn capped(limit: u128) -> Self {
        ScanLimit(Some(limit))
    }

    /// Reads `EHRHART_MAX_SCAN`, falling back to 10^8.
    pub fn from_env() -> Self {
        let cap = std::env::var("EHRHART_MAX_SCAN")
            .ok()
            .and_then(|v| v.trim().parse::<u128>().ok())
            .unwrap_or(Self::DEFAULT_CAP);
        ScanLimit(Some(cap))
    }

    pub fn check(&self, volume: u128) -> crate::Result<()> {
        match self.0 {
            Some(limit) if volume > limit => Err(crate::Error::ScanTooLarge { volume, limit }),
            _ => Ok(()),
        }
    }
}

/// Integer points `x` with `lower <= x <= upper`, `a·x <= b` for every
/// inequality and `a·x = b` for every equality.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    pub lower: Vec<Int>,
    pub upper: Vec<Int>,
    pub inequalities: Vec<(Vec<Int>, Int)>,
    pub equalities: Vec<(Vec<Int>, Int)>,
}

impl LinearSystem {
    pub fn new(lower: Vec<Int>, upper: Vec<Int>) -> Self {
        assert_eq!(lower.len(), upper.len());
        LinearSystem {
            lower,
            upper,
            inequalities: Vec::new(),
            equalities: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// Number of lattice points in the bounding box, saturating.
    pub fn box_volume(&self) -> u128 {
        let mut vol: u128 = 1;
        for (lo, hi) in self.lower.iter().zip(&self.upper) {
            if hi < lo {
                return 0;
            }
            let w = (hi - lo + Int::one()).to_u128().unwrap_or(u128::MAX);
            vol = vol.saturating_mul(w);
        }
        vol
    }

    pub fn count(&self) -> u64 {
        let mut total = 0u64;
        let _ = self.walk_lines(&mut |_, lo, hi| {
            total += (hi - lo + Int::one()).to_u64().expect("count fits in u64");
            ControlFlow::Continue(())
        });
        total
    }

    /// Lexicographically smallest point, if any.
    pub fn first_point(&self) -> Option<Vec<Int>> {
        let mut found = None;
        let _ = self.walk_lines(&mut |prefix, lo, _| {
            let mut p = prefix.to_vec();
            p.push(lo.clone());
            found = Some(p);
            ControlFlow::Break(())
        });
        found
    }

    /// All points in lexicographic order.
    pub fn points(&self) -> Vec<Vec<Int>> {
        let mut out = Vec::new();
        let _ = self.walk_lines(&mut |prefix, lo, hi| {
            let mut x = lo.clone();
            while &x <= hi {
                let mut p = prefix.to_vec();
                p.push(x.clone());
                out.push(p);
                x += 1;
            }
            ControlFlow::Continue(())
        });
        out
    }

    /// Calls `f(prefix, lo, hi)` for every nonempty run of points sharing the
    /// first `dim - 1` coordinates.
    fn walk_lines<F>(&self, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Int], &Int, &Int) -> ControlFlow<()>,
    {
        let dim = self.dim();
        assert!(dim > 0, "scan needs at least one coordinate");
        let mut ineq_res: Vec<Int> = self.inequalities.iter().map(|(_, b)| b.clone()).collect();
        let mut eq_res: Vec<Int> = self.equalities.iter().map(|(_, b)| b.clone()).collect();
        let mut prefix = Vec::with_capacity(dim);
        self.descend(0, &mut prefix, &mut ineq_res, &mut eq_res, f)
    }

    fn descend<F>(
        &self,
        k: usize,
        prefix: &mut Vec<Int>,
        ineq_res: &mut [Int],
        eq_res: &mut [Int],
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[Int], &Int, &Int) -> ControlFlow<()>,
    {
        let dim = self.dim();
        if k + 1 == dim {
            return match self.last_interval(ineq_res, eq_res) {
                Some((lo, hi)) => f(prefix, &lo, &hi),
                None => ControlFlow::Continue(()),
            };
        }
        let (lo, hi) = (&self.lower[k], &self.upper[k]);
        if hi < lo {
            return ControlFlow::Continue(());
        }
        for (r, (a, _)) in ineq_res.iter_mut().zip(&self.inequalities) {
            *r -= &a[k] * lo;
        }
        for (r, (a, _)) in eq_res.iter_mut().zip(&self.equalities) {
            *r -= &a[k] * lo;
        }
        let mut x = lo.clone();
        let flow = loop {
            prefix.push(x.clone());
            let flow = self.descend(k + 1, prefix, ineq_res, eq_res, f);
            prefix.pop();
            if flow.is_break() || &x == hi {
                break flow;
            }
            x += 1;
            for (r, (a, _)) in ineq_res.iter_mut().zip(&self.inequalities) {
                *r -= &a[k];
            }
            for (r, (a, _)) in eq_res.iter_mut().zip(&self.equalities) {
                *r -= &a[k];
            }
        };
        // restore residuals to their value on entry
        for (r, (a, _)) in ineq_res.iter_mut().zip(&self.inequalities) {
            *r += &a[k] * &x;
        }
        for (r, (a, _)) in eq_res.iter_mut().zip(&self.equalities) {
            *r += &a[k] * &x;
        }
        flow
    }

    fn last_interval(&self, ineq_res: &[Int], eq_res: &[Int]) -> Option<(Int, Int)> {
        let k = self.dim() - 1;
        let mut lo = self.lower[k].clone();
        let mut hi = self.upper[k].clone();
        for (r, (a, _)) in eq_res.iter().zip(&self.equalities) {
            let c = &a[k];
            if c.is_zero() {
                if !r.is_zero() {
                    return None;
                }
                continue;
            }
            if !r.is_multiple_of(c) {
                return None;
            }
            let x = r / c;
            if x < lo || x > hi {
                return None;
            }
            lo = x.clone();
            hi = x;
        }
        for (r, (a, _)) in ineq_res.iter().zip(&self.inequalities) {
            let c = &a[k];
            if c.is_zero() {
                if r.is_negative() {
                    return None;
                }
            } else if c.is_positive() {
                let b = r.div_floor(c);
                if b < hi {
                    hi = b;
                }
            } else {
                let b = r.div_ceil(c);
                if b > lo {
                    lo = b;
                }
            }
            if hi < lo {
                return None;
            }
        }
        (lo <= hi).then_some((lo, hi))
    }
}
