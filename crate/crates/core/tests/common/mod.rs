//! Seeded random polytopes shared by the integration tests.

#![allow(dead_code)]

use ehrhart_core::exact::rat;
use ehrhart_core::{Polytope, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_e4a2_7011;

/// Full-dimensional polytopes with `d` in 1..=3, at most 8 points, vertex
/// coordinates `n / q` with `n` in [-4, 4] and `q` in 1..=4.
pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Corpus {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn point(&mut self, d: usize, q: i64) -> Vec<Rational> {
        (0..d).map(|_| rat(self.rng.gen_range(-4..=4), q)).collect()
    }

    pub fn polytope(&mut self) -> Polytope {
        loop {
            let d = self.rng.gen_range(1..=3usize);
            let q = self.rng.gen_range(1..=4i64);
            let n = self.rng.gen_range(d + 1..=8usize);
            let pts = (0..n).map(|_| self.point(d, q)).collect();
            let p = Polytope::from_vertices(pts).unwrap();
            if p.is_full_dimensional() {
                return p;
            }
        }
    }

    /// `(inner, outer)` with `inner ⊆ outer`, both full-dimensional. The
    /// inner polytope uses some outer vertices and some midpoints of pairs.
    pub fn nested_pair(&mut self) -> (Polytope, Polytope) {
        loop {
            let outer = self.polytope();
            let verts = outer.vertices().to_vec();
            let mut pts: Vec<Vec<Rational>> = verts
                .choose_multiple(&mut self.rng, verts.len().div_ceil(2))
                .cloned()
                .collect();
            for _ in 0..self.rng.gen_range(1..=3) {
                let a = verts.choose(&mut self.rng).unwrap();
                let b = verts.choose(&mut self.rng).unwrap();
                let two = rat(2, 1);
                pts.push(a.iter().zip(b).map(|(x, y)| (x + y) / &two).collect());
            }
            let inner = Polytope::from_vertices(pts).unwrap();
            if inner.is_full_dimensional() {
                return (inner, outer);
            }
        }
    }
}
