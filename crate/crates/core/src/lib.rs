//! Exact Ehrhart theory for rational polytopes.
//!
//! The crate computes lattice-point counts, Ehrhart quasipolynomials and
//! h*-polynomials of rational polytopes by three independent routes:
//!
//! * direct counting of lattice points in dilates ([`ehrhart::hstar_by_counting`]),
//! * a Betke–McMullen style sum over a full triangulation
//!   ([`ehrhart::hstar_betke_mcmullen`]),
//! * a Stapledon style sum over a boundary triangulation together with an
//!   interior ray ([`ehrhart::hstar_stapledon`]).
//!
//! On top of those it provides the a/b-decomposition of the "h-bar" polynomial,
//! the coefficient inequalities that follow from it, duality and reflexivity
//! checks. All arithmetic is exact.

pub mod conebox;
pub mod ehrhart;
pub mod error;
pub mod exact;
pub mod io;
pub mod poly;
pub mod polytope;
pub mod scan;
pub mod triangulation;

mod hull;

pub use error::{Error, Result};
pub use exact::{Int, IntMatrix, Rational};
pub use poly::{IntPolynomial, RatPolynomial};
pub use polytope::{FacetInequality, Polytope};
pub use triangulation::{Simplex, Triangulation, TriangulationKind};
