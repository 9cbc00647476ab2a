//! Exact bookkeeping for parabolic vector bundles on curves and the fixed
//! points of torsion line bundles acting on their moduli.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, cyclotomic fields, integer polynomials and exact
//!   Gaussian elimination.
//! * [`parabolic`]: weights, multiplicities, parabolic degree and slope, and
//!   the genericity (wall) test.
//! * [`cover`]: cyclic étale covers as ordered fibres, with parabolic
//!   push-forward, pull-back and Galois twists.
//! * [`eigenflag`]: nested eigenbases of flag-preserving automorphisms and
//!   the descent of a flag to the fibres of a cover.
//! * [`strata`]: fixed-point strata, their multiplicity matrices and the
//!   codimension report.
//! * [`flagcoh`]: Weyl groups, Poincaré polynomials of `G/P` and Picard
//!   rank assembly.
//! * [`cli`]: JSON job handling behind the `pstrata` binary.

pub mod cli;
pub mod cover;
pub mod eigenflag;
pub mod exact;
pub mod flagcoh;
pub mod parabolic;
pub mod strata;

pub use exact::{Cyclotomic, ExactMatrix, Field, IntPolynomial, Rational};
