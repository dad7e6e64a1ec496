//! Exact arithmetic for the characteristic-class side of high-dimensional
//! surgery: Bernoulli numbers, multiplicative genera, Pontrjagin characters,
//! plumbing intersection forms, and the obstruction calculus for
//! almost-complex structures built on top of them.
//!
//! Everything is computed over arbitrary-precision rationals — there is no
//! floating point anywhere, so every equality in the test suite and in
//! [`verify`] is exact.
//!
//! Module map, bottom up:
//!
//! * [`numbers`] — big rationals, factorials, and Bernoulli numbers in the
//!   *unsigned, half-index* convention (`B_m` is the absolute value of the
//!   modern `B_{2m}`; see the module docs before touching anything
//!   Bernoulli-adjacent);
//! * [`series`] — dense truncated power series in the even root variable
//!   `z = x^2`;
//! * [`symmetric`] — graded polynomials in the Pontrjagin generators
//!   `p_1, p_2, ...` and the expansion of multiplicative sequences;
//! * [`genera`] — the L- and Ahat-genus, their top coefficients in closed
//!   form, Pontrjagin characters, and pairing polynomials against recorded
//!   characteristic numbers;
//! * [`plumbing`] — plumbing graphs, their intersection matrices, exact
//!   signature and determinant, and the boundary homotopy-sphere criterion;
//! * [`surgery`] — invariant records of (virtual) manifolds, connected
//!   sums, the `W0`/`M0` constructions, and the `bP` group orders;
//! * [`obstruction`] — the top obstruction to almost-complex structures and
//!   its calculus (connected sums, reversal, realization);
//! * [`json`] — the on-disk record formats;
//! * [`verify`] — a named battery of self-checks over frozen values,
//!   runnable from the CLI.

pub mod error;
pub mod genera;
pub mod json;
pub mod numbers;
pub mod obstruction;
pub mod plumbing;
pub mod series;
pub mod surgery;
pub mod symmetric;
pub mod verify;

pub use error::{Error, Result};
pub use numbers::Rational;
