//! Exact computer algebra for the defining ideals of space monomial curves:
//! a Gröbner kernel over ℚ or F_p, symbolic powers by saturation and by
//! closed forms, and containment/resurgence experiments.

pub mod arith;
pub mod containment;
pub mod error;
pub mod groebner;
pub mod linverify;
pub mod manifest;
pub mod moncurve;
pub mod symbolic;

pub use arith::{Field, Monomial, Polynomial, PrimeField, Rationals, Ring, TermOrder, WeightGrading};
pub use error::{Error, Result};
pub use groebner::{Budget, GbConfig, GroebnerBasis, Ideal};
