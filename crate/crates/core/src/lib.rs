//! Exact-arithmetic invariants of simple matroids.
//!
//! The crate computes, over ℚ, 𝔽ₚ and ℤ: the lattice of flats with Möbius
//! values, the Orlik–Solomon algebra and its Betti numbers, resonance
//! varieties by exhaustive finite-field enumeration, Koszul module graded
//! dimensions, multinets and nets with their Latin-square dictionary, and
//! holonomy Lie algebra ranks (with integer torsion) together with the
//! holonomy Chen ranks.
//!
//! All core linear algebra is generic over the [`scalar::Field`] scalar;
//! the concrete instances are `BigRational` and [`scalar::Fp`].

pub mod error;
pub mod fpdense;
pub mod intmat;
pub mod matrix;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::{Field, Fp};

/// Rational scalar used throughout: arbitrary-precision, always reduced.
pub type Rat = num_rational::BigRational;

/// Dense matrix over ℚ.
pub type QMatrix = matrix::Matrix<Rat>;

/// Dense matrix over 𝔽ₚ.
pub type FpMatrix = matrix::Matrix<Fp>;
