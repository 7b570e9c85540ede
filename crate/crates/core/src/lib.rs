//! Exact computational commutative algebra for monomial ideals: colengths,
//! Hilbert-Samuel multiplicities, Newton polyhedra and integral closures in
//! polynomial and normal affine semigroup rings, together with T-graded
//! machinery, bound verification, and enumeration of m-primary ideals.
//!
//! Every quantity is an exact integer or rational; no floating point is used
//! anywhere.

pub mod bounds;
pub mod closure;
pub mod cone;
pub mod enumerate;
pub mod error;
pub mod exponent;
pub mod ideal;
pub mod linalg;
pub mod multiplicity;
pub mod ring;
pub mod tgraded;

pub use error::{Error, Result};
pub use exponent::ExponentVector;
pub use ideal::{ComplementSet, MonomialIdeal};
pub use ring::AmbientRing;
