//! Hodge spectrum of central hyperplane arrangements.
//!
//! The spectrum is computed purely from the intersection lattice: the
//! characteristic classes of the wonderful model are built as truncated
//! power series in the classes `c_V`, and each spectral multiplicity is read
//! off as a top-degree intersection number in the presented cohomology ring.
//!
//! Pipeline:
//!
//! 1. [`arrangement`]: validated input and the intersection lattice.
//! 2. [`nested`]: building set, nestedness and the exponents of the relations.
//! 3. [`ring`]: ideal presentation and top-degree evaluation.
//! 4. [`chern`]: Chern, Todd and Chern-character series.
//! 5. [`spectrum`]: eigenvalue bookkeeping and the final multiplicities.
//!
//! [`document`], [`fixtures`] and [`verify`] carry the I/O formats, the
//! built-in arrangements and the independent consistency checks.

pub mod arrangement;
pub mod chern;
pub mod document;
mod error;
pub mod fixtures;
pub mod linalg;
pub mod nested;
pub mod poly;
pub mod ring;
pub mod spectrum;
pub mod symmetric;
pub mod verify;

pub use arrangement::{Arrangement, Flat, Hyperplane, IntersectionLattice};
pub use chern::CharClassBundle;
pub use error::{Error, Result};
pub use nested::BuildingSet;
pub use poly::{GradedPoly, Monomial};
pub use ring::IdealPresentation;
pub use spectrum::{
    BuildingSetChoice, Options, SpectralPoint, SpectrumEngine, SpectrumResult,
};

/// Exact rational numbers used throughout.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
