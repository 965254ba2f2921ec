//! Exact computations in the operad of unital associative algebras: the
//! permutation-module structure, truncation ideals, ideal generation and
//! growth of the resulting quotient operads.

pub mod error;
pub mod ideal;
pub mod linalg;
pub mod operad;
pub mod pi;
pub mod rep;
pub mod serde_rational;
pub mod series;
pub mod symmetric;
pub mod truncation;

pub use error::{Error, Result};

/// Exact rationals.
pub type Rational = num_rational::BigRational;

pub use operad::Element;

/// Subspaces of ℚⁿ.
pub type QSubspace = linalg::Subspace<Rational>;
