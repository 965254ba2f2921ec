//! The operad 𝒰𝒜𝓈 of unital associative algebras, with `𝒰𝒜𝓈(n) = 𝕜𝕊ₙ`.

mod element;
pub mod index;
mod lie;
mod poly;
mod text;

pub use element::OperadElement;
pub use index::Move;
pub use lie::{dynkin, tau, tau_composition, tau_n};
pub use poly::{phi, proper_polynomial, psi, MultilinearPolynomial};

/// Elements with rational coefficients.
pub type Element = OperadElement<crate::Rational>;
