//! Multilinear identities of finite-dimensional algebras.

mod algebra;
mod identities;

pub use algebra::{FiniteAlgebra, MAX_BUILTIN_DIM};
pub use identities::{
    codim, cross_check, evaluate, identities_component, identities_window, CrossCheck,
    IdentityComponent, Mode, Status, DEFAULT_CAP,
};
