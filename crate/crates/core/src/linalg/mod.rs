//! Exact linear algebra over fields, with a multimodular fast path for ℚ.

mod bareiss;
mod field;
pub mod modular;
mod subspace;

pub use bareiss::bareiss;
pub use field::{Field, Fp};
pub use modular::{IntSpanBuilder, IntegerView};
pub use subspace::{gauss_jordan, kernel, rref, trace_on_invariant_subspace, Subspace};
