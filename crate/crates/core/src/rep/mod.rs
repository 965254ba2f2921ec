//! Characters and decompositions of submodules of `ℚ𝕊ₙ`.

mod character;
mod isotypic;
mod spin;

pub use character::{
    arity_of_ambient, character_of_subspace, check_submodule, decompose, Decomposition,
};
pub use isotypic::{
    enumerate_submodules, isotypic_component, isotypic_projector, multiplicity_space,
    sub_decompositions, submodule_from_multiplicity, young_symmetrizer, SubmoduleEnumeration,
    SubmoduleFamily,
};
pub use spin::{
    cyclic_generator, cyclic_span, spin, spin_with_basis, submodule_generated, SparseInt,
};

use crate::error::{Error, Result};
use crate::operad::Element;
use crate::symmetric::{hook_dimension, Partition};
use crate::QSubspace;

/// A cyclic generator of the irreducible λ-component of `W`.
pub fn component_generator(lambda: &Partition, w: &QSubspace) -> Result<Element> {
    let comp = isotypic_component(w, lambda)?;
    if comp.dim() as u64 != hook_dimension(lambda) {
        return Err(Error::Invalid(format!(
            "{lambda} has multiplicity {} in the module",
            comp.dim() as u64 / hook_dimension(lambda)
        )));
    }
    let n = arity_of_ambient(w.ambient())?;
    Element::from_dense(n, &comp.row(0))
}
