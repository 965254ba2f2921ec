mod character;
mod partition;
mod permutation;

pub use character::{
    character_table, conjugacy_classes, regular_character, sign_character, CharacterTable,
    CharacterVector, ClassInfo,
};
pub use partition::{hook_dimension, Partition};
pub use permutation::{c_permutation, Permutation};
