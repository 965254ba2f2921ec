//! Operadic ideals of `𝒰𝒜𝓈`: components, closures, generating degrees and
//! generalized truncation ideals.

mod classify;
mod degree;
mod gt;
mod oracle;
mod presentation;
mod window;

pub use classify::{
    admissible_prefixes, admissible_sequences, classify_gkdim, completion_types, forced_part,
    maximal_indices, module_decomposition, pair_classes, pair_ideal, pair_type_degrees,
    realize_completion, sequence_classes, top_lattice, ClassifiedIdeal, FamilyPoint, IdealKind,
    PairClass, PairCount, PairDegree, PairType, TopModule,
};
pub use degree::{
    gen_degree, gen_degree_certified, generates, single_generator, theorem_bound, GenDegree,
};
pub use gt::{
    admissible_check, contains_ideal, gt_general, gt_type1, maximal_wrt_gkdim, pointwise_component,
    AdmissibilityReport, AdmissibleSequence,
};
pub use oracle::{closure_fixpoint_oracle, OracleReport};
pub use presentation::{ideal_component, Generator, IdealPresentation};
pub use window::{IdealWindow, WindowSummary};
