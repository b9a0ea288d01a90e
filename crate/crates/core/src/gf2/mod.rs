//! The F₂ heart of a permutation module and its simplicity.
//!
//! For a group G acting on `n` points (`n` odd), `F₂ⁿ` splits as the
//! constants plus the sum-zero vectors; the latter is the heart. Simplicity
//! is decided by spinning every nonzero vector, which is complete over F₂,
//! and absolute simplicity by the dimension of the commutant.

mod bitmatrix;
mod heart;
mod perm;

pub use bitmatrix::BitMatrix;
pub use heart::{
    heart_module, standard_generators, GroupTag, HeartModule, ModuleReport, MAX_ANALYZE_DIM,
};
pub use perm::{generate_group, Permutation};
