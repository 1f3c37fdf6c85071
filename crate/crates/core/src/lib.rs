//! Exact computations with monomial ideals: decompositions, polarization,
//! Stanley-Reisner complexes, local cohomology through degree complexes,
//! multigraded Betti numbers, and decision procedures for Cohen-Macaulay,
//! Gorenstein, sequentially Cohen-Macaulay, generalized Cohen-Macaulay,
//! Buchsbaum, clean and level quotients `S/I`.
//!
//! Everything is exact; homology is taken over a [`FieldSpec`] which is part
//! of every field-dependent decision.

pub mod algebra;
pub mod campaign;
pub mod cohomology;
pub mod error;
pub mod field;
pub mod linalg;
pub mod random;
pub mod resolutions;
pub mod simplicial;
pub mod structure;
mod vertex_set;

pub use algebra::{Monomial, MonomialIdeal};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use simplicial::SimplicialComplex;
pub use vertex_set::{VertexSet, MAX_VARS};
