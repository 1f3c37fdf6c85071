//! Simplicial complexes, Stanley-Reisner correspondence, degree complexes,
//! reduced homology and shellability.

mod complex;
mod homology;
mod shelling;

pub use complex::{delta_a, SimplicialComplex};
pub(crate) use homology::relative_homology_by_size;
pub use homology::{reduced_homology, reduced_homology_direct, HomologyProfile};
pub use shelling::{extends_shelling, is_shellable, is_shelling_order, reisner_cm};
