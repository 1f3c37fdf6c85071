//! Exact arithmetic of monomials and monomial ideals.

mod decomposition;
mod ideal;
mod monomial;
mod parse;
mod polarization;

pub use decomposition::{minimal_sets, IrreducibleComponent};
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::Monomial;
pub(crate) use parse::split_header;
pub use parse::{parse_ideal, parse_monomial};
pub use polarization::{depolarize_radical, polarize, polarize_step, PolarizationRecord};
