//! Clean filtrations, Lyubeznik size and the batteries over intersections
//! of monomial primes.

mod clean;
mod configuration;
mod size;

pub use clean::{is_clean, radical_step_violations, verify_certificate, CleanCertificate};
pub use configuration::{
    configuration_battery, find_non_gorenstein, find_noncm_witness, gorenstein_battery,
    BatteryStatus, ConfigurationReport, GorensteinReport, GorensteinWitness, NonCmWitness,
    NormalForm, PureConfiguration, SampleSummary, SamplingParams,
};
pub use size::{check_lyubeznik_bound, size, size_by_sums, LyubeznikReport, SizeReport};
