//! Special functions, reference distributions and the statistical gates
//! used by the verification experiments.

mod dist;
mod special;
pub mod stats;

pub use dist::{
    arcsine_cdf, generalized_arcsine_cdf, generalized_arcsine_moment, GeneralizedArcsine,
    MomentSequence,
};
pub use special::{beta, erf, log_gamma, regularized_incomplete_beta};
pub use stats::{ks_pvalue, ks_statistic, z_score};

pub(crate) use special::lgamma_positive;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    /// Argument outside the domain of the function.
    #[error("{name} = {value} is outside the domain {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    /// A sample slice was empty.
    #[error("sample must be nonempty")]
    EmptySample,
    /// A sample slice was not sorted ascending.
    #[error("sample must be sorted ascending")]
    UnsortedSample,
}
