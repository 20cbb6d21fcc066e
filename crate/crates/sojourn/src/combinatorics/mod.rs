//! Combinatorial backbone: set partitions, Bell polynomials, persistence
//! probabilities of random walks, and the cyclic-shift lemma for planar
//! point lists.
//!
//! Everything here is exact. Computations run either over arbitrary
//! precision integers/rationals or over any scalar type implementing
//! [`Scalar`], so the same partition sums serve both the exact identity
//! checks and the floating-point moment engine.

mod bell;
mod partition;
mod planar;
mod walk;

pub use bell::{
    complete_bell, partial_bell, rising_factorial, unsigned_stirling_first, Scalar,
};
pub use partition::{
    bell_number, block_profiles, enumerate_set_partitions, stirling_second, BlockProfile,
    SetPartition, SetPartitions, MAX_PARTITION_GROUND_SET,
};
pub use planar::{baxter_unique_shift, cyclic_shifts, left_half_space_contains, PlanarPoint};
pub use walk::{arcsine_walk_moment, persistence_recursion_check};

pub(crate) use partition::factorial;

use num_bigint::BigInt;
use thiserror::Error;

/// Exact rational scalar used throughout the exact code paths.
///
/// Values are kept reduced with a positive denominator by construction.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CombinatoricsError {
    /// Ground set size beyond the enumeration cap; the number of set
    /// partitions grows faster than exponentially.
    #[error("ground set of size {m} exceeds the enumeration cap {cap}")]
    GroundSetTooLarge { m: usize, cap: usize },
    /// The half-space test needs a nonzero reference direction.
    #[error("half space is undefined for the zero direction")]
    ZeroDirection,
    /// The admissible cyclic shift was not unique. For generic (skew)
    /// point lists exactly one shift is admissible; ties indicate a
    /// degenerate configuration.
    #[error("expected exactly one admissible cyclic shift, found {count}")]
    DegenerateShiftCount { count: usize },
    /// A weight sequence was too short for the requested order.
    #[error("need {needed} coefficients, got {got}")]
    InsufficientCoefficients { needed: usize, got: usize },
    /// Explicit blocks that do not form a canonical set partition.
    #[error("malformed set partition: {reason}")]
    MalformedPartition { reason: &'static str },
    /// Empty input where at least one element is required.
    #[error("input must be nonempty")]
    EmptyInput,
}

pub(crate) fn big(n: usize) -> BigInt {
    BigInt::from(n)
}
