//! Occupation-time moments from one-dimensional positivity data.
//!
//! For a well-behaved process X, the m-th moment of the time spent positive
//! up to t is a sum over set partitions of {1, .., m} of iterated
//! convolutions built from the positivity function p(s) = P(X_s > 0):
//! each block of size k contributes the factor u^{k-1} p(u), the factors of
//! a partition are convolved, and the result is integrated over [0, t].
//! This module evaluates those sums on uniform grids, both through the
//! collapsed block-size profiles and through the raw partition sum, and
//! carries the exact Spitzer-type identities that tie walk survival
//! probabilities to the same partition structure.

mod convolution;
mod grid;
mod moments;
mod spitzer;

pub use convolution::{discrete_convolution, monomial_convolution, trapezoid};
pub use grid::{PositivityFunction, TimeGrid};
pub use moments::{
    constant_occupation_moment, occupation_moment, occupation_moment_naive,
    occupation_second_moment_direct, MomentMethod, MomentResult, MAX_MOMENT_ORDER,
    MAX_NAIVE_MOMENT_ORDER,
};
pub use spitzer::{
    poisson_sampled_laplace, spitzer_generating_check, survival_probability_partition,
    MAX_SPITZER_ORDER,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    /// Grid construction with a nonpositive horizon or too few points.
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: &'static str },
    /// The grid handed in does not end at the requested horizon.
    #[error("grid ends at {grid_end} but the moment horizon is {t}")]
    GridMismatch { grid_end: f64, t: f64 },
    /// Sampled slices of different length than the grid.
    #[error("expected {expected} samples, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    /// Moment order outside the supported range.
    #[error("moment order {m} outside the supported range {min}..={max}")]
    OrderOutOfRange { m: usize, min: usize, max: usize },
    /// Parameters that do not describe a positivity function.
    #[error("invalid positivity function: {reason}")]
    InvalidPositivity { reason: &'static str },
    /// A tabulated positivity function that does not cover the horizon.
    #[error("tabulated positivity covers [0, {covered}] but [0, {needed}] is required")]
    TabulatedCoverage { covered: f64, needed: f64 },
    /// Monomial exponents must be strictly positive.
    #[error("monomial exponent {value} must be positive and finite")]
    InvalidExponent { value: f64 },
    /// A probability sequence shorter than the requested order.
    #[error("need survival inputs up to order {needed}, got {got}")]
    InsufficientSequence { needed: usize, got: usize },
    /// A probability outside [0, 1] where one was required.
    #[error("{name} = {value} is not a probability")]
    NotAProbability { name: &'static str, value: f64 },
    /// Transform rates must be strictly positive.
    #[error("rate q = {value} must be positive and finite")]
    InvalidRate { value: f64 },
}
