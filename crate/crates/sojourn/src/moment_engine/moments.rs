//! Occupation-time moments by partition sums of iterated convolutions.

use num_traits::ToPrimitive;

use crate::combinatorics::{block_profiles, enumerate_set_partitions};

use super::convolution::{discrete_convolution, trapezoid};
use super::{EngineError, PositivityFunction, TimeGrid};

/// Largest moment order the profile-collapsed engine accepts.
pub const MAX_MOMENT_ORDER: usize = 12;

/// Largest moment order of the raw partition sum, which enumerates all
/// set partitions and exists as an independent cross-check.
pub const MAX_NAIVE_MOMENT_ORDER: usize = 8;

/// How a moment value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentMethod {
    /// Sum over block-size profiles with multiplicity weights.
    ProfileSum,
    /// Sum over every set partition individually.
    NaivePartitionSum,
}

/// An occupation moment E[A_t^m] together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResult {
    pub m: usize,
    pub value: f64,
    pub method: MomentMethod,
}

/// E[A_t^m] for the occupation time A_t of the positive half-line, from
/// the positivity function p(s) = P(X_s > 0).
///
/// Each set partition of {1, .., m} contributes the integral over [0, t] of
/// the convolution of u^{|B|-1} p(u) over its blocks B; the sum runs over
/// collapsed block-size profiles. The grid must end at t, and tabulated
/// positivity data must cover [0, t].
pub fn occupation_moment(
    p: &PositivityFunction,
    t: f64,
    m: usize,
    grid: &TimeGrid,
) -> Result<MomentResult, EngineError> {
    let samples = validate_inputs(p, t, m, grid, MAX_MOMENT_ORDER)?;
    let factors = block_factors(&samples, m, grid);
    let mut value = 0.0;
    for profile in block_profiles(m) {
        let weight = profile
            .weight()
            .to_f64()
            .expect("profile weights are tiny for m <= 12");
        value += weight * partition_term(profile.sizes(), &factors, grid);
    }
    Ok(MomentResult {
        m,
        value,
        method: MomentMethod::ProfileSum,
    })
}

/// Same moment as [`occupation_moment`], but summed over every set
/// partition without collapsing equal profiles. Exponentially slower and
/// capped at order [`MAX_NAIVE_MOMENT_ORDER`]; kept as a cross-check of
/// the profile weights.
pub fn occupation_moment_naive(
    p: &PositivityFunction,
    t: f64,
    m: usize,
    grid: &TimeGrid,
) -> Result<MomentResult, EngineError> {
    let samples = validate_inputs(p, t, m, grid, MAX_NAIVE_MOMENT_ORDER)?;
    let factors = block_factors(&samples, m, grid);
    let mut value = 0.0;
    for partition in enumerate_set_partitions(m).expect("order already validated") {
        value += partition_term(&partition.block_sizes(), &factors, grid);
    }
    Ok(MomentResult {
        m,
        value,
        method: MomentMethod::NaivePartitionSum,
    })
}

/// Second moment E[A_t^2] through its two-term closed expression
/// int_0^t s p(s) ds + int_0^t (p * p)(s) ds, bypassing the partition
/// machinery.
pub fn occupation_second_moment_direct(
    p: &PositivityFunction,
    t: f64,
    grid: &TimeGrid,
) -> Result<f64, EngineError> {
    let samples = validate_inputs(p, t, 2, grid, 2)?;
    let h = grid.step();
    let weighted: Vec<f64> = grid
        .times()
        .zip(samples.iter())
        .map(|(s, &pv)| s * pv)
        .collect();
    let term_joint = trapezoid(&weighted, h);
    let conv = discrete_convolution(&samples, &samples, grid)?;
    let term_split = trapezoid(&conv, h);
    Ok(term_joint + term_split)
}

/// Closed form for constant positivity c: the occupation fraction follows
/// the generalized arcsine law with exponent c, so
/// E[A_t^m] = t^m c(c+1)..(c+m-1)/m!.
pub fn constant_occupation_moment(c: f64, t: f64, m: usize) -> Result<f64, EngineError> {
    if !(0.0..=1.0).contains(&c) {
        return Err(EngineError::NotAProbability {
            name: "c",
            value: c,
        });
    }
    if !t.is_finite() || t <= 0.0 {
        return Err(EngineError::InvalidGrid {
            reason: "horizon must be positive and finite",
        });
    }
    let mut acc = t.powi(m as i32);
    for i in 0..m {
        acc *= (c + i as f64) / (i as f64 + 1.0);
    }
    Ok(acc)
}

fn validate_inputs(
    p: &PositivityFunction,
    t: f64,
    m: usize,
    grid: &TimeGrid,
    cap: usize,
) -> Result<Vec<f64>, EngineError> {
    if m < 1 || m > cap {
        return Err(EngineError::OrderOutOfRange { m, min: 1, max: cap });
    }
    if !t.is_finite() || t <= 0.0 {
        return Err(EngineError::InvalidGrid {
            reason: "horizon must be positive and finite",
        });
    }
    if (grid.t_end() - t).abs() > 1e-9 * t.max(1.0) {
        return Err(EngineError::GridMismatch {
            grid_end: grid.t_end(),
            t,
        });
    }
    p.sample_on(grid)
}

// samples of u^{k-1} p(u) for every block size k = 1..=m
fn block_factors(p_samples: &[f64], m: usize, grid: &TimeGrid) -> Vec<Vec<f64>> {
    (1..=m)
        .map(|k| {
            grid.times()
                .zip(p_samples.iter())
                .map(|(u, &pv)| u.powi(k as i32 - 1) * pv)
                .collect()
        })
        .collect()
}

fn partition_term(sizes: &[usize], factors: &[Vec<f64>], grid: &TimeGrid) -> f64 {
    let mut acc: Option<Vec<f64>> = None;
    for &k in sizes {
        acc = Some(match acc {
            None => factors[k - 1].clone(),
            Some(prev) => discrete_convolution(&prev, &factors[k - 1], grid)
                .expect("factor lengths match the grid"),
        });
    }
    trapezoid(&acc.expect("profiles have at least one block"), grid.step())
}
