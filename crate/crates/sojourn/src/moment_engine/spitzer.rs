//! Survival probabilities of walks from one-dimensional marginals, and the
//! generating-function identity that checks them.
//!
//! With p_k = P(S_k >= 0), the probability that a walk stays nonnegative
//! for its first m steps is
//!
//! (1/m!) sum over partitions rho of {1, .., m} of prod_B (|B|-1)! p_{|B|},
//!
//! and the same numbers appear as coefficients of
//! exp(sum_k p_k t^k / k). Both routes are implemented over any [`Scalar`],
//! so the identity can be verified exactly in rationals.

use crate::analysis::lgamma_positive;
use crate::combinatorics::{block_profiles, factorial, Scalar};

use super::EngineError;

/// Cap on the orders of the partition and generating-function sums.
pub const MAX_SPITZER_ORDER: usize = 12;

/// Probability that a walk with marginal nonnegativity probabilities
/// p_1, .., p_m (`p[k-1]` holding p_k) stays nonnegative for m steps,
/// through the partition sum.
pub fn survival_probability_partition<T: Scalar>(
    m: usize,
    p: &[T],
) -> Result<T, EngineError> {
    if m == 0 {
        return Ok(T::one());
    }
    if m > MAX_SPITZER_ORDER {
        return Err(EngineError::OrderOutOfRange {
            m,
            min: 1,
            max: MAX_SPITZER_ORDER,
        });
    }
    if p.len() < m {
        return Err(EngineError::InsufficientSequence {
            needed: m,
            got: p.len(),
        });
    }
    let mut total = T::zero();
    for profile in block_profiles(m) {
        let mut term = T::from_count(profile.weight());
        for &s in profile.sizes() {
            term = term * T::from_count(&factorial(s - 1)) * p[s - 1].clone();
        }
        total = total + term;
    }
    Ok(total / T::from_count(&factorial(m)))
}

/// Largest discrepancy, over orders 1..=order, between the partition sum
/// for walk survival and the coefficients of exp(sum_k p_k t^k / k).
///
/// The two sides agree identically; over [`crate::Rational`] the result is
/// exactly zero, over f64 it measures accumulated roundoff.
pub fn spitzer_generating_check<T: Scalar>(p: &[T], order: usize) -> Result<T, EngineError> {
    if order == 0 || order > MAX_SPITZER_ORDER {
        return Err(EngineError::OrderOutOfRange {
            m: order,
            min: 1,
            max: MAX_SPITZER_ORDER,
        });
    }
    if p.len() < order {
        return Err(EngineError::InsufficientSequence {
            needed: order,
            got: p.len(),
        });
    }
    // coefficients of exp(A(t)) with A(t) = sum_k p_k t^k / k, via the
    // derivative recurrence n b_n = sum_j j a_j b_{n-j}
    let mut a = vec![T::zero()];
    for k in 1..=order {
        a.push(p[k - 1].clone() / T::from_index(k));
    }
    let mut b = vec![T::one()];
    for n in 1..=order {
        let mut acc = T::zero();
        for j in 1..=n {
            acc = acc + T::from_index(j) * a[j].clone() * b[n - j].clone();
        }
        b.push(acc / T::from_index(n));
    }

    let mut worst = T::zero();
    for k in 1..=order {
        let partition_side = survival_probability_partition(k, p)?;
        let discrepancy = (partition_side - b[k].clone()).abs();
        if discrepancy > worst {
            worst = discrepancy;
        }
    }
    Ok(worst)
}

/// Laplace transform in t of the occupation moment E[A_t^m] of a
/// self-similar process: with E[A_t^m] = t^m rho_m, the transform at rate
/// q is m! q^{-(m+1)} rho_m.
pub fn poisson_sampled_laplace(
    q: f64,
    m: usize,
    persistence: f64,
) -> Result<f64, EngineError> {
    if !q.is_finite() || q <= 0.0 {
        return Err(EngineError::InvalidRate { value: q });
    }
    if !(0.0..=1.0).contains(&persistence) {
        return Err(EngineError::NotAProbability {
            name: "persistence",
            value: persistence,
        });
    }
    let log_factor = lgamma_positive(m as f64 + 1.0) - (m as f64 + 1.0) * q.ln();
    Ok(log_factor.exp() * persistence)
}
