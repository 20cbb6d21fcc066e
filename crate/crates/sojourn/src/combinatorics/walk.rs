//! Persistence probabilities of symmetric random walks.
//!
//! For a walk whose increments have a symmetric continuous law, the chance
//! of staying strictly positive for the first m steps does not depend on
//! the increment law and equals 4^{-m} C(2m, m), which is also the m-th
//! moment of the arcsine law on [0, 1].

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use super::{big, Rational};

/// Persistence probability p_m = P(S_1 > 0, .., S_m > 0) of a symmetric
/// random walk, exactly 4^{-m} C(2m, m); equivalently the m-th moment of
/// the arcsine law. p_0 = 1.
pub fn arcsine_walk_moment(m: usize) -> Rational {
    let numerator = binomial(big(2 * m), big(m));
    let denominator = BigInt::one() << (2 * m);
    Rational::new(numerator, denominator)
}

/// Checks the convolution identity sum_{j=0..m} p_j p_{m-j} = 1 in exact
/// arithmetic.
///
/// The identity splits a path of length m at the index where its maximum is
/// attained; the two sides of the split are independent persistence events.
pub fn persistence_recursion_check(m: usize) -> bool {
    let total: Rational = (0..=m)
        .map(|j| arcsine_walk_moment(j) * arcsine_walk_moment(m - j))
        .sum();
    total == Rational::one()
}
