//! Bell polynomials, rising factorials and Stirling numbers of the first
//! kind, generic over the scalar type.
//!
//! The partial Bell polynomial B_{k,l}(w) sums prod_B w_{|B|} over all
//! partitions of a k-element set into l blocks; the complete variant
//! contracts against a second sequence v and yields the exponential
//! generating function coefficients of a composition v(w(x)).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::partition::block_profiles;
use super::{big, CombinatoricsError, Rational};

/// Scalar types the partition sums can run over.
///
/// `f64` gives the fast approximate path, [`Rational`] the exact one; both
/// see the same code, so exact tests pin down the floating-point results.
pub trait Scalar: Clone + Signed + PartialOrd {
    /// Embeds an exact integer count.
    fn from_count(n: &BigInt) -> Self;
    /// Embeds a small nonnegative integer.
    fn from_index(n: usize) -> Self;
}

impl Scalar for f64 {
    fn from_count(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::INFINITY)
    }

    fn from_index(n: usize) -> Self {
        n as f64
    }
}

impl Scalar for Rational {
    fn from_count(n: &BigInt) -> Self {
        Rational::from(n.clone())
    }

    fn from_index(n: usize) -> Self {
        Rational::from(big(n))
    }
}

/// Rising factorial x (x+1) ... (x+m-1), with the empty product for m = 0.
pub fn rising_factorial<T: Scalar>(x: &T, m: usize) -> T {
    let mut acc = T::one();
    for i in 0..m {
        acc = acc * (x.clone() + T::from_index(i));
    }
    acc
}

/// Unsigned Stirling number of the first kind: permutations of m elements
/// with exactly b cycles.
pub fn unsigned_stirling_first(m: usize, b: usize) -> BigInt {
    use num_traits::{One, Zero};
    if b > m {
        return BigInt::zero();
    }
    if m == 0 {
        return BigInt::one();
    }
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for k in 1..=m {
        for j in (1..=k).rev() {
            row[j] = row[j - 1].clone() + big(k - 1) * &row[j];
        }
        row[0] = BigInt::zero();
    }
    row[b].clone()
}

/// Partial Bell polynomial B_{k,l}(w_1, w_2, ..): the sum of
/// prod_{B in rho} w_{|B|} over all partitions rho of a k-element set into
/// exactly l blocks.
///
/// Needs w_1 through w_{k-l+1}; `w[j]` holds w_{j+1}.
pub fn partial_bell<T: Scalar>(k: usize, l: usize, w: &[T]) -> Result<T, CombinatoricsError> {
    if l > k {
        return Ok(T::zero());
    }
    if k == 0 {
        return Ok(T::one());
    }
    if l == 0 {
        return Ok(T::zero());
    }
    let needed = k - l + 1;
    if w.len() < needed {
        return Err(CombinatoricsError::InsufficientCoefficients {
            needed,
            got: w.len(),
        });
    }
    let mut total = T::zero();
    for profile in block_profiles(k) {
        if profile.block_count() != l {
            continue;
        }
        let mut term = T::from_count(profile.weight());
        for &s in profile.sizes() {
            term = term * w[s - 1].clone();
        }
        total = total + term;
    }
    Ok(total)
}

/// Complete Bell contraction sum_{l=1..k} v_l B_{k,l}(w).
///
/// If v and w are the exponential generating function coefficient sequences
/// of series with zero constant term, this is the k-th coefficient sequence
/// entry of the composition v(w(x)). Both slices must carry at least k
/// entries; the result for k = 0 is zero, matching the constant term of the
/// composed series.
pub fn complete_bell<T: Scalar>(k: usize, v: &[T], w: &[T]) -> Result<T, CombinatoricsError> {
    if k == 0 {
        return Ok(T::zero());
    }
    if v.len() < k || w.len() < k {
        return Err(CombinatoricsError::InsufficientCoefficients {
            needed: k,
            got: v.len().min(w.len()),
        });
    }
    let mut total = T::zero();
    for l in 1..=k {
        let b = partial_bell(k, l, w)?;
        total = total + v[l - 1].clone() * b;
    }
    Ok(total)
}
