//! Statistical gates: Kolmogorov-Smirnov distance against a reference
//! distribution function and z-scores of Monte Carlo estimates.

use super::AnalysisError;

/// Kolmogorov-Smirnov statistic of a sorted sample against a reference
/// distribution function.
///
/// Both one-sided envelopes are taken, i.e. the supremum of
/// |F_n(x) - F(x)| over the whole line, not only at sample points from one
/// side. The sample must be sorted ascending and nonempty.
pub fn ks_statistic<F>(sorted_sample: &[f64], cdf: F) -> Result<f64, AnalysisError>
where
    F: Fn(f64) -> f64,
{
    if sorted_sample.is_empty() {
        return Err(AnalysisError::EmptySample);
    }
    if sorted_sample.windows(2).any(|w| w[0] > w[1]) {
        return Err(AnalysisError::UnsortedSample);
    }
    let n = sorted_sample.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in sorted_sample.iter().enumerate() {
        let f = cdf(x);
        d = d.max(f - i as f64 / n).max((i as f64 + 1.0) / n - f);
    }
    Ok(d)
}

/// Asymptotic p-value of a Kolmogorov-Smirnov statistic d at sample size n,
/// with the standard finite-sample adjustment of the argument.
pub fn ks_pvalue(d: f64, n: usize) -> f64 {
    if d <= 0.0 {
        return 1.0;
    }
    let sqrt_n = (n as f64).sqrt();
    let lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100 {
        let term = (-2.0 * (k as f64 * lambda).powi(2)).exp();
        sum += sign * term;
        sign = -sign;
        if term < 1e-17 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Standardized deviation (estimate - reference) / stderr.
///
/// A zero standard error makes the comparison exact: the z-score is zero
/// when the estimate matches the reference and infinite (with the sign of
/// the deviation) when it does not, so downstream gates flag it.
pub fn z_score(estimate: f64, stderr: f64, reference: f64) -> f64 {
    let deviation = estimate - reference;
    if stderr == 0.0 {
        if deviation == 0.0 {
            return 0.0;
        }
        return f64::INFINITY.copysign(deviation);
    }
    deviation / stderr
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn uniform_cdf(x: f64) -> f64 {
        x.clamp(0.0, 1.0)
    }

    #[test]
    fn single_point_sample() {
        let d = ks_statistic(&[0.5], uniform_cdf).unwrap();
        assert_eq!(d, 0.5);
    }

    #[test]
    fn ideal_quantile_sample_reaches_the_floor() {
        // points at (i + 1/2)/n leave a gap of exactly 1/(2n) on each side
        for n in [4usize, 17, 100] {
            let sample: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
            let d = ks_statistic(&sample, uniform_cdf).unwrap();
            assert!((d - 0.5 / n as f64).abs() < 1e-15, "n = {n}");
        }
    }

    #[test]
    fn both_envelopes_are_seen() {
        // sample compressed to the left: the positive envelope dominates;
        // compressed to the right: the negative one. Both must be caught.
        let left: Vec<f64> = (0..10).map(|i| 0.05 * i as f64).collect();
        let right: Vec<f64> = (0..10).map(|i| 0.55 + 0.05 * i as f64).collect();
        let dl = ks_statistic(&left, uniform_cdf).unwrap();
        let dr = ks_statistic(&right, uniform_cdf).unwrap();
        assert!((dl - 0.55).abs() < 1e-15, "dl = {dl}");
        assert!((dr - 0.55).abs() < 1e-15, "dr = {dr}");
    }

    #[test]
    fn rejects_bad_samples() {
        assert!(matches!(
            ks_statistic(&[], uniform_cdf),
            Err(AnalysisError::EmptySample)
        ));
        assert!(matches!(
            ks_statistic(&[0.3, 0.2], uniform_cdf),
            Err(AnalysisError::UnsortedSample)
        ));
    }

    #[test]
    fn uniform_sample_passes_its_own_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut sample: Vec<f64> = (0..100_000).map(|_| rng.random::<f64>()).collect();
        sample.sort_by(f64::total_cmp);
        let d = ks_statistic(&sample, uniform_cdf).unwrap();
        assert!(d < 0.006, "d = {d}");
        // and fails a wrong law decisively
        let d_wrong = ks_statistic(&sample, |x| uniform_cdf(x).powi(2)).unwrap();
        assert!(d_wrong > 0.2, "d_wrong = {d_wrong}");
    }

    #[test]
    fn pvalue_decreases_in_d() {
        let n = 1000;
        let mut prev = 1.0;
        for i in 1..60 {
            let d = i as f64 * 0.002;
            let p = ks_pvalue(d, n);
            // the flat region near p = 1 is only monotone up to roundoff
            // of the alternating series
            assert!(p <= prev + 1e-12, "d = {d}");
            assert!((0.0..=1.0).contains(&p));
            prev = p;
        }
        assert_eq!(ks_pvalue(0.0, n), 1.0);
        // lambda = 1.36 is the classical 5 percent point
        let d = 1.358 / (n as f64).sqrt();
        let p = ks_pvalue(d, n);
        assert!((p - 0.05).abs() < 0.01, "p = {p}");
    }

    #[test]
    fn z_score_semantics() {
        assert!((z_score(0.52, 0.01, 0.5) - 2.0).abs() < 1e-14);
        assert_eq!(z_score(0.5, 0.0, 0.5), 0.0);
        assert_eq!(z_score(0.6, 0.0, 0.5), f64::INFINITY);
        assert_eq!(z_score(0.4, 0.0, 0.5), f64::NEG_INFINITY);
        assert!(z_score(0.5 + 1e-12, 0.0, 0.5).is_infinite());
    }
}
