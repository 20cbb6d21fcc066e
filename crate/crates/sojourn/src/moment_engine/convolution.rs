//! Trapezoid-rule convolution on uniform grids and the closed form for
//! convolving monomials.

use crate::analysis::lgamma_positive;

use super::{EngineError, TimeGrid};

/// Convolution (f * g)(t_i) = int_0^{t_i} f(t_i - s) g(s) ds of two
/// functions sampled on the same grid, by the trapezoid rule.
///
/// Entry 0 is exactly zero; the scheme is second order for smooth inputs.
pub fn discrete_convolution(
    f: &[f64],
    g: &[f64],
    grid: &TimeGrid,
) -> Result<Vec<f64>, EngineError> {
    for s in [f, g] {
        if s.len() != grid.num_points() {
            return Err(EngineError::LengthMismatch {
                expected: grid.num_points(),
                got: s.len(),
            });
        }
    }
    let h = grid.step();
    let n = f.len();
    let mut out = vec![0.0; n];
    for i in 1..n {
        let mut acc = 0.5 * (f[0] * g[i] + f[i] * g[0]);
        for j in 1..i {
            acc += f[j] * g[i - j];
        }
        out[i] = acc * h;
    }
    Ok(out)
}

/// Trapezoid-rule integral of values sampled with spacing h.
pub fn trapezoid(values: &[f64], h: f64) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let sum: f64 = values.iter().sum();
    h * (sum - 0.5 * (values[0] + values[values.len() - 1]))
}

/// Closed form for the iterated convolution of monomials: with factors
/// u^{a_k - 1}, the k-fold convolution evaluated at t equals
/// prod Gamma(a_k) / Gamma(sum a) * t^{sum a - 1}.
pub fn monomial_convolution(exponents: &[f64], t: f64) -> Result<f64, EngineError> {
    if exponents.is_empty() {
        return Err(EngineError::InsufficientSequence { needed: 1, got: 0 });
    }
    if !t.is_finite() || t <= 0.0 {
        return Err(EngineError::InvalidGrid {
            reason: "evaluation point must be positive and finite",
        });
    }
    let mut log_num = 0.0;
    let mut total = 0.0;
    for &a in exponents {
        if !a.is_finite() || a <= 0.0 {
            return Err(EngineError::InvalidExponent { value: a });
        }
        log_num += lgamma_positive(a);
        total += a;
    }
    Ok((log_num - lgamma_positive(total) + (total - 1.0) * t.ln()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(t: f64, n: usize) -> TimeGrid {
        TimeGrid::new(t, n).unwrap()
    }

    #[test]
    fn convolution_of_constants_is_linear() {
        // 1 * 1 = t, exactly reproduced by the trapezoid weights
        let g = grid(2.0, 8);
        let ones = vec![1.0; g.num_points()];
        let conv = discrete_convolution(&ones, &ones, &g).unwrap();
        for (i, &v) in conv.iter().enumerate() {
            assert!((v - g.time(i)).abs() < 1e-15, "i = {i}");
        }
    }

    #[test]
    fn convolution_of_linear_with_constant_is_quadratic() {
        // u * 1 = t^2/2, also exact for the trapezoid rule
        let g = grid(1.0, 16);
        let lin: Vec<f64> = g.times().collect();
        let ones = vec![1.0; g.num_points()];
        let conv = discrete_convolution(&lin, &ones, &g).unwrap();
        for (i, &v) in conv.iter().enumerate() {
            let t = g.time(i);
            assert!((v - 0.5 * t * t).abs() < 1e-15, "i = {i}");
        }
    }

    #[test]
    fn convolution_is_symmetric_and_zero_at_the_origin() {
        let g = grid(1.5, 32);
        let f: Vec<f64> = g.times().map(|t| (1.0 + t).recip()).collect();
        let h: Vec<f64> = g.times().map(|t| t.cos()).collect();
        let fg = discrete_convolution(&f, &h, &g).unwrap();
        let gf = discrete_convolution(&h, &f, &g).unwrap();
        assert_eq!(fg[0], 0.0);
        for i in 0..fg.len() {
            assert!((fg[i] - gf[i]).abs() < 1e-14, "i = {i}");
        }
    }

    #[test]
    fn convolution_refines_at_second_order() {
        // smooth factors: halving h divides the error by about 4;
        // int_0^t sin(t-s) sin(s) ds = (sin t - t cos t)/2
        let exact = |t: f64| 0.5 * (t.sin() - t * t.cos());
        let mut errors = Vec::new();
        for n in [64usize, 128, 256] {
            let g = grid(2.0, n);
            let s: Vec<f64> = g.times().map(|t| t.sin()).collect();
            let conv = discrete_convolution(&s, &s, &g).unwrap();
            let err = (conv[n] - exact(2.0)).abs();
            errors.push(err);
        }
        let r1 = errors[0] / errors[1];
        let r2 = errors[1] / errors[2];
        assert!((3.5..=4.5).contains(&r1), "r1 = {r1}");
        assert!((3.5..=4.5).contains(&r2), "r2 = {r2}");
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let g = grid(1.0, 4);
        let short = vec![1.0; 3];
        let right = vec![1.0; 5];
        assert!(matches!(
            discrete_convolution(&short, &right, &g),
            Err(EngineError::LengthMismatch { expected: 5, got: 3 })
        ));
        assert!(matches!(
            discrete_convolution(&right, &short, &g),
            Err(EngineError::LengthMismatch { expected: 5, got: 3 })
        ));
    }

    #[test]
    fn trapezoid_basics() {
        assert_eq!(trapezoid(&[1.0], 0.5), 0.0);
        assert_eq!(trapezoid(&[1.0, 1.0, 1.0], 0.5), 1.0);
        // linear functions integrate exactly
        let g = grid(3.0, 12);
        let lin: Vec<f64> = g.times().map(|t| 2.0 * t + 1.0).collect();
        assert!((trapezoid(&lin, g.step()) - 12.0).abs() < 1e-14);
    }

    #[test]
    fn monomial_convolution_single_factor() {
        // one factor u^{a-1} convolves to itself
        for (a, t) in [(1.0, 0.5), (2.5, 1.0), (3.0, 2.0)] {
            let got = monomial_convolution(&[a], t).unwrap();
            let want = t.powf(a - 1.0);
            assert!((got - want).abs() <= 1e-14 * want, "a = {a}");
        }
    }

    #[test]
    fn monomial_convolution_matches_the_numeric_integral() {
        // (u^{a-1} * u^{b-1})(t) computed by quadrature
        let g = grid(1.0, 4096);
        for (a, b) in [(1.0, 1.0), (2.0, 3.0), (1.5, 2.0), (3.0, 1.5)] {
            let fa: Vec<f64> = g.times().map(|u| u.powf(a - 1.0)).collect();
            let fb: Vec<f64> = g.times().map(|u| u.powf(b - 1.0)).collect();
            let conv = discrete_convolution(&fa, &fb, &g).unwrap();
            let got = conv[g.subintervals()];
            let want = monomial_convolution(&[a, b], 1.0).unwrap();
            assert!(
                (got - want).abs() <= 2e-6 * want.max(1.0),
                "a = {a}, b = {b}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn monomial_convolution_validation() {
        assert!(matches!(
            monomial_convolution(&[], 1.0),
            Err(EngineError::InsufficientSequence { .. })
        ));
        assert!(matches!(
            monomial_convolution(&[0.0], 1.0),
            Err(EngineError::InvalidExponent { .. })
        ));
        assert!(matches!(
            monomial_convolution(&[-1.0, 2.0], 1.0),
            Err(EngineError::InvalidExponent { .. })
        ));
        assert!(monomial_convolution(&[1.0], 0.0).is_err());
    }
}
