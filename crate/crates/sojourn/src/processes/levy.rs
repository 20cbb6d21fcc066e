//! Lévy path simulation on uniform grids.
//!
//! All three simulators draw exact increments, so the sampled vector has
//! the true finite-dimensional law of the process at the grid times; the
//! grid only limits where the path is observed, not how accurately.

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use super::{PathGrid, ProcessError, Seed};

/// Standard Brownian motion on [0, t] observed at n uniform steps.
pub fn simulate_bm(t: f64, n: usize, seed: Seed) -> Result<PathGrid, ProcessError> {
    let (times, mut values) = empty_path(t, n)?;
    let sqrt_h = (t / n as f64).sqrt();
    let mut rng = seed.rng();
    let mut x = 0.0;
    for v in values.iter_mut().skip(1) {
        let z: f64 = rng.sample(StandardNormal);
        x += sqrt_h * z;
        *v = x;
    }
    PathGrid::new(times, values)
}

/// Symmetric alpha-stable Lévy process on [0, t], alpha in (0, 2].
///
/// Increments over a step h scale like h^{1/alpha} times a standard
/// symmetric stable variate; at alpha = 2 that variate is normal with
/// variance 2, so the increment variance over h is 2h.
pub fn simulate_symmetric_stable(
    alpha: f64,
    t: f64,
    n: usize,
    seed: Seed,
) -> Result<PathGrid, ProcessError> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha > 2.0 {
        return Err(ProcessError::InvalidParameter {
            name: "alpha",
            value: alpha,
        });
    }
    let (times, mut values) = empty_path(t, n)?;
    let scale = (t / n as f64).powf(1.0 / alpha);
    let mut rng = seed.rng();
    let mut x = 0.0;
    for v in values.iter_mut().skip(1) {
        x += scale * standard_symmetric_stable(alpha, &mut rng);
        *v = x;
    }
    PathGrid::new(times, values)
}

/// The 1/2-stable subordinator minus linear drift, X_t = sigma_t - mu t,
/// normalized so that P(X_t > 0) = erf(sqrt(t / (4 mu))).
///
/// sigma_t has the one-sided 1/2-stable law with Laplace-scale t^2/2; its
/// increment over a step h is (h^2/2) / Z^2 for a standard normal Z.
pub fn simulate_drifted_half_stable_subordinator(
    mu: f64,
    t: f64,
    n: usize,
    seed: Seed,
) -> Result<PathGrid, ProcessError> {
    if !mu.is_finite() || mu <= 0.0 {
        return Err(ProcessError::InvalidParameter {
            name: "mu",
            value: mu,
        });
    }
    let (times, mut values) = empty_path(t, n)?;
    let h = t / n as f64;
    let c = h * h / 2.0;
    let mut rng = seed.rng();
    let mut sigma = 0.0;
    for (k, v) in values.iter_mut().enumerate().skip(1) {
        sigma += half_stable_increment(c, &mut rng);
        *v = sigma - mu * times_at(t, n, k);
    }
    PathGrid::new(times, values)
}

fn times_at(t: f64, n: usize, k: usize) -> f64 {
    t * (k as f64 / n as f64)
}

fn empty_path(t: f64, n: usize) -> Result<(Vec<f64>, Vec<f64>), ProcessError> {
    if !t.is_finite() || t <= 0.0 {
        return Err(ProcessError::InvalidParameter { name: "t", value: t });
    }
    if n == 0 {
        return Err(ProcessError::TooFewSteps { n });
    }
    let times: Vec<f64> = (0..=n).map(|k| times_at(t, n, k)).collect();
    let values = vec![0.0; n + 1];
    Ok((times, values))
}

/// One draw from the standard symmetric alpha-stable law via the
/// Chambers-Mallows-Stuck transform. At alpha = 2 this is N(0, 2), at
/// alpha = 1 standard Cauchy.
pub(crate) fn standard_symmetric_stable(alpha: f64, rng: &mut ChaCha8Rng) -> f64 {
    let u = PI * (rng.random::<f64>() - 0.5);
    if alpha == 1.0 {
        return u.tan();
    }
    let e: f64 = rng.sample(Exp1);
    let e = e.max(f64::MIN_POSITIVE);
    let s = (alpha * u).sin() / u.cos().powf(1.0 / alpha);
    s * (((1.0 - alpha) * u).cos() / e).powf((1.0 - alpha) / alpha)
}

// Increment of the subordinator with Laplace-scale parameter c, using the
// reciprocal chi-square representation of the one-sided 1/2-stable law.
pub(crate) fn half_stable_increment(c: f64, rng: &mut ChaCha8Rng) -> f64 {
    let z: f64 = rng.sample(StandardNormal);
    c / (z * z).max(f64::MIN_POSITIVE)
}
