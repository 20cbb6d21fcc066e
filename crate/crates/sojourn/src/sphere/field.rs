//! Spherical fractional Brownian motion at finite point sets.
//!
//! The field is the centered Gaussian process on S^{d-1} that vanishes at
//! an origin point O and has increment variance E[(X_s - X_t)^2] equal to
//! d(s, t)^{2H} for the geodesic distance d. Those two facts pin the
//! covariance to
//!
//! ```text
//! c(s, t) = (d(O, s)^{2H} + d(O, t)^{2H} - d(s, t)^{2H}) / 2,
//! ```
//!
//! which exists as a covariance exactly for H in (0, 1/2]. Sampling draws
//! a standard normal vector through a symmetric factorization of that
//! matrix; because clustered point sets make the matrix marginally
//! indefinite in floating point, factorization first escalates a diagonal
//! jitter and finally falls back to clipping negative eigenvalues, erroring
//! only when the matrix is indefinite beyond rounding tolerance.

use nalgebra::{Cholesky, DMatrix, SymmetricEigen};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::processes::Seed;

use super::geometry::{dot_slices, geodesic_from_dot, to_spherical};
use super::{SpherePoint, SphereError};

/// Largest point set sample_sfbm_at will factor.
pub const MAX_SFBM_POINTS: usize = 4096;

// Jitter ladder: multiples of the mean diagonal entry tried in order.
const JITTER_LADDER: [f64; 7] = [1e-12, 1e-11, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6];

// How negative the smallest eigenvalue may be, relative to the largest,
// before the matrix counts as genuinely indefinite.
const INDEFINITE_TOLERANCE: f64 = 1e-8;

/// Parameters of the field: ambient dimension, Hurst index and origin.
#[derive(Debug, Clone, PartialEq)]
pub struct SfbmConfig {
    d: usize,
    hurst: f64,
    origin: SpherePoint,
}

impl SfbmConfig {
    /// Field on S^{d-1} with Hurst index in (0, 1/2], pinned at the north
    /// pole e_d.
    pub fn new(d: usize, hurst: f64) -> Result<Self, SphereError> {
        Self::with_origin(SpherePoint::north_pole(d)?, hurst)
    }

    /// Field pinned at a custom origin, which must have azimuth zero.
    pub fn with_origin(origin: SpherePoint, hurst: f64) -> Result<Self, SphereError> {
        if !hurst.is_finite() || hurst <= 0.0 || hurst > 0.5 {
            return Err(SphereError::InvalidHurst { hurst });
        }
        let theta = to_spherical(&origin).theta();
        if theta != 0.0 {
            return Err(SphereError::OriginNotZeroTheta { theta });
        }
        Ok(Self {
            d: origin.dimension(),
            hurst,
            origin,
        })
    }

    /// Ambient dimension d.
    pub fn dimension(&self) -> usize {
        self.d
    }

    /// Hurst index H.
    pub fn hurst(&self) -> f64 {
        self.hurst
    }

    /// The pinning point O with X_O = 0.
    pub fn origin(&self) -> &SpherePoint {
        &self.origin
    }
}

/// Covariance matrix of the field at a finite point set.
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceMatrix {
    inner: DMatrix<f64>,
}

impl CovarianceMatrix {
    /// Number of points (the matrix is dim x dim).
    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    /// Entry (i, j). Panics when an index is out of range.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    pub(crate) fn inner(&self) -> &DMatrix<f64> {
        &self.inner
    }

    #[cfg(test)]
    pub(crate) fn from_inner(inner: DMatrix<f64>) -> Self {
        Self { inner }
    }
}

/// Covariance of the field at the given points.
///
/// The diagonal entry for a point s is d(O, s)^{2H} exactly, and the row
/// and column of any point bitwise-equal to the origin are exactly zero.
pub fn sfbm_covariance(
    points: &[SpherePoint],
    cfg: &SfbmConfig,
) -> Result<CovarianceMatrix, SphereError> {
    let d = cfg.dimension();
    for p in points {
        if p.dimension() != d {
            return Err(SphereError::DimensionMismatch {
                left: d,
                right: p.dimension(),
            });
        }
    }
    let mut flat = Vec::with_capacity(points.len() * d);
    for p in points {
        flat.extend_from_slice(p.coords());
    }
    let mut out = DMatrix::zeros(points.len(), points.len());
    sfbm_covariance_flat(&flat, d, cfg, &mut out);
    Ok(CovarianceMatrix { inner: out })
}

// Same computation on a flat row-major buffer of n points, writing into a
// preallocated n x n matrix. Shared with the Monte Carlo hot loop.
pub(crate) fn sfbm_covariance_flat(
    flat: &[f64],
    d: usize,
    cfg: &SfbmConfig,
    out: &mut DMatrix<f64>,
) {
    let n = flat.len() / d;
    debug_assert_eq!(flat.len(), n * d);
    debug_assert_eq!(out.nrows(), n);
    debug_assert_eq!(out.ncols(), n);
    let two_h = 2.0 * cfg.hurst;
    let origin = cfg.origin.coords();
    // distance-to-origin terms d(O, s)^{2H}, reused across the matrix
    let d_o: Vec<f64> = (0..n)
        .map(|i| structure_distance(origin, point(flat, d, i), two_h))
        .collect();
    for i in 0..n {
        out[(i, i)] = d_o[i];
        for j in 0..i {
            let d_ij = structure_distance(point(flat, d, i), point(flat, d, j), two_h);
            let c = 0.5 * (d_o[i] + d_o[j] - d_ij);
            out[(i, j)] = c;
            out[(j, i)] = c;
        }
    }
}

fn point(flat: &[f64], d: usize, i: usize) -> &[f64] {
    &flat[i * d..(i + 1) * d]
}

// d_H(x, y) = geodesic(x, y)^{2H}; the exponent 1 case skips powf, which
// roughly halves covariance construction cost for H = 1/2.
fn structure_distance(x: &[f64], y: &[f64], two_h: f64) -> f64 {
    let g = geodesic_from_dot(dot_slices(x, y));
    if two_h == 1.0 {
        g
    } else {
        g.powf(two_h)
    }
}

/// How a covariance was factored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FactorMethod {
    /// Triangular factorization succeeded, possibly after adding the
    /// recorded diagonal jitter.
    Cholesky { jitter: f64 },
    /// Spectral decomposition with negative eigenvalues clipped to zero.
    SpectralClip,
}

/// A symmetric factor F with F F^T equal to the covariance (up to jitter
/// or clipping), ready to map standard normal vectors to field samples.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldFactor {
    factor: DMatrix<f64>,
    method: FactorMethod,
}

impl FieldFactor {
    /// Number of points the factor samples at once.
    pub fn dim(&self) -> usize {
        self.factor.nrows()
    }

    /// Which factorization produced this factor.
    pub fn method(&self) -> FactorMethod {
        self.method
    }

    /// One draw of the field at the factored point set.
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let n = self.dim();
        let mut z = vec![0.0; n];
        let mut out = vec![0.0; n];
        self.sample_into(rng, &mut z, &mut out);
        out
    }

    // Allocation-free draw; z is scratch for the standard normals.
    pub(crate) fn sample_into(&self, rng: &mut ChaCha8Rng, z: &mut [f64], out: &mut [f64]) {
        let n = self.dim();
        debug_assert_eq!(z.len(), n);
        debug_assert_eq!(out.len(), n);
        for v in z.iter_mut() {
            *v = rng.sample(StandardNormal);
        }
        for i in 0..n {
            let mut acc = 0.0;
            for (j, &zj) in z.iter().enumerate() {
                acc += self.factor[(i, j)] * zj;
            }
            out[i] = acc;
        }
    }
}

/// Factors a covariance matrix for sampling.
///
/// Plain Cholesky is attempted first; on failure a diagonal jitter of
/// 1e-12 times the mean diagonal entry is added and escalated tenfold up
/// to 1e-6. If the matrix still resists, its eigenvalues are examined:
/// within -1e-8 of the largest eigenvalue the negative part is clipped and
/// a spectral factor returned, beyond that the matrix is reported as not
/// positive semidefinite.
pub fn factor_covariance(cov: &CovarianceMatrix) -> Result<FieldFactor, SphereError> {
    factor_dmatrix(cov.inner())
}

pub(crate) fn factor_dmatrix(a: &DMatrix<f64>) -> Result<FieldFactor, SphereError> {
    let n = a.nrows();
    if n == 0 {
        return Ok(FieldFactor {
            factor: DMatrix::zeros(0, 0),
            method: FactorMethod::Cholesky { jitter: 0.0 },
        });
    }
    if let Some(factor) = try_cholesky(a.clone()) {
        return Ok(FieldFactor {
            factor,
            method: FactorMethod::Cholesky { jitter: 0.0 },
        });
    }
    let mean_diag = a.trace() / n as f64;
    if mean_diag > 0.0 {
        for scale in JITTER_LADDER {
            let jitter = scale * mean_diag;
            let mut jittered = a.clone();
            for i in 0..n {
                jittered[(i, i)] += jitter;
            }
            if let Some(factor) = try_cholesky(jittered) {
                return Ok(FieldFactor {
                    factor,
                    method: FactorMethod::Cholesky { jitter },
                });
            }
        }
    }
    let eigen = SymmetricEigen::new(a.clone());
    let lambda_max = eigen.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lambda_min = eigen.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if !lambda_min.is_finite() || lambda_min < -INDEFINITE_TOLERANCE * lambda_max.max(0.0) {
        return Err(SphereError::NotPositiveSemidefinite {
            min_eigenvalue: lambda_min,
        });
    }
    let mut factor = eigen.eigenvectors;
    for (j, &lambda) in eigen.eigenvalues.iter().enumerate() {
        let s = lambda.max(0.0).sqrt();
        factor.column_mut(j).scale_mut(s);
    }
    Ok(FieldFactor {
        factor,
        method: FactorMethod::SpectralClip,
    })
}

fn try_cholesky(m: DMatrix<f64>) -> Option<DMatrix<f64>> {
    let l = Cholesky::new(m)?.unpack();
    // a zero pivot can slip through as inf/NaN downstream entries; treat
    // any nonfinite factor as a failed factorization
    if l.iter().all(|v| v.is_finite()) {
        Some(l)
    } else {
        None
    }
}

/// One sample of the field at the given points (at most MAX_SFBM_POINTS).
pub fn sample_sfbm_at(
    points: &[SpherePoint],
    cfg: &SfbmConfig,
    seed: Seed,
) -> Result<Vec<f64>, SphereError> {
    if points.is_empty() {
        return Err(SphereError::EmptyPointList);
    }
    if points.len() > MAX_SFBM_POINTS {
        return Err(SphereError::TooManyPoints {
            n: points.len(),
            max: MAX_SFBM_POINTS,
        });
    }
    let cov = sfbm_covariance(points, cfg)?;
    let factor = factor_covariance(&cov)?;
    let mut rng = seed.rng();
    Ok(factor.sample(&mut rng))
}
