//! Geometry of the unit sphere and spherical fractional Brownian motion.
//!
//! The geometry half provides spherical coordinates in the convention
//!
//! ```text
//! x_k     = r cos(phi_k) prod_{j<k} sin(phi_j),   1 <= k <= d-2,
//! x_{d-1} = r sin(theta) prod_{j}   sin(phi_j),
//! x_d     = r cos(theta) prod_{j}   sin(phi_j),
//! ```
//!
//! with polar angles phi_j in [0, pi) and an azimuth theta in [0, 2 pi),
//! together with uniform sampling, the theta-first ordering of point sets
//! and geodesic distances. The field half builds the covariance of the
//! spherical fractional Brownian motion pinned at an origin point and
//! draws Gaussian samples from it through a factorization that tolerates
//! the marginal indefiniteness such matrices exhibit in floating point.

mod field;
mod geometry;

pub use field::{
    factor_covariance, sample_sfbm_at, sfbm_covariance, CovarianceMatrix, FactorMethod,
    FieldFactor, SfbmConfig, MAX_SFBM_POINTS,
};
pub use geometry::{
    from_spherical, geodesic, theta_order, to_spherical, uniform_sphere_sample, vector_angles,
    SpherePoint, SphericalAngles,
};

pub(crate) use geometry::sample_unit_point;

use thiserror::Error;

/// Errors for spherical geometry and field sampling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SphereError {
    /// The sphere lives in dimension at least 2.
    #[error("sphere points need dimension at least 2, got {d}")]
    InvalidDimension { d: usize },
    /// Coordinates were structurally unusable (nonfinite entries and such).
    #[error("invalid coordinates: {reason}")]
    InvalidCoordinates { reason: &'static str },
    /// The coordinate vector does not lie on the unit sphere.
    #[error("point norm {norm} differs from 1 by more than 1e-12")]
    NotUnitNorm { norm: f64 },
    /// Angle vector outside the documented ranges.
    #[error("invalid spherical angles: {reason}")]
    InvalidAngles { reason: &'static str },
    /// Two points (or a point and a configuration) disagree on dimension.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    /// The Hurst index must lie in (0, 1/2]; the field does not exist
    /// beyond 1/2.
    #[error("Hurst index must lie in (0, 1/2], got {hurst}")]
    InvalidHurst { hurst: f64 },
    /// The field origin must have azimuth zero.
    #[error("field origin must satisfy theta = 0, got theta = {theta}")]
    OriginNotZeroTheta { theta: f64 },
    /// An operation that needs at least one point received none.
    #[error("need at least one point")]
    EmptyPointList,
    /// Request exceeds the configured sampling cap.
    #[error("{n} points exceed the sampling cap of {max}")]
    TooManyPoints { n: usize, max: usize },
    /// The matrix is indefinite beyond the tolerance that jitter and
    /// eigenvalue clipping are allowed to absorb.
    #[error("covariance is not positive semidefinite: smallest eigenvalue {min_eigenvalue}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },
}
