//! Occupation times and persistence probabilities for random walks, Lévy
//! processes and Gaussian fields on spheres.
//!
//! The crate is organised around one theme: the time a random path spends in
//! a set, and the combinatorial identities that pin down its moments.
//!
//! * [`combinatorics`]: set partitions, Bell polynomials, walk persistence
//!   and the cyclic-shift lemma for planar point lists.
//! * [`analysis`]: the special functions and distribution laws the rest of
//!   the crate quotes (error function, incomplete beta, arcsine laws), plus
//!   Kolmogorov-Smirnov and z-score helpers.
//! * [`moment_engine`]: occupation-time moments of a process from its
//!   one-dimensional positivity function, via partition sums of iterated
//!   convolutions.
//! * [`processes`]: path simulation for Brownian motion, symmetric stable
//!   processes, drifted half-stable subordinators, and bridge transforms.
//! * [`sphere`]: geometry of the unit sphere and the spherical fractional
//!   Brownian field.
//! * [`montecarlo`]: reproducible seeded estimators and the named
//!   verification experiments.

pub mod analysis;
pub mod combinatorics;
pub mod moment_engine;
pub mod montecarlo;
pub mod processes;
pub mod sphere;

pub use combinatorics::Rational;
pub use moment_engine::{PositivityFunction, TimeGrid};
// TODO(scaffold): restore once the remaining modules land
// pub use montecarlo::{run_experiment, EstimateWithError, ExperimentConfig, VerificationReport};
pub use processes::{PathGrid, Seed};
pub use sphere::{SfbmConfig, SpherePoint};
