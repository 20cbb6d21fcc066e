//! Uniform time grids and the positivity functions sampled on them.

use std::fmt;
use std::sync::Arc;

use crate::analysis::erf;

use super::EngineError;

/// A uniform grid of n subintervals over [0, t_end], carrying n+1 points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_end: f64,
    n: usize,
}

impl TimeGrid {
    pub fn new(t_end: f64, n: usize) -> Result<Self, EngineError> {
        if !t_end.is_finite() || t_end <= 0.0 {
            return Err(EngineError::InvalidGrid {
                reason: "horizon must be positive and finite",
            });
        }
        if n < 2 {
            return Err(EngineError::InvalidGrid {
                reason: "need at least 2 subintervals",
            });
        }
        Ok(TimeGrid { t_end, n })
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    /// Number of subintervals.
    pub fn subintervals(&self) -> usize {
        self.n
    }

    /// Number of grid points, one more than the subinterval count.
    pub fn num_points(&self) -> usize {
        self.n + 1
    }

    pub fn step(&self) -> f64 {
        self.t_end / self.n as f64
    }

    /// The i-th grid point; exact at both endpoints.
    pub fn time(&self, i: usize) -> f64 {
        debug_assert!(i <= self.n);
        self.t_end * (i as f64 / self.n as f64)
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.n).map(|i| self.time(i))
    }
}

/// The one-dimensional positivity function t -> P(X_t > 0) of a process,
/// in one of the forms the moment engine accepts.
#[derive(Clone)]
pub enum PositivityFunction {
    /// Constant probability, as for any self-similar process.
    Constant(f64),
    /// P(X_t > 0) = erf(sqrt(t / (4 mu))) for the half-stable subordinator
    /// minus drift mu.
    ErfDrift { mu: f64 },
    /// Values tabulated on a grid, linearly interpolated in between.
    Tabulated { grid: TimeGrid, values: Arc<[f64]> },
    /// An arbitrary callback; must map [0, inf) into [0, 1].
    Callback(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl PositivityFunction {
    pub fn constant(c: f64) -> Result<Self, EngineError> {
        if !(0.0..=1.0).contains(&c) {
            return Err(EngineError::NotAProbability {
                name: "c",
                value: c,
            });
        }
        Ok(PositivityFunction::Constant(c))
    }

    pub fn erf_drift(mu: f64) -> Result<Self, EngineError> {
        if !mu.is_finite() || mu <= 0.0 {
            return Err(EngineError::InvalidPositivity {
                reason: "drift must be positive and finite",
            });
        }
        Ok(PositivityFunction::ErfDrift { mu })
    }

    pub fn tabulated(grid: TimeGrid, values: Vec<f64>) -> Result<Self, EngineError> {
        if values.len() != grid.num_points() {
            return Err(EngineError::LengthMismatch {
                expected: grid.num_points(),
                got: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(EngineError::NotAProbability {
                name: "tabulated value",
                value: bad,
            });
        }
        Ok(PositivityFunction::Tabulated {
            grid,
            values: values.into(),
        })
    }

    pub fn callback<F>(f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        PositivityFunction::Callback(Arc::new(f))
    }

    /// Point evaluation. Tabulated data clamps to its end values outside
    /// the table; horizon coverage is enforced where it matters, in
    /// [`PositivityFunction::sample_on`].
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            PositivityFunction::Constant(c) => *c,
            PositivityFunction::ErfDrift { mu } => {
                if t <= 0.0 {
                    0.0
                } else {
                    erf((t / (4.0 * mu)).sqrt())
                }
            }
            PositivityFunction::Tabulated { grid, values } => {
                if t <= 0.0 {
                    return values[0];
                }
                let u = t / grid.step();
                let i = (u.floor() as usize).min(grid.subintervals().saturating_sub(1));
                if i + 1 >= values.len() {
                    return values[values.len() - 1];
                }
                let frac = (u - i as f64).clamp(0.0, 1.0);
                values[i] * (1.0 - frac) + values[i + 1] * frac
            }
            PositivityFunction::Callback(f) => f(t),
        }
    }

    /// Horizon up to which the function is trustworthy; `None` means
    /// unbounded.
    pub fn max_time(&self) -> Option<f64> {
        match self {
            PositivityFunction::Tabulated { grid, .. } => Some(grid.t_end()),
            _ => None,
        }
    }

    /// Samples the function on a grid, enforcing tabulated coverage of the
    /// whole grid and that every produced value is a probability.
    pub fn sample_on(&self, grid: &TimeGrid) -> Result<Vec<f64>, EngineError> {
        if let Some(covered) = self.max_time() {
            // an end point equal to the covered horizon up to roundoff is fine
            if grid.t_end() > covered * (1.0 + 1e-12) {
                return Err(EngineError::TabulatedCoverage {
                    covered,
                    needed: grid.t_end(),
                });
            }
        }
        let values: Vec<f64> = grid.times().map(|t| self.eval(t)).collect();
        if let Some(&bad) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(EngineError::NotAProbability {
                name: "positivity sample",
                value: bad,
            });
        }
        Ok(values)
    }
}

impl fmt::Debug for PositivityFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositivityFunction::Constant(c) => f.debug_tuple("Constant").field(c).finish(),
            PositivityFunction::ErfDrift { mu } => {
                f.debug_struct("ErfDrift").field("mu", mu).finish()
            }
            PositivityFunction::Tabulated { grid, values } => f
                .debug_struct("Tabulated")
                .field("grid", grid)
                .field("len", &values.len())
                .finish(),
            PositivityFunction::Callback(_) => f.write_str("Callback(..)"),
        }
    }
}
