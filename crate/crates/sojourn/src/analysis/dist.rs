//! Reference laws on [0, 1]: the arcsine law, its generalized one-parameter
//! family, and moment sequences used as verification targets.

use std::f64::consts::PI;

use super::special::regularized_incomplete_beta;
use super::AnalysisError;

/// Distribution function of the arcsine law on [0, 1], extended to the
/// whole line in the usual way.
pub fn arcsine_cdf(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if x >= 1.0 {
        1.0
    } else {
        2.0 / PI * x.sqrt().asin()
    }
}

/// The generalized arcsine law on [0, 1] with exponent c in (0, 1); its
/// density is proportional to x^{c-1} (1-x)^{-c}, and c = 1/2 recovers the
/// arcsine law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedArcsine {
    c: f64,
}

impl GeneralizedArcsine {
    pub fn new(c: f64) -> Result<Self, AnalysisError> {
        if !c.is_finite() || c <= 0.0 || c >= 1.0 {
            return Err(AnalysisError::OutOfDomain {
                name: "c",
                value: c,
                domain: "(0, 1)",
            });
        }
        Ok(GeneralizedArcsine { c })
    }

    pub fn exponent(&self) -> f64 {
        self.c
    }

    /// Density sin(pi c)/pi x^{c-1} (1-x)^{-c} on the open unit interval,
    /// zero outside.
    pub fn density(&self, x: f64) -> f64 {
        if x <= 0.0 || x >= 1.0 {
            return 0.0;
        }
        (PI * self.c).sin() / PI * x.powf(self.c - 1.0) * (1.0 - x).powf(-self.c)
    }

    /// Distribution function, the regularized incomplete beta I_x(c, 1-c).
    pub fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else if x >= 1.0 {
            1.0
        } else {
            regularized_incomplete_beta(self.c, 1.0 - self.c, x)
                .expect("parameters validated at construction")
        }
    }

    /// m-th moment, the rising factorial c(c+1)..(c+m-1) over m factorial.
    pub fn moment(&self, m: usize) -> f64 {
        let mut acc = 1.0;
        for i in 0..m {
            acc *= (self.c + i as f64) / (i as f64 + 1.0);
        }
        acc
    }
}

/// m-th moment of the generalized arcsine law with exponent c.
pub fn generalized_arcsine_moment(c: f64, m: usize) -> Result<f64, AnalysisError> {
    Ok(GeneralizedArcsine::new(c)?.moment(m))
}

/// Distribution function of the generalized arcsine law with exponent c.
pub fn generalized_arcsine_cdf(c: f64, x: f64) -> Result<f64, AnalysisError> {
    Ok(GeneralizedArcsine::new(c)?.cdf(x))
}

/// Target moments m = 1..=order of a law on [0, 1], used as references by
/// the statistical gates.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    values: Vec<f64>,
}

impl MomentSequence {
    /// Wraps explicit values; moments of a law on [0, 1] must lie in
    /// [0, 1] and be nonincreasing.
    pub fn from_values(values: Vec<f64>) -> Result<Self, AnalysisError> {
        if values.is_empty() {
            return Err(AnalysisError::EmptySample);
        }
        for w in values.windows(2) {
            if w[1] > w[0] {
                return Err(AnalysisError::OutOfDomain {
                    name: "values",
                    value: w[1],
                    domain: "nonincreasing sequence",
                });
            }
        }
        if let Some(&bad) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(AnalysisError::OutOfDomain {
                name: "values",
                value: bad,
                domain: "[0, 1]",
            });
        }
        Ok(MomentSequence { values })
    }

    /// Moments of the uniform law: 1/(m+1).
    pub fn uniform(order: usize) -> Self {
        MomentSequence {
            values: (1..=order).map(|m| 1.0 / (m as f64 + 1.0)).collect(),
        }
    }

    /// Moments of the arcsine law: 4^{-m} C(2m, m).
    pub fn arcsine(order: usize) -> Self {
        let mut values = Vec::with_capacity(order);
        let mut v = 1.0;
        for m in 1..=order {
            // p_m = p_{m-1} (2m-1) / (2m)
            v *= (2.0 * m as f64 - 1.0) / (2.0 * m as f64);
            values.push(v);
        }
        MomentSequence { values }
    }

    /// Moments of the generalized arcsine law with exponent c.
    pub fn generalized_arcsine(c: f64, order: usize) -> Result<Self, AnalysisError> {
        let law = GeneralizedArcsine::new(c)?;
        Ok(MomentSequence {
            values: (1..=order).map(|m| law.moment(m)).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// The m-th moment, 1-based.
    pub fn get(&self, m: usize) -> Option<f64> {
        if m == 0 {
            return Some(1.0);
        }
        self.values.get(m - 1).copied()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}
