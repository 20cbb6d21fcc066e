//! Sampled paths on time grids: occupation times, bridge transforms, and
//! CSV export.

use std::io;

use super::ProcessError;

/// A path sampled at increasing times starting from 0.
#[derive(Debug, Clone, PartialEq)]
pub struct PathGrid {
    times: Vec<f64>,
    values: Vec<f64>,
}

impl PathGrid {
    /// Wraps explicit samples. Times must start at 0, increase strictly,
    /// and pair up with finite values.
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self, ProcessError> {
        if times.len() != values.len() {
            return Err(ProcessError::MalformedPath {
                reason: "times and values differ in length",
            });
        }
        if times.len() < 2 {
            return Err(ProcessError::TooFewSteps {
                n: times.len().saturating_sub(1),
            });
        }
        if times[0] != 0.0 {
            return Err(ProcessError::MalformedPath {
                reason: "paths start at time 0",
            });
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) || !times[times.len() - 1].is_finite() {
            return Err(ProcessError::MalformedPath {
                reason: "times must increase strictly",
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(ProcessError::MalformedPath {
                reason: "values must be finite",
            });
        }
        Ok(PathGrid { times, values })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn num_points(&self) -> usize {
        self.times.len()
    }

    /// Final time of the path.
    pub fn horizon(&self) -> f64 {
        self.times[self.times.len() - 1]
    }

    /// Value at the final time.
    pub fn end_value(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Writes `time,value` rows, one per sample point, no header.
    pub fn write_csv<W: io::Write>(&self, out: &mut W) -> io::Result<()> {
        for (t, v) in self.times.iter().zip(self.values.iter()) {
            writeln!(out, "{t},{v}")?;
        }
        Ok(())
    }
}

/// Time the path spends positive, by the right-endpoint rule: each step
/// (t_{k-1}, t_k] counts fully when the value at its right end qualifies.
/// `strict` demands values > 0; otherwise >= 0 qualifies.
pub fn occupation_time_of_path(path: &PathGrid, strict: bool) -> f64 {
    let times = path.times();
    let values = path.values();
    let mut occupied = 0.0;
    for k in 1..times.len() {
        let v = values[k];
        if (strict && v > 0.0) || (!strict && v >= 0.0) {
            occupied += times[k] - times[k - 1];
        }
    }
    occupied
}

/// Pins the endpoint of a unit-horizon path to zero:
/// value(t) - t * value(1).
///
/// The transform is idempotent, and for Lévy paths it produces the bridge
/// law. Paths not ending at time 1 are rejected.
pub fn make_bridge(path: &PathGrid) -> Result<PathGrid, ProcessError> {
    let horizon = path.horizon();
    if (horizon - 1.0).abs() > 1e-12 {
        return Err(ProcessError::HorizonNotUnit { horizon });
    }
    let end = path.end_value();
    let values = path
        .times()
        .iter()
        .zip(path.values().iter())
        .map(|(&t, &v)| v - t * end)
        .collect();
    Ok(PathGrid {
        times: path.times().to_vec(),
        values,
    })
}
