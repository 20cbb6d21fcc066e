//! Path simulation for the processes whose occupation times the crate
//! studies: Brownian motion, symmetric stable processes, the drifted
//! half-stable subordinator, bridges, and the random walks behind the
//! discrete persistence identities.

mod levy;
mod path;
mod rng;
mod walk;

pub use levy::{
    simulate_bm, simulate_drifted_half_stable_subordinator, simulate_symmetric_stable,
};
pub use path::{make_bridge, occupation_time_of_path, PathGrid};
pub use rng::Seed;
pub use walk::{exchangeable_bridge_increments, laplace_walk, WalkSample};

pub(crate) use levy::{half_stable_increment, standard_symmetric_stable};
pub(crate) use walk::{exchangeable_bridge_increments_into, laplace_walk_into};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProcessError {
    /// A parameter outside its allowed range.
    #[error("{name} = {value} is out of range")]
    InvalidParameter { name: &'static str, value: f64 },
    /// Paths and walks need at least one step.
    #[error("need at least one step, got {n}")]
    TooFewSteps { n: usize },
    /// Bridge transforms require the unit horizon.
    #[error("bridge requires horizon 1, path ends at {horizon}")]
    HorizonNotUnit { horizon: f64 },
    /// Times and values that do not form a path.
    #[error("malformed path: {reason}")]
    MalformedPath { reason: &'static str },
}
