//! Particle swarm design of stepped quarter-wave impedance transformers,
//! with an ideal-line ABCD model to verify every design.
//!
//! * [`pso`]: generic seedable, bounded global-best swarm optimizer.
//! * [`txline`]: lossless line two-ports, cascades and reflection sweeps.
//! * [`matchdesign`]: the matching fitness, ordering constraint and the
//!   end-to-end design routine.
//! * [`cli`]: batch trials and CSV output behind the `taperswarm` binary.

pub mod cli;
pub mod matchdesign;
pub mod pso;
pub mod txline;

pub use matchdesign::{design, DesignProblem, DesignResult, SweepSettings};
pub use pso::{SwarmConfig, Termination};
