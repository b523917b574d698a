//! Seedable, bounded global-best particle swarm optimizer.
//!
//! Each iteration moves every particle with
//!
//! ```text
//! v = w·v + c1·r1⊙(p_best − x) + c2·r2⊙(g_best − x)
//! x = x + v
//! ```
//!
//! then re-evaluates the whole swarm before the global best is updated once
//! (synchronous update). With `stochastic_update = false` the random
//! multipliers `r1`, `r2` are fixed at 1.
//!
//! # Reproducibility
//!
//! The generator is [`ChaCha8Rng`] seeded with [`SwarmConfig::seed`] through
//! `SeedableRng::seed_from_u64`. A uniform draw in `[0, 1)` takes the top 53
//! bits of one `next_u64` call. Draws happen on the calling thread in a fixed
//! order, so results do not depend on [`SwarmConfig::parallel`]:
//!
//! * initialization: particles in index order, position components then
//!   velocity components;
//! * each step: particles in index order, `r1` components then `r2`
//!   components (nothing is drawn in literal mode).

use std::fmt;
use std::io::{self, Write};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// Fraction of the search range used as the default velocity clamp.
pub const DEFAULT_VCLAMP_FRACTION: f64 = 0.2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PsoError {
    #[error("invalid swarm configuration: {0}")]
    Config(String),
    #[error("objective evaluation failed: {0}")]
    Objective(#[from] ObjectiveError),
}

/// Failure reported by an [`Objective`].
#[derive(Debug, Error, Clone, PartialEq)]
#[error("{0}")]
pub struct ObjectiveError(pub String);

/// A fitness function to minimize.
///
/// Implementations must be pure: the engine may evaluate a population
/// concurrently. Any plain `Fn(&[f64]) -> f64` closure is an objective.
pub trait Objective: Sync {
    fn evaluate(&self, position: &[f64]) -> Result<f64, ObjectiveError>;
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn evaluate(&self, position: &[f64]) -> Result<f64, ObjectiveError> {
        Ok(self(position))
    }
}

/// Closed search interval `[low, high]` for one dimension.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bounds {
    pub low: f64,
    pub high: f64,
}

impl Bounds {
    pub fn new(low: f64, high: f64) -> Self {
        Self { low, high }
    }

    pub fn width(&self) -> f64 {
        self.high - self.low
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.low && x <= self.high
    }
}

/// Every knob of the optimizer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SwarmConfig {
    pub population: usize,
    /// Inertia weight `w`.
    pub inertia: f64,
    /// Cognitive coefficient `c1`.
    pub cognitive: f64,
    /// Social coefficient `c2`.
    pub social: f64,
    /// Per-dimension velocity limit; velocities live in `[-clamp, +clamp]`.
    pub velocity_clamp: Vec<f64>,
    pub bounds: Vec<Bounds>,
    pub max_iterations: usize,
    /// The run stops once the global best fitness is at or below this value.
    pub fitness_tolerance: f64,
    pub seed: u64,
    /// Draw `r1`, `r2` uniformly per component; `false` fixes both at 1.
    pub stochastic_update: bool,
    /// Evaluate the population on the rayon pool. Does not change results.
    pub parallel: bool,
}

impl SwarmConfig {
    /// Configuration with the default hyperparameters: 100 particles,
    /// `w = 0.7`, `c1 = c2 = 1.8`, velocity clamp at 20% of each range,
    /// 10000 iterations, tolerance `1e-6`, seed 0, stochastic update.
    pub fn new(bounds: Vec<Bounds>) -> Self {
        let velocity_clamp = bounds
            .iter()
            .map(|b| DEFAULT_VCLAMP_FRACTION * b.width())
            .collect();
        Self {
            population: 100,
            inertia: 0.7,
            cognitive: 1.8,
            social: 1.8,
            velocity_clamp,
            bounds,
            max_iterations: 10_000,
            fitness_tolerance: 1e-6,
            seed: 0,
            stochastic_update: true,
            parallel: false,
        }
    }

    /// Same bounds `[low, high]` in each of `dimension` dimensions.
    pub fn uniform(dimension: usize, low: f64, high: f64) -> Self {
        Self::new(vec![Bounds::new(low, high); dimension])
    }

    pub fn dimension(&self) -> usize {
        self.bounds.len()
    }

    /// Sets every velocity clamp component to `clamp`.
    pub fn with_velocity_clamp(mut self, clamp: f64) -> Self {
        self.velocity_clamp = vec![clamp; self.bounds.len()];
        self
    }

    pub fn validate(&self) -> Result<(), PsoError> {
        let fail = |msg: String| Err(PsoError::Config(msg));
        if self.population == 0 {
            return fail("population must be at least 1".into());
        }
        if self.bounds.is_empty() {
            return fail("search space has no dimensions".into());
        }
        for (j, b) in self.bounds.iter().enumerate() {
            if !b.low.is_finite() || !b.high.is_finite() {
                return fail(format!("bounds of dimension {j} are not finite"));
            }
            if b.low >= b.high {
                return fail(format!(
                    "bounds of dimension {j} need low < high, got [{}, {}]",
                    b.low, b.high
                ));
            }
        }
        if self.velocity_clamp.len() != self.bounds.len() {
            return fail(format!(
                "velocity clamp has {} components for {} dimensions",
                self.velocity_clamp.len(),
                self.bounds.len()
            ));
        }
        if let Some(j) = self
            .velocity_clamp
            .iter()
            .position(|v| !(v.is_finite() && *v > 0.0))
        {
            return fail(format!("velocity clamp of dimension {j} must be finite and > 0"));
        }
        for (name, value) in [
            ("inertia", self.inertia),
            ("cognitive", self.cognitive),
            ("social", self.social),
        ] {
            if !value.is_finite() {
                return fail(format!("{name} coefficient must be finite"));
            }
        }
        if self.fitness_tolerance.is_nan() || self.fitness_tolerance < 0.0 {
            return fail("fitness tolerance must be nonnegative".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
}

/// Outcome of offering a fitness value to a particle's memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BestUpdate {
    Improved,
    Unchanged,
    /// The value was NaN or infinite and was treated as `+∞`.
    NonFinite,
}

/// Adopts the current position as the personal best iff `fitness` is a
/// strict improvement. Ties keep the incumbent; non-finite values are never
/// adopted.
pub fn update_personal_best(particle: &mut Particle, fitness: f64) -> BestUpdate {
    if !fitness.is_finite() {
        return BestUpdate::NonFinite;
    }
    if fitness < particle.best_fitness {
        particle.best_position.clone_from(&particle.position);
        particle.best_fitness = fitness;
        BestUpdate::Improved
    } else {
        BestUpdate::Unchanged
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    pub particles: Vec<Particle>,
    pub global_best_position: Vec<f64>,
    pub global_best_fitness: f64,
    pub iteration: usize,
}

impl SwarmState {
    /// Index of the particle holding the lowest personal best; lowest index
    /// wins ties.
    fn best_particle(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, p) in self.particles.iter().enumerate() {
            match best {
                Some(b) if p.best_fitness >= self.particles[b].best_fitness => {}
                _ => best = Some(i),
            }
        }
        best
    }

    /// Moves the global best to the best personal best when that is a
    /// strict improvement.
    fn refresh_global_best(&mut self) {
        if let Some(i) = self.best_particle() {
            let p = &self.particles[i];
            if p.best_fitness < self.global_best_fitness || self.global_best_position.is_empty() {
                self.global_best_fitness = p.best_fitness;
                self.global_best_position.clone_from(&p.best_position);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub iteration: usize,
    pub global_best_fitness: f64,
}

/// Global best fitness recorded once per iteration, starting at iteration 0
/// (the initial population).
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ConvergenceTrace {
    points: Vec<TracePoint>,
}

impl ConvergenceTrace {
    pub const CSV_HEADER: &'static str = "iteration,global_best_fitness";

    pub fn points(&self) -> &[TracePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn record(&mut self, iteration: usize, global_best_fitness: f64) {
        self.points.push(TracePoint {
            iteration,
            global_best_fitness,
        });
    }

    /// Global best as of `iteration`. A run that stopped earlier keeps its
    /// final value.
    pub fn value_at(&self, iteration: usize) -> Option<f64> {
        self.points
            .iter()
            .take_while(|p| p.iteration <= iteration)
            .last()
            .map(|p| p.global_best_fitness)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{}", Self::CSV_HEADER)?;
        for p in &self.points {
            writeln!(out, "{},{}", p.iteration, p.global_best_fitness)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Termination {
    Tolerance,
    Budget,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Termination::Tolerance => "tolerance",
            Termination::Budget => "budget",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub trace: ConvergenceTrace,
    pub termination: Termination,
    /// Completed update steps.
    pub iterations: usize,
    /// Objective values that came back NaN or infinite.
    pub non_finite_evaluations: usize,
}

fn unit_draw(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// A swarm bound to its configuration and objective.
pub struct Swarm<'a, O: Objective + ?Sized> {
    config: &'a SwarmConfig,
    objective: &'a O,
    rng: ChaCha8Rng,
    state: SwarmState,
    trace: ConvergenceTrace,
    non_finite: usize,
}

impl<'a, O: Objective + ?Sized> Swarm<'a, O> {
    /// Random initial population: positions uniform in the bounds,
    /// velocities uniform in `[-clamp, +clamp]`, each particle's start as its
    /// personal best, then global best selection.
    pub fn new(config: &'a SwarmConfig, objective: &'a O) -> Result<Self, PsoError> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut particles = Vec::with_capacity(config.population);
        for _ in 0..config.population {
            let position: Vec<f64> = config
                .bounds
                .iter()
                .map(|b| b.low + unit_draw(&mut rng) * b.width())
                .collect();
            let velocity: Vec<f64> = config
                .velocity_clamp
                .iter()
                .map(|v| -v + unit_draw(&mut rng) * (2.0 * v))
                .collect();
            particles.push(Particle {
                best_position: position.clone(),
                position,
                velocity,
                best_fitness: f64::INFINITY,
            });
        }
        let state = SwarmState {
            particles,
            global_best_position: Vec::new(),
            global_best_fitness: f64::INFINITY,
            iteration: 0,
        };
        let mut swarm = Self {
            config,
            objective,
            rng,
            state,
            trace: ConvergenceTrace::default(),
            non_finite: 0,
        };
        swarm.evaluate_and_select()?;
        Ok(swarm)
    }

    /// Continues from an existing state. The generator restarts from
    /// `config.seed`.
    pub fn resume(
        config: &'a SwarmConfig,
        objective: &'a O,
        state: SwarmState,
    ) -> Result<Self, PsoError> {
        config.validate()?;
        let dim = config.dimension();
        if state.particles.is_empty() {
            return Err(PsoError::Config("state has no particles".into()));
        }
        let shapes_ok = state.global_best_position.len() == dim
            && state.particles.iter().all(|p| {
                p.position.len() == dim && p.velocity.len() == dim && p.best_position.len() == dim
            });
        if !shapes_ok {
            return Err(PsoError::Config(format!(
                "state vectors do not match the {dim}-dimensional configuration"
            )));
        }
        let mut trace = ConvergenceTrace::default();
        trace.record(state.iteration, state.global_best_fitness);
        Ok(Self {
            config,
            objective,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            state,
            trace,
            non_finite: 0,
        })
    }

    pub fn state(&self) -> &SwarmState {
        &self.state
    }

    pub fn trace(&self) -> &ConvergenceTrace {
        &self.trace
    }

    pub fn non_finite_evaluations(&self) -> usize {
        self.non_finite
    }

    pub fn reached_tolerance(&self) -> bool {
        self.state.global_best_fitness <= self.config.fitness_tolerance
    }

    /// One synchronous iteration: move every particle, evaluate all of them,
    /// then update personal bests and the global best.
    pub fn step(&mut self) -> Result<(), PsoError> {
        let cfg = self.config;
        let dim = cfg.dimension();
        let mut r1 = vec![1.0; dim];
        let mut r2 = vec![1.0; dim];
        let global = &self.state.global_best_position;
        for p in &mut self.state.particles {
            if cfg.stochastic_update {
                r1.iter_mut().for_each(|r| *r = unit_draw(&mut self.rng));
                r2.iter_mut().for_each(|r| *r = unit_draw(&mut self.rng));
            }
            for j in 0..dim {
                let x = p.position[j];
                let v = cfg.inertia * p.velocity[j]
                    + cfg.cognitive * r1[j] * (p.best_position[j] - x)
                    + cfg.social * r2[j] * (global[j] - x);
                let vmax = cfg.velocity_clamp[j];
                let mut v = v.clamp(-vmax, vmax);
                let b = cfg.bounds[j];
                let mut x = x + v;
                if x < b.low {
                    x = b.low;
                    v = 0.0;
                } else if x > b.high {
                    x = b.high;
                    v = 0.0;
                }
                p.position[j] = x;
                p.velocity[j] = v;
            }
        }
        self.state.iteration += 1;
        self.evaluate_and_select()
    }

    /// Evaluates every current position, offers the values to the personal
    /// bests, refreshes the global best, and appends a trace point.
    fn evaluate_and_select(&mut self) -> Result<(), PsoError> {
        let objective = self.objective;
        let eval = |p: &Particle| objective.evaluate(&p.position);
        let values: Vec<Result<f64, ObjectiveError>> = if self.config.parallel {
            self.state.particles.par_iter().map(eval).collect()
        } else {
            self.state.particles.iter().map(eval).collect()
        };
        for (p, value) in self.state.particles.iter_mut().zip(values) {
            if update_personal_best(p, value?) == BestUpdate::NonFinite {
                self.non_finite += 1;
            }
        }
        self.state.refresh_global_best();
        self.trace
            .record(self.state.iteration, self.state.global_best_fitness);
        Ok(())
    }

    /// Steps until the global best reaches the tolerance or the iteration
    /// budget is spent.
    pub fn run(mut self) -> Result<RunReport, PsoError> {
        let termination = loop {
            if self.reached_tolerance() {
                break Termination::Tolerance;
            }
            if self.state.iteration >= self.config.max_iterations {
                break Termination::Budget;
            }
            self.step()?;
        };
        Ok(RunReport {
            best_position: self.state.global_best_position,
            best_fitness: self.state.global_best_fitness,
            trace: self.trace,
            termination,
            iterations: self.state.iteration,
            non_finite_evaluations: self.non_finite,
        })
    }
}

pub fn initialize_swarm<'a, O: Objective + ?Sized>(
    config: &'a SwarmConfig,
    objective: &'a O,
) -> Result<Swarm<'a, O>, PsoError> {
    Swarm::new(config, objective)
}

/// Initializes a swarm and runs it to termination.
pub fn run<O: Objective + ?Sized>(
    config: &SwarmConfig,
    objective: &O,
) -> Result<RunReport, PsoError> {
    Swarm::new(config, objective)?.run()
}
