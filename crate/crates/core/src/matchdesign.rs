//! Stepped quarter-wave transformer design as a penalized swarm search.
//!
//! Impedances are indexed from the load side: `z[0]` is the section touching
//! the load. Three quarter-wave sections present
//!
//! ```text
//! Zin = (z1·z3 / z2)² / ZL
//! ```
//!
//! at the design frequency, and the three-section fitness is
//! `|Zin − Z_target|`. Any other section count goes through the ABCD cascade
//! instead. When ordering is required, each adjacent pair that fails to
//! strictly decrease away from the load adds `penalty_weight` per ohm of
//! violation.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::pso::{self, Bounds, ConvergenceTrace, Objective, ObjectiveError, PsoError, SwarmConfig, Termination};
use crate::txline::{self, SweepResult, TxLineError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DesignError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid design problem: {0}")]
    Config(String),
    #[error(transparent)]
    Swarm(#[from] PsoError),
    #[error(transparent)]
    Line(#[from] TxLineError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesignProblem {
    /// Real load resistance (Ω).
    pub z_load: f64,
    /// Impedance the input should present (Ω).
    pub z_target: f64,
    pub n_sections: usize,
    /// Search range applied to every section impedance (Ω).
    pub bounds: Bounds,
    /// Require impedances strictly decreasing away from the load.
    pub ordering_required: bool,
    /// Penalty per ohm of ordering violation.
    pub penalty_weight: f64,
}

impl Default for DesignProblem {
    fn default() -> Self {
        Self {
            z_load: 100.0,
            z_target: 50.0,
            n_sections: 3,
            bounds: Bounds::new(10.0, 120.0),
            ordering_required: true,
            penalty_weight: 1000.0,
        }
    }
}

impl DesignProblem {
    pub fn validate(&self) -> Result<(), DesignError> {
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if !positive(self.z_load) {
            return Err(DesignError::Config(format!("load must be positive, got {}", self.z_load)));
        }
        if !positive(self.z_target) {
            return Err(DesignError::Config(format!(
                "target impedance must be positive, got {}",
                self.z_target
            )));
        }
        if self.n_sections == 0 {
            return Err(DesignError::Config("need at least one section".into()));
        }
        let b = self.bounds;
        if !(positive(b.low) && positive(b.high) && b.low < b.high) {
            return Err(DesignError::Config(format!(
                "impedance bounds need 0 < low < high, got [{}, {}]",
                b.low, b.high
            )));
        }
        if !(self.penalty_weight >= 0.0 && self.penalty_weight.is_finite()) {
            return Err(DesignError::Config("penalty weight must be nonnegative".into()));
        }
        Ok(())
    }

    /// Default swarm hyperparameters over this problem's search box.
    pub fn swarm_config(&self) -> SwarmConfig {
        SwarmConfig::new(vec![self.bounds; self.n_sections])
    }

    /// Characteristic impedance of a single ideal quarter-wave match,
    /// `√(ZL·Z_target)`.
    pub fn single_section_impedance(&self) -> f64 {
        (self.z_load * self.z_target).sqrt()
    }
}

/// True iff `z` strictly decreases from the load-adjacent entry.
pub fn check_ordering(z: &[f64]) -> bool {
    z.windows(2).all(|w| w[1] < w[0])
}

/// `weight · Σ violation` over adjacent pairs. A pair that rises by `Δ > 0`
/// contributes `Δ`; an exact tie contributes one ulp-scale unit
/// (`ε·z_k`) so ties are never free.
pub fn ordering_penalty(z: &[f64], weight: f64) -> f64 {
    let violation: f64 = z
        .windows(2)
        .filter(|w| w[1] >= w[0])
        .map(|w| (w[1] - w[0]).max(f64::EPSILON * w[0].abs()))
        .sum();
    weight * violation
}

fn check_positive(z: &[f64]) -> Result<(), DesignError> {
    if z.is_empty() {
        return Err(DesignError::Domain("no impedances given".into()));
    }
    match z.iter().position(|v| !(*v > 0.0 && v.is_finite())) {
        Some(k) => Err(DesignError::Domain(format!(
            "impedance {} must be positive, got {}",
            k + 1,
            z[k]
        ))),
        None => Ok(()),
    }
}

fn penalty(z: &[f64], problem: &DesignProblem) -> f64 {
    if problem.ordering_required {
        ordering_penalty(z, problem.penalty_weight)
    } else {
        0.0
    }
}

/// Unpenalized three-section matching error `|(z1·z3/z2)²/ZL − Z_target|`.
pub fn eq4_mismatch(z: &[f64], problem: &DesignProblem) -> Result<f64, DesignError> {
    if z.len() != 3 {
        return Err(DesignError::Domain(format!(
            "closed-form fitness needs 3 impedances, got {}",
            z.len()
        )));
    }
    check_positive(z)?;
    let ratio = z[0] * z[2] / z[1];
    Ok((ratio * ratio / problem.z_load - problem.z_target).abs())
}

/// Three-section fitness: closed-form mismatch plus ordering penalty.
pub fn eq4_fitness(z: &[f64], problem: &DesignProblem) -> Result<f64, DesignError> {
    Ok(eq4_mismatch(z, problem)? + penalty(z, problem))
}

/// Unpenalized `|Zin − Z_target|` at `f0` through the ABCD cascade, for any
/// number of sections.
pub fn cascade_mismatch(z: &[f64], problem: &DesignProblem, f0: f64) -> Result<f64, DesignError> {
    check_positive(z)?;
    let ports = txline::quarter_wave_cascade(z)
        .iter()
        .map(|s| txline::line_two_port(s, f0, f0))
        .collect::<Result<Vec<_>, _>>()?;
    let zin = txline::input_impedance(&txline::cascade(&ports), Complex64::new(problem.z_load, 0.0))?;
    Ok((zin - problem.z_target).norm())
}

/// Cascade mismatch plus ordering penalty.
pub fn cascade_fitness(z: &[f64], problem: &DesignProblem, f0: f64) -> Result<f64, DesignError> {
    Ok(cascade_mismatch(z, problem, f0)? + penalty(z, problem))
}

/// Which fitness route a design run minimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitnessRoute {
    ClosedForm,
    Cascade,
}

/// Adapts a [`DesignProblem`] to the optimizer.
#[derive(Debug, Clone)]
pub struct MatchObjective<'a> {
    pub problem: &'a DesignProblem,
    pub f0: f64,
    pub route: FitnessRoute,
}

impl<'a> MatchObjective<'a> {
    /// Closed form for three sections, cascade otherwise.
    pub fn for_problem(problem: &'a DesignProblem, f0: f64) -> Self {
        let route = if problem.n_sections == 3 {
            FitnessRoute::ClosedForm
        } else {
            FitnessRoute::Cascade
        };
        Self { problem, f0, route }
    }

    pub fn fitness(&self, z: &[f64]) -> Result<f64, DesignError> {
        match self.route {
            FitnessRoute::ClosedForm => eq4_fitness(z, self.problem),
            FitnessRoute::Cascade => cascade_fitness(z, self.problem, self.f0),
        }
    }
}

impl Objective for MatchObjective<'_> {
    fn evaluate(&self, position: &[f64]) -> Result<f64, ObjectiveError> {
        self.fitness(position)
            .map_err(|e| ObjectiveError(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSettings {
    /// Design frequency where every section is a quarter wave (Hz).
    pub f0: f64,
    pub f_start: f64,
    pub f_stop: f64,
    pub points: usize,
}

impl Default for SweepSettings {
    fn default() -> Self {
        Self {
            f0: 5e9,
            f_start: 1e9,
            f_stop: 9e9,
            points: 201,
        }
    }
}

impl SweepSettings {
    pub fn grid(&self) -> Vec<f64> {
        txline::linear_grid(self.f_start, self.f_stop, self.points)
    }

    pub fn validate(&self) -> Result<(), DesignError> {
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if !positive(self.f0) {
            return Err(DesignError::Config(format!("f0 must be positive, got {}", self.f0)));
        }
        if !(positive(self.f_start) && positive(self.f_stop) && self.f_start <= self.f_stop) {
            return Err(DesignError::Config(format!(
                "sweep needs 0 < start <= stop, got {}..{}",
                self.f_start, self.f_stop
            )));
        }
        if self.points == 0 {
            return Err(DesignError::Config("sweep needs at least one point".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DesignResult {
    /// Section impedances, load-adjacent first (Ω).
    pub impedances: Vec<f64>,
    /// Fitness re-evaluated at `impedances`.
    pub fitness: f64,
    pub trace: ConvergenceTrace,
    /// Reflection magnitude at `f0` from the cascade model (dB).
    pub verified_db_at_f0: f64,
    pub termination: Termination,
    pub iterations: usize,
    pub ordering_ok: bool,
    /// Ordering was required but the winner does not satisfy it.
    pub constraint_violated: bool,
    pub non_finite_evaluations: usize,
    pub sweep: SweepResult,
}

/// Reflection in dB at `f0` of a load-first impedance list.
pub fn reflection_db_at(
    impedances_load_first: &[f64],
    z_load: f64,
    z_ref: f64,
    f0: f64,
) -> Result<f64, DesignError> {
    let sections = txline::quarter_wave_cascade(impedances_load_first);
    let at_f0 = txline::sweep(&sections, z_load, z_ref, f0, &[f0])?;
    let point = at_f0.points.into_iter().next().expect("one-point grid");
    Ok(point.response?.magnitude_db)
}

/// Searches for section impedances, then checks the winner against the
/// ordering constraint and the cascade model.
pub fn design(
    problem: &DesignProblem,
    swarm: &SwarmConfig,
    sweep: &SweepSettings,
) -> Result<DesignResult, DesignError> {
    problem.validate()?;
    sweep.validate()?;
    if swarm.dimension() != problem.n_sections {
        return Err(DesignError::Config(format!(
            "swarm searches {} dimensions for {} sections",
            swarm.dimension(),
            problem.n_sections
        )));
    }
    let objective = MatchObjective::for_problem(problem, sweep.f0);
    let report = pso::run(swarm, &objective)?;

    let impedances = report.best_position;
    let fitness = objective.fitness(&impedances)?;
    let ordering_ok = check_ordering(&impedances);
    let sections = txline::quarter_wave_cascade(&impedances);
    let response = txline::sweep(&sections, problem.z_load, problem.z_target, sweep.f0, &sweep.grid())?;
    let verified_db_at_f0 = reflection_db_at(&impedances, problem.z_load, problem.z_target, sweep.f0)?;

    Ok(DesignResult {
        impedances,
        fitness,
        trace: report.trace,
        verified_db_at_f0,
        termination: report.termination,
        iterations: report.iterations,
        ordering_ok,
        constraint_violated: problem.ordering_required && !ordering_ok,
        non_finite_evaluations: report.non_finite_evaluations,
        sweep: response,
    })
}
