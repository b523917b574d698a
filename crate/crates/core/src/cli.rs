//! Batch front-end: multi-trial design runs and standalone verification.
//!
//! Settings resolve as command-line flags, then the `--config` file, then
//! defaults. The config file is flat TOML whose keys are the long flag
//! names without the leading dashes:
//!
//! ```toml
//! trials = 9
//! seed = 0
//! particles = 100
//! w = 0.7
//! c1 = 1.8
//! c2 = 1.8
//! bounds = [10, 120]        # or "10,120"
//! vclamp = 22
//! max-iters = 10000
//! tol = 1e-6
//! zload = 100
//! ztarget = 50
//! sections = 3
//! penalty = 1000
//! f0 = 5e9
//! sweep = [1e9, 9e9, 201]   # or "1e9,9e9,201"
//! out = "results"
//! deterministic-update = false
//! ```
//!
//! Trial `k` (1-based) runs with seed `seed + k`.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::matchdesign::{self, DesignError, DesignProblem, DesignResult, SweepSettings};
use crate::pso::{Bounds, SwarmConfig, DEFAULT_VCLAMP_FRACTION};
use crate::txline::{self, SweepResult};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Io(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config",
            CliError::Io(_) => "io",
        }
    }

    /// Single-line form for the error stream.
    pub fn report_line(&self) -> String {
        let msg = self.to_string().replace(['\n', '\r'], " ");
        format!("error[{}]: {}", self.kind(), msg)
    }
}

impl From<DesignError> for CliError {
    fn from(e: DesignError) -> Self {
        CliError::Config(e.to_string())
    }
}

fn io_error(path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(name = "taperswarm", version, about = "Design and verify stepped quarter-wave matching transformers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Run seeded design trials and write summary, trace and sweep CSVs.
    Run(RunArgs),
    /// Sweep a given design without optimizing.
    Verify(VerifyArgs),
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [lo, hi] => Ok((
            lo.parse().map_err(|e| format!("bad number {lo:?}: {e}"))?,
            hi.parse().map_err(|e| format!("bad number {hi:?}: {e}"))?,
        )),
        _ => Err(format!("expected LO,HI, got {s:?}")),
    }
}

/// `START,STOP,POINTS`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepArg {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

fn parse_sweep(s: &str) -> Result<SweepArg, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [start, stop, points] => Ok(SweepArg {
            start: start.parse().map_err(|e| format!("bad number {start:?}: {e}"))?,
            stop: stop.parse().map_err(|e| format!("bad number {stop:?}: {e}"))?,
            points: parse_count(points)?,
        }),
        _ => Err(format!("expected START,STOP,POINTS, got {s:?}")),
    }
}

/// Accepts `201` as well as `201.0` (TOML arrays turn into floats).
fn parse_count(s: &str) -> Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x <= usize::MAX as f64 => Ok(x as usize),
        _ => Err(format!("bad count {s:?}")),
    }
}

/// Overrides for a [`RunSpec`]; unset fields fall through to the config
/// file and then to defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// Flat TOML file with the same keys as the long flags.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub trials: Option<usize>,
    /// Base seed; trial k uses seed + k.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub particles: Option<usize>,
    /// Inertia weight.
    #[arg(long, allow_negative_numbers = true)]
    pub w: Option<f64>,
    /// Cognitive coefficient.
    #[arg(long, allow_negative_numbers = true)]
    pub c1: Option<f64>,
    /// Social coefficient.
    #[arg(long, allow_negative_numbers = true)]
    pub c2: Option<f64>,
    /// Impedance search range in ohms.
    #[arg(long, value_name = "LO,HI", value_parser = parse_pair, allow_negative_numbers = true)]
    pub bounds: Option<(f64, f64)>,
    /// Velocity limit per iteration (default: 20% of the range).
    #[arg(long, allow_negative_numbers = true)]
    pub vclamp: Option<f64>,
    #[arg(long = "max-iters")]
    pub max_iters: Option<usize>,
    /// Stop once the best fitness is at or below this value.
    #[arg(long, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub zload: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub ztarget: Option<f64>,
    #[arg(long)]
    pub sections: Option<usize>,
    /// Ordering penalty per ohm of violation.
    #[arg(long, allow_negative_numbers = true)]
    pub penalty: Option<f64>,
    /// Design frequency in Hz.
    #[arg(long, allow_negative_numbers = true)]
    pub f0: Option<f64>,
    #[arg(long, value_name = "START,STOP,POINTS", value_parser = parse_sweep)]
    pub sweep: Option<SweepArg>,
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Literal update with r1 = r2 = 1.
    #[arg(long = "deterministic-update")]
    pub deterministic_update: bool,
}

#[derive(Debug, Parser)]
#[command(no_binary_name = true)]
struct ConfigFileArgs {
    #[command(flatten)]
    args: RunArgs,
}

fn toml_scalar(key: &str, v: &toml::Value) -> Result<String, CliError> {
    match v {
        toml::Value::String(s) => Ok(s.clone()),
        toml::Value::Integer(i) => Ok(i.to_string()),
        toml::Value::Float(f) => Ok(f.to_string()),
        toml::Value::Boolean(b) => Ok(b.to_string()),
        toml::Value::Array(items) => items
            .iter()
            .map(|item| toml_scalar(key, item))
            .collect::<Result<Vec<_>, _>>()
            .map(|parts| parts.join(",")),
        _ => Err(CliError::Config(format!("config key {key:?} has an unsupported value"))),
    }
}

/// Parses a config document through the same flag parser.
pub fn parse_config_text(text: &str) -> Result<RunArgs, CliError> {
    let table: toml::Table = text
        .parse()
        .map_err(|e: toml::de::Error| CliError::Config(format!("config file: {}", e.message())))?;
    let mut argv: Vec<String> = Vec::new();
    for (key, value) in &table {
        if key == "config" {
            return Err(CliError::Config("config files cannot include other config files".into()));
        }
        if key == "deterministic-update" {
            match value {
                toml::Value::Boolean(true) => argv.push("--deterministic-update".into()),
                toml::Value::Boolean(false) => {}
                _ => {
                    return Err(CliError::Config(
                        "config key \"deterministic-update\" must be a boolean".into(),
                    ))
                }
            }
            continue;
        }
        argv.push(format!("--{key}"));
        argv.push(toml_scalar(key, value)?);
    }
    ConfigFileArgs::try_parse_from(argv)
        .map(|c| c.args)
        .map_err(|e| CliError::Config(format!("config file: {}", first_line(&e.to_string()))))
}

/// First line of a clap message without its `error: ` prefix.
pub fn first_line(s: &str) -> String {
    let line = s.lines().next().unwrap_or("").trim();
    line.strip_prefix("error: ").unwrap_or(line).to_string()
}

impl RunArgs {
    /// Fields set here win; the rest come from `fallback`.
    pub fn or(self, fallback: RunArgs) -> RunArgs {
        RunArgs {
            config: self.config.or(fallback.config),
            trials: self.trials.or(fallback.trials),
            seed: self.seed.or(fallback.seed),
            particles: self.particles.or(fallback.particles),
            w: self.w.or(fallback.w),
            c1: self.c1.or(fallback.c1),
            c2: self.c2.or(fallback.c2),
            bounds: self.bounds.or(fallback.bounds),
            vclamp: self.vclamp.or(fallback.vclamp),
            max_iters: self.max_iters.or(fallback.max_iters),
            tol: self.tol.or(fallback.tol),
            zload: self.zload.or(fallback.zload),
            ztarget: self.ztarget.or(fallback.ztarget),
            sections: self.sections.or(fallback.sections),
            penalty: self.penalty.or(fallback.penalty),
            f0: self.f0.or(fallback.f0),
            sweep: self.sweep.or(fallback.sweep),
            out: self.out.or(fallback.out),
            deterministic_update: self.deterministic_update || fallback.deterministic_update,
        }
    }

    /// Merges the config file (if any) under these flags and resolves
    /// defaults.
    pub fn resolve(self) -> Result<RunSpec, CliError> {
        let merged = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
                self.or(parse_config_text(&text)?)
            }
            None => self,
        };
        RunSpec::from_args(merged)
    }
}

/// Fully resolved batch settings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSpec {
    pub trials: usize,
    pub base_seed: u64,
    pub problem: DesignProblem,
    /// Seed field is ignored; each trial sets its own.
    pub swarm: SwarmConfig,
    pub sweep: SweepSettings,
    pub out_dir: PathBuf,
}

impl RunSpec {
    /// Defaults: 9 trials, base seed 0, default problem and swarm, default
    /// sweep, output to `taperswarm-out`.
    pub fn with_defaults(out_dir: impl Into<PathBuf>) -> Self {
        let problem = DesignProblem::default();
        Self {
            trials: 9,
            base_seed: 0,
            swarm: problem.swarm_config(),
            problem,
            sweep: SweepSettings::default(),
            out_dir: out_dir.into(),
        }
    }

    pub fn from_args(a: RunArgs) -> Result<Self, CliError> {
        let defaults = Self::with_defaults("taperswarm-out");
        let mut problem = defaults.problem.clone();
        if let Some(z) = a.zload {
            problem.z_load = z;
        }
        if let Some(z) = a.ztarget {
            problem.z_target = z;
        }
        if let Some(n) = a.sections {
            problem.n_sections = n;
        }
        if let Some((lo, hi)) = a.bounds {
            problem.bounds = Bounds::new(lo, hi);
        }
        if let Some(p) = a.penalty {
            problem.penalty_weight = p;
        }
        problem.validate()?;

        let mut swarm = problem.swarm_config();
        let vclamp = a
            .vclamp
            .unwrap_or(DEFAULT_VCLAMP_FRACTION * problem.bounds.width());
        swarm = swarm.with_velocity_clamp(vclamp);
        if let Some(n) = a.particles {
            swarm.population = n;
        }
        if let Some(w) = a.w {
            swarm.inertia = w;
        }
        if let Some(c) = a.c1 {
            swarm.cognitive = c;
        }
        if let Some(c) = a.c2 {
            swarm.social = c;
        }
        if let Some(n) = a.max_iters {
            swarm.max_iterations = n;
        }
        if let Some(t) = a.tol {
            swarm.fitness_tolerance = t;
        }
        swarm.stochastic_update = !a.deterministic_update;
        swarm.validate().map_err(|e| CliError::Config(e.to_string()))?;

        let mut sweep = defaults.sweep;
        if let Some(f0) = a.f0 {
            sweep.f0 = f0;
        }
        if let Some(s) = a.sweep {
            sweep.f_start = s.start;
            sweep.f_stop = s.stop;
            sweep.points = s.points;
        }
        sweep.validate()?;

        let trials = a.trials.unwrap_or(defaults.trials);
        if trials == 0 {
            return Err(CliError::Config("trials must be at least 1".into()));
        }
        Ok(Self {
            trials,
            base_seed: a.seed.unwrap_or(defaults.base_seed),
            problem,
            swarm,
            sweep,
            out_dir: a.out.unwrap_or(defaults.out_dir),
        })
    }

    pub fn trial_seed(&self, trial: usize) -> u64 {
        self.base_seed.wrapping_add(trial as u64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub trial: usize,
    pub seed: u64,
    pub result: DesignResult,
}

pub const SUMMARY_FIXED_COLUMNS: [&str; 3] = ["trial", "seed", "fitness"];
pub const SUMMARY_TAIL_COLUMNS: [&str; 4] = ["ordering_ok", "gamma_db_at_f0", "iterations", "termination"];

/// `trial,seed,fitness,z1..zN,ordering_ok,gamma_db_at_f0,iterations,termination`
pub fn summary_header(sections: usize) -> String {
    let zs = (1..=sections).map(|k| format!("z{k}"));
    SUMMARY_FIXED_COLUMNS
        .iter()
        .map(|s| s.to_string())
        .chain(zs)
        .chain(SUMMARY_TAIL_COLUMNS.iter().map(|s| s.to_string()))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn summary_row(t: &TrialOutcome) -> String {
    let r = &t.result;
    let mut cols = vec![t.trial.to_string(), t.seed.to_string(), r.fitness.to_string()];
    cols.extend(r.impedances.iter().map(|z| z.to_string()));
    cols.push(r.ordering_ok.to_string());
    cols.push(r.verified_db_at_f0.to_string());
    cols.push(r.iterations.to_string());
    cols.push(r.termination.to_string());
    cols.join(",")
}

pub fn write_summary<W: Write>(mut out: W, sections: usize, trials: &[TrialOutcome]) -> io::Result<()> {
    writeln!(out, "{}", summary_header(sections))?;
    for t in trials {
        writeln!(out, "{}", summary_row(t))?;
    }
    Ok(())
}

fn write_file(path: &Path, f: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| io_error(path, e))?;
    let mut w = BufWriter::new(file);
    f(&mut w).and_then(|_| w.flush()).map_err(|e| io_error(path, e))
}

/// Runs every trial of `spec` (in parallel), then writes `summary.csv`,
/// `trace_<k>.csv` and `sweep_<k>.csv` into the output directory.
pub fn run_trials(spec: &RunSpec) -> Result<Vec<TrialOutcome>, CliError> {
    let outcomes = (1..=spec.trials)
        .into_par_iter()
        .map(|trial| {
            let seed = spec.trial_seed(trial);
            let swarm = SwarmConfig { seed, ..spec.swarm.clone() };
            matchdesign::design(&spec.problem, &swarm, &spec.sweep).map(|result| TrialOutcome {
                trial,
                seed,
                result,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let dir = &spec.out_dir;
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    for t in &outcomes {
        write_file(&dir.join(format!("trace_{}.csv", t.trial)), |w| t.result.trace.write_csv(w))?;
        write_file(&dir.join(format!("sweep_{}.csv", t.trial)), |w| t.result.sweep.write_csv(w))?;
    }
    write_file(&dir.join("summary.csv"), |w| {
        write_summary(w, spec.problem.n_sections, &outcomes)
    })?;
    write_file(&dir.join("run.json"), |w| {
        serde_json::to_writer_pretty(&mut *w, spec).map_err(io::Error::other)?;
        writeln!(w)
    })?;
    Ok(outcomes)
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Section impedances in ohms, load-adjacent first.
    #[arg(long, value_name = "Z1,Z2,...", value_delimiter = ',', required = true, allow_negative_numbers = true)]
    pub impedances: Vec<f64>,
    #[arg(long, default_value_t = 100.0)]
    pub zload: f64,
    /// Reference impedance seen at the input.
    #[arg(long, default_value_t = 50.0)]
    pub ztarget: f64,
    #[arg(long, default_value_t = 5e9)]
    pub f0: f64,
    #[arg(long, value_name = "START,STOP,POINTS", value_parser = parse_sweep)]
    pub sweep: Option<SweepArg>,
    /// Write the sweep CSV here instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub sweep: SweepResult,
    pub db_at_f0: f64,
}

/// Sweeps a design given load-adjacent first.
pub fn verify(
    impedances: &[f64],
    z_load: f64,
    z_ref: f64,
    f0: f64,
    grid: &[f64],
) -> Result<Verification, CliError> {
    if impedances.is_empty() {
        return Err(CliError::Config("no impedances given".into()));
    }
    if let Some(z) = impedances.iter().find(|z| !(**z > 0.0 && z.is_finite())) {
        return Err(CliError::Config(format!("impedance must be positive, got {z}")));
    }
    let sections = txline::quarter_wave_cascade(impedances);
    let sweep = txline::sweep(&sections, z_load, z_ref, f0, grid)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let db_at_f0 = matchdesign::reflection_db_at(impedances, z_load, z_ref, f0)?;
    Ok(Verification { sweep, db_at_f0 })
}

/// Entry point shared by the binary and the tests. Returns the exit code.
pub fn execute<O: Write, E: Write>(cli: Cli, stdout: &mut O, stderr: &mut E) -> i32 {
    match dispatch(cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.report_line());
            e.exit_code()
        }
    }
}

fn dispatch<O: Write, E: Write>(cli: Cli, stdout: &mut O, stderr: &mut E) -> Result<(), CliError> {
    let console = |e: io::Error| CliError::Io(format!("console: {e}"));
    match cli.command {
        Command::Run(args) => {
            let spec = args.resolve()?;
            let outcomes = run_trials(&spec)?;
            let ok = outcomes.iter().filter(|t| !t.result.constraint_violated).count();
            writeln!(
                stdout,
                "{} trials written to {} ({} satisfy ordering)",
                outcomes.len(),
                spec.out_dir.display(),
                ok
            )
            .map_err(console)?;
        }
        Command::Verify(args) => {
            let defaults = SweepSettings::default();
            let s = args.sweep.unwrap_or(SweepArg {
                start: defaults.f_start,
                stop: defaults.f_stop,
                points: defaults.points,
            });
            let settings = SweepSettings {
                f0: args.f0,
                f_start: s.start,
                f_stop: s.stop,
                points: s.points,
            };
            settings.validate()?;
            let v = verify(&args.impedances, args.zload, args.ztarget, args.f0, &settings.grid())?;
            let line = format!("gamma_db_at_f0={}", v.db_at_f0);
            match &args.out {
                Some(path) => {
                    write_file(path, |w| v.sweep.write_csv(w))?;
                    writeln!(stdout, "{line}").map_err(console)?;
                }
                None => {
                    v.sweep.write_csv(&mut *stdout).map_err(console)?;
                    writeln!(stderr, "{line}").map_err(console)?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("taperswarm").chain(args.iter().copied())).unwrap()
    }

    fn run_args(args: &[&str]) -> RunArgs {
        match parse(&[&["run"], args].concat()).command {
            Command::Run(a) => a,
            _ => unreachable!(),
        }
    }

    #[test]
    fn defaults_resolve() {
        let spec = run_args(&[]).resolve().unwrap();
        assert_eq!(spec.trials, 9);
        assert_eq!(spec.problem, DesignProblem::default());
        assert_eq!(spec.swarm.population, 100);
        assert_eq!(spec.swarm.velocity_clamp, vec![22.0; 3]);
        assert!(spec.swarm.stochastic_update);
        assert_eq!(spec.sweep, SweepSettings::default());
    }

    #[test]
    fn flags_shape_the_spec() {
        let spec = run_args(&[
            "--trials", "2", "--seed", "40", "--particles", "30", "--w", "0.5", "--c1", "1.2",
            "--c2", "1.3", "--bounds", "20,110", "--max-iters", "50", "--tol", "0",
            "--zload", "75", "--ztarget", "25", "--sections", "2", "--penalty", "10",
            "--f0", "2e9", "--sweep", "1e9,3e9,11", "--deterministic-update",
        ])
        .resolve()
        .unwrap();
        assert_eq!(spec.trials, 2);
        assert_eq!(spec.trial_seed(1), 41);
        assert_eq!(spec.swarm.population, 30);
        assert_eq!(spec.swarm.bounds, vec![Bounds::new(20.0, 110.0); 2]);
        assert_eq!(spec.swarm.velocity_clamp, vec![18.0; 2]);
        assert!(!spec.swarm.stochastic_update);
        assert_eq!(spec.problem.z_load, 75.0);
        assert_eq!(spec.problem.penalty_weight, 10.0);
        assert_eq!(spec.sweep.points, 11);
        assert_eq!(spec.sweep.f0, 2e9);
    }

    #[test]
    fn flags_override_config_file_values() {
        let file = parse_config_text(
            "trials = 4\nseed = 7\nbounds = [15, 100]\nsweep = \"1e9,9e9,21\"\ndeterministic-update = true\n",
        )
        .unwrap();
        let flags = run_args(&["--trials", "2"]);
        let spec = RunSpec::from_args(flags.or(file)).unwrap();
        assert_eq!(spec.trials, 2);
        assert_eq!(spec.base_seed, 7);
        assert_eq!(spec.problem.bounds, Bounds::new(15.0, 100.0));
        assert_eq!(spec.sweep.points, 21);
        assert!(!spec.swarm.stochastic_update);
    }

    #[test]
    fn config_file_numbers_in_arrays() {
        let file = parse_config_text("sweep = [1e9, 9e9, 201]\nvclamp = 5\n").unwrap();
        assert_eq!(file.sweep.unwrap().points, 201);
        assert_eq!(file.vclamp, Some(5.0));
    }

    #[test]
    fn config_file_rejects_unknown_keys() {
        let err = parse_config_text("colour = 3\n").unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(!err.report_line().contains('\n'));
    }

    #[test]
    fn invalid_values_are_config_errors() {
        for args in [
            &["--particles", "0"][..],
            &["--trials", "0"],
            &["--bounds", "120,10"],
            &["--vclamp", "0"],
            &["--zload", "-5"],
            &["--sweep", "9e9,1e9,10"],
        ] {
            let err = run_args(args).resolve().unwrap_err();
            assert_eq!(err.exit_code(), 1, "{args:?}");
        }
    }

    #[test]
    fn summary_header_matches_schema() {
        assert_eq!(
            summary_header(3),
            "trial,seed,fitness,z1,z2,z3,ordering_ok,gamma_db_at_f0,iterations,termination"
        );
    }

    #[test]
    fn verify_rejects_nonpositive_impedances() {
        let grid = [5e9];
        assert!(verify(&[], 100.0, 50.0, 5e9, &grid).is_err());
        assert!(verify(&[80.0, -1.0, 30.0], 100.0, 50.0, 5e9, &grid).is_err());
    }

    #[test]
    fn error_lines_are_single_line() {
        let e = CliError::Io("a\nb".into());
        assert_eq!(e.report_line(), "error[io]: a b");
        assert_eq!(e.exit_code(), 2);
    }
}
