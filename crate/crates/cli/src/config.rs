use clap::{Parser, ValueEnum};

use fermion_density::path_integral::{BoundaryCondition, SliceScheme, SYMBOLIC_STEP_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Trace and supertrace of the 2x2 density matrix.
    Exact,
    /// Symbolic contraction of the sliced kernel, closed at the boundary.
    Chain,
    /// Determinant of the closed-chain action matrix.
    Determinant,
    /// Determinant route over a list of step counts.
    Sweep,
    /// Run the invariant suite.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    FirstOrder,
    Exact,
}

impl From<SchemeArg> for SliceScheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::FirstOrder => SliceScheme::FirstOrder,
            SchemeArg::Exact => SliceScheme::Exact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BcArg {
    Antiperiodic,
    Periodic,
    Both,
}

impl BcArg {
    pub fn conditions(self) -> Vec<BoundaryCondition> {
        match self {
            BcArg::Antiperiodic => vec![BoundaryCondition::Antiperiodic],
            BcArg::Periodic => vec![BoundaryCondition::Periodic],
            BcArg::Both => BoundaryCondition::BOTH.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Partition functions of the fermionic oscillator by operator trace,
/// symbolic Grassmann contraction, or action determinant.
#[derive(Debug, Clone, Parser)]
#[command(name = "fermion-density", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Inverse temperature; `sweep` accepts a comma-separated list.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub beta: Vec<f64>,

    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,

    /// Number of time slices; `sweep` accepts a comma-separated ascending list.
    #[arg(long, value_delimiter = ',', default_value = "16")]
    pub steps: Vec<usize>,

    #[arg(long, value_enum, default_value = "exact")]
    pub scheme: SchemeArg,

    #[arg(long, value_enum, default_value = "both")]
    pub bc: BcArg,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,

    /// Largest accepted gap between the chain and determinant routes in `selftest`.
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,

    /// Permit beta = 0 (partition functions only, no observables).
    #[arg(long)]
    pub allow_beta_zero: bool,
}

impl RunConfig {
    /// Checks that clap cannot express; the message goes to the usage error.
    pub fn validate(&self) -> Result<(), String> {
        if self.command == Command::Selftest {
            return if self.tolerance > 0.0 && self.tolerance.is_finite() {
                Ok(())
            } else {
                Err(format!(
                    "--tolerance must be positive and finite, got {}",
                    self.tolerance
                ))
            };
        }
        if self.command != Command::Sweep {
            if self.beta.len() != 1 {
                return Err("--beta takes a single value outside `sweep`".into());
            }
            if self.steps.len() != 1 {
                return Err("--steps takes a single value outside `sweep`".into());
            }
        }
        for &b in &self.beta {
            if !b.is_finite() || b < 0.0 {
                return Err(format!("--beta must be finite and nonnegative, got {b}"));
            }
            if b == 0.0 && !self.allow_beta_zero {
                return Err("--beta must be > 0 for observables; pass --allow-beta-zero for partition functions only".into());
            }
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return Err(format!(
                "--omega must be positive and finite, got {}",
                self.omega
            ));
        }
        if self.steps.contains(&0) {
            return Err("--steps must be positive".into());
        }
        if self.command == Command::Sweep && self.steps.windows(2).any(|w| w[0] >= w[1]) {
            return Err("--steps must be strictly ascending for `sweep`".into());
        }
        if self.command == Command::Chain && self.steps[0] > SYMBOLIC_STEP_CAP {
            return Err(format!(
                "`chain` supports at most {SYMBOLIC_STEP_CAP} steps"
            ));
        }
        Ok(())
    }
}
