//! Batch front end: one command per process, table on standard output.

pub mod config;
pub mod output;

use fermion_density::oscillator::{
    density_matrix, partition_trace, supertrace, thermal_observables,
};
use fermion_density::path_integral::{
    convergence_sweep, partition_via_chain, partition_via_determinant, BoundaryCondition,
    DiscretizedChain,
};
use fermion_density::selftest;

pub use config::{Command, Format, RunConfig};
pub use output::{emit, ResultRow};

/// Text for standard output and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub stdout: String,
    pub summary: Option<String>,
    pub exit_code: u8,
}

pub fn run(config: &RunConfig) -> fermion_density::Result<RunOutput> {
    if config.command == Command::Selftest {
        let outcomes = selftest::run_all(config.tolerance)?;
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        return Ok(RunOutput {
            stdout: output::emit_checks(&outcomes, config.format),
            summary: Some(format!(
                "{} passed, {failed} failed",
                outcomes.len() - failed
            )),
            exit_code: u8::from(failed > 0),
        });
    }
    let rows = compute_rows(config)?;
    Ok(RunOutput {
        stdout: emit(&rows, config.format),
        summary: None,
        exit_code: 0,
    })
}

pub fn compute_rows(config: &RunConfig) -> fermion_density::Result<Vec<ResultRow>> {
    let omega = config.omega;
    let scheme = config.scheme.into();
    let bcs = config.bc.conditions();
    let mut rows = Vec::new();
    match config.command {
        Command::Exact => {
            let beta = config.beta[0];
            let rho = density_matrix(beta, omega)?;
            let thermal = if beta > 0.0 {
                Some(thermal_observables(beta, omega)?)
            } else {
                None
            };
            for bc in bcs {
                let (z, reference) = match (bc, thermal) {
                    (BoundaryCondition::Antiperiodic, Some(t)) => {
                        (partition_trace(&rho), t.z_minus)
                    }
                    (BoundaryCondition::Periodic, Some(t)) => (supertrace(&rho), t.z_plus),
                    (BoundaryCondition::Antiperiodic, None) => {
                        (partition_trace(&rho), bc.closed_form(beta, omega))
                    }
                    (BoundaryCondition::Periodic, None) => {
                        (supertrace(&rho), bc.closed_form(beta, omega))
                    }
                };
                rows.push(ResultRow::new(
                    "exact",
                    beta,
                    omega,
                    None,
                    bc.as_str(),
                    z,
                    reference,
                ));
            }
        }
        Command::Chain | Command::Determinant => {
            let (beta, n) = (config.beta[0], config.steps[0]);
            let chain = DiscretizedChain::new(n, beta, omega, scheme)?;
            for bc in bcs {
                let (route, z) = if config.command == Command::Chain {
                    ("chain", partition_via_chain(&chain, bc)?)
                } else {
                    ("determinant", partition_via_determinant(&chain, bc)?)
                };
                rows.push(ResultRow::new(
                    route,
                    beta,
                    omega,
                    Some(n),
                    bc.as_str(),
                    z,
                    bc.closed_form(beta, omega),
                ));
            }
        }
        Command::Sweep => {
            for bc in bcs {
                for &beta in &config.beta {
                    for p in convergence_sweep(beta, omega, &config.steps, scheme, bc)? {
                        rows.push(ResultRow::new(
                            "determinant",
                            beta,
                            omega,
                            Some(p.n_steps),
                            bc.as_str(),
                            p.z,
                            p.reference,
                        ));
                    }
                }
            }
        }
        Command::Selftest => unreachable!("selftest emits check rows"),
    }
    Ok(rows)
}
