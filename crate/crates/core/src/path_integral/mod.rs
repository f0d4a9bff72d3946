//! Time-sliced coherent-state path integral for `H = ω c†c`.
//!
//! Two routes to the partition functions are provided. The symbolic route
//! contracts the sliced kernel pair by pair into a boundary kernel and
//! closes it with a boundary condition; the determinant route evaluates
//! `det M` of the closed-chain action.
//!
//! The change of variables `η = c e^{ωτ}` has unit Jacobian and only rescales
//! the per-step hopping coefficient, so it is absorbed into `λ` rather than
//! carried out as a separate transform.

mod chain;
mod determinant;
mod kernel;

pub use chain::{DiscretizedChain, SliceScheme, SYMBOLIC_STEP_CAP};
pub use determinant::{
    action_matrix, convergence_sweep, partition_via_determinant, SweepPoint, ROUTE_TOLERANCE,
};
pub use kernel::{close_boundary, closed_form_kernel, BoundaryCondition, PropagatorKernel};

use crate::error::Result;

/// Symbolic route: contract the chain, bring the propagating term to the
/// closed-form sign convention, and close the boundary.
pub fn partition_via_chain(chain: &DiscretizedChain, bc: BoundaryCondition) -> Result<f64> {
    close_boundary(&chain.contract_chain()?.reflected()?, bc)
}
