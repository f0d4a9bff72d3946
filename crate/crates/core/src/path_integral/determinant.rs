use crate::error::{Error, Result};
use crate::grassmann::{determinant, gaussian_integral_expand, SquareMatrix, GAUSSIAN_CAP};
use crate::path_integral::chain::{DiscretizedChain, SliceScheme};
use crate::path_integral::kernel::BoundaryCondition;

/// Relative tolerance between the determinant and the Berezin expansion.
pub const ROUTE_TOLERANCE: f64 = 1e-10;

/// Matrix `M` of the closed-chain action `c*·M·c` after identifying
/// `c_0` with `∓c_N`: unit diagonal, `-λ` below it, and `±λ` in the
/// top-right corner (antiperiodic / periodic).
pub fn action_matrix(chain: &DiscretizedChain, bc: BoundaryCondition) -> SquareMatrix {
    let n = chain.n_steps();
    let lambda = chain.step_coefficient();
    let mut m = SquareMatrix::identity(n);
    for k in 1..n {
        m.set(k, k - 1, -lambda);
    }
    // the step c_1* c_0 wraps to c_1* c_N; for N = 1 it lands on the diagonal
    let corner = m.get(0, n - 1) + bc.sign() * -lambda;
    m.set(0, n - 1, corner);
    m
}

/// `det M` for the closed chain. Up to the Gaussian cap the Berezin
/// expansion of the same matrix is evaluated too and must agree.
pub fn partition_via_determinant(chain: &DiscretizedChain, bc: BoundaryCondition) -> Result<f64> {
    let m = action_matrix(chain, bc);
    let det = determinant(&m);
    if m.dim() <= GAUSSIAN_CAP {
        let expansion = gaussian_integral_expand(&m)?;
        if (expansion - det).abs() > ROUTE_TOLERANCE * det.abs().max(1.0) {
            return Err(Error::RouteDisagreement {
                determinant: det,
                expansion,
            });
        }
    }
    Ok(det)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub n_steps: usize,
    pub z: f64,
    pub reference: f64,
    pub abs_error: f64,
}

/// Determinant-route partition function for each `N`, against `1 ± e^{-βω}`.
pub fn convergence_sweep(
    beta: f64,
    omega: f64,
    n_list: &[usize],
    scheme: SliceScheme,
    bc: BoundaryCondition,
) -> Result<Vec<SweepPoint>> {
    if n_list.is_empty() {
        return Err(Error::InvalidParameter(
            "sweep needs at least one step count".into(),
        ));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "sweep step counts must be strictly ascending".into(),
        ));
    }
    let reference = bc.closed_form(beta, omega);
    n_list
        .iter()
        .map(|&n| {
            let chain = DiscretizedChain::new(n, beta, omega, scheme)?;
            let z = partition_via_determinant(&chain, bc)?;
            Ok(SweepPoint {
                n_steps: n,
                z,
                reference,
                abs_error: (z - reference).abs(),
            })
        })
        .collect()
}
