use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::{GeneratorRegistry, GrassmannElement};
use crate::path_integral::kernel::PropagatorKernel;

/// Largest `N` for which a symbolic generator registry is built.
pub const SYMBOLIC_STEP_CAP: usize = 64;

/// Per-step coefficient `λ` of the sliced kernel `1 + λ c_k* c_{k-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SliceScheme {
    /// `λ = 1 - εω`, the two step exponentials merged to first order in `ε`.
    FirstOrder,
    /// `λ = e^{-εω}`; products over a chain are exact at every `N`.
    Exact,
}

impl SliceScheme {
    pub fn step_coefficient(self, eps_omega: f64) -> f64 {
        match self {
            SliceScheme::FirstOrder => 1.0 - eps_omega,
            SliceScheme::Exact => (-eps_omega).exp(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SliceScheme::FirstOrder => "first-order",
            SliceScheme::Exact => "exact",
        }
    }
}

/// Imaginary-time interval `[0, β]` cut into `N` steps of width `ε = β/N`.
///
/// Generators are laid out as `c_0, c_0*, c_1, c_1*, …, c_N, c_N*` with
/// `(c_k, c_k*)` registered as pairs. The registry only exists for
/// `N ≤ SYMBOLIC_STEP_CAP`; the determinant route has no such limit.
#[derive(Debug, Clone)]
pub struct DiscretizedChain {
    n_steps: usize,
    beta: f64,
    omega: f64,
    epsilon: f64,
    scheme: SliceScheme,
    registry: Option<Arc<GeneratorRegistry>>,
}

impl DiscretizedChain {
    /// `beta = 0` and `omega = 0` are both accepted here.
    pub fn new(n_steps: usize, beta: f64, omega: f64, scheme: SliceScheme) -> Result<Self> {
        if n_steps == 0 {
            return Err(Error::InvalidParameter(
                "chain needs at least one step".into(),
            ));
        }
        if !(beta >= 0.0 && beta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "beta must be finite and nonnegative, got {beta}"
            )));
        }
        if !(omega >= 0.0 && omega.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "omega must be finite and nonnegative, got {omega}"
            )));
        }
        let registry = if n_steps <= SYMBOLIC_STEP_CAP {
            let labels: Vec<String> = (0..=n_steps)
                .flat_map(|k| [format!("c{k}"), format!("c{k}*")])
                .collect();
            let pairs: Vec<(String, String)> = (0..=n_steps)
                .map(|k| (format!("c{k}"), format!("c{k}*")))
                .collect();
            Some(GeneratorRegistry::new(&labels, &pairs)?)
        } else {
            None
        };
        Ok(Self {
            n_steps,
            beta,
            omega,
            epsilon: beta / n_steps as f64,
            scheme,
            registry,
        })
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn scheme(&self) -> SliceScheme {
        self.scheme
    }

    pub fn step_coefficient(&self) -> f64 {
        self.scheme.step_coefficient(self.epsilon * self.omega)
    }

    pub fn registry(&self) -> Result<&Arc<GeneratorRegistry>> {
        self.registry.as_ref().ok_or(Error::StepsOverCap {
            n: self.n_steps,
            cap: SYMBOLIC_STEP_CAP,
        })
    }

    /// Index of `c_k`.
    pub fn c(&self, k: usize) -> usize {
        2 * k
    }

    /// Index of `c_k*`.
    pub fn c_star(&self, k: usize) -> usize {
        2 * k + 1
    }

    /// `⟨c_k| e^{-εH} |c_{k-1}⟩ = 1 + λ c_k* c_{k-1}`.
    pub fn step_kernel(&self, k: usize) -> Result<GrassmannElement> {
        if k == 0 || k > self.n_steps {
            return Err(Error::StepOutOfRange { k, n: self.n_steps });
        }
        let reg = self.registry()?;
        let hop = GrassmannElement::monomial(
            reg,
            &[self.c_star(k), self.c(k - 1)],
            self.step_coefficient(),
        )?;
        hop.exp_nilpotent()
    }

    /// Resolution-of-identity weight `e^{-c_k* c_k}`.
    fn measure_weight(&self, k: usize) -> Result<GrassmannElement> {
        let reg = self.registry()?;
        GrassmannElement::monomial(reg, &[self.c_star(k), self.c(k)], -1.0)?.exp_nilpotent()
    }

    /// Product of all step kernels with every interior pair integrated out.
    ///
    /// Pairs are absorbed eagerly in ascending time order, so the working
    /// element never spans more than three time slices.
    pub fn contract_interior(&self) -> Result<GrassmannElement> {
        let mut acc = self.step_kernel(1)?;
        for k in 1..self.n_steps {
            acc = acc
                .mul(&self.measure_weight(k)?)?
                .mul(&self.step_kernel(k + 1)?)?
                .integrate_pair(self.c_star(k), self.c(k))?;
        }
        Ok(acc)
    }

    /// Boundary kernel on `{c_N*, c_N, c_0}`: the contracted interior times
    /// the end-point factor `e^{c_N* c_N}`.
    pub fn contract_chain(&self) -> Result<PropagatorKernel> {
        let n = self.n_steps;
        let reg = self.registry()?;
        let end_factor =
            GrassmannElement::monomial(reg, &[self.c_star(n), self.c(n)], 1.0)?.exp_nilpotent()?;
        let element = self.contract_interior()?.mul(&end_factor)?;
        PropagatorKernel::new(element, self.c_star(n), self.c(n), self.c(0))
    }
}
