use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::{GeneratorRegistry, GrassmannElement, Monomial};

/// Closure of the boundary kernel at `τ = β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryCondition {
    /// `c(0) = -c(β)`; yields the physical trace `Z⁻ = 1 + e^{-βω}`.
    Antiperiodic,
    /// `c(0) = c(β)`; yields the graded trace `Z⁺ = 1 - e^{-βω}`.
    Periodic,
}

impl BoundaryCondition {
    pub const BOTH: [BoundaryCondition; 2] =
        [BoundaryCondition::Antiperiodic, BoundaryCondition::Periodic];

    /// Factor in `c(0) = sign · c(β)`.
    pub fn sign(self) -> f64 {
        match self {
            BoundaryCondition::Antiperiodic => -1.0,
            BoundaryCondition::Periodic => 1.0,
        }
    }

    /// `1 ± q` given `q = λ^N` (or `e^{-βω}` in the continuum).
    pub fn partition_from(self, q: f64) -> f64 {
        1.0 - self.sign() * q
    }

    pub fn closed_form(self, beta: f64, omega: f64) -> f64 {
        self.partition_from((-beta * omega).exp())
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryCondition::Antiperiodic => "antiperiodic",
            BoundaryCondition::Periodic => "periodic",
        }
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Grassmann kernel on the boundary generators `c*(β), c(β), c(0)`.
///
/// Only the monomials `1`, `c*(β)c(β)` and `c*(β)c(0)` can occur; any
/// other term is rejected at construction.
#[derive(Debug, Clone)]
pub struct PropagatorKernel {
    element: GrassmannElement,
    c_star_end: usize,
    c_end: usize,
    c_start: usize,
    coeff_id: f64,
    coeff_diag: f64,
    coeff_prop: f64,
}

impl PropagatorKernel {
    pub fn new(
        element: GrassmannElement,
        c_star_end: usize,
        c_end: usize,
        c_start: usize,
    ) -> Result<Self> {
        element.require_support(&[c_star_end, c_end, c_start])?;
        let allowed = [
            Monomial::ONE,
            Monomial::single(c_star_end).union(&Monomial::single(c_end)),
            Monomial::single(c_star_end).union(&Monomial::single(c_start)),
        ];
        if let Some((m, c)) = element.terms().find(|(m, _)| !allowed.contains(m)) {
            let stray = GrassmannElement::monomial(
                element.registry(),
                &m.indices().collect::<Vec<_>>(),
                c,
            )?;
            return Err(Error::UnexpectedMonomial(stray.to_string()));
        }
        let coeff_id = element.constant_term();
        let coeff_diag = element.coefficient_of(&[c_star_end, c_end])?;
        let coeff_prop = element.coefficient_of(&[c_star_end, c_start])?;
        Ok(Self {
            element,
            c_star_end,
            c_end,
            c_start,
            coeff_id,
            coeff_diag,
            coeff_prop,
        })
    }

    pub fn element(&self) -> &GrassmannElement {
        &self.element
    }

    /// Indices of `(c*(β), c(β), c(0))`.
    pub fn boundary_generators(&self) -> (usize, usize, usize) {
        (self.c_star_end, self.c_end, self.c_start)
    }

    pub fn coeff_id(&self) -> f64 {
        self.coeff_id
    }

    /// Coefficient on the ordered product `c*(β) c(β)`.
    pub fn coeff_diag(&self) -> f64 {
        self.coeff_diag
    }

    /// Coefficient on the ordered product `c*(β) c(0)`.
    pub fn coeff_prop(&self) -> f64 {
        self.coeff_prop
    }

    /// Same kernel with the sign of the `c*(β) c(0)` term flipped.
    ///
    /// The sliced chain produces `+λ^N c*(β)c(0)` under this crate's
    /// measure convention, while the closed-form kernel carries
    /// `-e^{-βω} c*(β)c(0)`; closures compare the two after this flip.
    pub fn reflected(&self) -> Result<Self> {
        let prop = GrassmannElement::monomial(
            self.element.registry(),
            &[self.c_star_end, self.c_start],
            -2.0 * self.coeff_prop,
        )?;
        Self::new(
            self.element.add(&prop)?,
            self.c_star_end,
            self.c_end,
            self.c_start,
        )
    }
}

/// `exp{c*(β)c(β) - e^{-βω} c*(β)c(0)}` on a fresh three-generator registry.
///
/// Both exponent terms contain `c*(β)`, so the series stops after the
/// linear term.
pub fn closed_form_kernel(beta: f64, omega: f64) -> Result<PropagatorKernel> {
    if beta.is_nan() || beta < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "beta must be nonnegative, got {beta}"
        )));
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "omega must be positive and finite, got {omega}"
        )));
    }
    let reg: Arc<GeneratorRegistry> =
        GeneratorRegistry::new(&["c(0)", "c(β)", "c*(β)"], &[("c(β)", "c*(β)")])?;
    let (c_start, c_end, c_star_end) = (0, 1, 2);
    let q = (-beta * omega).exp();
    let exponent = GrassmannElement::monomial(&reg, &[c_star_end, c_end], 1.0)?.add(
        &GrassmannElement::monomial(&reg, &[c_star_end, c_start], -q)?,
    )?;
    PropagatorKernel::new(exponent.exp_nilpotent()?, c_star_end, c_end, c_start)
}

/// Imposes `c(0) = ∓c(β)` and integrates `∫dc(β) dc*(β)`, innermost `dc*(β)`
/// first.
pub fn close_boundary(kernel: &PropagatorKernel, bc: BoundaryCondition) -> Result<f64> {
    let (c_star, c_end, c_start) = kernel.boundary_generators();
    let element = kernel.element();
    element.require_support(&[c_star, c_end, c_start])?;
    let image = GrassmannElement::monomial(element.registry(), &[c_end], bc.sign())?;
    let closed = element.substitute(c_start, &image)?;
    Ok(closed
        .berezin_integrate(c_star)?
        .berezin_integrate(c_end)?
        .scalar_part())
}
