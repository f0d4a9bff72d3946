//! Berezin calculus on [`GrassmannElement`].
//!
//! Conventions used throughout the crate:
//! - derivatives act from the left: the generator is anticommuted to the
//!   front of each monomial, then removed;
//! - Berezin integration over a generator equals left differentiation;
//! - a pair measure `∫dg* dg X` integrates `g` first, then `g*`, so that
//!   `∫dg* dg (g g*) = 1`.

use crate::error::{Error, Result};
use crate::grassmann::element::GrassmannElement;
use crate::grassmann::monomial::Monomial;

impl GrassmannElement {
    pub fn left_derivative(&self, g: usize) -> Result<Self> {
        self.registry().check_index(g)?;
        let terms = self.terms().filter(|(m, _)| m.contains(g)).map(|(m, c)| {
            let sign = if m.count_below(g) % 2 == 1 { -1.0 } else { 1.0 };
            (m.without(g), sign * c)
        });
        Ok(Self::from_terms(self.registry(), terms.collect::<Vec<_>>()))
    }

    pub fn berezin_integrate(&self, g: usize) -> Result<Self> {
        self.left_derivative(g)
    }

    /// `∫dg* dg self` for a registered conjugate pair.
    pub fn integrate_pair(&self, g_star: usize, g: usize) -> Result<Self> {
        self.registry().check_index(g_star)?;
        self.registry().check_index(g)?;
        if !self.registry().is_pair(g_star, g) {
            return Err(Error::NotAPair(g_star, g));
        }
        self.berezin_integrate(g)?.berezin_integrate(g_star)
    }

    /// Power series of a nilpotent element, truncated once a power vanishes.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0 != 0.0 {
            return Err(Error::NonzeroConstantTerm(c0));
        }
        let mut sum = Self::one(self.registry());
        let mut power = Self::one(self.registry());
        let mut k = 1.0;
        // the registry size bounds the degree, so this terminates
        while !power.is_zero() {
            power = power.mul(self)?.scale(1.0 / k);
            sum = sum.add(&power)?;
            k += 1.0;
        }
        Ok(sum)
    }

    /// Replaces generator `g` by the odd element `replacement`.
    ///
    /// Uses `a = g·∂a/∂g + a|_{g=0}`, so the substitution is
    /// `replacement·∂a/∂g + a|_{g=0}`.
    pub fn substitute(&self, g: usize, replacement: &Self) -> Result<Self> {
        let dropped = Self::from_terms(
            self.registry(),
            self.terms()
                .filter(|(m, _)| !m.contains(g))
                .map(|(m, c)| (*m, c))
                .collect::<Vec<_>>(),
        );
        replacement.mul(&self.left_derivative(g)?)?.add(&dropped)
    }

    /// Errors unless every generator in `self` is one of `allowed`.
    pub fn require_support(&self, allowed: &[usize]) -> Result<()> {
        let allowed = allowed
            .iter()
            .fold(Monomial::ONE, |m, &i| m.union(&Monomial::single(i)));
        match self.support().indices().find(|&i| !allowed.contains(i)) {
            Some(i) => Err(Error::ForeignGenerator(
                self.registry().label(i).unwrap_or("?").to_string(),
            )),
            None => Ok(()),
        }
    }

    /// Scalar value of an element that should have no generator content left.
    pub fn scalar_part(&self) -> f64 {
        self.constant_term()
    }
}

/// Coherent-state trace of a kernel `K(c*, c')`:
/// `Tr = ∫dc* dc e^{-c*c} K(c*, c' → -c)`.
pub fn trace_functional(
    kernel: &GrassmannElement,
    c_star: usize,
    c: usize,
    c_prime: usize,
) -> Result<f64> {
    let reg = kernel.registry();
    if !reg.is_pair(c_star, c) {
        return Err(Error::NotAPair(c_star, c));
    }
    reg.check_index(c_prime)?;
    kernel.require_support(&[c_star, c_prime])?;
    let minus_c = GrassmannElement::monomial(reg, &[c], -1.0)?;
    let bra_side = kernel.substitute(c_prime, &minus_c)?;
    // e^{-c*c} = 1 - c*c exactly
    let weight = GrassmannElement::monomial(reg, &[c_star, c], -1.0)?.exp_nilpotent()?;
    Ok(bra_side
        .mul(&weight)?
        .integrate_pair(c_star, c)?
        .scalar_part())
}
