use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::monomial::Monomial;
use crate::grassmann::registry::GeneratorRegistry;

/// Coefficients below this magnitude are never stored.
pub const DROP_TOLERANCE: f64 = 1e-15;

/// Sparse element of a real Grassmann algebra.
///
/// Terms are kept in a `BTreeMap` so iteration (and therefore every
/// floating-point summation) follows one fixed order.
#[derive(Debug, Clone)]
pub struct GrassmannElement {
    registry: Arc<GeneratorRegistry>,
    terms: BTreeMap<Monomial, f64>,
}

impl GrassmannElement {
    pub fn zero(registry: &Arc<GeneratorRegistry>) -> Self {
        Self {
            registry: Arc::clone(registry),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(registry: &Arc<GeneratorRegistry>, value: f64) -> Self {
        Self::from_terms(registry, [(Monomial::ONE, value)])
    }

    pub fn one(registry: &Arc<GeneratorRegistry>) -> Self {
        Self::scalar(registry, 1.0)
    }

    pub fn generator(registry: &Arc<GeneratorRegistry>, index: usize) -> Result<Self> {
        Self::monomial(registry, &[index], 1.0)
    }

    /// `coeff · g[indices[0]] · g[indices[1]] · …` brought to canonical order.
    /// A repeated index yields zero.
    pub fn monomial(
        registry: &Arc<GeneratorRegistry>,
        indices: &[usize],
        coeff: f64,
    ) -> Result<Self> {
        let mut mono = Monomial::ONE;
        let mut negative = false;
        for &i in indices {
            registry.check_index(i)?;
            let g = Monomial::single(i);
            if !mono.is_disjoint(&g) {
                return Ok(Self::zero(registry));
            }
            negative ^= mono.merge_parity(&g);
            mono = mono.union(&g);
        }
        let coeff = if negative { -coeff } else { coeff };
        Ok(Self::from_terms(registry, [(mono, coeff)]))
    }

    /// Same as [`monomial`](Self::monomial) but resolves labels.
    pub fn from_labels(
        registry: &Arc<GeneratorRegistry>,
        labels: &[&str],
        coeff: f64,
    ) -> Result<Self> {
        let indices = labels
            .iter()
            .map(|l| registry.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        Self::monomial(registry, &indices, coeff)
    }

    pub(crate) fn from_terms(
        registry: &Arc<GeneratorRegistry>,
        terms: impl IntoIterator<Item = (Monomial, f64)>,
    ) -> Self {
        let mut out = Self::zero(registry);
        for (m, c) in terms {
            *out.terms.entry(m).or_insert(0.0) += c;
        }
        out.prune();
        out
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.abs() >= DROP_TOLERANCE);
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        &self.registry
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, f64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> f64 {
        self.terms.get(mono).copied().unwrap_or(0.0)
    }

    pub fn constant_term(&self) -> f64 {
        self.coefficient(&Monomial::ONE)
    }

    /// Coefficient of the ordered product `g[i0] g[i1] …`, i.e. the canonical
    /// coefficient times the sign of the permutation that sorts `indices`.
    pub fn coefficient_of(&self, indices: &[usize]) -> Result<f64> {
        let probe = Self::monomial(&self.registry, indices, 1.0)?;
        let value = probe
            .terms()
            .next()
            .map_or(0.0, |(m, sign)| sign * self.coefficient(m));
        Ok(value)
    }

    /// Union of all generators that occur in some stored term.
    pub fn support(&self) -> Monomial {
        self.terms.keys().fold(Monomial::ONE, |acc, m| acc.union(m))
    }

    pub fn same_registry(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.registry, &other.registry) || *self.registry == *other.registry
    }

    fn check_registry(&self, other: &Self) -> Result<()> {
        if self.same_registry(other) {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_registry(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            *out.terms.entry(*m).or_insert(0.0) += c;
        }
        out.prune();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_terms(&self.registry, self.terms().map(|(m, c)| (*m, c * s)))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_registry(other)?;
        let mut out = BTreeMap::new();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if !a.is_disjoint(b) {
                    continue;
                }
                let prod = ca * cb;
                let prod = if a.merge_parity(b) { -prod } else { prod };
                *out.entry(a.union(b)).or_insert(0.0) += prod;
            }
        }
        let mut out = Self {
            registry: Arc::clone(&self.registry),
            terms: out,
        };
        out.prune();
        Ok(out)
    }

    /// Coefficientwise comparison with absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if !self.same_registry(other) {
            return false;
        }
        let diff = |m: &Monomial| (self.coefficient(m) - other.coefficient(m)).abs() <= tol;
        self.terms.keys().all(diff) && other.terms.keys().all(diff)
    }

    /// Largest coefficient magnitude over monomials not in `keep`.
    pub fn max_abs_outside(&self, keep: &[Monomial]) -> f64 {
        self.terms()
            .filter(|(m, _)| !keep.contains(m))
            .map(|(_, c)| c.abs())
            .fold(0.0, f64::max)
    }
}

impl PartialEq for GrassmannElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_registry(other) && self.terms == other.terms
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let (sign, mag) = if c < 0.0 { ("-", -c) } else { ("+", c) };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1.0 {
                write!(f, "{mag}·")?;
            }
            let names: Vec<_> = m
                .indices()
                .map(|i| self.registry.label(i).unwrap_or("?"))
                .collect();
            f.write_str(&names.join(" "))?;
        }
        Ok(())
    }
}
