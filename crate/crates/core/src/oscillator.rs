//! Operator picture of the fermionic oscillator on its two-state Fock space.
//!
//! Basis order is `(|1⟩, |∅⟩)` everywhere, so the unnormalized density
//! matrix reads `diag(e^{-βω}, 1)` and the parity operator `diag(-1, 1)`.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2(pub [[f64; 2]; 2]);

impl Matrix2 {
    pub const ZERO: Matrix2 = Matrix2([[0.0, 0.0], [0.0, 0.0]]);
    pub const IDENTITY: Matrix2 = Matrix2([[1.0, 0.0], [0.0, 1.0]]);

    pub fn diag(a: f64, b: f64) -> Self {
        Matrix2([[a, 0.0], [0.0, b]])
    }

    pub fn scale(self, s: f64) -> Self {
        let [[a, b], [c, d]] = self.0;
        Matrix2([[s * a, s * b], [s * c, s * d]])
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> f64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Real eigenvalues in ascending order, or `None` for a complex pair.
    pub fn eigenvalues(&self) -> Option<(f64, f64)> {
        let [[a, b], [c, d]] = self.0;
        if b == 0.0 || c == 0.0 {
            // triangular: the diagonal is the spectrum
            return Some((a.min(d), a.max(d)));
        }
        let half = 0.5 * self.trace();
        let disc = half * half - self.det();
        if disc < 0.0 {
            return None;
        }
        let r = disc.sqrt();
        Some((half - r, half + r))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let d = *self - *other;
        d.0.iter().flatten().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let (a, b) = (self.0, rhs.0);
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Matrix2(out)
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;

    fn add(self, rhs: Matrix2) -> Matrix2 {
        let (a, b) = (self.0, rhs.0);
        Matrix2([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Sub for Matrix2 {
    type Output = Matrix2;

    fn sub(self, rhs: Matrix2) -> Matrix2 {
        self + rhs.scale(-1.0)
    }
}

/// Thermodynamic record at one `(β, ω)`; `k_B = ħ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPoint {
    pub beta: f64,
    pub omega: f64,
    /// Antiperiodic closure, `1 + e^{-βω}`.
    pub z_minus: f64,
    /// Periodic (graded) closure, `1 - e^{-βω}`.
    pub z_plus: f64,
    pub free_energy: f64,
    pub mean_energy: f64,
    pub entropy: f64,
}

/// `(c†, c)`.
pub fn ladder_matrices() -> (Matrix2, Matrix2) {
    (
        Matrix2([[0.0, 1.0], [0.0, 0.0]]),
        Matrix2([[0.0, 0.0], [1.0, 0.0]]),
    )
}

pub fn number_operator() -> Matrix2 {
    let (c_dag, c) = ladder_matrices();
    c_dag * c
}

/// `(-1)^N`.
pub fn fermion_parity() -> Matrix2 {
    let n = number_operator();
    Matrix2::diag(1.0 - 2.0 * n.0[0][0], 1.0 - 2.0 * n.0[1][1])
}

fn check_omega(omega: f64) -> Result<()> {
    if omega > 0.0 && omega.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "omega must be positive and finite, got {omega}"
        )))
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "beta must be nonnegative, got {beta}"
        )))
    }
}

pub fn hamiltonian(omega: f64) -> Result<Matrix2> {
    check_omega(omega)?;
    Ok(number_operator().scale(omega))
}

/// `e^{-βH}`, unnormalized. `beta = ∞` gives the ground-state projector.
pub fn density_matrix(beta: f64, omega: f64) -> Result<Matrix2> {
    check_beta(beta)?;
    let h = hamiltonian(omega)?;
    // H is diagonal in the occupation basis; a zero level stays 1 at β = ∞
    let boltzmann = |e: f64| if e == 0.0 { 1.0 } else { (-beta * e).exp() };
    Ok(Matrix2::diag(boltzmann(h.0[0][0]), boltzmann(h.0[1][1])))
}

pub fn partition_trace(rho: &Matrix2) -> f64 {
    rho.trace()
}

pub fn supertrace(rho: &Matrix2) -> f64 {
    (fermion_parity() * *rho).trace()
}

pub fn exact_kernel_coefficient(beta: f64, omega: f64) -> Result<f64> {
    check_beta(beta)?;
    check_omega(omega)?;
    Ok((-beta * omega).exp())
}

/// `Σ_{n=0}^{terms-1} e^{-βωn}`, the truncated bosonic partition function.
pub fn bosonic_partial_sum(beta: f64, omega: f64, terms: usize) -> f64 {
    let q = (-beta * omega).exp();
    let mut sum = 0.0;
    let mut p = 1.0;
    for _ in 0..terms {
        sum += p;
        p *= q;
    }
    sum
}

pub fn thermal_observables(beta: f64, omega: f64) -> Result<ThermalPoint> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "beta must be positive and finite, got {beta}"
        )));
    }
    check_omega(omega)?;
    let q = (-beta * omega).exp();
    let ln_z = q.ln_1p();
    let free_energy = -ln_z / beta;
    let mean_energy = omega * q / (1.0 + q);
    Ok(ThermalPoint {
        beta,
        omega,
        z_minus: 1.0 + q,
        z_plus: 1.0 - q,
        free_energy,
        mean_energy,
        entropy: beta * mean_energy + ln_z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const E_INV: f64 = 0.36787944117144233;

    #[test]
    fn ladder_algebra() {
        let (c_dag, c) = ladder_matrices();
        assert_eq!(c.anticommutator(&c_dag), Matrix2::IDENTITY);
        assert_eq!(c * c, Matrix2::ZERO);
        assert_eq!(c_dag * c_dag, Matrix2::ZERO);
        // |1⟩ is the first basis vector
        assert_eq!(c_dag * c, Matrix2::diag(1.0, 0.0));
    }

    #[test]
    fn hamiltonian_spectrum() {
        assert_eq!(hamiltonian(1.0).unwrap().eigenvalues(), Some((0.0, 1.0)));
        assert_eq!(hamiltonian(2.0).unwrap().eigenvalues(), Some((0.0, 2.0)));
        assert_eq!(hamiltonian(2.5).unwrap().trace(), 2.5);
        assert!(hamiltonian(0.0).is_err());
        assert!(hamiltonian(-1.0).is_err());
    }

    #[test]
    fn density_matrix_values() {
        assert_eq!(density_matrix(0.0, 1.0).unwrap(), Matrix2::IDENTITY);
        assert_eq!(
            density_matrix(f64::INFINITY, 1.0).unwrap(),
            Matrix2::diag(0.0, 1.0)
        );
        let rho = density_matrix(1.0, 1.0).unwrap();
        assert!((rho.0[0][0] - E_INV).abs() < 1e-16);
        assert_eq!(rho.0[1][1], 1.0);
        assert!(density_matrix(-0.1, 1.0).is_err());
    }

    #[test]
    fn traces() {
        let tr = |b: f64| partition_trace(&density_matrix(b, 1.0).unwrap());
        let st = |b: f64| supertrace(&density_matrix(b, 1.0).unwrap());
        assert_eq!(tr(0.0), 2.0);
        assert!((tr(1.0) - 1.3678794411714423).abs() < 1e-15);
        assert_eq!(tr(f64::INFINITY), 1.0);
        assert_eq!(st(0.0), 0.0);
        assert!((st(1.0) - 0.6321205588285577).abs() < 1e-15);
        assert_eq!(st(f64::INFINITY), 1.0);
    }

    #[test]
    fn parity_matches_displayed_matrix() {
        assert_eq!(fermion_parity(), Matrix2::diag(-1.0, 1.0));
    }

    #[test]
    fn kernel_coefficient() {
        assert_eq!(exact_kernel_coefficient(0.0, 1.0).unwrap(), 1.0);
        assert!((exact_kernel_coefficient(2f64.ln(), 1.0).unwrap() - 0.5).abs() < 1e-16);
        assert!((exact_kernel_coefficient(1.0, 1.0).unwrap() - E_INV).abs() < 1e-16);
    }

    #[test]
    fn observables() {
        let p = thermal_observables(1.0, 1.0).unwrap();
        assert!((p.mean_energy - 0.2689414213699951).abs() < 1e-15);
        assert!(p.entropy >= 0.0);
        let cold = thermal_observables(200.0, 1.0).unwrap();
        assert!(cold.mean_energy < 1e-80 && cold.entropy < 1e-80);
        let hot = thermal_observables(1e-6, 1.0).unwrap();
        assert!((hot.entropy - 2f64.ln()).abs() < 1e-10);
        assert!(thermal_observables(0.0, 1.0).is_err());
        assert!(thermal_observables(1.0, 0.0).is_err());
    }

    #[test]
    fn bosonic_sum() {
        assert_eq!(bosonic_partial_sum(1.0, 1.0, 1), 1.0);
        assert!((bosonic_partial_sum(2f64.ln(), 1.0, 3) - 1.75).abs() < 1e-15);
    }
}
