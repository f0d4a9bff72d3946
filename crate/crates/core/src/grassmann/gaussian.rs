//! Gaussian Berezin integrals and the numeric determinant they reproduce.

use crate::error::{Error, Result};
use crate::grassmann::element::GrassmannElement;
use crate::grassmann::registry::GeneratorRegistry;

/// Default cap on `n` for [`gaussian_integral_expand`]; the expansion lives
/// on `2n` generators and can touch up to `4^n` monomials.
pub const GAUSSIAN_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SquareMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("dimension must be at least 1".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row of length {} in a {n}x{n} matrix",
                r.len()
            )));
        }
        let entries: Vec<f64> = rows.iter().flatten().copied().collect();
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidMatrix("non-finite entry".into()));
        }
        Ok(Self { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub(crate) fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        Self {
            n,
            entries: vec![0.0; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.n)
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(m: &SquareMatrix) -> f64 {
    let n = m.n;
    let mut a = m.entries.clone();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x * n + col].abs().total_cmp(&a[y * n + col].abs()))
            .expect("nonempty pivot range");
        if a[pivot * n + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for row in col + 1..n {
            let f = a[row * n + col] / p;
            if f == 0.0 {
                continue;
            }
            for j in col..n {
                a[row * n + j] -= f * a[col * n + j];
            }
        }
    }
    det
}

/// `∫∏dc_j* dc_j exp(-Σ c_i* M_ij c_j)` evaluated by symbolic expansion.
pub fn gaussian_integral_expand(m: &SquareMatrix) -> Result<f64> {
    gaussian_integral_expand_capped(m, GAUSSIAN_CAP)
}

pub fn gaussian_integral_expand_capped(m: &SquareMatrix, cap: usize) -> Result<f64> {
    let n = m.dim();
    if n > cap {
        return Err(Error::DimensionOverCap { n, cap });
    }
    let labels: Vec<String> = (1..=n)
        .flat_map(|j| [format!("c{j}"), format!("c{j}*")])
        .collect();
    let pairs: Vec<(String, String)> = (1..=n)
        .map(|j| (format!("c{j}"), format!("c{j}*")))
        .collect();
    let reg = GeneratorRegistry::new(&labels, &pairs)?;
    let c = |j: usize| 2 * j;
    let c_star = |j: usize| 2 * j + 1;

    let mut exponent = GrassmannElement::zero(&reg);
    for (i, row) in m.rows().enumerate() {
        for (j, &mij) in row.iter().enumerate() {
            if mij != 0.0 {
                let term = GrassmannElement::monomial(&reg, &[c_star(i), c(j)], -mij)?;
                exponent = exponent.add(&term)?;
            }
        }
    }
    let mut integrand = exponent.exp_nilpotent()?;
    // innermost measure factor is dc_n, so pair n goes first
    for j in (0..n).rev() {
        integrand = integrand.integrate_pair(c_star(j), c(j))?;
    }
    Ok(integrand.scalar_part())
}
