//! Lower-triangular coefficient tables `s_{n,k}` of polynomial sequences
//! `s_n(x) = Σ_k s_{n,k} x^k`, rows `0..=n_max`.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoeffTriangle {
    rows: Vec<Vec<Rational>>,
}

impl CoeffTriangle {
    /// Row `n` must hold exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::input("a triangle needs at least row 0"));
        }
        if let Some((n, row)) = rows.iter().enumerate().find(|(n, r)| r.len() != n + 1) {
            return Err(Error::input(format!(
                "row {n} has {} entries, expected {}",
                row.len(),
                n + 1
            )));
        }
        Ok(CoeffTriangle { rows })
    }

    pub fn from_fn(n_max: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        CoeffTriangle {
            rows: (0..=n_max)
                .map(|n| (0..=n).map(|k| entry(n, k)).collect())
                .collect(),
        }
    }

    /// Coefficients of `x^n`, the identity under umbral composition.
    pub fn identity(n_max: usize) -> Self {
        CoeffTriangle::from_fn(n_max, |n, k| {
            if n == k {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    /// `s_{n,k}`, zero above the diagonal.
    ///
    /// Panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows[n].get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, n: usize, k: usize, value: Rational) {
        self.rows[n][k] = value;
    }

    pub fn row_polynomial(&self, n: usize) -> Polynomial {
        Polynomial::new(self.rows[n].clone())
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        (0..=self.n_max()).map(|n| self.row_polynomial(n)).collect()
    }

    /// Rows `0..=n_max` of `self`.
    pub fn leading(&self, n_max: usize) -> Result<CoeffTriangle> {
        if n_max > self.n_max() {
            return Err(Error::range(format!(
                "triangle has rows up to {}, {n_max} requested",
                self.n_max()
            )));
        }
        Ok(CoeffTriangle {
            rows: self.rows[..=n_max].to_vec(),
        })
    }

    /// Matrix product `self · rhs`: `(self · rhs)_{n,j} = Σ_k self_{n,k} rhs_{k,j}`.
    pub fn matmul(&self, rhs: &CoeffTriangle) -> Result<CoeffTriangle> {
        if self.n_max() != rhs.n_max() {
            return Err(Error::input(format!(
                "triangle sizes differ: n_max {} vs {}",
                self.n_max(),
                rhs.n_max()
            )));
        }
        Ok(CoeffTriangle::from_fn(self.n_max(), |n, j| {
            let mut acc = Rational::zero();
            for k in j..=n {
                let a = &self.rows[n][k];
                let b = &rhs.rows[k][j];
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        }))
    }

    /// `self^m` for `m >= 1`.
    pub fn pow(&self, m: usize) -> Result<CoeffTriangle> {
        if m == 0 {
            return Err(Error::param("matrix power needs m >= 1"));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    /// Inverse of a triangle with nonzero diagonal, by forward substitution.
    pub fn inverse(&self) -> Result<CoeffTriangle> {
        let n_max = self.n_max();
        if let Some(n) = (0..=n_max).find(|&n| self.rows[n][n].is_zero()) {
            return Err(Error::input(format!("zero diagonal entry at row {n}")));
        }
        let mut inv = CoeffTriangle::from_fn(n_max, |_, _| Rational::zero());
        for j in 0..=n_max {
            inv.rows[j][j] = self.rows[j][j].recip();
            for n in j + 1..=n_max {
                let mut acc = Rational::zero();
                for k in j..n {
                    let a = &self.rows[n][k];
                    if !a.is_zero() {
                        acc += a * &inv.rows[k][j];
                    }
                }
                inv.rows[n][j] = -acc / &self.rows[n][n];
            }
        }
        Ok(inv)
    }

    /// `n,k,value` CSV, one line per stored entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let _ = writeln!(out, "{n},{k},{v}");
            }
        }
        out
    }

    /// Right-aligned columns for terminals.
    pub fn to_plain(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let n_width = self.n_max().to_string().len();
        let mut out = String::new();
        for (n, row) in cells.iter().enumerate() {
            let _ = write!(out, "{n:>n_width$} |");
            for cell in row {
                let _ = write!(out, " {cell:>width$}");
            }
            out.push('\n');
        }
        out
    }
}
