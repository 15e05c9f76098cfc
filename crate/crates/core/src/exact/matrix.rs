//! Dense exact matrices.
//!
//! Determinants and ranks go through fraction-free (Bareiss) elimination.
//! The same elimination runs over any integral domain implementing
//! [`Domain`], which is how resultants over `Q[z]` are computed.

use std::fmt;

use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use super::poly::Poly;
use crate::error::{Error, Result};

/// An integral domain with exact division, enough for Bareiss elimination.
pub trait Domain: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, where the caller guarantees that `rhs` divides `self`.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl Domain for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        *self == Rational::ZERO
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Domain for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        Poly::div_exact(self, rhs).expect("Bareiss division is exact")
    }
}

/// Determinant of a square matrix given by rows, by Bareiss elimination
/// with row pivoting.
pub fn bareiss_det<T: Domain>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Leading principal minors `D_1, D_2, ...` of a square matrix, read off the
/// pivots of pivot-free Bareiss elimination. Stops after the first zero
/// minor (included), since later pivots are undefined without row swaps.
pub fn leading_principal_minors(m: &ExactMatrix) -> Vec<Rational> {
    assert_eq!(m.rows, m.cols, "square matrix expected");
    let n = m.rows;
    let mut a = m.to_rows();
    let mut out = Vec::with_capacity(n);
    let mut prev = Rational::ONE;
    for k in 0..n {
        let pivot = a[k][k].clone();
        out.push(pivot.clone());
        if pivot == Rational::ZERO {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &pivot - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = pivot;
    }
    out
}

/// Row-major dense matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::ONE;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact determinant.
    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        Ok(bareiss_det(self.to_rows()))
    }

    /// Rank over the rationals by full fraction-free row reduction.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let mut rank = 0;
        let mut prev = Rational::ONE;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| a[i][col] != Rational::ZERO) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for i in rank + 1..self.rows {
                let factor = a[i][col].clone();
                for j in col..self.cols {
                    let t = &a[i][j] * &pivot - &factor * &a[rank][j];
                    a[i][j] = t / &prev;
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Solve `self * x = rhs` exactly by Gauss-Jordan elimination.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        self.require_square()?;
        let n = self.rows;
        if rhs.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} entries, matrix has {n} rows",
                rhs.len()
            )));
        }
        let mut a = self.to_rows();
        for (row, b) in a.iter_mut().zip(rhs) {
            row.push(b.clone());
        }
        for k in 0..n {
            let p = (k..n).find(|&i| a[i][k] != Rational::ZERO).ok_or(Error::Singular)?;
            a.swap(k, p);
            let inv = Rational::ONE / &a[k][k];
            for j in k..=n {
                a[k][j] *= &inv;
            }
            for i in 0..n {
                if i == k || a[i][k] == Rational::ZERO {
                    continue;
                }
                let factor = a[i][k].clone();
                for j in k..=n {
                    let t = &factor * &a[k][j];
                    a[i][j] -= t;
                }
            }
        }
        Ok(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for j in 0..n {
            let mut e = vec![Rational::ZERO; n];
            e[j] = Rational::ONE;
            let col = self.solve(&e)?;
            for (i, v) in col.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if *a == Rational::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// The matrix with row `skip_row` and column `skip_col` removed.
    pub fn minor_matrix(&self, skip_row: usize, skip_col: usize) -> ExactMatrix {
        let data = (0..self.rows)
            .filter(|&i| i != skip_row)
            .flat_map(|i| {
                (0..self.cols).filter(move |&j| j != skip_col).map(move |j| self.get(i, j).clone())
            })
            .collect();
        ExactMatrix {
            rows: self.rows.saturating_sub(1),
            cols: self.cols.saturating_sub(1),
            data,
        }
    }

    /// Square submatrix on the given row and column index sets.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        ExactMatrix { rows: rows.len(), cols: cols.len(), data }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
