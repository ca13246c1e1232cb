//! Dense row-major matrices over `Rational` and the exact kernels built on them.
//!
//! Indexing is top-left origin everywhere. Modules that follow a bottom-up
//! labelling convention translate indices in their constructors; nothing here
//! stores reversed data.

use std::fmt;
use std::ops::{Index, IndexMut};

use num::bigint::BigInt;
use num::{One, Zero};

use super::rational::{all_integral, factorial, format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("rows have unequal lengths".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for integer literals in tests and tables.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == c), "ragged integer matrix");
        Self::from_fn(rows.len(), c, |i, j| Rational::from_integer(BigInt::from(rows[i][j])))
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Rows `rows` and columns `cols`, in the order given.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// The `r x c` block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, r: usize, c: usize) -> Matrix {
        Matrix::from_fn(r, c, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn leading(&self, k: usize) -> Matrix {
        self.block(0, 0, k.min(self.rows), k.min(self.cols))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "row vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = &self[(k, j)];
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "column vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)].is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self[(i, j)].is_zero()))
    }

    fn diagonal_all(&self, f: impl Fn(&Rational) -> bool) -> bool {
        (0..self.rows.min(self.cols)).all(|i| f(&self[(i, i)]))
    }

    pub fn is_integral(&self) -> bool {
        all_integral(&self.data)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Exact determinant.
///
/// Integer matrices go through Bareiss fraction-free elimination over `BigInt`;
/// anything with a non-integral entry uses rational Gaussian elimination,
/// pivoting on the first nonzero entry of each column. The empty matrix has
/// determinant one.
pub fn det(m: &Matrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    if m.is_integral() {
        Ok(Rational::from_integer(bareiss(m)))
    } else {
        Ok(gaussian_det(m))
    }
}

fn bareiss(m: &Matrix) -> BigInt {
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.row(i).iter().map(|r| r.numer().clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn gaussian_det(m: &Matrix) -> Rational {
    let n = m.rows;
    let mut a: Vec<Vec<Rational>> = m.to_rows();
    let mut acc = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(k, p);
            acc = -acc;
        }
        let pivot = a[k][k].clone();
        acc *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let delta = &factor * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    acc
}

/// Exact inverse by Gauss-Jordan elimination. A singular matrix is reported as
/// a shape error.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "inverse of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let mut a = m.to_rows();
    let mut inv = Matrix::identity(n).to_rows();
    for k in 0..n {
        let p = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or_else(|| Error::Shape("matrix is singular".into()))?;
        a.swap(k, p);
        inv.swap(k, p);
        let pivot = a[k][k].clone();
        for j in 0..n {
            a[k][j] /= &pivot;
            inv[k][j] /= &pivot;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..n {
                let d = &factor * &a[k][j];
                a[i][j] -= d;
                let d = &factor * &inv[k][j];
                inv[i][j] -= d;
            }
        }
    }
    Matrix::from_rows(inv)
}

/// Exact inverse of a unitriangular (lower or upper) matrix.
pub fn invert_unitriangular(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "inverse of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    if !m.diagonal_all(One::is_one) {
        return Err(Error::Shape("diagonal entries must all equal 1".into()));
    }
    if m.is_lower_triangular() {
        Ok(invert_lower_unit(m))
    } else if m.is_upper_triangular() {
        Ok(invert_lower_unit(&m.transpose()).transpose())
    } else {
        Err(Error::Shape("matrix is not triangular".into()))
    }
}

fn invert_lower_unit(l: &Matrix) -> Matrix {
    let n = l.rows;
    let mut x = Matrix::identity(n);
    for j in 0..n {
        for i in j + 1..n {
            let mut s = Rational::zero();
            for k in j..i {
                if !l[(i, k)].is_zero() && !x[(k, j)].is_zero() {
                    s += &l[(i, k)] * &x[(k, j)];
                }
            }
            x[(i, j)] = -s;
        }
    }
    x
}

/// `exp(t m)` for strictly triangular `m`, as the finite sum
/// `sum_{k < N} (t m)^k / k!`.
pub fn exp_nilpotent(m: &Matrix, t: &Rational) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "exponential of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    if !m.diagonal_all(Zero::is_zero) {
        return Err(Error::NotNilpotent("nonzero diagonal entry".into()));
    }
    if !(m.is_lower_triangular() || m.is_upper_triangular()) {
        return Err(Error::NotNilpotent("matrix is not triangular".into()));
    }
    let n = m.rows;
    let tm = m.scale(t);
    let mut out = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    for k in 1..n {
        power = power.mul(&tm)?;
        if power.is_zero() {
            break;
        }
        let inv = Rational::new(BigInt::one(), factorial(k));
        out = out.add(&power.scale(&inv))?;
    }
    Ok(out)
}
