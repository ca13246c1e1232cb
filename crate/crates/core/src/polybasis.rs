//! Monic polynomial systems `φ_0, φ_1, ...` truncated to `N` members.
//!
//! The coefficient matrix `A` is stored lower-unitriangular: row `i` holds the
//! coefficients of `φ_i`, column `j` the coefficient of `x^j`. Bottom-up
//! labelled matrices (where `A` reads upper-triangular) map onto this by
//! reversing both indices, which no routine here needs to do explicitly.
//!
//! Multiplication by `x` acts through the recursion matrix `J = A S A^{-1}`
//! where `S` is the shift with `S[j][j+1] = 1`; so
//! `x φ_i = φ_{i+1} + Σ_{k ≤ i} J⁺[i][k] φ_k` with `J⁺ = J - S` lower
//! triangular. Its right inverse is `J̃ = A Sᵗ A^{-1}`.

use num::{One, Zero};

use crate::error::{truncation, Error, Result};
use crate::kernel::rational::{binomial, sign};
use crate::kernel::{invert_unitriangular, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBasis {
    coeffs: Matrix,
}

/// Recursion data of a truncated basis. Row `N - 1` of `j` (and of `jplus`)
/// would need `φ_N`, so only rows `0..N-1` are exact; `jtilde` is exact
/// everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionData {
    pub j: Matrix,
    pub jtilde: Matrix,
    pub jplus: Matrix,
}

impl RecursionData {
    /// Number of leading rows of `j` that are exact.
    pub fn exact_rows(&self) -> usize {
        self.j.rows().saturating_sub(1)
    }
}

fn shift(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| if j == i + 1 { Rational::one() } else { Rational::zero() })
}

impl PolyBasis {
    /// Wraps an explicit coefficient matrix, which must be lower-unitriangular.
    pub fn from_coeffs(coeffs: Matrix) -> Result<Self> {
        if !coeffs.is_square() || coeffs.rows() == 0 {
            return Err(Error::Dimension(format!(
                "coefficient matrix must be square and nonempty, got {}x{}",
                coeffs.rows(),
                coeffs.cols()
            )));
        }
        if !coeffs.is_lower_triangular() {
            return Err(Error::Shape("coefficient matrix must be lower triangular".into()));
        }
        if (0..coeffs.rows()).any(|i| !coeffs[(i, i)].is_one()) {
            return Err(Error::Shape("polynomials must be monic".into()));
        }
        Ok(PolyBasis { coeffs })
    }

    /// Builds from ragged rows, row `i` listing the coefficients of `φ_i`
    /// from `x^0` up to at most `x^i`; missing entries are zero.
    pub fn from_coeff_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() > n {
                return Err(Error::Dimension(format!(
                    "row {i} has {} coefficients but only {n} rows were given",
                    r.len()
                )));
            }
        }
        let m = Matrix::from_fn(n, n, |i, j| rows[i].get(j).cloned().unwrap_or_else(Rational::zero));
        Self::from_coeffs(m)
    }

    /// `φ_i = x^i`.
    pub fn monomial(n: usize) -> Self {
        PolyBasis {
            coeffs: Matrix::identity(n.max(1)),
        }
    }

    /// Basis whose bi-alternants are the `Sp(2n)` characters in `z = x + 1/x`.
    pub fn sp(n: usize) -> Self {
        Self::tabulated(n, sp_coeff)
    }

    /// Basis whose bi-alternants are the even orthogonal characters.
    pub fn so_even(n: usize) -> Self {
        Self::tabulated(n, so_even_coeff)
    }

    /// Basis whose bi-alternants are the odd orthogonal characters.
    pub fn so_odd(n: usize) -> Self {
        Self::tabulated(n, so_odd_coeff)
    }

    fn tabulated(n: usize, f: fn(usize, usize) -> Rational) -> Self {
        let n = n.max(1);
        PolyBasis {
            coeffs: Matrix::from_fn(n, n, |i, j| if j <= i { f(i, j) } else { Rational::zero() }),
        }
    }

    /// Generates `φ_0 = 1, φ_{i+1} = x φ_i - Σ_{k ≤ i} J⁺[i][k] φ_k` from an
    /// `N x N` lower-triangular `J⁺` (diagonal allowed). Row `N - 1` of `J⁺`
    /// is not used.
    pub fn from_recursion(jplus: &Matrix) -> Result<Self> {
        if !jplus.is_square() || jplus.rows() == 0 {
            return Err(Error::Dimension("J⁺ must be square and nonempty".into()));
        }
        if !jplus.is_lower_triangular() {
            return Err(Error::Shape(
                "J⁺ must be lower triangular (x φ_i may only involve φ_k with k ≤ i + 1)".into(),
            ));
        }
        let n = jplus.rows();
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
        rows[0][0] = Rational::one();
        for i in 0..n - 1 {
            let mut next = vec![Rational::zero(); n];
            next[1..=i + 1].clone_from_slice(&rows[i][..=i]);
            for k in 0..=i {
                let c = &jplus[(i, k)];
                if c.is_zero() {
                    continue;
                }
                for j in 0..=k {
                    next[j] -= c * &rows[k][j];
                }
            }
            rows[i + 1] = next;
        }
        Self::from_coeffs(Matrix::from_rows(rows)?)
    }

    /// The truncation `N`: number of stored polynomials.
    pub fn truncation(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    /// `φ_{i,j}`, the coefficient of `x^j` in `φ_i` (zero for `j > i`).
    pub fn coeff(&self, i: usize, j: usize) -> Result<Rational> {
        self.require(i + 1, "coefficient row")?;
        Ok(if j > i { Rational::zero() } else { self.coeffs[(i, j)].clone() })
    }

    pub(crate) fn require(&self, need: usize, what: &str) -> Result<()> {
        if need > self.truncation() {
            Err(truncation(what, need, self.truncation()))
        } else {
            Ok(())
        }
    }

    pub fn evaluate(&self, i: usize, x: &Rational) -> Result<Rational> {
        self.require(i + 1, "evaluate")?;
        Ok((0..=i)
            .rev()
            .fold(Rational::zero(), |acc, j| acc * x + &self.coeffs[(i, j)]))
    }

    /// Matrix with entry `(a, b) = φ_{rows[a]}(x_b)`.
    pub fn eval_rows(&self, rows: &[usize], x: &[Rational]) -> Result<Matrix> {
        if let Some(&m) = rows.iter().max() {
            self.require(m + 1, "evaluation rows")?;
        }
        let mut out = Matrix::zeros(rows.len(), x.len());
        for (b, xb) in x.iter().enumerate() {
            for (a, &i) in rows.iter().enumerate() {
                out[(a, b)] = self.evaluate(i, xb)?;
            }
        }
        Ok(out)
    }

    /// The `n x n` window `Φ(k)` with rows `φ_{n+k-1}, ..., φ_k` at `x`.
    pub fn window(&self, x: &[Rational], k: usize) -> Result<Matrix> {
        let n = x.len();
        if n == 0 {
            return Err(Error::Invalid("window needs at least one point".into()));
        }
        self.require(n + k, "window")?;
        let rows: Vec<usize> = (0..n).map(|a| n + k - 1 - a).collect();
        self.eval_rows(&rows, x)
    }

    pub fn recursion(&self) -> RecursionData {
        let n = self.truncation();
        let inv = invert_unitriangular(&self.coeffs).expect("stored coefficients are unitriangular");
        let s = shift(n);
        let j = self
            .coeffs
            .mul(&s)
            .and_then(|m| m.mul(&inv))
            .expect("square operands");
        let jtilde = self
            .coeffs
            .mul(&s.transpose())
            .and_then(|m| m.mul(&inv))
            .expect("square operands");
        let jplus = j.sub(&s).expect("same shape");
        RecursionData { j, jtilde, jplus }
    }

    /// Block of `J⁺` acting on the window `Φ(k)` of size `n`, in window order:
    /// entry `(a, c) = J⁺[n+k-1-a][n+k-1-c]`.
    pub fn jplus_window(&self, n: usize, k: usize) -> Result<Matrix> {
        self.require(n + k + 1, "J⁺ window")?;
        let jp = self.recursion().jplus;
        Ok(Matrix::from_fn(n, n, |a, c| jp[(n + k - 1 - a, n + k - 1 - c)].clone()))
    }

    /// Contribution to `x Φ(k)` of the polynomials below the window,
    /// `B[a][b] = Σ_{q < k} J⁺[n+k-1-a][q] φ_q(x_b)`. It vanishes at `k = 0`
    /// and whenever `J⁺` is banded narrowly enough.
    pub fn window_boundary(&self, x: &[Rational], k: usize) -> Result<Matrix> {
        let n = x.len();
        self.require(n + k + 1, "window boundary")?;
        let jp = self.recursion().jplus;
        let below: Vec<usize> = (0..k).collect();
        let vals = self.eval_rows(&below, x)?;
        Ok(Matrix::from_fn(n, n, |a, b| {
            let i = n + k - 1 - a;
            (0..k).map(|q| &jp[(i, q)] * &vals[(q, b)]).sum()
        }))
    }

    /// Residual `Φ(k) X - J⁺(k) Φ(k) - Φ(k+1)` of the window recursion, where
    /// `X = diag(x)`.
    pub fn window_residual(&self, x: &[Rational], k: usize) -> Result<Matrix> {
        let n = x.len();
        let phi = self.window(x, k)?;
        let next = self.window(x, k + 1)?;
        let diag = Matrix::from_fn(n, n, |i, j| if i == j { x[i].clone() } else { Rational::zero() });
        let lhs = phi.mul(&diag)?;
        let rhs = self.jplus_window(n, k)?.mul(&phi)?.add(&next)?;
        lhs.sub(&rhs)
    }
}

fn r(v: num::BigInt) -> Rational {
    Rational::from_integer(v)
}

fn sp_coeff(row: usize, col: usize) -> Rational {
    if (row + col) % 2 == 1 {
        return Rational::zero();
    }
    let (i, j) = ((row / 2) as i64, (col / 2) as i64);
    if row % 2 == 0 {
        sign(i + j) * r(binomial(i + j, i - j))
    } else {
        sign(i + j) * r(binomial(i + j + 1, i - j))
    }
}

fn so_even_coeff(row: usize, col: usize) -> Rational {
    if (row + col) % 2 == 1 {
        return Rational::zero();
    }
    let (i, j) = ((row / 2) as i64, (col / 2) as i64);
    if row % 2 == 0 {
        if j == 0 {
            if i == 0 {
                Rational::one()
            } else {
                sign(i) * Rational::from_integer(2.into())
            }
        } else {
            sign(i + j) * Rational::new(i.into(), j.into()) * r(binomial(i + j - 1, i - j))
        }
    } else {
        sign(i + j) * Rational::new((2 * i + 1).into(), (2 * j + 1).into()) * r(binomial(i + j, i - j))
    }
}

fn so_odd_coeff(row: usize, col: usize) -> Rational {
    let (i, j) = ((row / 2) as i64, (col / 2) as i64);
    match (row % 2, col % 2) {
        (0, 0) => sign(i + j) * r(binomial(i + j, i - j)),
        (1, 1) => sign(i + j) * r(binomial(i + j + 1, i - j)),
        (0, 1) => sign(i + j + 1) * r(binomial(i + j, i - j - 1)),
        _ => sign(i + j) * r(binomial(i + j, i - j)),
    }
}

/// `J⁺` of the symplectic basis: `x φ_i = φ_{i+1} + φ_{i-1}`.
pub fn sp_jplus(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| if i == j + 1 { Rational::one() } else { Rational::zero() })
}

/// `J⁺` of the even orthogonal basis: as symplectic, but `x φ_1 = φ_2 + 2 φ_0`.
pub fn so_even_jplus(n: usize) -> Matrix {
    let mut m = sp_jplus(n);
    if n > 1 {
        m[(1, 0)] += Rational::one();
    }
    m
}

/// `J⁺` of the odd orthogonal basis: as symplectic, but `x φ_0 = φ_1 - φ_0`.
pub fn so_odd_jplus(n: usize) -> Matrix {
    let mut m = sp_jplus(n);
    m[(0, 0)] = -Rational::one();
    m
}
