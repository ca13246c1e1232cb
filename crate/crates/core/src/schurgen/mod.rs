//! Generalized Schur polynomials `S^φ_λ` and the determinantal identities that
//! tie their different expressions together.

mod ematrix;
mod hmatrix;
mod points;

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{det, Matrix, Rational};
use crate::partitions::{enumerate, Partition};
use crate::polybasis::PolyBasis;

pub use ematrix::EMatrix;
pub use hmatrix::{classical_h_block, HMatrix};
pub use points::{default_grid, seeded_points, EvalPoint};

/// Outcome of an exact identity check over the window of entries it compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CheckReport {
    pub passed: bool,
    pub rows: usize,
    pub cols: usize,
}

/// Coefficients of a symmetric function in the Schur basis; zero entries are
/// not stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Rational>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, mu: Partition, c: Rational) {
        if c.is_zero() {
            self.terms.remove(&mu);
        } else {
            self.terms.insert(mu, c);
        }
    }

    pub fn coefficient(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ_μ c_μ f(μ)`.
    pub fn evaluate_with(&self, mut f: impl FnMut(&Partition) -> Result<Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (mu, c) in &self.terms {
            acc += c * f(mu)?;
        }
        Ok(acc)
    }
}

fn check_length(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        Err(Error::Length { len: lambda.len(), max: n })
    } else {
        Ok(())
    }
}

/// `det(Φ_λ) / det(Φ(0))`: rows `φ_{l_i}` with `l_i = λ_i - i + n`.
pub fn bialternant(phi: &PolyBasis, lambda: &Partition, x: &EvalPoint) -> Result<Rational> {
    let n = x.n();
    check_length(lambda, n)?;
    phi.require(lambda.first() + n, "bi-alternant")?;
    let rows = lambda.row_indices(n)?;
    let num = det(&phi.eval_rows(&rows, x.values())?)?;
    if num.is_zero() {
        return Ok(num);
    }
    let den = det(&phi.window(x.values(), 0)?)?;
    Ok(num / den)
}

/// Classical Schur polynomial `S_λ(x)` as the monomial bi-alternant.
pub fn classical_schur(lambda: &Partition, x: &EvalPoint) -> Result<Rational> {
    if lambda.len() > x.n() {
        return Ok(Rational::zero());
    }
    bialternant(&PolyBasis::monomial(lambda.first() + x.n()), lambda, x)
}

/// `det(c_{l_i(λ), l_j(μ)})` for a lower-triangular coefficient matrix `c`
/// whose rows cover `l_1(λ)`; entries above the diagonal are zero.
pub fn minor_coefficient(c: &Matrix, lambda: &Partition, mu: &Partition, n: usize) -> Result<Rational> {
    check_length(lambda, n)?;
    check_length(mu, n)?;
    let need = lambda.first() + n;
    if need > c.rows() {
        return Err(crate::error::truncation("expansion coefficient", need, c.rows()));
    }
    let rows = lambda.row_indices(n)?;
    let cols = mu.row_indices(n)?;
    let m = Matrix::from_fn(n, n, |a, b| {
        let (i, j) = (rows[a], cols[b]);
        if j > i || j >= c.cols() {
            Rational::zero()
        } else {
            c[(i, j)].clone()
        }
    });
    det(&m)
}

/// `φ^(n)_{λμ}`, the coefficient of `S_μ` in `S^φ_{λ,n}`.
pub fn expansion_coefficient(phi: &PolyBasis, lambda: &Partition, mu: &Partition, n: usize) -> Result<Rational> {
    minor_coefficient(phi.coeffs(), lambda, mu, n)
}

/// All nonzero `φ^(n)_{λμ}`; the support has `ℓ(μ) <= n` and `|μ| <= |λ|`.
pub fn expansion_coeffs(phi: &PolyBasis, lambda: &Partition, n: usize) -> Result<SchurExpansion> {
    check_length(lambda, n)?;
    phi.require(lambda.first() + n, "expansion coefficients")?;
    let mut out = SchurExpansion::new();
    for mu in enumerate(lambda.weight(), n) {
        if mu.first() > lambda.first() {
            continue;
        }
        let c = expansion_coefficient(phi, lambda, &mu, n)?;
        out.insert(mu, c);
    }
    Ok(out)
}

/// Truncation needed by [`jacobi_trudi`] for `λ` in `n` variables.
pub fn jacobi_trudi_truncation(lambda: &Partition, n: usize) -> usize {
    lambda.first() + 2 * n - 1
}

/// `det(h^{(j-1)}_{λ_i - i + 1})` over `1 <= i, j <= ℓ(λ)`.
pub fn jacobi_trudi(phi: &PolyBasis, lambda: &Partition, x: &EvalPoint) -> Result<Rational> {
    let n = x.n();
    check_length(lambda, n)?;
    if lambda.is_empty() {
        return Ok(Rational::one());
    }
    let h = HMatrix::build(phi, x, lambda.first() + n)?;
    jacobi_trudi_from(&h, lambda)
}

/// Jacobi-Trudi determinant read off an existing `H`.
pub fn jacobi_trudi_from(h: &HMatrix, lambda: &Partition) -> Result<Rational> {
    check_length(lambda, h.n())?;
    let l = lambda.len();
    let mut m = Matrix::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            m[(i, j)] = h.h(j as i64, lambda.get(i) as i64 - i as i64)?;
        }
    }
    det(&m)
}

/// Truncation needed by [`dual_jacobi_trudi`] for `λ` in `n` variables.
pub fn dual_truncation(lambda: &Partition, n: usize) -> usize {
    n + lambda.first() + 1
}

/// `det(e^{λ'_j - j + 1}_{(i-1)})` over `1 <= i, j <= ℓ(λ')`.
pub fn dual_jacobi_trudi(phi: &PolyBasis, lambda: &Partition, x: &EvalPoint) -> Result<Rational> {
    let n = x.n();
    check_length(lambda, n)?;
    if lambda.is_empty() {
        return Ok(Rational::one());
    }
    let e = EMatrix::build(phi, x, n + lambda.first())?;
    dual_jacobi_trudi_from(&e, lambda)
}

pub fn dual_jacobi_trudi_from(e: &EMatrix, lambda: &Partition) -> Result<Rational> {
    check_length(lambda, e.n())?;
    let conj = lambda.conjugate();
    let l = conj.len();
    let mut m = Matrix::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            m[(i, j)] = e.e(conj.get(j) as i64 - j as i64, i as i64)?;
        }
    }
    det(&m)
}

/// `det(S^φ_{(a_i | b_j)})` over the Frobenius coordinates of `λ`, with the
/// hook values computed as bi-alternants.
pub fn giambelli(phi: &PolyBasis, lambda: &Partition, x: &EvalPoint) -> Result<Rational> {
    check_length(lambda, x.n())?;
    let f = lambda.frobenius();
    let r = f.rank();
    let mut m = Matrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            m[(i, j)] = bialternant(phi, &Partition::hook(f.arms[i], f.legs[j]), x)?;
        }
    }
    det(&m)
}

/// The generalized Giambelli relation `π_0^{r-1} π_λ = det(π_{(a_i|b_j)})`
/// for a family of Plücker coordinates indexed by partitions. A coordinate
/// that is needed but absent from `family` is an error; rank zero holds
/// trivially.
pub fn pluecker_check(family: &BTreeMap<Partition, Rational>, lambda: &Partition) -> Result<bool> {
    let f = lambda.frobenius();
    let r = f.rank();
    if r == 0 {
        return Ok(true);
    }
    let get = |mu: &Partition| {
        family
            .get(mu)
            .cloned()
            .ok_or_else(|| Error::IncompleteFamily(mu.clone()))
    };
    let pi_lambda = get(lambda)?;
    let pi_zero = if r > 1 { get(&Partition::zero())? } else { Rational::one() };
    let mut m = Matrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            m[(i, j)] = get(&Partition::hook(f.arms[i], f.legs[j]))?;
        }
    }
    let lhs = crate::kernel::rational::pow(&pi_zero, r - 1) * pi_lambda;
    Ok(lhs == det(&m)?)
}

/// Values of the four routes to `S^φ_λ` at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Routes {
    pub bialternant: Rational,
    pub jacobi_trudi: Rational,
    pub dual: Rational,
    pub giambelli: Rational,
}

impl Routes {
    pub fn agree(&self) -> bool {
        self.bialternant == self.jacobi_trudi
            && self.bialternant == self.dual
            && self.bialternant == self.giambelli
    }
}

/// Truncation sufficient for every route at `λ` in `n` variables.
pub fn routes_truncation(lambda: &Partition, n: usize) -> usize {
    jacobi_trudi_truncation(lambda, n)
        .max(dual_truncation(lambda, n))
        .max(lambda.first() + n)
}

pub fn all_routes(phi: &PolyBasis, lambda: &Partition, x: &EvalPoint) -> Result<Routes> {
    Ok(Routes {
        bialternant: bialternant(phi, lambda, x)?,
        jacobi_trudi: jacobi_trudi(phi, lambda, x)?,
        dual: dual_jacobi_trudi(phi, lambda, x)?,
        giambelli: giambelli(phi, lambda, x)?,
    })
}
