//! Moment and bimoment matrices of finitely supported measures, and the
//! matrix-model coefficients `B_{λ,n}` and `B_{λ,ν,n}` built from their minors.

use std::collections::BTreeSet;

use itertools::Itertools;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::rational::{pow, serde_vec};
use crate::kernel::{det, invert_unitriangular, Matrix, Rational};
use crate::partitions::{enumerate, Partition};
use crate::polybasis::PolyBasis;
use crate::schurgen::{classical_schur, EvalPoint};
use crate::symfun::{schur_t, FlowVector};

/// `Σ_c w_c δ_{z_c}` with distinct nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMeasure")]
pub struct DiscreteMeasure {
    #[serde(with = "serde_vec")]
    nodes: Vec<Rational>,
    #[serde(with = "serde_vec")]
    weights: Vec<Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMeasure {
    #[serde(with = "serde_vec")]
    nodes: Vec<Rational>,
    #[serde(with = "serde_vec")]
    weights: Vec<Rational>,
}

impl TryFrom<RawMeasure> for DiscreteMeasure {
    type Error = Error;

    fn try_from(r: RawMeasure) -> Result<Self> {
        DiscreteMeasure::new(r.nodes, r.weights)
    }
}

impl DiscreteMeasure {
    pub fn new(nodes: Vec<Rational>, weights: Vec<Rational>) -> Result<Self> {
        if nodes.len() != weights.len() {
            return Err(Error::Dimension(format!(
                "{} nodes but {} weights",
                nodes.len(),
                weights.len()
            )));
        }
        if nodes.iter().collect::<BTreeSet<_>>().len() != nodes.len() {
            return Err(Error::Invalid("measure nodes must be distinct".into()));
        }
        Ok(DiscreteMeasure { nodes, weights })
    }

    pub fn nodes(&self) -> &[Rational] {
        &self.nodes
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `m_k = Σ_c w_c z_c^k`.
    pub fn moment(&self, k: usize) -> Rational {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(z, w)| w * pow(z, k))
            .sum()
    }

    /// `M[a][b] = m_{a+b}`.
    pub fn hankel(&self, size: usize) -> Matrix {
        let m: Vec<Rational> = (0..2 * size).map(|k| self.moment(k)).collect();
        Matrix::from_fn(size, size, |a, b| m[a + b].clone())
    }

    /// `⟨f, g⟩ = Σ_c w_c f(z_c) g(z_c)` on coefficient vectors.
    fn pairing(&self, f: &[Rational], g: &[Rational]) -> Rational {
        let h = self.hankel(f.len().max(g.len()));
        let mut s = Rational::zero();
        for (a, fa) in f.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, gb) in g.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                s += fa * gb * &h[(a, b)];
            }
        }
        s
    }
}

fn check_length(lambda: &Partition, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    if lambda.len() > n {
        return Err(Error::Length { len: lambda.len(), max: n });
    }
    Ok(())
}

/// `det(M_{l_i(λ), l_j(ν)})` for any matrix whose rows and columns cover the
/// particle coordinates.
pub fn b2_from_matrix(m: &Matrix, lambda: &Partition, nu: &Partition, n: usize) -> Result<Rational> {
    check_length(lambda, n)?;
    check_length(nu, n)?;
    let rows = lambda.row_indices(n)?;
    let cols = nu.row_indices(n)?;
    if rows[0] >= m.rows() || cols[0] >= m.cols() {
        return Err(crate::error::truncation(
            "moment minor",
            rows[0].max(cols[0]) + 1,
            m.rows().min(m.cols()),
        ));
    }
    det(&m.select(&rows, &cols))
}

/// `B_{λ,n} = det(M_{l_i(λ), l_j(0)}) = det(m_{λ_i - i - j + 2n})`.
pub fn b_from_matrix(m: &Matrix, lambda: &Partition, n: usize) -> Result<Rational> {
    b2_from_matrix(m, lambda, &Partition::zero(), n)
}

/// `B_{λ,n}(dμ)` from the Hankel matrix of `μ`; at `λ = (0)` this is the
/// Hankel determinant `det(m_{i+j})_{0 <= i,j < n}`.
pub fn b_coefficient(mu: &DiscreteMeasure, lambda: &Partition, n: usize) -> Result<Rational> {
    check_length(lambda, n)?;
    b_from_matrix(&mu.hankel(lambda.first() + n), lambda, n)
}

/// `Σ_{z ⊂ nodes, |z| = n} Δ(z)^2 Π w`, the eigenvalue sum at `t = 0`.
pub fn eigenvalue_sum_at_zero(mu: &DiscreteMeasure, n: usize) -> Rational {
    subsets(mu, n).map(|(_, weight)| weight).sum()
}

/// Node subsets of size `n` with their weights `Δ(z)^2 Π w`; summing over
/// subsets is the `1/n!`-normalized sum over ordered tuples.
fn subsets(mu: &DiscreteMeasure, n: usize) -> impl Iterator<Item = (Vec<Rational>, Rational)> + '_ {
    (0..mu.nodes.len()).combinations(n).map(move |idx| {
        let z: Vec<Rational> = idx.iter().map(|&c| mu.nodes[c].clone()).collect();
        let mut weight: Rational = idx.iter().map(|&c| mu.weights[c].clone()).product();
        for (a, b) in (0..n).tuple_combinations() {
            let d = &z[a] - &z[b];
            weight *= &d * &d;
        }
        (z, weight)
    })
}

/// `(1/n!) Σ_{tuples} Δ(z)^2 Π w_a exp(Σ_i t_i Σ_a z_a^i)`, with the
/// exponential replaced by `Σ_{|λ| <= cutoff} S_λ(t) S_λ(z)`.
pub fn eigenvalue_sum(mu: &DiscreteMeasure, n: usize, t: &FlowVector, cutoff: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let lambdas = enumerate(cutoff, n);
    let st: Vec<Rational> = lambdas.iter().map(|l| schur_t(l, t)).collect();
    let mut total = Rational::zero();
    for (z, weight) in subsets(mu, n) {
        let point = EvalPoint::new(z)?;
        let mut series = Rational::zero();
        for (l, s) in lambdas.iter().zip(&st) {
            if !s.is_zero() {
                series += s * classical_schur(l, &point)?;
            }
        }
        total += weight * series;
    }
    Ok(total)
}

/// Monic polynomials `p_0, ..., p_k` orthogonal for `μ`, by Gram-Schmidt on
/// monomials. Fails with the order of the first vanishing Hankel minor.
pub fn monic_orthogonal(mu: &DiscreteMeasure, k: usize) -> Result<PolyBasis> {
    let size = k + 1;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(size);
    let mut norms: Vec<Rational> = Vec::with_capacity(size);
    for i in 0..size {
        let mut p = vec![Rational::zero(); size];
        p[i] = Rational::one();
        let mono = p.clone();
        for (q, h) in rows.iter().zip(&norms) {
            let c = mu.pairing(&mono, q) / h;
            for (a, qa) in q.iter().enumerate() {
                p[a] -= &c * qa;
            }
        }
        let h = mu.pairing(&p, &p);
        if h.is_zero() && i < k {
            return Err(Error::Degeneracy(i + 1));
        }
        rows.push(p);
        norms.push(h);
    }
    PolyBasis::from_coeff_rows(&rows)
}

/// `B_{λ,n}` through `M = L D Lᵗ` with `L` the inverse of the monic orthogonal
/// coefficient matrix and `D = diag(⟨p_k, p_k⟩)`:
/// `B_{λ,n} = (Π_{k<n} ⟨p_k, p_k⟩) det(L_{l(λ), l(0)})`.
/// `None` when the Hankel minors needed for the factorization vanish.
pub fn b_via_orthogonal(mu: &DiscreteMeasure, lambda: &Partition, n: usize) -> Result<Option<Rational>> {
    check_length(lambda, n)?;
    let k = lambda.first() + n - 1;
    let p = match monic_orthogonal(mu, k) {
        Ok(p) => p,
        Err(Error::Degeneracy(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let coeffs = p.coeffs();
    let norm: Rational = (0..n).map(|i| mu.pairing(coeffs.row(i), coeffs.row(i))).product();
    let l = invert_unitriangular(coeffs)?;
    Ok(Some(norm * b_from_matrix(&l, lambda, n)?))
}

/// Finitely supported measure on pairs: `Σ_c wt_c δ_{(z_c, w_c)}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiMeasure {
    points: Vec<[Rational; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBiMeasure {
    points: Vec<BiPoint>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct BiPoint(#[serde(with = "serde_vec")] Vec<Rational>);

impl Serialize for BiMeasure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawBiMeasure {
            points: self.points.iter().map(|p| BiPoint(p.to_vec())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiMeasure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawBiMeasure::deserialize(d)?;
        let mut points = Vec::with_capacity(raw.points.len());
        for p in raw.points {
            let arr: [Rational; 3] = p
                .0
                .try_into()
                .map_err(|_| serde::de::Error::custom("each point is [z, w, weight]"))?;
            points.push(arr);
        }
        Ok(BiMeasure { points })
    }
}

impl BiMeasure {
    pub fn new(points: Vec<[Rational; 3]>) -> Self {
        BiMeasure { points }
    }

    pub fn points(&self) -> &[[Rational; 3]] {
        &self.points
    }

    /// `M[i][j] = Σ wt z^i w^j`.
    pub fn bimoment(&self, size: usize) -> Matrix {
        Matrix::from_fn(size, size, |i, j| {
            self.points
                .iter()
                .map(|[z, w, wt]| wt * pow(z, i) * pow(w, j))
                .sum()
        })
    }
}

/// `B_{λ,ν,n} = det(M_{l_i(λ), l_j(ν)})` from the bimoment matrix.
pub fn b2_coefficient(mu: &BiMeasure, lambda: &Partition, nu: &Partition, n: usize) -> Result<Rational> {
    check_length(lambda, n)?;
    check_length(nu, n)?;
    b2_from_matrix(&mu.bimoment(lambda.first().max(nu.first()) + n), lambda, nu, n)
}

/// `Σ_ρ det(θ_{l(ρ), l(λ)}) det(φ_{l(ρ), l(ν)})` over every row set `l(ρ)` of
/// size `n`; equals `B_{λ,ν,n}` of `M = θᵗ φ` by Cauchy-Binet.
pub fn factorized_b2(theta: &Matrix, phi: &Matrix, lambda: &Partition, nu: &Partition, n: usize) -> Result<Rational> {
    check_length(lambda, n)?;
    check_length(nu, n)?;
    if theta.rows() != phi.rows() {
        return Err(Error::Dimension("θ and φ need the same number of rows".into()));
    }
    let cl = lambda.row_indices(n)?;
    let cn = nu.row_indices(n)?;
    if cl[0] >= theta.cols() || cn[0] >= phi.cols() {
        return Err(crate::error::truncation(
            "factorized moment minor",
            cl[0].max(cn[0]) + 1,
            theta.cols().min(phi.cols()),
        ));
    }
    let mut s = Rational::zero();
    for rho in (0..phi.rows()).combinations(n) {
        let a = det(&theta.select(&rho, &cl))?;
        if a.is_zero() {
            continue;
        }
        s += a * det(&phi.select(&rho, &cn))?;
    }
    Ok(s)
}

/// `Σ_ν φ_{νλ} φ_{ν(0)}`, equal to `B_{λ,n}` of `M = φᵗ φ`.
pub fn factorized_b(phi: &Matrix, lambda: &Partition, n: usize) -> Result<Rational> {
    factorized_b2(phi, phi, lambda, &Partition::zero(), n)
}
