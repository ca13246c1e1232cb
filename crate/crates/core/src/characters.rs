//! Characters of `Sp(2n)`, `SO(2n)` and `SO(2n+1)` as generalized Schur
//! functions in `z_i = x_i + 1/x_i`, and Littlewood's expansion of the same
//! characters in ordinary Schur functions of `(x, 1/x[, 1])`.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{truncation, Error, Result};
use crate::kernel::Rational;
use crate::partitions::{doubles, enumerate_strict, of_weight, Partition};
use crate::polybasis::PolyBasis;
use crate::schurgen::{bialternant, classical_schur, expansion_coeffs, EvalPoint, SchurExpansion};
use crate::symfun::{littlewood_richardson, monomial_sums, schur_t, FlowVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    #[serde(rename = "sp")]
    Sp,
    #[serde(rename = "so_even")]
    SoEven,
    #[serde(rename = "so_odd")]
    SoOdd,
}

impl Group {
    pub const ALL: [Group; 3] = [Group::Sp, Group::SoEven, Group::SoOdd];

    /// Truncated polynomial basis in `z` whose bi-alternants are the characters.
    pub fn basis(self, n: usize) -> PolyBasis {
        match self {
            Group::Sp => PolyBasis::sp(n),
            Group::SoEven => PolyBasis::so_even(n),
            Group::SoOdd => PolyBasis::so_odd(n),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Group::Sp => "sp",
            Group::SoEven => "so_even",
            Group::SoOdd => "so_odd",
        }
    }

    pub fn from_tag(s: &str) -> Option<Group> {
        Group::ALL.into_iter().find(|g| g.tag() == s)
    }
}

/// A point `(x_1, ..., x_n)` of the maximal torus, all coordinates nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoint {
    x: Vec<Rational>,
}

impl TorusPoint {
    pub fn new(x: Vec<Rational>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Invalid("a torus point needs at least one coordinate".into()));
        }
        if x.iter().any(Zero::is_zero) {
            return Err(Error::Invalid("torus coordinates must be nonzero".into()));
        }
        Ok(TorusPoint { x })
    }

    pub fn values(&self) -> &[Rational] {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// `z_i = x_i + 1/x_i`.
    pub fn z(&self) -> Vec<Rational> {
        self.x.iter().map(|x| x + x.recip()).collect()
    }

    /// `(x_1, ..., x_n, 1/x_1, ..., 1/x_n)`, followed by `1` for `SO(2n+1)`.
    pub fn doubled(&self, g: Group) -> Vec<Rational> {
        let mut v = self.x.clone();
        v.extend(self.x.iter().map(|x| x.recip()));
        if g == Group::SoOdd {
            v.push(Rational::from_integer(1.into()));
        }
        v
    }
}

/// `S^G_λ(z)`. With distinct `z_i` this is the bi-alternant; when two `z_i`
/// coincide (e.g. at the identity) the Schur expansion `Σ_μ φ^G_{λμ} S_μ(z)`
/// is summed instead, with `S_μ(z)` taken through the power sums of `z`.
pub fn character(g: Group, lambda: &Partition, p: &TorusPoint) -> Result<Rational> {
    let n = p.n();
    if lambda.len() > n {
        return Err(Error::Length { len: lambda.len(), max: n });
    }
    let basis = g.basis(lambda.first() + n);
    match EvalPoint::new(p.z()) {
        Ok(z) => bialternant(&basis, lambda, &z),
        Err(Error::SingularVandermonde) => {
            let t = monomial_sums(&p.z(), lambda.weight().max(1));
            expansion_coeffs(&basis, lambda, n)?.evaluate_with(|mu| Ok(schur_t(mu, &t)))
        }
        Err(e) => Err(e),
    }
}

/// Littlewood's expansion
/// `Σ_α (-1)^{|α|} Σ_μ C^λ_{D(α), μ} S_μ(x, 1/x[, 1])`, with `D = D'` for `Sp`,
/// over strict `α` with `2|α| <= |λ|`. The doubled variable list must consist of
/// distinct values; `cutoff` must cover `|λ|`.
pub fn littlewood_rhs(g: Group, lambda: &Partition, p: &TorusPoint, cutoff: usize) -> Result<Rational> {
    if cutoff < lambda.weight() {
        return Err(truncation("Littlewood expansion cutoff", lambda.weight(), cutoff));
    }
    if lambda.len() > p.n() {
        return Err(Error::Length { len: lambda.len(), max: p.n() });
    }
    let vars = EvalPoint::new(p.doubled(g))?;
    let mut acc = Rational::zero();
    for alpha in enumerate_strict(lambda.weight() / 2) {
        let (d, d_prime) = doubles(&alpha)?;
        let dbl = if g == Group::Sp { d_prime } else { d };
        if !lambda.contains(&dbl) {
            continue;
        }
        let mut inner = Rational::zero();
        for mu in of_weight(lambda.weight() - dbl.weight(), lambda.len()) {
            let c = littlewood_richardson(&dbl, &mu, lambda)?;
            if c > 0 {
                inner += Rational::from_integer(c.into()) * classical_schur(&mu, &vars)?;
            }
        }
        if alpha.weight() % 2 == 1 {
            acc -= inner;
        } else {
            acc += inner;
        }
    }
    Ok(acc)
}

/// `φ^G_{λμ}` for all `μ`, through the general expansion coefficients.
pub fn schur_expansion_z(g: Group, lambda: &Partition, n: usize) -> Result<SchurExpansion> {
    expansion_coeffs(&g.basis(lambda.first() + n), lambda, n)
}

/// The character through the classical Schur expansion in `t = [z]`; used as a
/// cross-check and for points with repeated `z`.
pub fn character_via_expansion(g: Group, lambda: &Partition, p: &TorusPoint) -> Result<Rational> {
    let t: FlowVector = monomial_sums(&p.z(), lambda.weight().max(1));
    schur_expansion_z(g, lambda, p.n())?.evaluate_with(|mu| Ok(schur_t(mu, &t)))
}
