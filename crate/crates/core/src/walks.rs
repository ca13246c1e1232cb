//! Transition weights of a right-moving nearest-neighbour exclusion process,
//! as `n x n` minors of `exp(t G)` for a bidiagonal rate generator `G`.
//!
//! Continuous-time weights are unnormalized: the generator has no exit rates,
//! so rows do not sum to one. Only [`discrete_time_weights`] normalizes.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{truncation, Error, Result};
use crate::kernel::rational::{factorial, serde_vec};
use crate::kernel::{det, exp_nilpotent, poly_det, Matrix, Poly, Rational};
use crate::partitions::{enumerate, Partition};
use crate::polybasis::PolyBasis;

/// Positive rates `r_1, ..., r_{N-1}`; site `c` is entered at rate `r_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateSpec {
    rates: Vec<Rational>,
}

impl RateSpec {
    pub fn new(rates: Vec<Rational>) -> Result<Self> {
        if let Some(i) = rates.iter().position(|r| *r <= Rational::zero()) {
            return Err(Error::Invalid(format!("rate r_{} must be positive", i + 1)));
        }
        Ok(RateSpec { rates })
    }

    /// `N - 1` copies of one rate.
    pub fn uniform(rate: Rational, truncation: usize) -> Result<Self> {
        RateSpec::new(vec![rate; truncation.saturating_sub(1)])
    }

    pub fn rates(&self) -> &[Rational] {
        &self.rates
    }

    /// `N`, the number of sites.
    pub fn truncation(&self) -> usize {
        self.rates.len() + 1
    }

    /// `r_c` for `c = 1..N`.
    fn rate(&self, c: usize) -> &Rational {
        &self.rates[c - 1]
    }
}

impl Serialize for RateSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_vec::serialize(&self.rates, s)
    }
}

impl<'de> Deserialize<'de> for RateSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RateSpec::new(serde_vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// `G[c][c-1] = r_c`, zero elsewhere.
pub fn generator(r: &RateSpec) -> Matrix {
    let n = r.truncation();
    Matrix::from_fn(n, n, |i, j| {
        if i >= 1 && j + 1 == i {
            r.rate(i).clone()
        } else {
            Rational::zero()
        }
    })
}

/// `exp(t G)` as a polynomial basis: row `a` holds the weights of reaching
/// site `a` from each starting site.
pub fn walk_basis(r: &RateSpec, t: &Rational) -> Result<PolyBasis> {
    PolyBasis::from_coeffs(exp_nilpotent(&generator(r), t)?)
}

fn coords(r: &RateSpec, lambda: &Partition, n: usize, what: &str) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    if lambda.len() > n {
        return Err(Error::Length { len: lambda.len(), max: n });
    }
    let rows = lambda.row_indices(n)?;
    if rows[0] >= r.truncation() {
        return Err(truncation(what, rows[0] + 1, r.truncation()));
    }
    Ok(rows)
}

/// Unnormalized weight `W_{μ→λ}(t)`: the minor of `exp(t G)` at rows `l(λ)`,
/// columns `l(μ)`.
pub fn transition_weight(r: &RateSpec, lambda: &Partition, mu: &Partition, n: usize, t: &Rational) -> Result<Rational> {
    let rows = coords(r, lambda, n, "walk final state")?;
    let cols = coords(r, mu, n, "walk initial state")?;
    let e = exp_nilpotent(&generator(r), t)?;
    det(&e.select(&rows, &cols))
}

/// `W_{μ→λ}(t)` as an exact polynomial in `t`, built from the closed-form
/// entries `(Π_{c=b+1}^{a} r_c) t^{a-b} / (a-b)!`.
pub fn transition_polynomial(r: &RateSpec, lambda: &Partition, mu: &Partition, n: usize) -> Result<Poly> {
    let rows = coords(r, lambda, n, "walk final state")?;
    let cols = coords(r, mu, n, "walk initial state")?;
    let m: Vec<Vec<Poly>> = rows
        .iter()
        .map(|&a| {
            cols.iter()
                .map(|&b| {
                    if a < b {
                        return Poly::zero();
                    }
                    let rate: Rational = (b + 1..=a).map(|c| r.rate(c).clone()).product();
                    let d = a - b;
                    Poly::monomial(rate / Rational::from_integer(factorial(d)), d)
                })
                .collect()
        })
        .collect();
    Ok(poly_det(&m))
}

/// `M_{λν}`, the coefficient of `t` in `W_{ν→λ}(t)`.
pub fn m_coefficient(r: &RateSpec, lambda: &Partition, nu: &Partition, n: usize) -> Result<Rational> {
    Ok(transition_polynomial(r, lambda, nu, n)?.coeff(1))
}

/// All `n`-particle states inside the truncation.
pub fn states(r: &RateSpec, n: usize) -> Vec<Partition> {
    let width = r.truncation().saturating_sub(n);
    enumerate(width * n, n)
        .into_iter()
        .filter(|p| p.first() <= width)
        .collect()
}

/// `d/dt W_{μ→λ}(t) = Σ_ν M_{λν} W_{μ→ν}(t)` over every state `ν`, as a
/// polynomial identity and at the given `t`.
pub fn semigroup_check(r: &RateSpec, lambda: &Partition, mu: &Partition, n: usize, t: &Rational) -> Result<bool> {
    let lhs = transition_polynomial(r, lambda, mu, n)?.derivative();
    let mut rhs = Poly::zero();
    for nu in states(r, n) {
        let m = m_coefficient(r, lambda, &nu, n)?;
        if !m.is_zero() {
            rhs = &rhs + &transition_polynomial(r, &nu, mu, n)?.scale(&m);
        }
    }
    Ok(lhs == rhs && lhs.eval(t) == rhs.eval(t))
}

/// `Σ_ν W_{μ→ν}(s) W_{ν→λ}(t) = W_{μ→λ}(s + t)`.
pub fn chapman_kolmogorov_check(
    r: &RateSpec,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    s: &Rational,
    t: &Rational,
) -> Result<bool> {
    let mut sum = Rational::zero();
    for nu in states(r, n) {
        let a = transition_weight(r, &nu, mu, n, s)?;
        if !a.is_zero() {
            sum += a * transition_weight(r, lambda, &nu, n, t)?;
        }
    }
    Ok(sum == transition_weight(r, lambda, mu, n, &(s + t))?)
}

/// Normalized discrete-time weights after `steps` steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscreteWeights {
    #[serde(serialize_with = "ser_weights")]
    pub weights: BTreeMap<Partition, Rational>,
    /// No final state carries weight: every path leaves the truncation.
    pub absorbing: bool,
}

fn ser_weights<S: Serializer>(w: &BTreeMap<Partition, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(w.len()))?;
    for (p, v) in w {
        seq.serialize_element(&WeightEntry { lambda: p, weight: crate::kernel::format_rational(v) })?;
    }
    seq.end()
}

#[derive(Serialize)]
struct WeightEntry<'a> {
    lambda: &'a Partition,
    weight: String,
}

/// The order-`steps` term of each `W_{μ→λ}(t)`, read as a weight at discrete
/// time `steps` and divided by the total over all final states.
pub fn discrete_time_weights(r: &RateSpec, mu: &Partition, n: usize, steps: usize) -> Result<DiscreteWeights> {
    coords(r, mu, n, "walk initial state")?;
    let mut raw = BTreeMap::new();
    for lambda in states(r, n) {
        if lambda.weight() != mu.weight() + steps {
            continue;
        }
        let c = transition_polynomial(r, &lambda, mu, n)?.coeff(steps);
        if !c.is_zero() {
            raw.insert(lambda, c);
        }
    }
    let total: Rational = raw.values().sum();
    if total.is_zero() {
        return Ok(DiscreteWeights {
            weights: BTreeMap::new(),
            absorbing: true,
        });
    }
    Ok(DiscreteWeights {
        weights: raw.into_iter().map(|(k, v)| (k, v / &total)).collect(),
        absorbing: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{frac, int};
    use crate::schurgen::expansion_coefficient;
    use std::collections::HashMap;

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    fn rates(v: &[Rational]) -> RateSpec {
        RateSpec::new(v.to_vec()).unwrap()
    }

    /// Oracle: sum over sequences of `d` single hops into empty sites, each
    /// weighted by the rate of the entered site, divided by `d!`.
    fn hop_paths(r: &RateSpec, lambda: &Partition, mu: &Partition, n: usize) -> Rational {
        let start: Vec<usize> = mu.row_indices(n).unwrap();
        let end: Vec<usize> = lambda.row_indices(n).unwrap();
        if lambda.weight() < mu.weight() {
            return int(0);
        }
        let d = lambda.weight() - mu.weight();
        let mut layer: HashMap<Vec<usize>, Rational> = [(start, int(1))].into();
        for _ in 0..d {
            let mut next: HashMap<Vec<usize>, Rational> = HashMap::new();
            for (conf, w) in &layer {
                for i in 0..n {
                    let to = conf[i] + 1;
                    if to >= r.truncation() || conf.contains(&to) {
                        continue;
                    }
                    let mut c = conf.clone();
                    c[i] = to;
                    *next.entry(c).or_insert_with(|| int(0)) += w * r.rate(to);
                }
            }
            layer = next;
        }
        layer.get(&end).cloned().unwrap_or_else(|| int(0)) / Rational::from_integer(factorial(d))
    }

    #[test]
    fn generator_shape() {
        assert!(generator(&rates(&[])).is_zero());
        let g = generator(&rates(&[int(2), int(5)]));
        assert_eq!(g[(1, 0)], int(2));
        assert_eq!(g[(2, 1)], int(5));
        assert_eq!(g.entries().iter().filter(|v| !v.is_zero()).count(), 2);
        let g2 = g.mul(&g).unwrap();
        assert!(!g2.is_zero());
        assert!(g2.mul(&g).unwrap().is_zero());
    }

    #[test]
    fn single_particle_closed_form() {
        let r = RateSpec::uniform(int(1), 7).unwrap();
        let t = frac(3, 2);
        for d in 0..=6usize {
            let lam = p(&[d]);
            let want = (0..d).fold(int(1), |acc, _| acc * &t) / Rational::from_integer(factorial(d));
            assert_eq!(transition_weight(&r, &lam, &Partition::zero(), 1, &t).unwrap(), want);
        }
    }

    #[test]
    fn weights_at_zero_and_support() {
        let r = rates(&[int(1), int(2), frac(1, 3), int(4)]);
        let st = states(&r, 2);
        for lam in &st {
            for mu in &st {
                let w = transition_weight(&r, lam, mu, 2, &int(0)).unwrap();
                assert_eq!(w, if lam == mu { int(1) } else { int(0) });
                let poly = transition_polynomial(&r, lam, mu, 2).unwrap();
                if (0..2).any(|i| lam.get(i) < mu.get(i)) {
                    assert!(poly.is_zero(), "{mu} -> {lam}");
                }
                if let Some(deg) = poly.degree() {
                    assert_eq!(deg, lam.weight() - mu.weight());
                    assert!(poly.coeff(deg) > int(0));
                }
            }
        }
    }

    #[test]
    fn polynomial_matches_matrix_route_and_paths() {
        let r = rates(&[int(1), int(2), frac(1, 3), int(4), frac(3, 2)]);
        let t = frac(-2, 3);
        for n in 1..=2 {
            let b = walk_basis(&r, &t).unwrap();
            for lam in states(&r, n) {
                for mu in states(&r, n) {
                    let poly = transition_polynomial(&r, &lam, &mu, n).unwrap();
                    let w = transition_weight(&r, &lam, &mu, n, &t).unwrap();
                    assert_eq!(poly.eval(&t), w);
                    assert_eq!(expansion_coefficient(&b, &lam, &mu, n).unwrap(), w);
                    let d = lam.weight().saturating_sub(mu.weight());
                    assert_eq!(poly.coeff(d), hop_paths(&r, &lam, &mu, n), "{mu} -> {lam}");
                }
            }
        }
    }

    #[test]
    fn m_is_the_hop_generator() {
        let r = rates(&[int(1), int(2), int(3), int(4)]);
        assert_eq!(m_coefficient(&r, &p(&[1]), &Partition::zero(), 2).unwrap(), int(2));
        assert_eq!(m_coefficient(&r, &p(&[1, 1]), &p(&[1]), 2).unwrap(), int(1));
        assert_eq!(m_coefficient(&r, &p(&[2]), &Partition::zero(), 2).unwrap(), int(0));
        assert_eq!(m_coefficient(&r, &p(&[1]), &p(&[1]), 2).unwrap(), int(0));
    }

    #[test]
    fn semigroup_and_chapman_kolmogorov() {
        let r = rates(&[int(1), frac(1, 2), int(3), int(2)]);
        let (s, t) = (frac(1, 3), frac(5, 4));
        for n in 1..=2 {
            for lam in states(&r, n).into_iter().filter(|l| l.weight() <= 3) {
                for mu in states(&r, n).into_iter().filter(|l| l.weight() <= 3) {
                    assert!(semigroup_check(&r, &lam, &mu, n, &t).unwrap());
                    assert!(chapman_kolmogorov_check(&r, &lam, &mu, n, &s, &t).unwrap());
                }
            }
        }
    }

    #[test]
    fn discrete_time() {
        let r = RateSpec::uniform(int(1), 5).unwrap();
        let z = Partition::zero();
        let w0 = discrete_time_weights(&r, &z, 1, 0).unwrap();
        assert_eq!(w0.weights, [(z.clone(), int(1))].into());
        let w1 = discrete_time_weights(&r, &z, 1, 1).unwrap();
        assert_eq!(w1.weights, [(p(&[1]), int(1))].into());
        let r2 = rates(&[int(1), int(3), int(1), int(1)]);
        let w = discrete_time_weights(&r2, &z, 2, 2).unwrap();
        assert_eq!(w.weights.values().sum::<Rational>(), int(1));
        assert!(!w.absorbing);
        // all particles stuck at the right edge
        let end = discrete_time_weights(&r, &p(&[3, 3]), 2, 1).unwrap();
        assert!(end.absorbing && end.weights.is_empty());
    }

    #[test]
    fn rates_must_be_positive() {
        assert!(RateSpec::new(vec![int(1), int(0)]).is_err());
        assert!(serde_json::from_str::<RateSpec>(r#"["1","-1/2"]"#).is_err());
        let r: RateSpec = serde_json::from_str(r#"["1",2]"#).unwrap();
        assert_eq!(r.truncation(), 3);
        assert!(matches!(
            transition_weight(&r, &p(&[2]), &Partition::zero(), 2, &int(1)),
            Err(Error::Truncation { .. })
        ));
    }
}
