//! Truncated τ-functions as double Schur series with exact coefficients.

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use crate::error::{truncation, Error, Result};
use crate::kernel::Rational;
use crate::partitions::{enumerate, Partition};
use crate::polybasis::PolyBasis;
use crate::schurgen::{expansion_coefficient, expansion_coeffs, pluecker_check};
use crate::symfun::{schur_t, FlowVector};

/// The coefficients `φ^(n)_{λμ}` for `|λ| <= cutoff`, `ℓ(λ) <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSeries {
    n: usize,
    cutoff: usize,
    coefficients: BTreeMap<(Partition, Partition), Rational>,
}

/// A truncated sum together with the number of nonzero terms that entered it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauValue {
    #[serde(with = "crate::kernel::rational::serde_str")]
    pub value: Rational,
    pub terms: usize,
    pub cutoff: usize,
}

fn check_budget(phi: &PolyBasis, n: usize, cutoff: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    if phi.truncation() < cutoff + n {
        return Err(truncation("tau series", cutoff + n, phi.truncation()));
    }
    Ok(())
}

impl TauSeries {
    pub fn build(phi: &PolyBasis, n: usize, cutoff: usize) -> Result<Self> {
        check_budget(phi, n, cutoff)?;
        let mut coefficients = BTreeMap::new();
        for lambda in enumerate(cutoff, n) {
            for (mu, c) in expansion_coeffs(phi, &lambda, n)?.terms() {
                coefficients.insert((lambda.clone(), mu.clone()), c.clone());
            }
        }
        Ok(TauSeries {
            n,
            cutoff,
            coefficients,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coefficients(&self) -> &BTreeMap<(Partition, Partition), Rational> {
        &self.coefficients
    }

    /// `Σ φ_{λμ} S_λ(t) S_μ(s)` in canonical partition order.
    pub fn evaluate(&self, t: &FlowVector, s: &FlowVector) -> TauValue {
        let mut st: BTreeMap<&Partition, Rational> = BTreeMap::new();
        let mut ss: BTreeMap<&Partition, Rational> = BTreeMap::new();
        let mut value = Rational::zero();
        for ((lambda, mu), c) in &self.coefficients {
            let a = st.entry(lambda).or_insert_with(|| schur_t(lambda, t)).clone();
            let b = ss.entry(mu).or_insert_with(|| schur_t(mu, s)).clone();
            value += c * a * b;
        }
        TauValue {
            value,
            terms: self.coefficients.len(),
            cutoff: self.cutoff,
        }
    }
}

/// `τ_φ(n, t, s)` truncated to `|λ| <= cutoff`.
pub fn tau_phi(phi: &PolyBasis, n: usize, t: &FlowVector, s: &FlowVector, cutoff: usize) -> Result<TauValue> {
    Ok(TauSeries::build(phi, n, cutoff)?.evaluate(t, s))
}

/// `τ_{φ,θ}(n, t, s) = Σ_λ S^φ_{λ,n}(s) S^θ_{λ,n}(t)`, each factor expanded
/// through its Schur coefficients.
pub fn tau_pair(
    phi: &PolyBasis,
    theta: &PolyBasis,
    n: usize,
    t: &FlowVector,
    s: &FlowVector,
    cutoff: usize,
) -> Result<TauValue> {
    check_budget(phi, n, cutoff)?;
    check_budget(theta, n, cutoff)?;
    let mut value = Rational::zero();
    let mut terms = 0;
    for lambda in enumerate(cutoff, n) {
        let ephi = expansion_coeffs(phi, &lambda, n)?;
        let etheta = expansion_coeffs(theta, &lambda, n)?;
        let a = ephi.evaluate_with(|mu| Ok(schur_t(mu, s)))?;
        let b = etheta.evaluate_with(|mu| Ok(schur_t(mu, t)))?;
        terms += ephi.len() * etheta.len();
        value += a * b;
    }
    Ok(TauValue { value, terms, cutoff })
}

/// `{φ^(n)_{λμ}}_μ` over all `μ` with `|μ| <= |λ| + extra`, `ℓ(μ) <= n`,
/// zeros included so the family is complete for Plücker checks.
pub fn coefficient_family(
    phi: &PolyBasis,
    n: usize,
    lambda: &Partition,
    extra: usize,
) -> Result<BTreeMap<Partition, Rational>> {
    if lambda.len() > n {
        return Err(Error::Length { len: lambda.len(), max: n });
    }
    phi.require(lambda.first() + n, "coefficient family")?;
    enumerate(lambda.weight() + extra, n)
        .into_iter()
        .map(|mu| expansion_coefficient(phi, lambda, &mu, n).map(|c| (mu, c)))
        .collect()
}

/// The coefficients `φ^(n)_{λμ}` for fixed `λ`, viewed as Plücker coordinates
/// in `μ`, satisfy the Giambelli form of the Plücker relations for every `μ`
/// with `|μ| <= |λ| + 2`.
pub fn kp_coefficient_check(phi: &PolyBasis, n: usize, lambda: &Partition) -> Result<bool> {
    let family = coefficient_family(phi, n, lambda, 2)?;
    for mu in family.keys() {
        if !pluecker_check(&family, mu)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{frac, int};
    use crate::schurgen::{bialternant, EvalPoint};
    use crate::symfun::monomial_sums;

    fn flow(v: &[Rational]) -> FlowVector {
        FlowVector::new(v.to_vec())
    }

    #[test]
    fn trivial_values() {
        let t = flow(&[frac(1, 2), int(3)]);
        let z = FlowVector::zero();
        for b in [PolyBasis::monomial(8), PolyBasis::sp(8)] {
            assert_eq!(tau_phi(&b, 2, &z, &z, 4).unwrap().value, int(1));
        }
        assert_eq!(tau_phi(&PolyBasis::monomial(8), 2, &t, &z, 4).unwrap().value, int(1));
        let m = PolyBasis::monomial(4);
        assert_eq!(tau_pair(&m, &m, 2, &t, &t, 0).unwrap().value, int(1));
    }

    #[test]
    fn sp_single_particle() {
        // 1 + φ_{(2),(0)} h_2(t) with h_2 = t_1^2/2 + t_2 = 1/2
        let v = tau_phi(&PolyBasis::sp(6), 1, &flow(&[int(1)]), &FlowVector::zero(), 2).unwrap();
        assert_eq!(v.value, frac(1, 2));
    }

    #[test]
    fn pair_reduces_to_phi() {
        let t = flow(&[frac(1, 2), frac(-1, 3), int(2)]);
        let s = flow(&[int(1), frac(2, 5)]);
        for b in [PolyBasis::sp(9), PolyBasis::so_odd(9)] {
            let m = PolyBasis::monomial(9);
            let a = tau_pair(&b, &m, 2, &t, &s, 5).unwrap().value;
            assert_eq!(a, tau_phi(&b, 2, &t, &s, 5).unwrap().value);
        }
    }

    #[test]
    fn schur_route_at_a_point() {
        let x = EvalPoint::new(vec![frac(1, 2), frac(1, 3)]).unwrap();
        let t = flow(&[frac(1, 4), frac(-1, 2), int(1)]);
        let sp = PolyBasis::sp(9);
        for cutoff in 0..=5 {
            let s = monomial_sums(x.values(), cutoff.max(1));
            let direct = tau_phi(&sp, 2, &t, &s, cutoff).unwrap().value;
            let other: Rational = enumerate(cutoff, 2)
                .iter()
                .map(|l| bialternant(&sp, l, &x).unwrap() * schur_t(l, &t))
                .sum();
            assert_eq!(direct, other, "cutoff {cutoff}");
        }
    }

    #[test]
    fn cutoff_adds_only_higher_weights() {
        let t = flow(&[frac(1, 2), int(1)]);
        let s = flow(&[int(2)]);
        let sp = PolyBasis::sp(10);
        let lo = TauSeries::build(&sp, 2, 3).unwrap();
        let hi = TauSeries::build(&sp, 2, 5).unwrap();
        let extra: Rational = hi
            .coefficients()
            .iter()
            .filter(|((l, _), _)| l.weight() > 3)
            .map(|((l, m), c)| c * schur_t(l, &t) * schur_t(m, &s))
            .sum();
        assert_eq!(hi.evaluate(&t, &s).value, lo.evaluate(&t, &s).value + extra);
    }

    #[test]
    fn budget_is_enforced() {
        let z = FlowVector::zero();
        assert!(matches!(
            tau_phi(&PolyBasis::sp(5), 2, &z, &z, 4),
            Err(Error::Truncation { need: 6, have: 5, .. })
        ));
    }

    #[test]
    fn plucker_property_of_coefficients() {
        assert!(kp_coefficient_check(&PolyBasis::monomial(8), 2, &Partition::of(&[2, 1])).unwrap());
        assert!(kp_coefficient_check(&PolyBasis::sp(8), 2, &Partition::of(&[2, 2])).unwrap());
        let mut fam = coefficient_family(&PolyBasis::sp(8), 2, &Partition::of(&[2, 2]), 2).unwrap();
        assert_ne!(fam[&Partition::of(&[1, 1])], int(0));
        *fam.get_mut(&Partition::of(&[2])).unwrap() += int(1);
        let broken = fam.keys().any(|mu| !pluecker_check(&fam, mu).unwrap());
        assert!(broken);
    }
}
