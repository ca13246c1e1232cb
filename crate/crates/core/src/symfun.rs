//! Classical symmetric functions: power-sum flow variables `t`, complete
//! functions `h_k(t)`, Schur functions `S_λ(t)`, and Littlewood-Richardson
//! coefficients by brute-force monomial expansion.

use std::collections::HashMap;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::rational::{pow, serde_vec};
use crate::kernel::{det, Matrix, Rational};
use crate::partitions::Partition;

/// Largest `|λ|` accepted by [`littlewood_richardson`].
pub const LR_WEIGHT_CAP: usize = 8;

/// Flow variables `t_1, ..., t_K`, zero beyond `K`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FlowVector {
    t: Vec<Rational>,
}

impl FlowVector {
    pub fn new(t: Vec<Rational>) -> Self {
        FlowVector { t }
    }

    pub fn zero() -> Self {
        FlowVector { t: Vec::new() }
    }

    /// `t_i` for `i >= 1`.
    pub fn get(&self, i: usize) -> Rational {
        assert!(i >= 1, "flow variables are indexed from 1");
        self.t.get(i - 1).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> &[Rational] {
        &self.t
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Zero::is_zero)
    }
}

impl Serialize for FlowVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_vec::serialize(&self.t, s)
    }
}

impl<'de> Deserialize<'de> for FlowVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(FlowVector { t: serde_vec::deserialize(d)? })
    }
}

/// `t_i = (1/i) Σ_a x_a^i` for `i = 1..=k`.
pub fn monomial_sums(x: &[Rational], k: usize) -> FlowVector {
    FlowVector {
        t: (1..=k)
            .map(|i| {
                let s: Rational = x.iter().map(|xa| pow(xa, i)).sum();
                s / Rational::from_integer(i.into())
            })
            .collect(),
    }
}

/// `h_0, ..., h_kmax` from `k h_k = Σ_{i=1}^k i t_i h_{k-i}`.
pub fn complete_h_all(t: &FlowVector, kmax: usize) -> Vec<Rational> {
    let mut h = vec![Rational::one()];
    for k in 1..=kmax {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let ti = t.get(i);
            if !ti.is_zero() {
                acc += ti * Rational::from_integer(i.into()) * &h[k - i];
            }
        }
        h.push(acc / Rational::from_integer(k.into()));
    }
    h
}

pub fn complete_h(t: &FlowVector, k: usize) -> Rational {
    complete_h_all(t, k).pop().expect("nonempty")
}

/// Jacobi-Trudi determinant `det(h_{λ_i - i + j})`.
pub fn schur_t(lambda: &Partition, t: &FlowVector) -> Rational {
    let l = lambda.len();
    if l == 0 {
        return Rational::one();
    }
    let h = complete_h_all(t, lambda.first() + l);
    let m = Matrix::from_fn(l, l, |i, j| {
        let k = lambda.get(i) as i64 - i as i64 + j as i64;
        if k < 0 {
            Rational::zero()
        } else {
            h[k as usize].clone()
        }
    });
    det(&m).expect("square")
}

/// Classical `e_k(x)`, by multiplying out `Π (1 + x_a u)`.
pub fn elementary(x: &[Rational], k: i64) -> Rational {
    if k < 0 || k as usize > x.len() {
        return Rational::zero();
    }
    let mut e = vec![Rational::one()];
    for xa in x {
        let mut next = e.clone();
        next.push(Rational::zero());
        for j in 1..next.len() {
            next[j] += xa * &e[j - 1];
        }
        e = next;
    }
    e[k as usize].clone()
}

/// Classical `h_k(x)`, by multiplying out `Π 1/(1 - x_a u)` to order `k`.
pub fn complete(x: &[Rational], k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let k = k as usize;
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for xa in x {
        for j in 1..=k {
            let prev = h[j - 1].clone();
            h[j] += xa * prev;
        }
    }
    h[k].clone()
}

type Monomials = HashMap<Vec<u8>, i64>;

/// Monomial expansion of `S_λ(x_1..x_m)` as a sum over semistandard tableaux.
fn schur_monomials(lambda: &Partition, m: usize) -> Monomials {
    let mut out = Monomials::new();
    if lambda.len() > m {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
        .collect();
    let mut filling: Vec<Vec<u8>> = lambda.parts().iter().map(|&r| vec![0; r]).collect();
    fill_tableau(&cells, 0, m as u8, &mut filling, &mut vec![0u8; m], &mut out);
    out
}

fn fill_tableau(
    cells: &[(usize, usize)],
    idx: usize,
    m: u8,
    filling: &mut Vec<Vec<u8>>,
    content: &mut Vec<u8>,
    out: &mut Monomials,
) {
    if idx == cells.len() {
        *out.entry(content.clone()).or_insert(0) += 1;
        return;
    }
    let (i, j) = cells[idx];
    let mut lo = 1u8;
    if j > 0 {
        lo = lo.max(filling[i][j - 1]);
    }
    if i > 0 {
        lo = lo.max(filling[i - 1][j] + 1);
    }
    for v in lo..=m {
        filling[i][j] = v;
        content[v as usize - 1] += 1;
        fill_tableau(cells, idx + 1, m, filling, content, out);
        content[v as usize - 1] -= 1;
    }
}

fn multiply(a: &Monomials, b: &Monomials) -> Monomials {
    let mut out = Monomials::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out
}

fn permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let m = used.len();
        if prefix.len() == m {
            let mut inversions = 0;
            for i in 0..m {
                for j in i + 1..m {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..m {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// `C^λ_{μν}`: the coefficient of `S_λ` in `S_μ S_ν`.
///
/// The product is expanded into monomials in `m = ℓ(λ)` variables; the Schur
/// coefficient is the coefficient of `x^{λ+δ}` in `a_δ · S_μ S_ν`.
pub fn littlewood_richardson(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<u64> {
    if lambda.weight() > LR_WEIGHT_CAP {
        return Err(Error::WeightCap {
            weight: lambda.weight(),
            cap: LR_WEIGHT_CAP,
        });
    }
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) || !lambda.contains(nu) {
        return Ok(0);
    }
    let m = lambda.len().max(1);
    let product = multiply(&schur_monomials(mu, m), &schur_monomials(nu, m));
    let mut total = 0i64;
    for (sigma, sgn) in permutations(m) {
        // exponent λ_i + δ_i - δ_{σ(i)} with δ = (m-1, ..., 0)
        let mut e = Vec::with_capacity(m);
        let mut valid = true;
        for (i, &s) in sigma.iter().enumerate() {
            let v = lambda.get(i) as i64 + (m - 1 - i) as i64 - (m - 1 - s) as i64;
            if v < 0 {
                valid = false;
                break;
            }
            e.push(v as u8);
        }
        if valid {
            total += sgn * product.get(&e).copied().unwrap_or(0);
        }
    }
    u64::try_from(total).map_err(|_| Error::Invalid(format!("negative LR coefficient {total}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{frac, int};
    use crate::partitions::{enumerate, of_weight};
    use crate::polybasis::PolyBasis;
    use crate::schurgen::{bialternant, EvalPoint};

    fn p(v: &[usize]) -> Partition {
        Partition::of(v)
    }

    #[test]
    fn monomial_sum_examples() {
        assert_eq!(monomial_sums(&[int(1)], 3).values(), &[int(1), frac(1, 2), frac(1, 3)]);
        assert_eq!(monomial_sums(&[int(1), int(-1)], 2).values(), &[int(0), int(1)]);
        assert_eq!(monomial_sums(&[int(2), int(3)], 2).values(), &[int(5), frac(13, 2)]);
    }

    #[test]
    fn complete_in_t() {
        let t = FlowVector::new(vec![frac(2, 3), frac(-1, 5), int(4)]);
        assert_eq!(complete_h(&t, 0), int(1));
        assert_eq!(complete_h(&t, 1), t.get(1));
        assert_eq!(complete_h(&t, 2), t.get(1) * t.get(1) / int(2) + t.get(2));
    }

    #[test]
    fn complete_matches_monomial_expansion() {
        let x = [frac(1, 2), frac(1, 3)];
        let t = monomial_sums(&x, 4);
        for k in 0..=4 {
            // h_k(a, b) = Σ_{i=0}^k a^i b^{k-i}
            let direct: Rational = (0..=k).map(|i| pow(&x[0], i) * pow(&x[1], k - i)).sum();
            assert_eq!(complete_h(&t, k), direct);
            assert_eq!(complete(&x, k as i64), direct);
        }
    }

    #[test]
    fn schur_in_t_examples() {
        let t = FlowVector::new(vec![frac(3, 4), frac(-2, 3)]);
        let (t1, t2) = (t.get(1), t.get(2));
        assert_eq!(schur_t(&Partition::zero(), &t), int(1));
        assert_eq!(schur_t(&p(&[2]), &t), &t1 * &t1 / int(2) + &t2);
        assert_eq!(schur_t(&p(&[1, 1]), &t), &t1 * &t1 / int(2) - &t2);
    }

    #[test]
    fn elementary_symmetric() {
        let x = [int(1), int(2), int(3)];
        assert_eq!(elementary(&x, 0), int(1));
        assert_eq!(elementary(&x, 1), int(6));
        assert_eq!(elementary(&x, 2), int(11));
        assert_eq!(elementary(&x, 3), int(6));
        assert_eq!(elementary(&x, 4), int(0));
    }

    #[test]
    fn schur_t_is_independent_of_n() {
        // classical S_λ([x]) agrees with the bi-alternant once n >= ℓ(λ)
        let pts = [frac(2, 7), frac(3, 7), frac(5, 7)];
        for n in 1..=3 {
            let x = EvalPoint::new(pts[..n].to_vec()).unwrap();
            let t = monomial_sums(x.values(), 6);
            let mono = PolyBasis::monomial(12);
            for lam in enumerate(5, n) {
                assert_eq!(schur_t(&lam, &t), bialternant(&mono, &lam, &x).unwrap(), "{lam} n={n}");
            }
        }
    }

    #[test]
    fn lr_small_cases() {
        assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &Partition::zero(), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1]), &p(&[3])).unwrap(), 0);
        assert!(matches!(
            littlewood_richardson(&p(&[5]), &p(&[4]), &p(&[9])),
            Err(Error::WeightCap { .. })
        ));
    }

    #[test]
    fn lr_symmetry_and_product_rule() {
        let x = [frac(2, 7), frac(3, 7), frac(5, 7), frac(-1, 2)];
        let pt = EvalPoint::new(x.to_vec()).unwrap();
        let mono = PolyBasis::monomial(16);
        let s = |lam: &Partition| bialternant(&mono, lam, &pt).unwrap();
        for w in 0..=6 {
            for wm in 0..=w {
                for mu in of_weight(wm, 4) {
                    for nu in of_weight(w - wm, 4) {
                        let mut rhs = Rational::zero();
                        for lam in of_weight(w, 4) {
                            let c = littlewood_richardson(&mu, &nu, &lam).unwrap();
                            assert_eq!(c, littlewood_richardson(&nu, &mu, &lam).unwrap());
                            if c > 0 {
                                rhs += s(&lam) * Rational::from_integer(c.into());
                            }
                        }
                        assert_eq!(s(&mu) * s(&nu), rhs, "{mu} x {nu}");
                    }
                }
            }
        }
    }
}
