//! Evaluation points: tuples of pairwise distinct rationals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::rational::{format_rational, serde_vec};
use crate::kernel::{frac, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    x: Vec<Rational>,
}

impl EvalPoint {
    /// Fails with a singular-Vandermonde error when two coordinates coincide.
    pub fn new(x: Vec<Rational>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Invalid("an evaluation point needs at least one coordinate".into()));
        }
        for i in 0..x.len() {
            if x[i + 1..].contains(&x[i]) {
                return Err(Error::SingularVandermonde);
            }
        }
        Ok(EvalPoint { x })
    }

    pub fn values(&self) -> &[Rational] {
        &self.x
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// `Π_{i<j} (x_i - x_j)`.
    pub fn vandermonde(&self) -> Rational {
        let mut acc = Rational::from_integer(1.into());
        for i in 0..self.x.len() {
            for j in i + 1..self.x.len() {
                acc *= &self.x[i] - &self.x[j];
            }
        }
        acc
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.x.iter().map(format_rational).collect()
    }
}

impl Serialize for EvalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_vec::serialize(&self.x, s)
    }
}

impl<'de> Deserialize<'de> for EvalPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let x = serde_vec::deserialize(d)?;
        EvalPoint::new(x).map_err(de::Error::custom)
    }
}

fn primes(count: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 2i64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// `count` points in `n` variables built from consecutive primes over 7: the
/// `k`-th point is `(p_k, ..., p_{k+n-1}) / 7`.
pub fn default_grid(n: usize, count: usize) -> Vec<EvalPoint> {
    let ps = primes(n + count);
    (0..count)
        .map(|k| EvalPoint {
            x: (0..n).map(|i| frac(ps[k + i], 7)).collect(),
        })
        .collect()
}

/// Reproducible pseudo-random points: numerators in `±[1, 20]`, denominators in
/// `[1, 9]`, coordinates distinct within each point.
pub fn seeded_points(n: usize, count: usize, seed: u64) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut x: Vec<Rational> = Vec::with_capacity(n);
            while x.len() < n {
                let num = rng.gen_range(1..=20i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let den = rng.gen_range(1..=9i64);
                let v = frac(num, den);
                if !x.contains(&v) {
                    x.push(v);
                }
            }
            EvalPoint { x }
        })
        .collect()
}
