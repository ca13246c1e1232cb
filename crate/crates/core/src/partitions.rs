//! Integer partitions, their conjugates and Frobenius coordinates.

use std::cmp::Ordering;
use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is the
/// zero partition `(0)`.
///
/// Ordering is by weight, then descending lexicographic order of the parts, so
/// iterating a `BTreeMap<Partition, _>` visits partitions in the same order as
/// [`enumerate`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails unless the parts are
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but panics on invalid input; handy for literals.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn zero() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_{i+1}` (zero-based `i`), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Particle coordinates `l_i = λ_i - i + n` for `i = 1..=len`.
    pub fn particle_coords(&self, n: usize, len: usize) -> Result<Vec<i64>> {
        if self.len() > n {
            return Err(Error::Length { len: self.len(), max: n });
        }
        if self.len() > len {
            return Err(Error::Length { len: self.len(), max: len });
        }
        Ok((1..=len)
            .map(|i| self.get(i - 1) as i64 - i as i64 + n as i64)
            .collect())
    }

    /// Particle coordinates for exactly `n` rows, as nonnegative indices.
    pub fn row_indices(&self, n: usize) -> Result<Vec<usize>> {
        Ok(self
            .particle_coords(n, n)?
            .into_iter()
            .map(|l| l as usize)
            .collect())
    }

    /// Number of boxes on the main diagonal.
    pub fn frobenius_rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn frobenius(&self) -> Frobenius {
        let r = self.frobenius_rank();
        let conj = self.conjugate();
        Frobenius {
            arms: (0..r).map(|i| self.get(i) - i - 1).collect(),
            legs: (0..r).map(|i| conj.get(i) - i - 1).collect(),
        }
    }

    pub fn from_frobenius(f: &Frobenius) -> Result<Partition> {
        f.validate()?;
        let r = f.arms.len();
        let mut parts: Vec<usize> = (0..r).map(|i| f.arms[i] + i + 1).collect();
        // rows below the diagonal block: row i (1-based) has one box in column j
        // for every leg reaching down to it
        let mut i = r + 1;
        loop {
            let count = (0..r).filter(|&j| f.legs[j] + j + 1 >= i).count();
            if count == 0 {
                break;
            }
            parts.push(count);
            i += 1;
        }
        Partition::new(parts)
    }

    /// The hook `(a | b) = (a + 1, 1^b)`.
    pub fn hook(a: usize, b: usize) -> Partition {
        let mut parts = vec![a + 1];
        parts.extend(std::iter::repeat_n(1, b));
        Partition { parts }
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `true` when the diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().enumerate().all(|(i, &p)| p <= self.get(i))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(de::Error::custom)
    }
}

/// Frobenius coordinates `(a_1 .. a_r | b_1 .. b_r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frobenius {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl Frobenius {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let f = Frobenius { arms, legs };
        f.validate()?;
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    fn validate(&self) -> Result<()> {
        if self.arms.len() != self.legs.len() {
            return Err(Error::Shape("arms and legs differ in length".into()));
        }
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&self.arms) || !strict(&self.legs) {
            return Err(Error::Shape("arms and legs must be strictly decreasing".into()));
        }
        Ok(())
    }
}

/// All partitions with weight at most `max_weight` and at most `max_length`
/// parts, by ascending weight and then descending lexicographic order.
pub fn enumerate(max_weight: usize, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        out.extend(of_weight(w, max_length));
    }
    out
}

/// Partitions of exactly `weight` with at most `max_length` parts, in
/// descending lexicographic order.
pub fn of_weight(weight: usize, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(weight, weight, max_length, &mut cur, &mut out, false);
    out
}

/// Strict partitions of weight at most `max_weight`, in canonical order.
pub fn enumerate_strict(max_weight: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        let mut cur = Vec::new();
        fill(w, w, usize::MAX, &mut cur, &mut out, true);
    }
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    slots: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
    strict: bool,
) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        cur.push(p);
        let next_max = if strict { p - 1 } else { p };
        fill(remaining - p, next_max, slots - 1, cur, out, strict);
        cur.pop();
    }
}

/// The doubles of a strict partition `α`: `D(α) = (α | α - 1)` and
/// `D'(α) = (α - 1 | α)` in Frobenius notation.
pub fn doubles(alpha: &Partition) -> Result<(Partition, Partition)> {
    if !alpha.is_strict() {
        return Err(Error::Shape(format!("{alpha} is not a strict partition")));
    }
    let a: Vec<usize> = alpha.parts().to_vec();
    let a_minus: Vec<usize> = a.iter().map(|x| x - 1).collect();
    let d = Partition::from_frobenius(&Frobenius::new(a.clone(), a_minus.clone())?)?;
    let d_prime = Partition::from_frobenius(&Frobenius::new(a_minus, a)?)?;
    Ok((d, d_prime))
}
