//! The matrix `E` of generalized elementary symmetric functions, inverse to `H`.
//!
//! Rows are `E_{(i)}` for `i = n, n-1, ..., n - depth + 1`, stored top-down as
//! `a = n - i`; columns are `j = 1..=depth` stored as `c = j - 1`, so column `c`
//! pairs with row `c` of `H`. The primary construction is `E = E⁰ A^{-1}` with
//! `E⁰_{(i)}^j = (-1)^{n-i-j+1} e_{n-i-j+1}(x)`.

use num::{One, Zero};

use super::{bialternant, CheckReport, EvalPoint, HMatrix};
use crate::error::{truncation, Error, Result};
use crate::kernel::rational::sign;
use crate::kernel::{invert_unitriangular, Matrix, Rational};
use crate::partitions::Partition;
use crate::polybasis::PolyBasis;
use crate::symfun::elementary;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EMatrix {
    n: usize,
    depth: usize,
    rows: Matrix,
}

fn e0(x: &EvalPoint, depth: usize) -> Matrix {
    Matrix::from_fn(depth, depth, |a, c| {
        let k = a as i64 - c as i64;
        sign(k) * elementary(x.values(), k)
    })
}

impl EMatrix {
    /// Needs `N >= depth`.
    pub fn build(phi: &PolyBasis, x: &EvalPoint, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::Invalid("E needs a positive depth".into()));
        }
        phi.require(depth, "E matrix")?;
        let ainv = invert_unitriangular(&phi.coeffs().leading(depth))?;
        Ok(EMatrix {
            n: x.n(),
            depth,
            rows: e0(x, depth).mul(&ainv)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn matrix(&self) -> &Matrix {
        &self.rows
    }

    /// `E_{(i)}^j`.
    pub fn entry(&self, i: i64, j: i64) -> Result<Rational> {
        let a = self.n as i64 - i;
        if a < 0 || a >= self.depth as i64 {
            return Err(truncation("E row", a.max(0) as usize + 1, self.depth));
        }
        if j < 1 || j > self.depth as i64 {
            return Err(truncation("E column", j.max(0) as usize, self.depth));
        }
        Ok(self.rows[(a as usize, (j - 1) as usize)].clone())
    }

    /// `e^m_{(s)} = (-1)^{m+s} E_{(-s)}^{n-m+1}`. Superscripts outside
    /// `1..=n` are served from the stored columns when present.
    pub fn e(&self, m: i64, s: i64) -> Result<Rational> {
        Ok(sign(m + s) * self.entry(-s, self.n as i64 - m + 1)?)
    }

    /// Rebuilds the rows from `E_{(n)} = b_1ᵗ` by
    /// `E_{(i)} = E_{(i+1)} J + b_1ᵗ (-1)^{n-i} e_{n-i}` and compares, then
    /// checks `E_{(i+1)} = E_{(i)} J̃` on the stored rows.
    pub fn recursion_check(&self, phi: &PolyBasis, x: &EvalPoint) -> Result<CheckReport> {
        let d = self.depth;
        phi.require(d, "E recursion check")?;
        let rec = phi.recursion();
        let j = rec.j.leading(d);
        let jt = rec.jtilde.leading(d);
        let mut passed = true;
        let mut row = vec![Rational::zero(); d];
        row[0] = Rational::one();
        passed &= row.as_slice() == self.rows.row(0);
        for a in 1..d {
            let mut next = j.vec_mul(&row)?;
            next[0] += sign(a as i64) * elementary(x.values(), a as i64);
            passed &= next.as_slice() == self.rows.row(a);
            row = next;
        }
        for a in 1..d {
            let up = jt.vec_mul(self.rows.row(a))?;
            passed &= up.as_slice() == self.rows.row(a - 1);
        }
        Ok(CheckReport {
            passed,
            rows: d,
            cols: d,
        })
    }

    /// `E H = I` and `H E = I` with `H` restricted to rows `1..=depth` and
    /// columns `n - depth + 1..=n`, ordered to match the rows of `E`.
    pub fn duality_check(&self, h: &HMatrix) -> Result<(CheckReport, CheckReport)> {
        let d = self.depth;
        if h.depth() < d || h.min_col() > self.n as i64 - d as i64 + 1 {
            return Err(truncation("E/H duality", d, h.depth()));
        }
        let hb = Matrix::from_fn(d, d, |r, a| {
            h.entry(r as i64 + 1, self.n as i64 - a as i64).expect("checked range")
        });
        let id = Matrix::identity(d);
        let eh = self.rows.mul(&hb)?;
        let he = hb.mul(&self.rows)?;
        Ok((
            CheckReport { passed: eh == id, rows: d, cols: d },
            CheckReport { passed: he == id, rows: d, cols: d },
        ))
    }

    /// `e^m_{(0)} = S^φ_{(1^m)}` for `m = 1..=n`, the row `E_{(0)}` read with
    /// the sign carried by `e^m_{(s)}`.
    pub fn column_check(&self, phi: &PolyBasis, x: &EvalPoint) -> Result<CheckReport> {
        let n = self.n;
        let mut passed = true;
        for m in 1..=n {
            let col = Partition::new(vec![1; m])?;
            passed &= self.e(m as i64, 0)? == bialternant(phi, &col, x)?;
        }
        Ok(CheckReport {
            passed,
            rows: 1,
            cols: n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{frac, int};
    use crate::symfun::complete;

    fn pt(v: &[Rational]) -> EvalPoint {
        EvalPoint::new(v.to_vec()).unwrap()
    }

    #[test]
    fn monomial_e_is_signed_elementary() {
        let x = pt(&[frac(1, 2), frac(1, 3), int(4)]);
        let e = EMatrix::build(&PolyBasis::monomial(8), &x, 6).unwrap();
        assert_eq!(e.entry(3, 1).unwrap(), int(1));
        assert_eq!(e.entry(3, 2).unwrap(), int(0));
        for s in 0..=2i64 {
            for m in 1..=3i64 {
                assert_eq!(e.e(m, s).unwrap(), elementary(x.values(), m + s));
            }
        }
    }

    #[test]
    fn classical_orthogonality() {
        let x = pt(&[frac(1, 2), frac(1, 3), int(4)]);
        for i in 0..6i64 {
            for j in 0..6i64 {
                let s: Rational = (j..=i)
                    .map(|k| sign(i - k) * elementary(x.values(), i - k) * complete(x.values(), k - j))
                    .sum();
                assert_eq!(s, if i == j { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn recursions_duality_and_first_row() {
        let x = pt(&[frac(1, 2), frac(1, 3)]);
        for b in [PolyBasis::monomial(12), PolyBasis::sp(12), PolyBasis::so_odd(12)] {
            let e = EMatrix::build(&b, &x, 6).unwrap();
            assert!(e.recursion_check(&b, &x).unwrap().passed);
            let h = HMatrix::build(&b, &x, 6).unwrap();
            let (eh, he) = e.duality_check(&h).unwrap();
            assert!(eh.passed && he.passed);
            assert!(e.column_check(&b, &x).unwrap().passed);
        }
    }

    #[test]
    fn first_row_entries_carry_a_sign() {
        // E_{(0)}^j = (-1)^{n-j+1} S^φ_{(1^{n-j+1})}
        let x = pt(&[frac(1, 2), frac(1, 3)]);
        let sp = PolyBasis::sp(8);
        let e = EMatrix::build(&sp, &x, 4).unwrap();
        let s1 = bialternant(&sp, &Partition::of(&[1]), &x).unwrap();
        assert_eq!(e.entry(0, 2).unwrap(), -s1);
        let s11 = bialternant(&sp, &Partition::of(&[1, 1]), &x).unwrap();
        assert_eq!(e.entry(0, 1).unwrap(), s11);
    }
}
