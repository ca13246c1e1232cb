//! The matrix `H` of generalized complete symmetric functions.
//!
//! Rows are labelled `k = 1, 2, ...` counting up from the bottom and stored
//! top-down as `r = k - 1`, so row `r` pairs with `φ_r`. Column `j` holds
//! `H^{(j)}` with entries `H_{kj} = h^{(j-1)}_{k-n}`. Column 1 is
//! `h^{(0)}_i = S^φ_{(i)}`, columns to the right follow from `H^{(j)} = J H^{(j-1)}`
//! and columns to the left from `H^{(j-1)} = J̃ H^{(j)}`.

use num::{One, Zero};

use super::{bialternant, CheckReport, EvalPoint};
use crate::error::{truncation, Error, Result};
use crate::kernel::{inverse, invert_unitriangular, Matrix, Rational};
use crate::partitions::Partition;
use crate::polybasis::PolyBasis;
use crate::symfun::complete;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HMatrix {
    n: usize,
    depth: usize,
    min_col: i64,
    /// `cols[j - min_col][r]`
    cols: Vec<Vec<Rational>>,
}

impl HMatrix {
    /// Rows `1..=depth`, columns `min(1, n - depth + 1)..=n`. Needs
    /// `N >= depth + n - 1` so that every `J` row used is exact.
    pub fn build(phi: &PolyBasis, x: &EvalPoint, depth: usize) -> Result<Self> {
        let n = x.n();
        if depth == 0 {
            return Err(Error::Invalid("H needs a positive depth".into()));
        }
        let reach = depth + n - 1;
        phi.require(reach, "H matrix")?;
        let rec = phi.recursion();

        let mut first = Vec::with_capacity(reach);
        for r in 0..reach {
            first.push(if r + 1 < n {
                Rational::zero()
            } else {
                bialternant(phi, &Partition::new(vec![r + 1 - n])?, x)?
            });
        }
        let mut right = vec![first];
        for _ in 2..=n {
            let prev = right.last().expect("nonempty");
            let len = prev.len() - 1;
            let col: Vec<Rational> = (0..len)
                .map(|r| {
                    (0..=r + 1)
                        .filter(|&q| !rec.j[(r, q)].is_zero() && !prev[q].is_zero())
                        .map(|q| &rec.j[(r, q)] * &prev[q])
                        .sum()
                })
                .collect();
            right.push(col);
        }
        for col in &mut right {
            col.truncate(depth);
        }

        let min_col = 1.min(n as i64 - depth as i64 + 1);
        let mut left: Vec<Vec<Rational>> = Vec::new();
        let mut cur = right[0].clone();
        for _ in min_col..1 {
            let next: Vec<Rational> = (0..depth)
                .map(|r| {
                    (0..r)
                        .filter(|&q| !rec.jtilde[(r, q)].is_zero() && !cur[q].is_zero())
                        .map(|q| &rec.jtilde[(r, q)] * &cur[q])
                        .sum()
                })
                .collect();
            left.push(next.clone());
            cur = next;
        }
        left.reverse();
        left.extend(right);
        Ok(HMatrix {
            n,
            depth,
            min_col,
            cols: left,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Leftmost stored column index.
    pub fn min_col(&self) -> i64 {
        self.min_col
    }

    /// `H_{kj}` with `k` counted from 1 at the bottom.
    pub fn entry(&self, k: i64, j: i64) -> Result<Rational> {
        if j < self.min_col || j > self.n as i64 {
            return Err(Error::Invalid(format!(
                "column {j} outside the stored range {}..={}",
                self.min_col, self.n
            )));
        }
        if k < 1 || k > self.depth as i64 {
            return Err(truncation("H row", k.max(0) as usize, self.depth));
        }
        Ok(self.cols[(j - self.min_col) as usize][(k - 1) as usize].clone())
    }

    /// `h^{(j)}_m = H_{m+n, j+1}`.
    pub fn h(&self, j: i64, m: i64) -> Result<Rational> {
        self.entry(m + self.n as i64, j + 1)
    }

    /// Columns `lo..=hi` as a `depth x (hi - lo + 1)` matrix, row `r` = label `r + 1`.
    pub fn block(&self, lo: i64, hi: i64) -> Result<Matrix> {
        let mut m = Matrix::zeros(self.depth, (hi - lo + 1).max(0) as usize);
        for (c, j) in (lo..=hi).enumerate() {
            for r in 0..self.depth {
                m[(r, c)] = self.entry(r as i64 + 1, j)?;
            }
        }
        Ok(m)
    }

    /// The first `n` columns, `H = (H^{(1)} ... H^{(n)})`.
    pub fn positive(&self) -> Result<Matrix> {
        self.block(1, self.n as i64)
    }

    /// `H(0)`: rows labelled `n, ..., 1` (window order), columns `1..=n`.
    pub fn h0(&self) -> Result<Matrix> {
        let n = self.n;
        let mut m = Matrix::zeros(n, n);
        for a in 0..n {
            for c in 0..n {
                m[(a, c)] = self.entry((n - a) as i64, c as i64 + 1)?;
            }
        }
        Ok(m)
    }

    /// `h^{(j)}_{-j} = 1` and `h^{(j)}_{-k} = 0` for `k > j`, over every stored
    /// entry the relations reach.
    pub fn boundary_check(&self) -> CheckReport {
        let mut passed = true;
        let mut checked = 0;
        for j in self.min_col..=self.n as i64 {
            let jj = j - 1;
            // h^{(jj)}_{-k} sits in row n - k; rows run 1..=depth
            let mut k = jj;
            loop {
                let row = self.n as i64 - k;
                if row < 1 {
                    break;
                }
                if row <= self.depth as i64 {
                    let v = self.h(jj, -k).expect("in range");
                    let want = if k == jj { Rational::one() } else { Rational::zero() };
                    passed &= v == want;
                    checked += 1;
                }
                k += 1;
            }
        }
        CheckReport {
            passed,
            rows: checked,
            cols: 1,
        }
    }

    /// `H H(0)^{-1} = Φ Φ(0)^{-1}` on all `depth` rows.
    pub fn grassmannian_check(&self, phi: &PolyBasis, x: &EvalPoint) -> Result<CheckReport> {
        let n = self.n;
        if self.depth < n {
            return Err(truncation("Grassmannian check depth", n, self.depth));
        }
        phi.require(self.depth, "Grassmannian check")?;
        let lhs = self.positive()?.mul(&invert_unitriangular(&self.h0()?)?)?;
        let rows: Vec<usize> = (0..self.depth).collect();
        let big_phi = phi.eval_rows(&rows, x.values())?;
        let rhs = big_phi.mul(&inverse(&phi.window(x.values(), 0)?)?)?;
        Ok(CheckReport {
            passed: lhs == rhs,
            rows: self.depth,
            cols: n,
        })
    }

    /// `H = A H⁰` entrywise over every stored column, with `H⁰` built from the
    /// classical complete symmetric functions `h_{k-n+j-1}(x)`.
    pub fn lemma_check(&self, phi: &PolyBasis, x: &EvalPoint) -> Result<CheckReport> {
        phi.require(self.depth, "H = A H⁰ check")?;
        let h0 = classical_h_block(x, self.depth, self.min_col, self.n as i64);
        let a = phi.coeffs().leading(self.depth);
        let lhs = self.block(self.min_col, self.n as i64)?;
        Ok(CheckReport {
            passed: a.mul(&h0)? == lhs,
            rows: self.depth,
            cols: lhs.cols(),
        })
    }
}

/// Classical `H⁰` over rows `1..=depth` and columns `lo..=hi`:
/// entry `h_{k-n+j-1}(x)`.
pub fn classical_h_block(x: &EvalPoint, depth: usize, lo: i64, hi: i64) -> Matrix {
    let n = x.n() as i64;
    let cols: Vec<i64> = (lo..=hi).collect();
    Matrix::from_fn(depth, cols.len(), |r, c| {
        complete(x.values(), r as i64 + 1 - n + cols[c] - 1)
    })
}
