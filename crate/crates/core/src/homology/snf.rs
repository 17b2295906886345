use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U * A * V = D` with `U`, `V` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries of `D`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }
}

/// Smith normal form over the integers with transforms.
///
/// Pivots on the smallest nonzero magnitude in the active block.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut work = Reduction {
        a: a.clone(),
        u: Some(IntMatrix::identity(a.rows())),
        v: Some(IntMatrix::identity(a.cols())),
    };
    work.run();
    SmithForm { d: work.a, u: work.u.unwrap(), v: work.v.unwrap() }
}

/// Nonzero invariant factors only; skips the transforms.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut work = Reduction { a: a.clone(), u: None, v: None };
    work.run();
    work.a.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
}

struct Reduction {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reduction {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.a.add_row_multiple(target, source, factor);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(target, source, factor);
        }
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.a.add_col_multiple(target, source, factor);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(target, source, factor);
        }
    }

    /// Position of the smallest nonzero magnitude in rows/cols `>= t`.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if x.abs() == BigInt::from(1) {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let rank_bound = self.a.rows().min(self.a.cols());
        for t in 0..rank_bound {
            let Some((pi, pj)) = self.smallest_in_block(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                // Clear column t below and row t right of the pivot, keeping
                // remainders; a smaller remainder becomes the next pivot.
                let mut smaller: Option<(usize, usize)> = None;
                for i in t + 1..self.a.rows() {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                    self.add_row(i, t, &-q);
                    if !self.a[(i, t)].is_zero() {
                        smaller = Some((i, t));
                    }
                }
                for j in t + 1..self.a.cols() {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                    self.add_col(j, t, &-q);
                    if !self.a[(t, j)].is_zero() {
                        smaller = Some((t, j));
                    }
                }
                if let Some((i, j)) = smaller {
                    let (i, j) = self.smallest_remainder(t).unwrap_or((i, j));
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                // Row and column are clear; enforce divisibility of the block.
                let pivot = self.a[(t, t)].clone();
                let offender = (t + 1..self.a.rows()).find(|&i| {
                    (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.a.negate_row(t);
                if let Some(u) = &mut self.u {
                    u.negate_row(t);
                }
            }
        }
    }

    /// Smallest nonzero entry remaining in row `t` or column `t`, off the pivot.
    fn smallest_remainder(&self, t: usize) -> Option<(usize, usize)> {
        let col = (t + 1..self.a.rows()).map(|i| (i, t));
        let row = (t + 1..self.a.cols()).map(|j| (t, j));
        col.chain(row)
            .filter(|&p| !self.a[p].is_zero())
            .min_by(|&p, &q| self.a[p].abs().cmp(&self.a[q].abs()))
    }
}
