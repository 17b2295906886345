//! Sparse Gaussian elimination with unit pivots.
//!
//! Over a field every nonzero entry is a unit and elimination yields the rank.
//! Over the integers only `±1` pivots are taken; what cannot be eliminated is
//! handed back as a dense residual for Smith normal form. Unit-pivot steps are
//! unimodular, so each contributes an invariant factor `1`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Coefficient arithmetic needed by the eliminator.
pub(crate) trait Coefficients {
    type E: Clone;
    fn embed(&self, x: i64) -> Self::E;
    fn is_zero(&self, x: &Self::E) -> bool;
    fn is_unit(&self, x: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn unit_inverse(&self, x: &Self::E) -> Self::E;
}

pub(crate) struct Integers;

impl Coefficients for Integers {
    type E = BigInt;
    fn embed(&self, x: i64) -> BigInt {
        BigInt::from(x)
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn is_unit(&self, x: &BigInt) -> bool {
        x.abs().is_one()
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn unit_inverse(&self, x: &BigInt) -> BigInt {
        x.clone()
    }
}

pub(crate) struct Rationals;

impl Coefficients for Rationals {
    type E = BigRational;
    fn embed(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn is_unit(&self, x: &BigRational) -> bool {
        !x.is_zero()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn unit_inverse(&self, x: &BigRational) -> BigRational {
        x.recip()
    }
}

pub(crate) struct PrimeField(pub u64);

impl Coefficients for PrimeField {
    type E = u64;
    fn embed(&self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn is_unit(&self, x: &u64) -> bool {
        *x != 0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn unit_inverse(&self, x: &u64) -> u64 {
        // Fermat: x^(p-2).
        let p = self.0;
        let (mut base, mut exp, mut acc) = (*x % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

/// Integer matrix stored by columns: `columns[j]` lists `(row, value)` sorted by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        SparseMatrix { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j]
            .binary_search_by_key(&i, |&(r, _)| r)
            .map_or(0, |at| self.columns[j][at].1)
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, x) in col {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    /// `self * other`, exact in `i128`; panics on overflow.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: std::collections::BTreeMap<usize, i128> = Default::default();
                for &(k, b) in col {
                    for &(i, a) in &self.columns[k] {
                        *acc.entry(i).or_default() += a as i128 * b as i128;
                    }
                }
                acc.into_iter()
                    .filter(|&(_, x)| x != 0)
                    .map(|(i, x)| (i, i64::try_from(x).expect("entry overflow")))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// Result of unit-pivot elimination.
pub(crate) struct Elimination<E> {
    pub pivots: usize,
    /// Remaining nonzero rows restricted to uneliminated columns.
    pub residual: Vec<Vec<(usize, E)>>,
    pub residual_cols: usize,
}

/// Eliminates unit pivots, choosing sparse columns first.
pub(crate) fn eliminate<C: Coefficients>(ring: &C, m: &SparseMatrix) -> Elimination<C::E> {
    // Row-major copy with per-column row sets for pivot search.
    let mut rows: Vec<Vec<(usize, C::E)>> = vec![Vec::new(); m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, x) in col {
            let x = ring.embed(x);
            if !ring.is_zero(&x) {
                rows[i].push((j, x));
            }
        }
    }
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for (i, row) in rows.iter().enumerate() {
        for (j, _) in row {
            col_rows[*j].insert(i);
        }
    }
    let mut row_alive = vec![true; m.rows];
    let mut col_done = vec![false; m.cols()];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        col_rows.iter().enumerate().map(|(j, s)| Reverse((s.len(), j))).collect();
    let mut pivots = 0;

    while let Some(Reverse((count, j))) = heap.pop() {
        if col_done[j] || count != col_rows[j].len() {
            if !col_done[j] && count != col_rows[j].len() {
                heap.push(Reverse((col_rows[j].len(), j)));
            }
            continue;
        }
        if count == 0 {
            col_done[j] = true;
            continue;
        }
        let pivot_row = col_rows[j]
            .iter()
            .copied()
            .filter(|&i| {
                let x = entry(&rows[i], j).expect("indexed entry");
                ring.is_unit(x)
            })
            .min_by_key(|&i| rows[i].len());
        let Some(p) = pivot_row else {
            // No unit here; leave the column for the residual.
            col_done[j] = true;
            continue;
        };
        col_done[j] = true;
        pivots += 1;
        let pivot_inv = ring.unit_inverse(entry(&rows[p], j).expect("pivot entry"));
        let pivot_entries = std::mem::take(&mut rows[p]);
        row_alive[p] = false;
        for (c, _) in &pivot_entries {
            col_rows[*c].remove(&p);
        }
        let targets: Vec<usize> = col_rows[j].iter().copied().collect();
        for r in targets {
            let factor = ring.mul(entry(&rows[r], j).expect("indexed entry"), &pivot_inv);
            let old = std::mem::take(&mut rows[r]);
            let (merged, added, removed) = axpy(ring, old, &factor, &pivot_entries);
            rows[r] = merged;
            for c in added {
                col_rows[c].insert(r);
            }
            for c in removed {
                col_rows[c].remove(&r);
            }
        }
        for (c, _) in &pivot_entries {
            if !col_done[*c] {
                heap.push(Reverse((col_rows[*c].len(), *c)));
            }
        }
    }

    // Residual: columns never eliminated (no unit pivot available).
    let mut residual_col_index = vec![usize::MAX; m.cols()];
    let mut residual_cols = 0;
    for j in 0..m.cols() {
        if !col_rows[j].is_empty() {
            residual_col_index[j] = residual_cols;
            residual_cols += 1;
        }
    }
    let residual = rows
        .into_iter()
        .enumerate()
        .filter(|(i, row)| row_alive[*i] && !row.is_empty())
        .map(|(_, row)| {
            row.into_iter().map(|(j, x)| (residual_col_index[j], x)).collect::<Vec<_>>()
        })
        .collect();
    Elimination { pivots, residual, residual_cols }
}

fn entry<E>(row: &[(usize, E)], col: usize) -> Option<&E> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|at| &row[at].1)
}

/// New row, then the columns that appeared and those that vanished.
type AxpyResult<E> = (Vec<(usize, E)>, Vec<usize>, Vec<usize>);

/// `row - factor * pivot`, returning the new row and which columns appeared
/// or vanished.
fn axpy<C: Coefficients>(
    ring: &C,
    row: Vec<(usize, C::E)>,
    factor: &C::E,
    pivot: &[(usize, C::E)],
) -> AxpyResult<C::E> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut added, mut removed) = (Vec::new(), Vec::new());
    let mut a = row.into_iter().peekable();
    let mut b = pivot.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, _)), Some((cb, _))) if ca == cb => {
                let (c, x) = a.next().unwrap();
                let (_, y) = b.next().unwrap();
                let z = ring.sub(&x, &ring.mul(factor, y));
                if ring.is_zero(&z) {
                    removed.push(c);
                } else {
                    out.push((c, z));
                }
            }
            (Some((ca, _)), Some((cb, _))) if ca < cb => out.push(a.next().unwrap()),
            (Some(_), None) => out.push(a.next().unwrap()),
            (_, Some(_)) => {
                let (c, y) = b.next().unwrap();
                let z = ring.sub(&ring.embed(0), &ring.mul(factor, y));
                if !ring.is_zero(&z) {
                    added.push(*c);
                    out.push((*c, z));
                }
            }
            (None, None) => break,
        }
    }
    (out, added, removed)
}

/// Rank over a field given by `ring` (every nonzero entry a unit).
pub(crate) fn field_rank<C: Coefficients>(ring: &C, m: &SparseMatrix) -> usize {
    let e = eliminate(ring, m);
    debug_assert!(e.residual.is_empty(), "field elimination leaves no residual");
    e.pivots
}

/// Nonzero invariant factors of an integer matrix.
pub(crate) fn integer_invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let e = eliminate(&Integers, m);
    let mut factors: Vec<BigInt> = vec![BigInt::one(); e.pivots];
    if !e.residual.is_empty() {
        let mut dense = IntMatrix::zeros(e.residual.len(), e.residual_cols);
        for (i, row) in e.residual.into_iter().enumerate() {
            for (j, x) in row {
                dense[(i, j)] = x;
            }
        }
        factors.extend(super::snf::invariant_factors(&dense));
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(rows: &[Vec<i64>]) -> SparseMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let columns = (0..c)
            .map(|j| (0..r).filter(|&i| rows[i][j] != 0).map(|i| (i, rows[i][j])).collect())
            .collect();
        SparseMatrix::new(r, columns)
    }

    #[test]
    fn field_ranks() {
        let m = sparse(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(field_rank(&Rationals, &m), 2);
        assert_eq!(field_rank(&PrimeField(2), &m), 1);
        assert_eq!(field_rank(&PrimeField(3), &m), 1);
        assert_eq!(field_rank(&PrimeField(5), &m), 2);
    }

    #[test]
    fn integer_factors_mix_units_and_residual() {
        let m = sparse(&[vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 4]]);
        let f: Vec<i64> = integer_invariant_factors(&m).iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(f, vec![1, 2, 4]);
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField(7);
        for x in 1..7 {
            assert_eq!(f.mul(&x, &f.unit_inverse(&x)), 1);
        }
    }
}
