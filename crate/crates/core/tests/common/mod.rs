//! Independent reference computations used to check library results.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use fpforge_core::complex::{SimplicialComplex, Vertex};
use fpforge_core::covers::CoverComplex;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Every clique of the 1-skeleton spans a simplex, by brute force over
/// vertex subsets.
pub fn flag_by_cliques(k: &SimplicialComplex) -> bool {
    let vs: Vec<Vertex> = k.vertices().iter().copied().collect();
    assert!(vs.len() <= 16, "brute force only");
    let edge = |a: Vertex, b: Vertex| k.contains(&[a.min(b), a.max(b)]);
    (1u32..1 << vs.len()).all(|mask| {
        let s: Vec<Vertex> = (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        let clique = s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| edge(a, b)));
        !clique || k.contains(&s)
    })
}

/// Rank modulo `p` of a matrix given by sparse columns `(row, entry)`,
/// by left-to-right column reduction against a pivot table.
pub fn rank_mod_p(columns: &[Vec<(usize, i64)>], p: i64) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, i64>> = BTreeMap::new();
    for column in columns {
        let mut col: BTreeMap<usize, i64> = BTreeMap::new();
        for &(r, x) in column {
            let v = (col.get(&r).copied().unwrap_or(0) + x).rem_euclid(p);
            if v == 0 {
                col.remove(&r);
            } else {
                col.insert(r, v);
            }
        }
        while let Some((&low, &lead)) = col.iter().next_back() {
            let Some(pivot) = pivots.get(&low) else { break };
            let f = lead * pow_mod(pivot[&low], p - 2, p) % p;
            for (&r, &x) in pivot {
                let v = (col.get(&r).copied().unwrap_or(0) - f * x).rem_euclid(p);
                if v == 0 {
                    col.remove(&r);
                } else {
                    col.insert(r, v);
                }
            }
        }
        if let Some((&low, _)) = col.iter().next_back() {
            pivots.insert(low, col);
        }
    }
    pivots.len()
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Determinant and rank by fraction-free elimination.
pub fn bareiss(rows: &[Vec<BigInt>]) -> (BigInt, usize) {
    let mut m = rows.to_vec();
    let n = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(pivot) = (rank..n).find(|&r| !m[r][c].is_zero()) else { continue };
        if pivot != rank {
            m.swap(pivot, rank);
            sign = -sign;
        }
        for r in rank + 1..n {
            for j in c + 1..cols {
                m[r][j] = (&m[rank][c] * &m[r][j] - &m[r][c] * &m[rank][j]) / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    let det = if rank == n && n == cols { sign * prev } else { BigInt::zero() };
    (det, rank)
}

/// Signed boundary matrix `C_k → C_{k-1}` as sparse columns, with the
/// number of `(k-1)`-simplices.
pub fn boundary_columns(k: &SimplicialComplex, dim: usize) -> (usize, Vec<Vec<(usize, i64)>>) {
    let lower: Vec<&Vec<Vertex>> = k.simplices(dim - 1).collect();
    let index: BTreeMap<&Vec<Vertex>, usize> = lower.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let columns = k
        .simplices(dim)
        .map(|s| {
            (0..s.len())
                .map(|i| {
                    let mut face = s.clone();
                    face.remove(i);
                    (index[&face], if i % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect();
    (lower.len(), columns)
}

/// Dense boundary matrix, rows indexed by `(dim - 1)`-simplices.
pub fn boundary_rows(k: &SimplicialComplex, dim: usize) -> Vec<Vec<i64>> {
    let (rows, columns) = boundary_columns(k, dim);
    let mut dense = vec![vec![0i64; columns.len()]; rows];
    for (j, col) in columns.iter().enumerate() {
        for &(i, x) in col {
            dense[i][j] = x;
        }
    }
    dense
}

/// Reduced Betti numbers over `F_p` in degrees `0..=dim`.
pub fn reduced_betti_mod_p(k: &SimplicialComplex, p: i64) -> Vec<usize> {
    let top = k.dimension().unwrap_or(0);
    let mut ranks = vec![0usize; top + 2];
    ranks[0] = 1;
    for (d, rank) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        *rank = rank_mod_p(&boundary_columns(k, d).1, p);
    }
    (0..=top).map(|d| k.simplex_count(d) - ranks[d] - ranks[d + 1]).collect()
}

/// Reduced Betti numbers over ℚ via exact integer rank.
pub fn reduced_betti_rational(k: &SimplicialComplex) -> Vec<usize> {
    let top = k.dimension().unwrap_or(0);
    let mut ranks = vec![0usize; top + 2];
    ranks[0] = 1;
    for (d, rank) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        let rows: Vec<Vec<BigInt>> =
            boundary_rows(k, d).into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        *rank = bareiss(&rows).1;
    }
    (0..=top).map(|d| k.simplex_count(d) - ranks[d] - ranks[d + 1]).collect()
}

/// Checks a cover is a covering map without the library's checker: simplices
/// map to simplices of the same dimension, every base simplex has exactly
/// `degree` preimages, and each vertex star maps injectively.
pub fn covering_by_definition(cover: &CoverComplex) -> bool {
    let total = cover.total();
    let base = cover.base();
    let d = cover.degree();
    let pi = |x: Vertex| cover.projection(x);
    let mut preimages: BTreeMap<Vec<Vertex>, usize> = BTreeMap::new();
    for s in total.all_simplices() {
        let mut image: Vec<Vertex> = s.iter().map(|&x| pi(x)).collect();
        image.sort();
        image.dedup();
        if image.len() != s.len() || !base.contains(&image) {
            return false;
        }
        *preimages.entry(image).or_default() += 1;
    }
    if base.all_simplices().any(|s| preimages.get(s).copied().unwrap_or(0) != d) {
        return false;
    }
    total.adjacency().values().all(|n| {
        let images: BTreeSet<Vertex> = n.iter().map(|&y| pi(y)).collect();
        images.len() == n.len()
    })
}

/// Walks a base loop in the total space edge by edge from `(start, sheet)`
/// and reports whether it returns to its starting vertex.
pub fn lift_closes_by_walking(cover: &CoverComplex, base_loop: &[Vertex], sheet: usize, adjacency: &BTreeMap<Vertex, BTreeSet<Vertex>>) -> bool {
    let start = cover.total_vertex(base_loop[0], sheet);
    let mut x = start;
    for &next in &base_loop[1..] {
        let lifts: Vec<Vertex> = adjacency[&x].iter().copied().filter(|&y| cover.projection(y) == next).collect();
        assert_eq!(lifts.len(), 1, "unique lift of each edge");
        x = lifts[0];
    }
    x == start
}
