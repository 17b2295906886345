use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{build_cover, edge_key, CoverComplex, CoverError, Edge, Permutation, VoltageAssignment};
use crate::complex::{
    labeled_presentation_complex, subdivide, GroupPresentationInput, SimplicialComplex, Vertex,
};
use crate::groups::Word;
use crate::homology::is_prime;

/// Flat edge labels: the key `(u, v)` with `u < v` holds the label of `u → v`.
pub type EdgeLabels = BTreeMap<Edge, Permutation>;

/// Mod-`p` 1-cocycle: value on `u → v` for `u < v`, zero when absent.
pub type Cocycle = BTreeMap<Edge, u64>;

fn label_of(labels: &EdgeLabels, degree: usize, u: Vertex, v: Vertex) -> Permutation {
    match labels.get(&edge_key(u, v)) {
        None => Permutation::identity(degree),
        Some(p) if u < v => p.clone(),
        Some(p) => p.inverse(),
    }
}

/// Conjugates flat labels so they are trivial on a breadth-first spanning tree.
pub(super) fn gauge(
    base: SimplicialComplex,
    degree: usize,
    labels: &EdgeLabels,
) -> Result<VoltageAssignment, CoverError> {
    base.require_valid()?;
    if degree == 0 {
        return Err(CoverError::ZeroDegree);
    }
    if !base.is_connected() {
        return Err(CoverError::BaseDisconnected);
    }
    for (&(u, v), p) in labels {
        if !base.contains(&[u, v]) {
            return Err(CoverError::NotAnEdge(u, v));
        }
        if p.degree() != degree {
            return Err(CoverError::DegreeMismatch { edge: (u, v), expected: degree, found: p.degree() });
        }
    }
    for t in base.simplices(2) {
        let around = label_of(labels, degree, t[0], t[1])
            .then(&label_of(labels, degree, t[1], t[2]))
            .then(&label_of(labels, degree, t[2], t[0]));
        if !around.is_identity() {
            return Err(CoverError::TriangleCondition(t.clone()));
        }
    }
    let adjacency = base.adjacency();
    let root = *base.vertices().iter().next().expect("connected base is nonempty");
    let mut potential = BTreeMap::from([(root, Permutation::identity(degree))]);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[&u] {
            if !potential.contains_key(&w) {
                let p = potential[&u].then(&label_of(labels, degree, u, w));
                potential.insert(w, p);
                queue.push_back(w);
            }
        }
    }
    let voltages: Vec<_> = base
        .simplices(1)
        .map(|e| {
            let (u, v) = (e[0], e[1]);
            let p = potential[&u]
                .then(&label_of(labels, degree, u, v))
                .then(&potential[&v].inverse());
            ((u, v), p)
        })
        .collect();
    VoltageAssignment::new(base, degree, voltages)
}

/// Carries flat labels to the barycentric subdivision: the edge between the
/// barycenters of `σ ⊂ τ` reads the label of `min σ → min τ`.
pub fn subdivide_labels(
    complex: &SimplicialComplex,
    degree: usize,
    labels: &EdgeLabels,
) -> Result<(SimplicialComplex, EdgeLabels), CoverError> {
    complex.require_valid()?;
    let (sd, barycenters) = subdivide(complex);
    let mut out = EdgeLabels::new();
    for e in sd.simplices(1) {
        let (u, v) = (barycenters[e[0] as usize][0], barycenters[e[1] as usize][0]);
        if u != v {
            let p = label_of(labels, degree, u, v);
            if !p.is_identity() {
                out.insert((e[0], e[1]), p);
            }
        }
    }
    Ok((sd, out))
}

fn evaluate(word: &Word, images: &[Permutation], degree: usize) -> Permutation {
    word.letters().iter().fold(Permutation::identity(degree), |acc, l| {
        let g = &images[l.generator()];
        if l.is_inverse() {
            acc.then(&g.inverse())
        } else {
            acc.then(g)
        }
    })
}

/// Cover of the flag complex built from `input` whose monodromy sends
/// generator `g` to `images[g]`. Every relator must map to the identity.
pub fn presentation_cover(
    input: &GroupPresentationInput,
    images: &[Permutation],
) -> Result<CoverComplex, CoverError> {
    input.check()?;
    if images.len() != input.generator_count {
        return Err(CoverError::ImageCount { expected: input.generator_count, found: images.len() });
    }
    let degree = images.first().map_or(1, Permutation::degree);
    if degree == 0 {
        return Err(CoverError::ZeroDegree);
    }
    for (g, p) in images.iter().enumerate() {
        if p.degree() != degree {
            let a = 2 * g as Vertex + 1;
            return Err(CoverError::DegreeMismatch { edge: (0, a), expected: degree, found: p.degree() });
        }
    }
    for (index, rel) in input.relators.iter().enumerate() {
        if !evaluate(&Word::from_signed(rel), images, degree).is_identity() {
            return Err(CoverError::RelatorNotRespected(index));
        }
    }
    let (complex, words) = labeled_presentation_complex(input)?;
    let labels: EdgeLabels = words
        .iter()
        .map(|(&e, w)| (e, evaluate(w, images, degree)))
        .filter(|(_, p)| !p.is_identity())
        .collect();
    let (once, labels) = subdivide_labels(&complex, degree, &labels)?;
    let (twice, labels) = subdivide_labels(&once, degree, &labels)?;
    build_cover(&gauge(twice, degree, &labels)?)
}

/// Basis of `H¹(K; 𝔽_p)` as cocycles vanishing on a breadth-first spanning
/// tree rooted at the smallest vertex.
pub fn first_cohomology_mod_p(
    complex: &SimplicialComplex,
    p: u64,
) -> Result<Vec<Cocycle>, CoverError> {
    complex.require_valid()?;
    if !is_prime(p) {
        return Err(CoverError::NotPrime(p));
    }
    if !complex.is_connected() {
        return Err(CoverError::BaseDisconnected);
    }
    let adjacency = complex.adjacency();
    let root = *complex.vertices().iter().next().expect("connected complex is nonempty");
    let mut seen = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    let mut tree = BTreeSet::new();
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[&u] {
            if seen.insert(w) {
                tree.insert(edge_key(u, w));
                queue.push_back(w);
            }
        }
    }
    let unknowns: Vec<Edge> = complex
        .simplices(1)
        .map(|e| (e[0], e[1]))
        .filter(|e| !tree.contains(e))
        .collect();
    let column: BTreeMap<Edge, usize> = unknowns.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let n = unknowns.len();
    // δc[a,b,c] = c(a,b) + c(b,c) - c(a,c).
    let mut rows: Vec<Vec<u64>> = complex
        .simplices(2)
        .map(|t| {
            let mut row = vec![0u64; n];
            for (e, coeff) in [((t[0], t[1]), 1), ((t[1], t[2]), 1), ((t[0], t[2]), p - 1)] {
                if let Some(&j) = column.get(&e) {
                    row[j] = (row[j] + coeff) % p;
                }
            }
            row
        })
        .collect();
    let pivots = reduce_mod_p(&mut rows, n, p);
    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut values = vec![0u64; n];
        values[free] = 1;
        for &(r, c) in &pivots {
            values[c] = (p - rows[r][free]) % p;
        }
        basis.push(
            unknowns
                .iter()
                .zip(values)
                .filter(|&(_, x)| x != 0)
                .map(|(&e, x)| (e, x))
                .collect(),
        );
    }
    Ok(basis)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Reduced row echelon form in place; returns `(row, pivot column)` pairs.
fn reduce_mod_p(rows: &mut [Vec<u64>], n: usize, p: u64) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, found);
        let inv = pow_mod(rows[r][c], p - 2, p);
        for x in rows[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    let sub = (f as u128 * y as u128 % p as u128) as u64;
                    *x = (*x + p - sub) % p;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

/// The `p`-fold cyclic cover classified by a mod-`p` cocycle.
pub fn cyclic_cover(
    complex: &SimplicialComplex,
    p: u64,
    cocycle: &Cocycle,
) -> Result<CoverComplex, CoverError> {
    let degree = p as usize;
    let labels: EdgeLabels = cocycle
        .iter()
        .filter(|&(_, &x)| x % p != 0)
        .map(|(&e, &x)| (e, Permutation::rotation(degree, x as i64)))
        .collect();
    build_cover(&gauge(complex.clone(), degree, &labels)?)
}
