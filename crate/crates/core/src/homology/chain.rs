use std::collections::HashMap;

use super::SparseMatrix;
use crate::complex::{Simplex, SimplicialComplex};

/// Simplicial chain complex with ordered bases and integer boundary maps.
///
/// `boundaries[k]` is `∂_k : C_k → C_{k-1}` for `k >= 1`, with rows indexed
/// by `bases[k-1]` and columns by `bases[k]`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    bases: Vec<Vec<Simplex>>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn bases(&self) -> &[Vec<Simplex>] {
        &self.bases
    }

    pub fn rank(&self, k: usize) -> usize {
        self.bases.get(k).map_or(0, Vec::len)
    }

    /// `∂_k` for `k >= 1`; `None` past the top dimension.
    pub fn boundary(&self, k: usize) -> Option<&SparseMatrix> {
        if k == 0 {
            return None;
        }
        self.boundaries.get(k - 1)
    }

    pub fn top_dimension(&self) -> Option<usize> {
        self.bases.len().checked_sub(1)
    }

    /// True iff `∂_k ∘ ∂_{k+1} = 0` for every `k`.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }
}

/// Builds the chain complex of `complex` with orientations from sorted vertex
/// order: `∂[v_0..v_k] = Σ (-1)^i [.. v_i omitted ..]`.
pub fn chain_complex(complex: &SimplicialComplex) -> ChainComplex {
    let top = complex.dimension().map_or(0, |d| d + 1);
    let bases: Vec<Vec<Simplex>> =
        (0..top).map(|k| complex.simplices(k).cloned().collect()).collect();
    let mut boundaries = Vec::new();
    for k in 1..top {
        let index: HashMap<&Simplex, usize> =
            bases[k - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let columns = bases[k]
            .iter()
            .map(|s| {
                let mut col: Vec<(usize, i64)> = (0..s.len())
                    .map(|omit| {
                        let face: Simplex = s
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != omit)
                            .map(|(_, &v)| v)
                            .collect();
                        let sign = if omit % 2 == 0 { 1 } else { -1 };
                        (index[&face], sign)
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        boundaries.push(SparseMatrix::new(bases[k - 1].len(), columns));
    }
    let chain = ChainComplex { bases, boundaries };
    assert!(chain.boundary_squares_to_zero(), "boundary of a boundary must vanish");
    chain
}
