//! The spherical double `S(L)` and its retraction onto `L`.
//!
//! Vertex `(i, +)` is encoded as `2i` and `(i, −)` as `2i + 1`, so the
//! retraction is `v ↦ v.div_euclid(2)` and `(i, +)` sorts before `(i, −)`.

use crate::complex::{ComplexError, Simplex, SimplicialComplex, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

pub fn encode(base: Vertex, sign: Sign) -> Vertex {
    2 * base + if sign == Sign::Minus { 1 } else { 0 }
}

pub fn decode(v: Vertex) -> (Vertex, Sign) {
    let sign = if v.rem_euclid(2) == 0 { Sign::Plus } else { Sign::Minus };
    (v.div_euclid(2), sign)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DoubleError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("path vertex {0} is not a vertex of the double")]
    UnknownVertex(Vertex),
    #[error("path step {0} -> {1} is not an edge of the double")]
    NotAnEdge(Vertex, Vertex),
}

/// `S(L)` together with its base `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledComplex {
    base: SimplicialComplex,
    complex: SimplicialComplex,
}

impl DoubledComplex {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn retract(&self, v: Vertex) -> Vertex {
        decode(v).0
    }

    /// Image of an edge path of `S(L)` under the retraction.
    pub fn retract_path(&self, path: &[Vertex]) -> Result<Vec<Vertex>, DoubleError> {
        for &v in path {
            if !self.complex.vertices().contains(&v) {
                return Err(DoubleError::UnknownVertex(v));
            }
        }
        for w in path.windows(2) {
            let edge = if w[0] < w[1] { [w[0], w[1]] } else { [w[1], w[0]] };
            if !self.complex.contains(&edge) {
                return Err(DoubleError::NotAnEdge(w[0], w[1]));
            }
        }
        Ok(path.iter().map(|&v| self.retract(v)).collect())
    }
}

/// Replaces each simplex `{i_0..i_m}` of `L` by the join
/// `{i_0⁺, i_0⁻} * … * {i_m⁺, i_m⁻}`.
pub fn spherical_double(base: &SimplicialComplex) -> Result<DoubledComplex, DoubleError> {
    base.require_valid()?;
    let mut facets: Vec<Simplex> = Vec::new();
    for facet in base.facets() {
        let m = facet.len();
        for mask in 0u64..(1 << m) {
            let lifted: Simplex = facet
                .iter()
                .enumerate()
                .map(|(bit, &v)| {
                    let sign = if mask >> bit & 1 == 1 { Sign::Minus } else { Sign::Plus };
                    encode(v, sign)
                })
                .collect();
            facets.push(lifted);
        }
    }
    let vertices = base
        .vertices()
        .iter()
        .flat_map(|&v| [encode(v, Sign::Plus), encode(v, Sign::Minus)]);
    let complex = SimplicialComplex::new(vertices, facets)?;
    Ok(DoubledComplex { base: base.clone(), complex })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::standard;

    #[test]
    fn point_doubles_to_zero_sphere() {
        let point = SimplicialComplex::from_facets([vec![3]]).unwrap();
        let d = spherical_double(&point).unwrap();
        assert_eq!(d.complex().f_vector(), vec![2]);
        assert_eq!(d.complex().vertices().iter().copied().collect::<Vec<_>>(), vec![6, 7]);
    }

    #[test]
    fn edge_doubles_to_square() {
        let d = spherical_double(&standard::simplex(1)).unwrap();
        assert_eq!(d.complex().f_vector(), vec![4, 4]);
        for v in d.complex().vertices() {
            assert_eq!(d.complex().link(&[*v]).unwrap().vertex_count(), 2);
        }
        // (0,+) and (0,-) are never adjacent.
        assert!(!d.complex().contains(&[0, 1]));
    }

    #[test]
    fn triangle_doubles_to_octahedron() {
        let d = spherical_double(&standard::simplex(2)).unwrap();
        assert_eq!(d.complex().f_vector(), vec![6, 12, 8]);
        assert!(d.complex().has_no_local_cut_points().unwrap());
    }

    #[test]
    fn retraction_of_paths() {
        let base = SimplicialComplex::from_facets([vec![1, 2]]).unwrap();
        let d = spherical_double(&base).unwrap();
        let path = [encode(1, Sign::Plus), encode(2, Sign::Minus), encode(1, Sign::Minus)];
        assert_eq!(d.retract_path(&path).unwrap(), vec![1, 2, 1]);
        assert_eq!(d.retract_path(&[]).unwrap(), Vec::<Vertex>::new());
        let square = [2, 5, 3, 4, 2];
        assert_eq!(d.retract_path(&square).unwrap(), vec![1, 2, 1, 2, 1]);
        assert_eq!(d.retract_path(&[2, 3]), Err(DoubleError::NotAnEdge(2, 3)));
        assert_eq!(d.retract_path(&[2, 99]), Err(DoubleError::UnknownVertex(99)));
    }

    #[test]
    fn encoding_handles_negative_ids() {
        for v in [-3, 0, 5] {
            assert_eq!(decode(encode(v, Sign::Plus)), (v, Sign::Plus));
            assert_eq!(decode(encode(v, Sign::Minus)), (v, Sign::Minus));
        }
    }
}
