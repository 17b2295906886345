use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ComplexError, Simplex, SimplicialComplex, Vertex};
use crate::groups::{Letter, Word};

/// Generators and relators of a group to be realized by a flag complex.
///
/// Relators are kept exactly as given; [`Self::check`] rejects unreduced or
/// out-of-range words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentationInput {
    pub generator_count: usize,
    /// Signed one-based generator indices.
    pub relators: Vec<Vec<i32>>,
}

impl GroupPresentationInput {
    pub fn new(generator_count: usize, relators: Vec<Vec<i32>>) -> Self {
        GroupPresentationInput { generator_count, relators }
    }

    pub fn check(&self) -> Result<(), ComplexError> {
        if self.generator_count == 0 {
            return Err(ComplexError::NoGenerators);
        }
        for (index, rel) in self.relators.iter().enumerate() {
            if rel.is_empty() {
                return Err(ComplexError::EmptyRelator(index));
            }
            for &s in rel {
                let generator = s.unsigned_abs() as usize;
                if s == 0 || generator > self.generator_count {
                    return Err(ComplexError::GeneratorOutOfRange {
                        index,
                        generator,
                        count: self.generator_count,
                    });
                }
            }
            if rel.windows(2).any(|w| w[0] == -w[1]) {
                return Err(ComplexError::UnreducedRelator { index });
            }
        }
        Ok(())
    }

    fn letters(&self, index: usize) -> impl Iterator<Item = Letter> + '_ {
        self.relators[index].iter().map(|&s| Letter::from_signed(s).expect("checked"))
    }
}

/// Directed edge labels `u -> v` (with `u < v`) by free-group words.
pub(crate) type WordLabels = BTreeMap<(Vertex, Vertex), Word>;

/// Presentation 2-complex made simplicial, before any subdivision.
///
/// One base vertex `0`; generator `g` is the triangle-free loop
/// `0 -> 2g+1 -> 2g+2 -> 0`. Each relator disk is a cone on a fresh ring of
/// vertices joined to the boundary walk by a triangulated collar, so repeated
/// letters never identify disk triangles.
pub(crate) fn presentation_complex(
    input: &GroupPresentationInput,
) -> Result<SimplicialComplex, ComplexError> {
    Ok(labeled_presentation_complex(input)?.0)
}

/// The presentation complex with a flat labelling of its edges: the edge
/// `0 -> 2g+1` carries generator `g`, and every triangle reads a product of
/// conjugates of relators.
pub(crate) fn labeled_presentation_complex(
    input: &GroupPresentationInput,
) -> Result<(SimplicialComplex, WordLabels), ComplexError> {
    input.check()?;
    let n = input.generator_count as Vertex;
    let mut facets: Vec<Simplex> = Vec::new();
    let mut labels = WordLabels::new();
    let mut label = |u: Vertex, v: Vertex, w: Word| {
        let (key, w) = if u < v { ((u, v), w) } else { ((v, u), w.inverse()) };
        let previous = labels.insert(key, w.clone());
        debug_assert!(previous.is_none_or(|p| p == w), "inconsistent edge label");
    };
    for g in 0..n {
        let (a, b) = (2 * g + 1, 2 * g + 2);
        facets.extend([vec![0, a], vec![a, b], vec![0, b]]);
        label(0, a, Word::new([Letter::gen(g as usize)]));
        label(a, b, Word::identity());
        label(b, 0, Word::identity());
    }
    let mut next: Vertex = 2 * n + 1;
    for index in 0..input.relators.len() {
        let mut walk: Vec<Vertex> = vec![0];
        let mut steps: Vec<Word> = Vec::new();
        for letter in input.letters(index) {
            let g = letter.generator() as Vertex;
            let (a, b) = (2 * g + 1, 2 * g + 2);
            let id = Word::identity();
            if letter.is_inverse() {
                walk.extend([b, a, 0]);
                steps.extend([id.clone(), id, Word::new([letter])]);
            } else {
                walk.extend([a, b, 0]);
                steps.extend([Word::new([letter]), id.clone(), id]);
            }
        }
        let len = walk.len() - 1;
        let ring: Vec<Vertex> = (0..len as Vertex).map(|i| next + i).collect();
        let apex = next + len as Vertex;
        next = apex + 1;
        let mut prefix = Word::identity();
        for i in 0..len {
            let j = (i + 1) % len;
            facets.push(vec![apex, ring[i], ring[j]]);
            facets.push(vec![ring[i], ring[j], walk[i + 1]]);
            facets.push(vec![ring[i], walk[i], walk[i + 1]]);
            label(apex, ring[i], prefix.clone());
            label(ring[i], walk[i], Word::identity());
            label(ring[i], walk[i + 1], steps[i].clone());
            if j != 0 {
                label(ring[i], ring[j], steps[i].clone());
            }
            prefix = prefix.concat(&steps[i]);
        }
        // Closing the ring: the full relator is trivial in the group but not
        // in the free group, so the last ring edge reads the last step
        // followed by the inverse relator.
        label(ring[len - 1], ring[0], steps[len - 1].concat(&prefix.inverse()));
    }
    Ok((SimplicialComplex::from_facets(facets)?, labels))
}

/// A finite flag complex whose fundamental group is the presented group:
/// the simplicial presentation complex subdivided twice.
pub fn flagify_presentation_complex(
    input: &GroupPresentationInput,
) -> Result<SimplicialComplex, ComplexError> {
    presentation_complex(input)?.barycentric_subdivision()?.barycentric_subdivision()
}
