//! Finite abstract simplicial complexes.
//!
//! A [`SimplicialComplex`] stores every simplex explicitly, grouped by
//! dimension. Complexes built through [`SimplicialComplex::new`] or
//! [`SimplicialComplex::from_facets`] are closed downward by construction;
//! [`SimplicialComplex::from_simplices_raw`] keeps the data exactly as given so
//! that [`SimplicialComplex::validate`] can report what is wrong with it.

mod presentation_complex;
mod subdivision;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

pub(crate) use presentation_complex::labeled_presentation_complex;
pub use presentation_complex::{flagify_presentation_complex, GroupPresentationInput};
pub(crate) use subdivision::subdivide;

/// Vertex identifier. Any integer is allowed.
pub type Vertex = i64;

/// A simplex as a strictly increasing list of vertices.
pub type Simplex = Vec<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("empty simplex")]
    EmptySimplex,
    #[error("simplex {0:?} repeats a vertex")]
    RepeatedVertex(Simplex),
    #[error("simplex {simplex:?} uses vertex {vertex} which is not in the vertex set")]
    UnknownVertex { simplex: Simplex, vertex: Vertex },
    #[error("complex is invalid: {0}")]
    Invalid(Violation),
    #[error("simplex {0:?} is not in the complex")]
    SimplexAbsent(Simplex),
    #[error("unsupported dimension {0}: only complexes of dimension at most 2 are supported")]
    UnsupportedDimension(usize),
    #[error("complex is not connected")]
    NotConnected,
    #[error("relator {0} is empty; omit it instead of attaching a disk")]
    EmptyRelator(usize),
    #[error("relator {index} is not freely reduced")]
    UnreducedRelator { index: usize },
    #[error("relator {index} uses generator {generator} but only {count} generators exist")]
    GeneratorOutOfRange { index: usize, generator: usize, count: usize },
    #[error("a presentation needs at least one generator")]
    NoGenerators,
}

/// A single broken invariant found by [`SimplicialComplex::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptySimplex,
    /// Vertex list is not strictly increasing.
    Ordering(Simplex),
    /// A codimension-one face of a stored simplex is not stored.
    MissingFace { simplex: Simplex, face: Simplex },
    UnknownVertex { simplex: Simplex, vertex: Vertex },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptySimplex => write!(f, "empty simplex stored"),
            Violation::Ordering(s) => write!(f, "ordering: simplex {s:?} is not strictly sorted"),
            Violation::MissingFace { simplex, face } => {
                write!(f, "missing face {face:?} of simplex {simplex:?}")
            }
            Violation::UnknownVertex { simplex, vertex } => {
                write!(f, "simplex {simplex:?} uses unknown vertex {vertex}")
            }
        }
    }
}

/// Finite abstract simplicial complex.
///
/// `by_dim[k]` holds the `k`-simplices in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<Vertex>,
    by_dim: Vec<BTreeSet<Simplex>>,
    valid: bool,
}

fn normalize(mut simplex: Simplex) -> Result<Simplex, ComplexError> {
    if simplex.is_empty() {
        return Err(ComplexError::EmptySimplex);
    }
    simplex.sort_unstable();
    if simplex.windows(2).any(|w| w[0] == w[1]) {
        return Err(ComplexError::RepeatedVertex(simplex));
    }
    Ok(simplex)
}

/// Every codimension-one face of `simplex`.
pub(crate) fn boundary_faces(simplex: &[Vertex]) -> impl Iterator<Item = Simplex> + '_ {
    (0..simplex.len()).map(move |skip| {
        simplex
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect()
    })
}

impl SimplicialComplex {
    /// The complex with no vertices.
    pub fn empty() -> Self {
        SimplicialComplex { vertices: BTreeSet::new(), by_dim: Vec::new(), valid: true }
    }

    /// Builds the downward closure of `facets` on the given vertex set.
    ///
    /// Facet vertices must belong to `vertices`; isolated vertices are allowed.
    pub fn new<V, F>(vertices: V, facets: F) -> Result<Self, ComplexError>
    where
        V: IntoIterator<Item = Vertex>,
        F: IntoIterator<Item = Simplex>,
    {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut complex =
            SimplicialComplex { vertices, by_dim: Vec::new(), valid: true };
        for facet in facets {
            let facet = normalize(facet)?;
            if let Some(&v) = facet.iter().find(|v| !complex.vertices.contains(v)) {
                return Err(ComplexError::UnknownVertex { simplex: facet, vertex: v });
            }
            complex.insert_closed(facet);
        }
        for &v in &complex.vertices.clone() {
            complex.insert_unchecked(vec![v]);
        }
        Ok(complex)
    }

    /// Builds the downward closure of `facets`, taking the vertex set from them.
    pub fn from_facets<F>(facets: F) -> Result<Self, ComplexError>
    where
        F: IntoIterator<Item = Simplex>,
    {
        let facets: Vec<Simplex> = facets.into_iter().collect();
        let vertices: Vec<Vertex> = facets.iter().flatten().copied().collect();
        Self::new(vertices, facets)
    }

    /// Stores `simplices` verbatim, without sorting or closing them.
    ///
    /// The result may violate the complex invariants; operations that need a
    /// valid complex reject it.
    pub fn from_simplices_raw<V, S>(vertices: V, simplices: S) -> Self
    where
        V: IntoIterator<Item = Vertex>,
        S: IntoIterator<Item = Simplex>,
    {
        let mut complex = SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            by_dim: Vec::new(),
            valid: true,
        };
        let mut saw_empty = false;
        for s in simplices {
            if s.is_empty() {
                saw_empty = true;
                continue;
            }
            complex.insert_unchecked(s);
        }
        complex.valid = !saw_empty && complex.validate().is_empty();
        complex
    }

    fn insert_unchecked(&mut self, simplex: Simplex) -> bool {
        let k = simplex.len() - 1;
        if self.by_dim.len() <= k {
            self.by_dim.resize_with(k + 1, BTreeSet::new);
        }
        self.by_dim[k].insert(simplex)
    }

    /// Inserts a sorted simplex together with all of its faces.
    fn insert_closed(&mut self, simplex: Simplex) {
        let mut stack = vec![simplex];
        while let Some(s) = stack.pop() {
            for &v in &s {
                self.vertices.insert(v);
            }
            if s.len() > 1 && !self.contains(&s) {
                stack.extend(boundary_faces(&s));
            }
            self.insert_unchecked(s);
        }
    }

    /// Reports every violated invariant; empty iff the complex is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut report = Vec::new();
        for s in self.by_dim.iter().flatten() {
            if s.windows(2).any(|w| w[0] >= w[1]) {
                report.push(Violation::Ordering(s.clone()));
                continue;
            }
            for &v in s {
                if !self.vertices.contains(&v) {
                    report.push(Violation::UnknownVertex { simplex: s.clone(), vertex: v });
                }
            }
            if s.len() > 1 {
                for face in boundary_faces(s) {
                    if !self.contains(&face) {
                        report.push(Violation::MissingFace { simplex: s.clone(), face });
                    }
                }
            }
        }
        for &v in &self.vertices {
            if !self.contains(&[v]) {
                report.push(Violation::MissingFace { simplex: vec![v], face: vec![v] });
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub(crate) fn require_valid(&self) -> Result<(), ComplexError> {
        if self.valid {
            return Ok(());
        }
        let violation = self.validate().into_iter().next().unwrap_or(Violation::EmptySimplex);
        Err(ComplexError::Invalid(violation))
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.by_dim.iter().rposition(|s| !s.is_empty())
    }

    /// The `k`-simplices in lexicographic order.
    pub fn simplices(&self, k: usize) -> impl Iterator<Item = &Simplex> + '_ {
        self.by_dim.get(k).into_iter().flatten()
    }

    pub fn simplex_count(&self, k: usize) -> usize {
        self.by_dim.get(k).map_or(0, BTreeSet::len)
    }

    /// All simplices, by dimension then lexicographically.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.by_dim.iter().flatten()
    }

    pub fn contains(&self, simplex: &[Vertex]) -> bool {
        match simplex.len() {
            0 => false,
            n => self.by_dim.get(n - 1).is_some_and(|set| set.contains(simplex)),
        }
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dimension().map_or(0, |d| d + 1);
        (0..top).map(|k| self.simplex_count(k)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Maximal simplices in canonical (dimension, lexicographic) order.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut facets = Vec::new();
        for k in (0..self.by_dim.len()).rev() {
            for s in &self.by_dim[k] {
                if !covered.contains(s) {
                    facets.push(s.clone());
                }
            }
            if k > 0 {
                for s in &self.by_dim[k] {
                    for face in boundary_faces(s) {
                        if let Some(stored) = self.by_dim[k - 1].get(&face) {
                            covered.insert(stored);
                        }
                    }
                }
            }
        }
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        facets
    }

    /// 1-skeleton adjacency.
    pub fn adjacency(&self) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            self.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for e in self.simplices(1) {
            adj.entry(e[0]).or_default().insert(e[1]);
            adj.entry(e[1]).or_default().insert(e[0]);
        }
        adj
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut component = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        component.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff every clique of the 1-skeleton spans a simplex.
    pub fn is_flag(&self) -> Result<bool, ComplexError> {
        self.require_valid()?;
        let adj = self.adjacency();
        // Inductively: a clique is a simplex plus one vertex adjacent to all
        // of it, so it suffices to test one-vertex extensions of simplices.
        for s in self.all_simplices() {
            let last = *s.last().expect("nonempty simplex");
            let mut common: BTreeSet<Vertex> =
                adj[&s[0]].range(last + 1..).copied().collect();
            for v in &s[1..] {
                common.retain(|w| adj[v].contains(w));
            }
            for w in common {
                let mut extended = s.clone();
                extended.push(w);
                if !self.contains(&extended) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The link `{τ : τ ∩ s = ∅, τ ∪ s ∈ K}`.
    pub fn link(&self, simplex: &[Vertex]) -> Result<SimplicialComplex, ComplexError> {
        self.require_valid()?;
        let simplex = normalize(simplex.to_vec())?;
        if !self.contains(&simplex) {
            return Err(ComplexError::SimplexAbsent(simplex));
        }
        let mut link = SimplicialComplex::empty();
        for coface in self.by_dim.iter().skip(simplex.len()).flatten() {
            if simplex.iter().all(|v| coface.binary_search(v).is_ok()) {
                let rest: Simplex =
                    coface.iter().copied().filter(|v| simplex.binary_search(v).is_err()).collect();
                for &v in &rest {
                    link.vertices.insert(v);
                }
                link.insert_unchecked(rest);
            }
        }
        Ok(link)
    }

    /// Subcomplex of all simplices containing `v`, together with their faces.
    pub fn closed_star(&self, v: Vertex) -> SimplicialComplex {
        let mut star = SimplicialComplex::empty();
        for s in self.all_simplices() {
            if s.binary_search(&v).is_ok() {
                star.insert_closed(s.clone());
            }
        }
        star
    }

    /// Barycentric subdivision. Vertex `i` of the result is the barycenter of
    /// the `i`-th simplex of `self` in canonical order.
    pub fn barycentric_subdivision(&self) -> Result<SimplicialComplex, ComplexError> {
        self.require_valid()?;
        Ok(subdivision::subdivide(self).0)
    }

    /// True iff every vertex link is connected and nonempty and every edge
    /// lies in a triangle. Supported for dimension at most 2.
    pub fn has_no_local_cut_points(&self) -> Result<bool, ComplexError> {
        self.require_valid()?;
        if let Some(d) = self.dimension() {
            if d > 2 {
                return Err(ComplexError::UnsupportedDimension(d));
            }
        }
        if !self.is_connected() {
            return Err(ComplexError::NotConnected);
        }
        for &v in &self.vertices {
            let link = self.link(&[v])?;
            if link.vertex_count() == 0 || !link.is_connected() {
                return Ok(false);
            }
        }
        let mut in_triangle: BTreeSet<Simplex> = BTreeSet::new();
        for t in self.simplices(2) {
            in_triangle.extend(boundary_faces(t));
        }
        Ok(self.simplices(1).all(|e| in_triangle.contains(e)))
    }

    /// Relabels vertices through `map`, which must be injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> SimplicialComplex {
        let mut out = SimplicialComplex::empty();
        out.vertices = self.vertices.iter().map(|&v| map(v)).collect();
        for s in self.all_simplices() {
            let mut image: Simplex = s.iter().map(|&v| map(v)).collect();
            image.sort_unstable();
            out.insert_unchecked(image);
        }
        out.valid = self.valid;
        out
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile { vertices: self.vertices.iter().copied().collect(), facets: self.facets() }
    }
}

/// JSON complex format: vertices plus facets. The loader closes facets downward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Simplex>,
}

impl ComplexFile {
    pub fn into_complex(self) -> Result<SimplicialComplex, ComplexError> {
        SimplicialComplex::new(self.vertices, self.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        ComplexFile::deserialize(deserializer)?.into_complex().map_err(serde::de::Error::custom)
    }
}

/// Frequently used small complexes.
pub mod standard {
    use super::{Simplex, SimplicialComplex, Vertex};

    /// Full simplex on the vertices `0..=dim`.
    pub fn simplex(dim: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets([(0..=dim as Vertex).collect::<Simplex>()])
            .expect("simplex is valid")
    }

    /// Cycle graph on `n >= 3` vertices `0..n`.
    pub fn cycle(n: usize) -> SimplicialComplex {
        assert!(n >= 3, "a simplicial cycle needs at least 3 vertices");
        let n = n as Vertex;
        SimplicialComplex::from_facets((0..n).map(|i| vec![i, (i + 1) % n]))
            .expect("cycle is valid")
    }

    /// Boundary of the octahedron: the three-fold join of 0-spheres
    /// `{0,1} * {2,3} * {4,5}`.
    pub fn octahedron() -> SimplicialComplex {
        let mut facets = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        SimplicialComplex::from_facets(facets).expect("octahedron is valid")
    }

    /// The six-vertex triangulation of the real projective plane.
    pub fn rp2_six_vertex() -> SimplicialComplex {
        let facets = [
            [1, 2, 4],
            [1, 2, 6],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
            [2, 5, 6],
            [3, 4, 6],
            [4, 5, 6],
        ];
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).expect("RP2 is valid")
    }

    /// Flag triangulation of the projective plane: the six-vertex one
    /// subdivided once.
    pub fn rp2_subdivided() -> SimplicialComplex {
        rp2_six_vertex().barycentric_subdivision().expect("valid input")
    }
}
