//! Finite covers from permutation voltages.
//!
//! A [`VoltageAssignment`] labels each directed edge of a connected base with
//! a permutation of the sheets `0..d`, identity on a spanning tree, such that
//! every triangle has trivial holonomy. The edge `u → v` lifts from sheet `s`
//! to sheet `voltage(u, v)(s)`.

mod file;
mod labels;
mod perm;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub use file::{BaseRef, CoverFile, VoltageEntry};
pub use labels::{
    cyclic_cover, first_cohomology_mod_p, presentation_cover, subdivide_labels, Cocycle,
    EdgeLabels,
};
pub use perm::{generated_group, Permutation};

use crate::complex::{ComplexError, Simplex, SimplicialComplex, Vertex};
use crate::double::{self, spherical_double, DoubleError, DoubledComplex};

/// Undirected edge key, smaller vertex first.
pub type Edge = (Vertex, Vertex);

/// Closed edge path given by its vertices; first equals last.
pub type BaseLoop = Vec<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error("base complex is not connected")]
    BaseDisconnected,
    #[error("cover degree must be positive")]
    ZeroDegree,
    #[error("{0} -> {1} is not an edge of the base")]
    NotAnEdge(Vertex, Vertex),
    #[error("voltage on {edge:?} has degree {found}, expected {expected}")]
    DegreeMismatch { edge: Edge, expected: usize, found: usize },
    #[error("triangle condition fails on {0:?}")]
    TriangleCondition(Simplex),
    #[error("identity-voltage edges do not contain a spanning tree; gauge the labels first")]
    NotTreeGauged,
    #[error("total space of the cover is not connected")]
    CoverDisconnected,
    #[error("path is not closed")]
    PathNotClosed,
    #[error("sheet {sheet} out of range for degree {degree}")]
    SheetOutOfRange { sheet: usize, degree: usize },
    #[error("cover is over a different base complex")]
    BaseMismatch,
    #[error("relator {0} does not map to the identity")]
    RelatorNotRespected(usize),
    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cover file: {0}")]
    File(String),
}

/// Permutation voltages on a connected base, identity on a spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoltageAssignment {
    base: SimplicialComplex,
    degree: usize,
    spanning_tree: BTreeSet<Edge>,
    /// Non-identity voltages on `(u, v)` with `u < v`.
    voltages: BTreeMap<Edge, Permutation>,
}

fn edge_key(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl VoltageAssignment {
    /// Validates directed voltages; unlisted edges carry the identity.
    pub fn new(
        base: SimplicialComplex,
        degree: usize,
        voltages: impl IntoIterator<Item = ((Vertex, Vertex), Permutation)>,
    ) -> Result<Self, CoverError> {
        base.require_valid()?;
        if degree == 0 {
            return Err(CoverError::ZeroDegree);
        }
        if !base.is_connected() {
            return Err(CoverError::BaseDisconnected);
        }
        let mut stored = BTreeMap::new();
        for ((u, v), perm) in voltages {
            let key = edge_key(u, v);
            if !base.contains(&[key.0, key.1]) {
                return Err(CoverError::NotAnEdge(u, v));
            }
            if perm.degree() != degree {
                return Err(CoverError::DegreeMismatch {
                    edge: key,
                    expected: degree,
                    found: perm.degree(),
                });
            }
            let perm = if u < v { perm } else { perm.inverse() };
            if !perm.is_identity() {
                stored.insert(key, perm);
            }
        }
        let mut assignment =
            VoltageAssignment { base, degree, spanning_tree: BTreeSet::new(), voltages: stored };
        assignment.check_triangles()?;
        assignment.spanning_tree = assignment.identity_spanning_tree()?;
        Ok(assignment)
    }

    /// All voltages trivial: `degree` disjoint copies of the base.
    pub fn identity(base: SimplicialComplex, degree: usize) -> Result<Self, CoverError> {
        Self::new(base, degree, [])
    }

    /// Accepts arbitrary flat edge labels and conjugates them to be trivial on
    /// a breadth-first spanning tree.
    pub fn from_edge_labels(
        base: SimplicialComplex,
        degree: usize,
        labels: &EdgeLabels,
    ) -> Result<Self, CoverError> {
        labels::gauge(base, degree, labels)
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn spanning_tree(&self) -> &BTreeSet<Edge> {
        &self.spanning_tree
    }

    /// Non-identity voltages keyed by `(u, v)` with `u < v`.
    pub fn nontrivial_voltages(&self) -> &BTreeMap<Edge, Permutation> {
        &self.voltages
    }

    /// Voltage on the directed edge `u → v`, or `None` if it is not an edge.
    pub fn voltage(&self, u: Vertex, v: Vertex) -> Option<Permutation> {
        let key = edge_key(u, v);
        if !self.base.contains(&[key.0, key.1]) {
            return None;
        }
        let perm = self
            .voltages
            .get(&key)
            .cloned()
            .unwrap_or_else(|| Permutation::identity(self.degree));
        Some(if u < v { perm } else { perm.inverse() })
    }

    fn check_triangles(&self) -> Result<(), CoverError> {
        for t in self.base.simplices(2) {
            let (a, b, c) = (t[0], t[1], t[2]);
            let around = self.voltage(a, b).expect("edge of triangle");
            let around = around.then(&self.voltage(b, c).expect("edge of triangle"));
            let around = around.then(&self.voltage(c, a).expect("edge of triangle"));
            if !around.is_identity() {
                return Err(CoverError::TriangleCondition(t.clone()));
            }
        }
        Ok(())
    }

    fn identity_spanning_tree(&self) -> Result<BTreeSet<Edge>, CoverError> {
        let adjacency = self.base.adjacency();
        let root = *self.base.vertices().iter().next().expect("connected base is nonempty");
        let mut seen = BTreeSet::from([root]);
        let mut queue = VecDeque::from([root]);
        let mut tree = BTreeSet::new();
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[&u] {
                if !self.voltages.contains_key(&edge_key(u, w)) && seen.insert(w) {
                    tree.insert(edge_key(u, w));
                    queue.push_back(w);
                }
            }
        }
        if seen.len() == self.base.vertex_count() {
            Ok(tree)
        } else {
            Err(CoverError::NotTreeGauged)
        }
    }

    /// Permutation obtained by walking `path` (a vertex sequence).
    pub fn path_voltage(&self, path: &[Vertex]) -> Result<Permutation, CoverError> {
        let mut acc = Permutation::identity(self.degree);
        for w in path.windows(2) {
            let step = self.voltage(w[0], w[1]).ok_or(CoverError::NotAnEdge(w[0], w[1]))?;
            acc = acc.then(&step);
        }
        Ok(acc)
    }

    pub fn to_file(&self) -> CoverFile {
        CoverFile {
            base: BaseRef::Inline(self.base.to_file()),
            degree: self.degree,
            voltages: self
                .voltages
                .iter()
                .map(|(&(u, v), p)| VoltageEntry { edge: [u, v], images: p.to_one_based() })
                .collect(),
        }
    }
}

/// Total space of a cover together with its projection.
///
/// Total vertex `i * d + s` lies over the `i`-th base vertex (sorted order) on
/// sheet `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverComplex {
    assignment: VoltageAssignment,
    total: SimplicialComplex,
    fiber: Vec<(Vertex, usize)>,
    index: BTreeMap<Vertex, usize>,
}

impl CoverComplex {
    pub fn assignment(&self) -> &VoltageAssignment {
        &self.assignment
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.assignment.base
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn degree(&self) -> usize {
        self.assignment.degree
    }

    pub fn total_vertex(&self, base_vertex: Vertex, sheet: usize) -> Vertex {
        (self.index[&base_vertex] * self.degree() + sheet) as Vertex
    }

    pub fn projection(&self, total_vertex: Vertex) -> Vertex {
        self.fiber[total_vertex as usize].0
    }

    pub fn sheet(&self, total_vertex: Vertex) -> usize {
        self.fiber[total_vertex as usize].1
    }

    /// Projection as an explicit vertex map.
    pub fn projection_map(&self) -> BTreeMap<Vertex, Vertex> {
        self.fiber.iter().enumerate().map(|(x, &(v, _))| (x as Vertex, v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.total.is_connected()
    }

    /// Star-isomorphism check at every total-space vertex.
    pub fn verify_covering(&self) -> bool {
        is_covering_map(&self.total, self.base(), &self.projection_map())
    }

    /// Lifts a closed base edge loop starting on `sheet`.
    pub fn lift_loop(&self, base_loop: &[Vertex], sheet: usize) -> Result<LoopLift, CoverError> {
        if sheet >= self.degree() {
            return Err(CoverError::SheetOutOfRange { sheet, degree: self.degree() });
        }
        if base_loop.first() != base_loop.last() {
            return Err(CoverError::PathNotClosed);
        }
        let end = self.assignment.path_voltage(base_loop)?.apply(sheet);
        Ok(LoopLift { closed: end == sheet, end_sheet: end })
    }

    /// Regularity of the cover and its deck group as permutations of sheets.
    pub fn regularity(&self) -> Result<DeckReport, CoverError> {
        if !self.is_connected() {
            return Err(CoverError::CoverDisconnected);
        }
        let d = self.degree();
        let gens: Vec<Permutation> = self.assignment.voltages.values().cloned().collect();
        let monodromy = generated_group(d, &gens);
        let regular = monodromy.len() == d;
        // A deck transformation is fixed by where it sends sheet 0; it must
        // commute with every voltage.
        let mut deck = Vec::new();
        for target in 0..d {
            let mut image: Vec<Option<usize>> = vec![None; d];
            image[0] = Some(target);
            let mut queue = VecDeque::from([0usize]);
            let mut consistent = true;
            while let Some(s) = queue.pop_front() {
                let t = image[s].expect("queued sheets are mapped");
                for g in &gens {
                    let g_inv = g.inverse();
                    for (next, next_image) in [(g.apply(s), g.apply(t)), (g_inv.apply(s), g_inv.apply(t))] {
                        match image[next] {
                            None => {
                                image[next] = Some(next_image);
                                queue.push_back(next);
                            }
                            Some(existing) if existing != next_image => consistent = false,
                            Some(_) => {}
                        }
                    }
                }
            }
            if consistent && image.iter().all(Option::is_some) {
                let images: Vec<usize> = image.into_iter().map(Option::unwrap).collect();
                if let Some(p) = Permutation::from_images(images) {
                    deck.push(p);
                }
            }
        }
        Ok(DeckReport { regular, monodromy_order: monodromy.len(), deck })
    }

    /// Base loops whose lifts generate the fundamental group of the total
    /// space: one per non-tree edge of a breadth-first spanning tree of the
    /// total space rooted over the smallest base vertex on sheet 0.
    pub fn normal_generators(&self) -> Result<Vec<BaseLoop>, CoverError> {
        if !self.is_connected() {
            return Err(CoverError::CoverDisconnected);
        }
        let adjacency = self.total.adjacency();
        let root = self.total_vertex(*self.base().vertices().iter().next().expect("nonempty"), 0);
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([root]);
        let mut seen = BTreeSet::from([root]);
        let mut tree: BTreeSet<Edge> = BTreeSet::new();
        while let Some(x) = queue.pop_front() {
            for &y in &adjacency[&x] {
                if seen.insert(y) {
                    parent.insert(y, x);
                    tree.insert(edge_key(x, y));
                    queue.push_back(y);
                }
            }
        }
        let path_to_root = |mut x: Vertex| {
            let mut path = vec![x];
            while let Some(&p) = parent.get(&x) {
                path.push(p);
                x = p;
            }
            path
        };
        let mut loops = Vec::new();
        for e in self.total.simplices(1) {
            let (x, y) = (e[0], e[1]);
            if tree.contains(&(x, y)) {
                continue;
            }
            let mut walk: Vec<Vertex> = path_to_root(x);
            walk.reverse();
            walk.extend(path_to_root(y));
            loops.push(walk.into_iter().map(|t| self.projection(t)).collect());
        }
        Ok(loops)
    }
}

/// Outcome of lifting a closed loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoopLift {
    pub closed: bool,
    pub end_sheet: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeckReport {
    pub regular: bool,
    /// Order of the group generated by the voltages.
    pub monodromy_order: usize,
    /// Deck transformations as sheet permutations.
    pub deck: Vec<Permutation>,
}

/// Realizes the cover described by `assignment`.
pub fn build_cover(assignment: &VoltageAssignment) -> Result<CoverComplex, CoverError> {
    let d = assignment.degree;
    let base = &assignment.base;
    let index: BTreeMap<Vertex, usize> =
        base.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let lift = |v: Vertex, s: usize| (index[&v] * d + s) as Vertex;
    let mut facets = Vec::new();
    for facet in base.facets() {
        let u0 = facet[0];
        let moves: Vec<Permutation> = facet
            .iter()
            .map(|&u| {
                if u == u0 {
                    Permutation::identity(d)
                } else {
                    assignment.voltage(u0, u).expect("facet edge")
                }
            })
            .collect();
        for s in 0..d {
            facets.push(facet.iter().zip(&moves).map(|(&u, m)| lift(u, m.apply(s))).collect());
        }
    }
    let total = SimplicialComplex::new(0..(base.vertex_count() * d) as Vertex, facets)?;
    let fiber = base.vertices().iter().flat_map(|&v| (0..d).map(move |s| (v, s))).collect();
    Ok(CoverComplex { assignment: assignment.clone(), total, fiber, index })
}

/// True iff `projection` is simplicial, surjective on vertices, and maps the
/// simplices through each vertex bijectively onto those through its image.
pub fn is_covering_map(
    total: &SimplicialComplex,
    base: &SimplicialComplex,
    projection: &BTreeMap<Vertex, Vertex>,
) -> bool {
    if total.vertices().iter().any(|v| !projection.contains_key(v)) {
        return false;
    }
    let hit: BTreeSet<Vertex> = projection.values().copied().collect();
    if base.vertices().iter().any(|v| !hit.contains(v)) {
        return false;
    }
    let image = |s: &Simplex| -> Option<Simplex> {
        let mut img: Simplex = s.iter().map(|v| projection[v]).collect();
        img.sort_unstable();
        img.dedup();
        (img.len() == s.len()).then_some(img)
    };
    let mut total_cofaces: BTreeMap<Vertex, Vec<Simplex>> = BTreeMap::new();
    for s in total.all_simplices() {
        let Some(img) = image(s) else { return false };
        if !base.contains(&img) {
            return false;
        }
        for &v in s {
            total_cofaces.entry(v).or_default().push(img.clone());
        }
    }
    let mut base_cofaces: BTreeMap<Vertex, BTreeSet<Simplex>> = BTreeMap::new();
    for s in base.all_simplices() {
        for &v in s {
            base_cofaces.entry(v).or_default().insert(s.clone());
        }
    }
    total_cofaces.iter().all(|(x, images)| {
        let distinct: BTreeSet<&Simplex> = images.iter().collect();
        let target = &base_cofaces[&projection[x]];
        distinct.len() == images.len()
            && distinct.len() == target.len()
            && distinct.iter().all(|s| target.contains(*s))
    })
}

/// The pullback of `S(L) → L` along the cover, realized as the cover of
/// `S(L)` whose voltage on `(u^a, v^b)` is the voltage on `(u, v)`.
pub fn double_of_cover(
    base: &SimplicialComplex,
    cover: &CoverComplex,
) -> Result<(DoubledComplex, CoverComplex), CoverError> {
    if cover.base() != base {
        return Err(CoverError::BaseMismatch);
    }
    let doubled = spherical_double(base)?;
    let mut voltages = Vec::new();
    for e in doubled.complex().simplices(1) {
        let (u, v) = (double::decode(e[0]).0, double::decode(e[1]).0);
        let p = cover.assignment.voltage(u, v).ok_or(CoverError::NotAnEdge(u, v))?;
        if !p.is_identity() {
            voltages.push(((e[0], e[1]), p));
        }
    }
    let assignment =
        VoltageAssignment::new(doubled.complex().clone(), cover.degree(), voltages)?;
    let lifted = build_cover(&assignment)?;
    Ok((doubled, lifted))
}
