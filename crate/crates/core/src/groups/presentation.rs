use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Letter, Word};
use crate::complex::{ComplexError, SimplicialComplex, Vertex};
use crate::homology::{invariant_factors, smith_normal_form, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("generator name {0:?} is used twice")]
    DuplicateGenerator(String),
    #[error("generator name {0:?} must be nonempty without whitespace, quotes or '#'")]
    BadGeneratorName(String),
    #[error("relator {relator} uses generator {generator}, but there are only {count}")]
    GeneratorOutOfRange { relator: usize, generator: usize, count: usize },
    #[error("{relators} relators but {tags} tags")]
    TagCountMismatch { relators: usize, tags: usize },
    #[error("spread exponent must be nonnegative, got {0}")]
    NegativeSpread(i64),
    #[error("spread loops at height 0 are not allowed: the base must sit at height 0")]
    HeightZeroSpread,
    #[error("{0:?} is not a closed edge loop")]
    NotALoop(Vec<Vertex>),
    #[error("loop step {0} -> {1} is not an edge of the complex")]
    NotAnEdge(Vertex, Vertex),
    #[error("loop {index} at height {height} of the smaller family is missing from the larger one")]
    NestingViolated { height: i64, index: usize },
    #[error("selected relator {0} is not a relator of the full presentation")]
    RelatorAbsent(usize),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid presentation JSON: {0}")]
    Json(String),
}

/// Which relator family a spread power belongs to.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpreadFamily {
    #[default]
    Plain,
    Alpha,
    Beta,
}

/// Where a relator comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RelatorTag {
    Triangle,
    SpreadPower {
        height: i64,
        loop_id: usize,
        #[serde(default)]
        family: SpreadFamily,
    },
    Other,
}

/// Finite window of heights standing in for a family over all integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightWindow {
    pub min: i64,
    pub max: i64,
    /// The listed spread families continue at every height outside the window.
    pub extends_to_all_heights: bool,
}

/// Named generators and tagged relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    tags: Vec<RelatorTag>,
    window: Option<HeightWindow>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == '\'' || c == '#')
}

impl Presentation {
    pub fn new(
        generators: Vec<String>,
        relators: Vec<Word>,
        tags: Vec<RelatorTag>,
    ) -> Result<Self, PresentationError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !valid_name(g) {
                return Err(PresentationError::BadGeneratorName(g.clone()));
            }
            if !seen.insert(g.as_str()) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        if relators.len() != tags.len() {
            return Err(PresentationError::TagCountMismatch {
                relators: relators.len(),
                tags: tags.len(),
            });
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator().filter(|&g| g >= generators.len()) {
                return Err(PresentationError::GeneratorOutOfRange {
                    relator: i,
                    generator: g,
                    count: generators.len(),
                });
            }
        }
        Ok(Presentation { generators, relators, tags, window: None })
    }

    /// Relators all tagged [`RelatorTag::Other`].
    pub fn untagged(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let tags = vec![RelatorTag::Other; relators.len()];
        Self::new(generators, relators, tags)
    }

    /// Generators named `x1 … xn`.
    pub fn numbered(generator_count: usize, relators: Vec<Word>) -> Result<Self, PresentationError> {
        Self::untagged((1..=generator_count).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn with_window(mut self, window: Option<HeightWindow>) -> Self {
        self.window = window;
        self
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn tags(&self) -> &[RelatorTag] {
        &self.tags
    }

    pub fn window(&self) -> Option<HeightWindow> {
        self.window
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Appends relators, keeping generators.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = (Word, RelatorTag)>) -> Self {
        let mut out = self.clone();
        for (w, t) in extra {
            out.relators.push(w);
            out.tags.push(t);
        }
        out
    }

    /// Letters written with generator names, `'` marking inverses.
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.letters()
            .iter()
            .map(|l| {
                let name = &self.generators[l.generator()];
                if l.is_inverse() {
                    format!("{name}'")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, PresentationError> {
        let index: HashMap<&str, usize> =
            self.generators.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" && !index.contains_key("1") {
                continue;
            }
            let (name, inverse) = match token.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (token, false),
            };
            let g = *index
                .get(name)
                .ok_or_else(|| PresentationError::UnknownGenerator(name.to_string()))?;
            letters.push(Letter::new(g, inverse));
        }
        Ok(Word::new(letters))
    }

    /// Relator exponent sums, one row per relator.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let n = self.generators.len();
        let mut m = IntMatrix::zeros(self.relators.len(), n);
        for (i, r) in self.relators.iter().enumerate() {
            for (j, x) in r.exponent_vector(n).into_iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }
}

/// A closed edge path in a complex, given by its vertices (first = last).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct LoopWord {
    vertices: Vec<Vertex>,
}

impl LoopWord {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self, PresentationError> {
        let closed = vertices.len() >= 2 && vertices.first() == vertices.last();
        if !closed || vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(PresentationError::NotALoop(vertices));
        }
        Ok(LoopWord { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl TryFrom<Vec<Vertex>> for LoopWord {
    type Error = PresentationError;

    fn try_from(v: Vec<Vertex>) -> Result<Self, Self::Error> {
        LoopWord::new(v)
    }
}

impl From<LoopWord> for Vec<Vertex> {
    fn from(l: LoopWord) -> Self {
        l.vertices
    }
}

/// One generator per edge `{u, v}` with `u < v`, oriented `u → v` and named
/// `e{u}_{v}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeAlphabet {
    edges: Vec<(Vertex, Vertex)>,
    index: BTreeMap<(Vertex, Vertex), usize>,
}

impl EdgeAlphabet {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let edges: Vec<(Vertex, Vertex)> = complex.simplices(1).map(|e| (e[0], e[1])).collect();
        let index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        EdgeAlphabet { edges, index }
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn names(&self) -> Vec<String> {
        self.edges.iter().map(|(u, v)| format!("e{u}_{v}")).collect()
    }

    /// Letter for traversing `u → v`.
    pub fn letter(&self, u: Vertex, v: Vertex) -> Option<Letter> {
        if u < v {
            self.index.get(&(u, v)).map(|&g| Letter::new(g, false))
        } else {
            self.index.get(&(v, u)).map(|&g| Letter::new(g, true))
        }
    }

    /// The loop as a sequence of oriented edges, unreduced.
    pub fn loop_letters(&self, c: &LoopWord) -> Result<Vec<Letter>, PresentationError> {
        c.vertices
            .windows(2)
            .map(|w| self.letter(w[0], w[1]).ok_or(PresentationError::NotAnEdge(w[0], w[1])))
            .collect()
    }
}

/// `e_1^k e_2^k … e_l^k` for `k >= 0`.
pub fn power_spread(letters: &[Letter], k: i64) -> Result<Word, PresentationError> {
    if k < 0 {
        return Err(PresentationError::NegativeSpread(k));
    }
    Ok(spread(letters, k))
}

/// Spread with any integer exponent; negative exponents use inverse letters.
fn spread(letters: &[Letter], k: i64) -> Word {
    Word::new(letters.iter().flat_map(|&l| {
        let l = if k < 0 { l.inverse() } else { l };
        std::iter::repeat_n(l, k.unsigned_abs() as usize)
    }))
}

/// Right-angled Artin group: a generator `a{v}` per vertex and a commutator
/// per edge.
pub fn raag_presentation(complex: &SimplicialComplex) -> Result<Presentation, PresentationError> {
    complex.require_valid()?;
    let vertices: Vec<Vertex> = complex.vertices().iter().copied().collect();
    let index: BTreeMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let relators = complex
        .simplices(1)
        .map(|e| {
            let (a, b) = (Letter::gen(index[&e[0]]), Letter::gen(index[&e[1]]));
            Word::new([a, b, a.inverse(), b.inverse()])
        })
        .collect();
    Presentation::untagged(vertices.iter().map(|v| format!("a{v}")).collect(), relators)
}

fn triangle_relators(alphabet: &EdgeAlphabet, complex: &SimplicialComplex) -> Vec<(Word, RelatorTag)> {
    let mut out = Vec::new();
    for t in complex.simplices(2) {
        let e = alphabet.letter(t[0], t[1]).expect("triangle edge");
        let f = alphabet.letter(t[1], t[2]).expect("triangle edge");
        let g = alphabet.letter(t[2], t[0]).expect("triangle edge");
        out.push((Word::new([e, f, g]), RelatorTag::Triangle));
        out.push((Word::new([g, f, e]), RelatorTag::Triangle));
    }
    out
}

/// Edge generators, two relators `efg`, `gfe` per triangle (edges oriented
/// around it), and the spread `γ^[n]` of every loop `γ` listed at height `n`.
pub fn glsigma_presentation(
    complex: &SimplicialComplex,
    spreads: &BTreeMap<i64, Vec<LoopWord>>,
) -> Result<Presentation, PresentationError> {
    let tagged: BTreeMap<i64, Vec<(LoopWord, SpreadFamily)>> = spreads
        .iter()
        .map(|(&n, loops)| (n, loops.iter().map(|c| (c.clone(), SpreadFamily::Plain)).collect()))
        .collect();
    glsigma_presentation_tagged(complex, &tagged, None)
}

/// As [`glsigma_presentation`], with a family tag on every spread loop.
pub fn glsigma_presentation_tagged(
    complex: &SimplicialComplex,
    spreads: &BTreeMap<i64, Vec<(LoopWord, SpreadFamily)>>,
    window: Option<HeightWindow>,
) -> Result<Presentation, PresentationError> {
    complex.require_valid()?;
    if spreads.get(&0).is_some_and(|l| !l.is_empty()) {
        return Err(PresentationError::HeightZeroSpread);
    }
    let alphabet = EdgeAlphabet::new(complex);
    let mut relators = triangle_relators(&alphabet, complex);
    for (&n, loops) in spreads {
        for (id, (c, family)) in loops.iter().enumerate() {
            let letters = alphabet.loop_letters(c)?;
            relators.push((
                spread(&letters, n),
                RelatorTag::SpreadPower { height: n, loop_id: id, family: *family },
            ));
        }
    }
    let (words, tags) = relators.into_iter().unzip();
    Ok(Presentation::new(alphabet.names(), words, tags)?.with_window(window))
}

/// The presentation with `α_i^[n]` and `β_i^[n]` at every nonzero height of
/// `[min, max]`, marked as extending to all heights.
pub fn glsigma_families(
    complex: &SimplicialComplex,
    alpha: &[LoopWord],
    beta: &[LoopWord],
    min: i64,
    max: i64,
) -> Result<Presentation, PresentationError> {
    let mut spreads = BTreeMap::new();
    for n in (min..=max).filter(|&n| n != 0) {
        let loops: Vec<(LoopWord, SpreadFamily)> = alpha
            .iter()
            .map(|c| (c.clone(), SpreadFamily::Alpha))
            .chain(beta.iter().map(|c| (c.clone(), SpreadFamily::Beta)))
            .collect();
        spreads.insert(n, loops);
    }
    let window = HeightWindow { min, max, extends_to_all_heights: true };
    let mut p = glsigma_presentation_tagged(complex, &spreads, Some(window))?;
    // Loop ids count within each family.
    let split = alpha.len();
    for tag in &mut p.tags {
        if let RelatorTag::SpreadPower { loop_id, family: SpreadFamily::Beta, .. } = tag {
            *loop_id -= split;
        }
    }
    Ok(p)
}

/// Spread relators of the larger family missing from the smaller one, in
/// height order. Every loop of `smaller` must also occur in `larger`.
pub fn quotient_relators(
    smaller: &BTreeMap<i64, Vec<LoopWord>>,
    larger: &BTreeMap<i64, Vec<LoopWord>>,
) -> Result<Vec<(i64, LoopWord)>, PresentationError> {
    for (&height, loops) in smaller {
        let present = larger.get(&height).map(Vec::as_slice).unwrap_or(&[]);
        if let Some(index) = loops.iter().position(|c| !present.contains(c)) {
            return Err(PresentationError::NestingViolated { height, index });
        }
    }
    let mut extra = Vec::new();
    for (&height, loops) in larger {
        let have = smaller.get(&height).map(Vec::as_slice).unwrap_or(&[]);
        extra.extend(loops.iter().filter(|c| !have.contains(c)).map(|c| (height, c.clone())));
    }
    Ok(extra)
}

/// Result of [`subpresentation_select`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subpresentation {
    pub presentation: Presentation,
    /// Heights at which some selected relator is a `β` spread.
    pub beta_heights: BTreeSet<i64>,
}

/// Keeps the relators in `selected` (indices into `full`), every triangle
/// relator, every `α` spread, and the `β` spreads at the heights where
/// `selected` contains one.
pub fn subpresentation_select(
    full: &Presentation,
    selected: &[usize],
) -> Result<Subpresentation, PresentationError> {
    if let Some(&bad) = selected.iter().find(|&&i| i >= full.relators.len()) {
        return Err(PresentationError::RelatorAbsent(bad));
    }
    let chosen: BTreeSet<usize> = selected.iter().copied().collect();
    let beta_heights: BTreeSet<i64> = chosen
        .iter()
        .filter_map(|&i| match full.tags[i] {
            RelatorTag::SpreadPower { height, family: SpreadFamily::Beta, .. } => Some(height),
            _ => None,
        })
        .collect();
    let keep = |i: usize| {
        chosen.contains(&i)
            || match full.tags[i] {
                RelatorTag::Triangle => true,
                RelatorTag::SpreadPower { family: SpreadFamily::Alpha, .. } => true,
                RelatorTag::SpreadPower { height, family: SpreadFamily::Beta, .. } => {
                    beta_heights.contains(&height)
                }
                _ => false,
            }
    };
    let (relators, tags) = (0..full.relators.len())
        .filter(|&i| keep(i))
        .map(|i| (full.relators[i].clone(), full.tags[i]))
        .unzip();
    let presentation =
        Presentation::new(full.generators.clone(), relators, tags)?.with_window(full.window);
    Ok(Subpresentation { presentation, beta_heights })
}

/// Abelian invariants: free rank and invariant factors `> 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abelianization {
    pub free_rank: usize,
    #[serde(with = "crate::homology::torsion_format")]
    pub torsion: Vec<BigUint>,
}

impl Abelianization {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

pub fn abelianization(p: &Presentation) -> Abelianization {
    let factors = invariant_factors(&p.exponent_matrix());
    let nonzero: Vec<&BigInt> = factors.iter().filter(|f| !f.is_zero()).collect();
    Abelianization {
        free_rank: p.generator_count() - nonzero.len(),
        torsion: nonzero.into_iter().filter(|f| !f.is_one()).map(|f| f.magnitude().clone()).collect(),
    }
}

/// True iff the exponent vector of `word` is an integer combination of the
/// relator exponent vectors, i.e. `word` dies in the abelianization.
pub fn in_relator_lattice(p: &Presentation, word: &Word) -> bool {
    let n = p.generator_count();
    let target: Vec<BigInt> = word.exponent_vector(n).into_iter().map(BigInt::from).collect();
    if p.relators.is_empty() {
        return target.iter().all(Zero::is_zero);
    }
    // Solve Aᵀ x = t with U Aᵀ V = D: need D y = U t.
    let transposed = p.exponent_matrix().transpose();
    let snf = smith_normal_form(&transposed);
    let d = snf.diagonal();
    (0..n).all(|i| {
        let ut: BigInt = (0..n).map(|j| &snf.u[(i, j)] * &target[j]).sum();
        match d.get(i).filter(|x| !x.is_zero()) {
            Some(di) => ut.is_multiple_of(&di.abs()),
            None => ut.is_zero(),
        }
    })
}
