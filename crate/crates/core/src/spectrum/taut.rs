//! Taut loops: an edge loop of length `l` is taut when it is not
//! null-homotopic after coning off every loop shorter than `l`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Graph, SpectrumError};
use crate::complex::Vertex;
use crate::groups::{coset_table, in_relator_lattice, Letter, Presentation, Word};

/// Exponents tried for the extra relators `g^k` when the quotient itself does
/// not close within budget.
const POWER_QUOTIENT_EXPONENTS: [i64; 5] = [2, 3, 4, 5, 6];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthStatus {
    Taut,
    Filled,
    Unknown,
}

/// Why a length got its status.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// No reduced loop has this length.
    NoLoops,
    /// Nothing shorter is coned off, and a reduced loop is nontrivial in
    /// the free group.
    FreeGroup { witness: Vec<Vertex> },
    /// The witness acts nontrivially in the regular representation of a
    /// finite quotient of this order; `power` is the exponent of the extra
    /// relators `g^power`, absent when the quotient is the group itself.
    FiniteQuotient {
        order: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        power: Option<i64>,
        witness: Vec<Vertex>,
    },
    /// The witness survives in the abelianization.
    AbelianImage { witness: Vec<Vertex> },
    /// The group is finite of this order and every loop traces to the
    /// identity.
    FiniteGroup { order: usize },
    /// Every loop reduces to the identity by replacing more than half of a
    /// shorter loop with the rest; `steps` counts the replacements.
    Derivation { steps: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthReport {
    pub length: usize,
    /// Reduced loops of this length up to rotation and reversal.
    pub loops: usize,
    pub status: LengthStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TautSpectrumReport {
    pub vertices: usize,
    pub edges: usize,
    pub cycle_rank: usize,
    pub l_max: usize,
    pub budget: usize,
    pub lengths: Vec<LengthReport>,
    /// Coset rows spent: the index of each closed table plus the full budget
    /// of each exhausted one.
    pub budget_spent: usize,
}

impl TautSpectrumReport {
    /// Lengths certified taut.
    pub fn spectrum(&self) -> BTreeSet<usize> {
        self.lengths.iter().filter(|r| r.status == LengthStatus::Taut).map(|r| r.length).collect()
    }

    pub fn status(&self, length: usize) -> Option<LengthStatus> {
        self.lengths.iter().find(|r| r.length == length).map(|r| r.status)
    }

    /// True when no length is left undecided.
    pub fn is_certified(&self) -> bool {
        self.lengths.iter().all(|r| r.status != LengthStatus::Unknown)
    }
}

/// Cyclically reduced closed walks of length `3..=l_max`, one per class under
/// rotation and reversal, grouped by length.
pub(crate) fn reduced_loops(graph: &Graph, l_max: usize) -> BTreeMap<usize, Vec<Vec<Vertex>>> {
    let mut out: BTreeMap<usize, Vec<Vec<Vertex>>> = BTreeMap::new();
    for v0 in graph.vertices() {
        let mut path = vec![v0];
        extend_walks(graph, l_max, &mut path, &mut out);
    }
    out
}

fn extend_walks(graph: &Graph, l_max: usize, path: &mut Vec<Vertex>, out: &mut BTreeMap<usize, Vec<Vec<Vertex>>>) {
    let v0 = path[0];
    let x = *path.last().expect("nonempty");
    let prev = path.len().checked_sub(2).map(|i| path[i]);
    // Close the walk: no backtrack at the closing edge or across the base.
    if path.len() >= 3 && prev != Some(v0) && path[1] != x && graph.neighbors(x).any(|w| w == v0) && is_canonical(path) {
        out.entry(path.len()).or_default().push(path.clone());
    }
    if path.len() == l_max {
        return;
    }
    let next: Vec<Vertex> = graph.neighbors(x).filter(|&w| w >= v0 && Some(w) != prev).collect();
    for w in next {
        path.push(w);
        extend_walks(graph, l_max, path, out);
        path.pop();
    }
}

/// Least among all rotations of the sequence and of its reversal.
fn is_canonical(seq: &[Vertex]) -> bool {
    let n = seq.len();
    let reversed: Vec<Vertex> = seq.iter().rev().copied().collect();
    for s in [seq, reversed.as_slice()] {
        for r in 0..n {
            let rotated = s[r..].iter().chain(&s[..r]);
            if rotated.lt(seq.iter()) {
                return false;
            }
        }
    }
    true
}

/// Free generators on the edges off a breadth-first tree.
struct Alphabet {
    letters: BTreeMap<(Vertex, Vertex), usize>,
}

impl Alphabet {
    fn new(graph: &Graph) -> Self {
        let root = graph.vertices().next();
        let parents = root.map(|r| graph.bfs_parents(r)).unwrap_or_default();
        let tree: BTreeSet<(Vertex, Vertex)> =
            parents.iter().filter(|(v, p)| v != p).map(|(&v, &p)| (v.min(p), v.max(p))).collect();
        let letters = graph.edges().filter(|e| !tree.contains(e)).enumerate().map(|(i, e)| (e, i)).collect();
        Alphabet { letters }
    }

    fn word(&self, walk: &[Vertex]) -> Word {
        let n = walk.len();
        Word::new((0..n).filter_map(|i| {
            let (u, v) = (walk[i], walk[(i + 1) % n]);
            if u < v {
                self.letters.get(&(u, v)).map(|&g| Letter::new(g, false))
            } else {
                self.letters.get(&(v, u)).map(|&g| Letter::new(g, true))
            }
        }))
        .cyclically_reduced()
    }

    fn presentation(&self, relators: Vec<Word>) -> Presentation {
        let names = self.letters.keys().map(|(u, v)| format!("e{u}_{v}")).collect();
        Presentation::untagged(names, relators).expect("letters index the alphabet")
    }
}

/// Greedy reduction of a cyclic word: replace any piece that is more than
/// half of a relator by the inverse of the remainder. Returns the step count
/// when the word reaches the identity.
fn dehn_reduce(word: &Word, relators: &[Vec<Letter>]) -> Option<usize> {
    let mut w = word.cyclically_reduced().letters().to_vec();
    let mut steps = 0;
    'outer: while !w.is_empty() {
        let n = w.len();
        for shift in 0..n {
            let rotated: Vec<Letter> = w[shift..].iter().chain(&w[..shift]).copied().collect();
            for r in relators {
                let m = r.len();
                for start in 0..m {
                    let matched = (0..m.min(n)).take_while(|&i| rotated[i] == r[(start + i) % m]).count();
                    if 2 * matched > m {
                        let rest = Word::new((matched..m).map(|i| r[(start + i) % m]));
                        let replaced = rest.inverse().concat(&Word::new(rotated[matched..].iter().copied()));
                        w = replaced.cyclically_reduced().letters().to_vec();
                        steps += 1;
                        continue 'outer;
                    }
                }
            }
        }
        return None;
    }
    Some(steps)
}

/// Statuses of every length up to `l_max`. Each coset enumeration may use at
/// most `budget` rows.
pub fn taut_spectrum(graph: &Graph, l_max: usize, budget: usize) -> Result<TautSpectrumReport, SpectrumError> {
    if graph.vertex_count() == 0 {
        return Err(SpectrumError::Empty);
    }
    if !graph.is_connected() {
        return Err(SpectrumError::Disconnected);
    }
    let alphabet = Alphabet::new(graph);
    let loops = reduced_loops(graph, l_max);
    let mut spent = 0;
    let mut lengths = Vec::with_capacity(l_max);
    let mut shorter: Vec<Word> = Vec::new();
    for l in 1..=l_max {
        let candidates = loops.get(&l).map(Vec::as_slice).unwrap_or(&[]);
        let (status, certificate) = if candidates.is_empty() {
            (LengthStatus::Filled, Certificate::NoLoops)
        } else {
            decide_length(&alphabet, &shorter, candidates, budget, &mut spent)
        };
        lengths.push(LengthReport { length: l, loops: candidates.len(), status, certificate: Some(certificate) });
        let mut seen: BTreeSet<Word> = shorter.iter().cloned().collect();
        for walk in candidates {
            let w = alphabet.word(walk);
            if seen.insert(w.clone()) && seen.insert(w.inverse()) {
                shorter.push(w);
            }
        }
    }
    Ok(TautSpectrumReport {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        cycle_rank: graph.cycle_rank(),
        l_max,
        budget,
        lengths,
        budget_spent: spent,
    })
}

fn decide_length(
    alphabet: &Alphabet,
    relators: &[Word],
    candidates: &[Vec<Vertex>],
    budget: usize,
    spent: &mut usize,
) -> (LengthStatus, Certificate) {
    let words: Vec<Word> = candidates.iter().map(|c| alphabet.word(c)).collect();
    if relators.is_empty() {
        // Reduced closed walks are nontrivial in the free group.
        return (LengthStatus::Taut, Certificate::FreeGroup { witness: candidates[0].clone() });
    }
    let p = alphabet.presentation(relators.to_vec());
    match coset_table(&p, &[], budget) {
        Some(table) => {
            *spent += table.index();
            let order = table.index();
            return match words.iter().position(|w| table.trace(0, w) != 0) {
                Some(i) => (
                    LengthStatus::Taut,
                    Certificate::FiniteQuotient { order, power: None, witness: candidates[i].clone() },
                ),
                None => (LengthStatus::Filled, Certificate::FiniteGroup { order }),
            };
        }
        None => *spent += budget,
    }
    if let Some(i) = words.iter().position(|w| !in_relator_lattice(&p, w)) {
        return (LengthStatus::Taut, Certificate::AbelianImage { witness: candidates[i].clone() });
    }
    let cyclic: Vec<Vec<Letter>> =
        relators.iter().flat_map(|r| [r.letters().to_vec(), r.inverse().letters().to_vec()]).collect();
    let mut steps = 0;
    let mut underived = Vec::new();
    for (i, w) in words.iter().enumerate() {
        match dehn_reduce(w, &cyclic) {
            Some(s) => steps += s,
            None => underived.push(i),
        }
    }
    if underived.is_empty() {
        return (LengthStatus::Filled, Certificate::Derivation { steps });
    }
    for k in POWER_QUOTIENT_EXPONENTS {
        let mut extra = relators.to_vec();
        extra.extend((0..p.generator_count()).map(|g| Word::new([Letter::gen(g)]).pow(k)));
        let Some(table) = coset_table(&alphabet.presentation(extra), &[], budget) else {
            *spent += budget;
            continue;
        };
        *spent += table.index();
        if let Some(&i) = underived.iter().find(|&&i| table.trace(0, &words[i]) != 0) {
            return (
                LengthStatus::Taut,
                Certificate::FiniteQuotient { order: table.index(), power: Some(k), witness: candidates[i].clone() },
            );
        }
    }
    (LengthStatus::Unknown, Certificate::Derivation { steps })
}
