//! Edge-path presentations of fundamental groups and Tietze simplification.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, VecDeque};

use serde::{Deserialize, Serialize};

use super::presentation::{abelianization, Presentation, PresentationError};
use super::{coset_enumerate, CosetOutcome, Letter, Word};
use crate::complex::{ComplexError, SimplicialComplex, Vertex};

/// Longest relator the simplifier is willing to create.
const MAX_RELATOR_LENGTH: usize = 4096;

/// `π_1(K)` at the smallest vertex: one generator `e{u}_{v}` per edge off a
/// breadth-first spanning tree, one relator per triangle.
pub fn edge_path_presentation(complex: &SimplicialComplex) -> Result<Presentation, PresentationError> {
    complex.require_valid()?;
    if !complex.is_connected() {
        return Err(ComplexError::NotConnected.into());
    }
    let adjacency = complex.adjacency();
    let mut tree: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    if let Some(&root) = complex.vertices().iter().next() {
        let mut seen = BTreeSet::from([root]);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[&u] {
                if seen.insert(w) {
                    tree.insert((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    let free: Vec<(Vertex, Vertex)> = complex
        .simplices(1)
        .map(|e| (e[0], e[1]))
        .filter(|e| !tree.contains(e))
        .collect();
    let index: BTreeMap<(Vertex, Vertex), usize> = free.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let letter = |u: Vertex, v: Vertex| {
        if u < v {
            index.get(&(u, v)).map(|&g| Letter::new(g, false))
        } else {
            index.get(&(v, u)).map(|&g| Letter::new(g, true))
        }
    };
    let relators = complex
        .simplices(2)
        .map(|t| Word::new([letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])].into_iter().flatten()))
        .filter(|w| !w.is_empty())
        .collect();
    Presentation::untagged(free.iter().map(|(u, v)| format!("e{u}_{v}")).collect(), relators)
}

/// Eliminates generators that occur exactly once in some relator, shortest
/// relators first, and drops relators that become trivial.
pub fn simplify(p: &Presentation) -> Presentation {
    let mut relators: Vec<Option<Vec<Letter>>> =
        p.relators().iter().map(|r| Some(r.cyclically_reduced().letters().to_vec())).collect();
    let mut occurs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); p.generator_count()];
    let mut heap = BinaryHeap::new();
    for (i, r) in relators.iter().enumerate() {
        let r = r.as_ref().expect("fresh relator");
        for l in r {
            occurs[l.generator()].insert(i);
        }
        heap.push(Reverse((r.len(), i)));
    }
    let mut alive = vec![true; p.generator_count()];
    while let Some(Reverse((len, i))) = heap.pop() {
        let Some(r) = relators[i].clone() else { continue };
        if r.len() != len {
            continue;
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for l in &r {
            *counts.entry(l.generator()).or_default() += 1;
        }
        let Some((&g, _)) = counts.iter().find(|&(_, &c)| c == 1) else { continue };
        let at = r.iter().position(|l| l.generator() == g).expect("counted");
        // u g^ε v = 1  ⇒  g^ε = u⁻¹ v⁻¹.
        let u = Word::new(r[..at].iter().copied());
        let v = Word::new(r[at + 1..].iter().copied());
        let mut value = u.inverse().concat(&v.inverse());
        if r[at].is_inverse() {
            value = value.inverse();
        }
        let targets: Vec<usize> = occurs[g].iter().copied().filter(|&j| j != i).collect();
        let growth = targets
            .iter()
            .map(|&j| relators[j].as_ref().map_or(0, |w| w.len() * value.len().max(1)))
            .max()
            .unwrap_or(0);
        if growth > MAX_RELATOR_LENGTH {
            continue;
        }
        for l in &r {
            occurs[l.generator()].remove(&i);
        }
        relators[i] = None;
        alive[g] = false;
        for j in targets {
            let old = relators[j].take().expect("occurrence lists track live relators");
            for l in &old {
                occurs[l.generator()].remove(&j);
            }
            let replaced = Word::new(old.iter().flat_map(|&l| {
                if l.generator() != g {
                    vec![l]
                } else if l.is_inverse() {
                    value.inverse().letters().to_vec()
                } else {
                    value.letters().to_vec()
                }
            }))
            .cyclically_reduced();
            if replaced.is_empty() {
                continue;
            }
            for l in replaced.letters() {
                occurs[l.generator()].insert(j);
            }
            heap.push(Reverse((replaced.len(), j)));
            relators[j] = Some(replaced.letters().to_vec());
        }
    }
    let kept: Vec<usize> = (0..p.generator_count()).filter(|&g| alive[g]).collect();
    let renumber: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let mut seen = BTreeSet::new();
    let words: Vec<Word> = relators
        .into_iter()
        .flatten()
        .map(|r| Word::new(r.into_iter().map(|l| Letter::new(renumber[&l.generator()], l.is_inverse()))))
        .filter(|w| seen.insert(w.clone()))
        .collect();
    let names = kept.iter().map(|&g| p.generators()[g].clone()).collect();
    Presentation::untagged(names, words).expect("renumbered generators stay in range")
}

/// Verdict on whether a complex is simply connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimpleConnectivity {
    SimplyConnected,
    NotSimplyConnected,
    Unknown,
}

/// Certifies triviality of `π_1` by Tietze elimination, then by coset
/// enumeration within `budget` rows; a nontrivial abelianization or finite
/// quotient certifies the opposite.
pub fn certify_simply_connected(
    complex: &SimplicialComplex,
    budget: usize,
) -> Result<SimpleConnectivity, PresentationError> {
    let p = simplify(&edge_path_presentation(complex)?);
    if p.generator_count() == 0 {
        return Ok(SimpleConnectivity::SimplyConnected);
    }
    if !abelianization(&p).is_trivial() {
        return Ok(SimpleConnectivity::NotSimplyConnected);
    }
    Ok(match coset_enumerate(&p, &[], budget) {
        CosetOutcome::Index(1) => SimpleConnectivity::SimplyConnected,
        CosetOutcome::Index(_) => SimpleConnectivity::NotSimplyConnected,
        CosetOutcome::Exhausted => SimpleConnectivity::Unknown,
    })
}
