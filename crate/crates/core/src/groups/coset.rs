//! Todd–Coxeter coset enumeration, HLT strategy without lookahead.

use serde::{Deserialize, Serialize};

use super::{Letter, Presentation, Word};

const UNDEFINED: usize = usize::MAX;

/// Outcome of an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CosetOutcome {
    /// The table closed; the subgroup has this index.
    Index(usize),
    /// The row budget ran out before the table closed.
    Exhausted,
}

impl CosetOutcome {
    pub fn index(self) -> Option<usize> {
        match self {
            CosetOutcome::Index(n) => Some(n),
            CosetOutcome::Exhausted => None,
        }
    }
}

/// A closed coset table with live cosets renumbered `0..index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    generator_count: usize,
    rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    /// Coset reached from `coset` by one letter.
    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.rows[coset][letter.column()]
    }

    /// Coset reached from `coset` by reading `word`.
    pub fn trace(&self, coset: usize, word: &Word) -> usize {
        word.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }
}

fn inverse_column(c: usize) -> usize {
    c ^ 1
}

struct Enumerator {
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    budget: usize,
    width: usize,
    queue: Vec<usize>,
}

struct OutOfRows;

impl Enumerator {
    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, OutOfRows> {
        if self.table.len() >= self.budget {
            return Err(OutOfRows);
        }
        let d = self.table.len();
        self.table.push(vec![UNDEFINED; self.width]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][inverse_column(x)] = c;
        Ok(d)
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop] = keep;
            self.queue.push(drop);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.width {
                let f = self.table[e][x];
                if f == UNDEFINED {
                    continue;
                }
                let xi = inverse_column(x);
                if self.table[f][xi] == e {
                    self.table[f][xi] = UNDEFINED;
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.table[e1][x] != UNDEFINED {
                    let g = self.table[e1][x];
                    self.merge(f1, g);
                } else if self.table[f1][xi] != UNDEFINED {
                    let g = self.table[f1][xi];
                    self.merge(e1, g);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][xi] = e1;
                }
            }
        }
    }

    /// Scans `word` at `c`, defining cosets to complete the scan.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<(), OutOfRows> {
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, word.len() as isize - 1);
        loop {
            while i <= j && self.table[f][word[i as usize]] != UNDEFINED {
                f = self.table[f][word[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inverse_column(word[j as usize])] != UNDEFINED {
                b = self.table[b][inverse_column(word[j as usize])];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i as usize];
                self.table[f][x] = b;
                self.table[b][inverse_column(x)] = f;
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

fn columns(word: &Word) -> Vec<usize> {
    word.letters().iter().map(|l| l.column()).collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`, using at most `budget` table rows.
pub fn coset_enumerate(p: &Presentation, subgroup: &[Word], budget: usize) -> CosetOutcome {
    match coset_table(p, subgroup, budget) {
        Some(t) => CosetOutcome::Index(t.index()),
        None => CosetOutcome::Exhausted,
    }
}

/// As [`coset_enumerate`], returning the closed table.
pub fn coset_table(p: &Presentation, subgroup: &[Word], budget: usize) -> Option<CosetTable> {
    let width = 2 * p.generator_count();
    let mut en = Enumerator {
        table: vec![vec![UNDEFINED; width]],
        parent: vec![0],
        budget: budget.max(1),
        width,
        queue: Vec::new(),
    };
    let relators: Vec<Vec<usize>> =
        p.relators().iter().map(|r| columns(&r.cyclically_reduced())).collect();
    let run = |en: &mut Enumerator| -> Result<(), OutOfRows> {
        for h in subgroup {
            let w = columns(h);
            let start = en.rep(0);
            en.scan_and_fill(start, &w)?;
        }
        let mut c = 0;
        while c < en.table.len() {
            for r in &relators {
                if !en.live(c) {
                    break;
                }
                en.scan_and_fill(c, r)?;
            }
            for x in 0..width {
                if !en.live(c) {
                    break;
                }
                if en.table[c][x] == UNDEFINED {
                    en.define(c, x)?;
                }
            }
            c += 1;
        }
        Ok(())
    };
    run(&mut en).ok()?;
    let live: Vec<usize> = (0..en.table.len()).filter(|&c| en.live(c)).collect();
    let mut renumber = vec![UNDEFINED; en.table.len()];
    for (i, &c) in live.iter().enumerate() {
        renumber[c] = i;
    }
    let rows = live
        .iter()
        .map(|&c| en.table[c].iter().map(|&d| renumber[d]).collect())
        .collect();
    Some(CosetTable { generator_count: p.generator_count(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{generated_group, Permutation};

    fn pres(n: usize, rels: &[&[i32]]) -> Presentation {
        Presentation::numbered(n, rels.iter().map(|r| Word::from_signed(r)).collect()).unwrap()
    }

    #[test]
    fn cyclic_group_of_order_three() {
        assert_eq!(coset_enumerate(&pres(1, &[&[1, 1, 1]]), &[], 100), CosetOutcome::Index(3));
    }

    #[test]
    fn trivial_group() {
        assert_eq!(coset_enumerate(&pres(1, &[&[1]]), &[], 100), CosetOutcome::Index(1));
    }

    #[test]
    fn free_abelian_exhausts() {
        let p = pres(3, &[&[1, 2, 3], &[3, 2, 1]]);
        assert_eq!(coset_enumerate(&p, &[], 10_000), CosetOutcome::Exhausted);
    }

    #[test]
    fn subgroup_index() {
        // S_3 = <a, b | a^2, b^3, (ab)^2>, subgroup <a> has index 3.
        let p = pres(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]);
        assert_eq!(coset_enumerate(&p, &[], 1000), CosetOutcome::Index(6));
        assert_eq!(coset_enumerate(&p, &[Word::from_signed(&[1])], 1000), CosetOutcome::Index(3));
    }

    #[test]
    fn matches_permutation_group_orders() {
        // (presentation, permutation generators realizing it faithfully)
        let s4 = pres(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2, 1, 2, 1, 2]]);
        let s4_gens = [
            Permutation::transposition(4, 0, 1),
            Permutation::from_images(vec![0, 2, 3, 1]).unwrap(),
        ];
        assert_eq!(coset_enumerate(&s4, &[], 10_000).index(), Some(generated_group(4, &s4_gens).len()));
        let d5 = pres(2, &[&[1, 1, 1, 1, 1], &[2, 2], &[2, 1, 2, 1]]);
        let d5_gens = [Permutation::rotation(5, 1), Permutation::from_images(vec![0, 4, 3, 2, 1]).unwrap()];
        assert_eq!(coset_enumerate(&d5, &[], 10_000).index(), Some(generated_group(5, &d5_gens).len()));
    }

    #[test]
    fn table_is_a_permutation_action() {
        let p = pres(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]);
        let t = coset_table(&p, &[], 1000).unwrap();
        for g in 0..2 {
            let l = Letter::gen(g);
            for c in 0..t.index() {
                assert_eq!(t.act(t.act(c, l), l.inverse()), c);
            }
        }
        for r in p.relators() {
            assert!((0..t.index()).all(|c| t.trace(c, r) == c));
        }
    }
}
