use std::fmt;

use serde::{Deserialize, Serialize};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    generator: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator: generator as u32, inverse }
    }

    pub fn gen(generator: usize) -> Self {
        Self::new(generator, false)
    }

    /// `+g` is generator `g - 1`, `-g` its inverse. Zero is not a letter.
    pub fn from_signed(signed: i32) -> Option<Self> {
        match signed {
            0 => None,
            s => Some(Letter::new(s.unsigned_abs() as usize - 1, s < 0)),
        }
    }

    pub fn to_signed(self) -> i32 {
        let g = self.generator as i32 + 1;
        if self.inverse {
            -g
        } else {
            g
        }
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    /// Column index in a coset table: `2g` for the generator, `2g + 1` for its inverse.
    pub(crate) fn column(self) -> usize {
        2 * self.generator as usize + self.inverse as usize
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in the free group.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Freely reduces `letters`.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Builds a word from signed one-based generator indices, skipping zeros.
    pub fn from_signed(signed: &[i32]) -> Self {
        Word::new(signed.iter().filter_map(|&s| Letter::from_signed(s)))
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        Word::new((0..k.unsigned_abs()).flat_map(|_| base.letters.iter().copied()))
    }

    /// Strips inverse pairs between the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut start = 0;
        let mut end = self.letters.len();
        while end - start >= 2 && self.letters[start] == self.letters[end - 1].inverse() {
            start += 1;
            end -= 1;
        }
        Word { letters: self.letters[start..end].to_vec() }
    }

    /// Exponent sum of each generator.
    pub fn exponent_vector(&self, generator_count: usize) -> Vec<i64> {
        let mut v = vec![0; generator_count];
        for l in &self.letters {
            v[l.generator()] += l.exponent();
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator()).max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}{}", l.generator, if l.inverse { "'" } else { "" })?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_signed().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let signed = Vec::<i32>::deserialize(deserializer)?;
        if signed.contains(&0) {
            return Err(serde::de::Error::custom("0 is not a signed generator index"));
        }
        Ok(Word::from_signed(&signed))
    }
}
