//! Exact reduced simplicial homology over ℤ, ℚ and 𝔽_p.

mod chain;
mod matrix;
mod snf;
mod sparse;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use chain::{chain_complex, ChainComplex};
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, smith_normal_form, SmithForm};
pub use sparse::SparseMatrix;

use crate::complex::SimplicialComplex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unrecognized ring {0:?}: expected Z, Q or F<p>")]
    UnknownRing(String),
    #[error("certificate over {found} cannot answer a question over {wanted}")]
    RingMismatch { found: RingSpec, wanted: RingSpec },
}

/// Coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self, HomologyError> {
        if is_prime(p) {
            Ok(RingSpec::PrimeField(p))
        } else {
            Err(HomologyError::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, RingSpec::Integers)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = HomologyError;

    /// Accepts `Z`, `Q` and `F<p>` (also `Fp<p>`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            _ => {
                let digits = s
                    .strip_prefix("Fp")
                    .or_else(|| s.strip_prefix('F'))
                    .ok_or_else(|| HomologyError::UnknownRing(s.to_string()))?;
                let p: u64 =
                    digits.parse().map_err(|_| HomologyError::UnknownRing(s.to_string()))?;
                RingSpec::prime_field(p)
            }
        }
    }
}

impl Serialize for RingSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RingSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Reduced homology in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeHomology {
    /// Betti number over the ring (free rank over ℤ).
    pub rank: usize,
    /// Invariant factors `> 1`, divisibility chain; always empty over a field.
    #[serde(default, with = "torsion_format", skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<BigUint>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology per degree over one ring, as persisted in certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub ring: RingSpec,
    /// `degrees[i]` is `H̃_i`.
    pub degrees: Vec<DegreeHomology>,
    /// When true, every degree past the list vanishes. Hand-entered
    /// certificates may cover only low degrees.
    #[serde(default = "default_true")]
    pub complete: bool,
}

fn default_true() -> bool {
    true
}

impl HomologySummary {
    /// `H̃_i`, or `None` if the certificate does not cover degree `i`.
    pub fn degree(&self, i: usize) -> Option<DegreeHomology> {
        match self.degrees.get(i) {
            Some(h) => Some(h.clone()),
            None if self.complete => Some(DegreeHomology::default()),
            None => None,
        }
    }

    /// Number of degrees the certificate speaks about (unbounded when complete).
    pub fn covers_degree(&self, i: usize) -> bool {
        self.complete || i < self.degrees.len()
    }

    /// Ring-change by universal coefficients from an integral certificate.
    ///
    /// `dim H̃_i(K; 𝔽_p) = b_i + t_i(p) + t_{i-1}(p)` where `t_j(p)` counts the
    /// invariant factors of `H̃_j(K; ℤ)` divisible by `p`; over ℚ only free
    /// ranks survive.
    pub fn change_ring(&self, ring: RingSpec) -> Result<HomologySummary, HomologyError> {
        if self.ring == ring {
            return Ok(self.clone());
        }
        if self.ring != RingSpec::Integers {
            return Err(HomologyError::RingMismatch { found: self.ring, wanted: ring });
        }
        let count_divisible = |h: &DegreeHomology, p: u64| {
            h.torsion.iter().filter(|t| (*t % p).is_zero()).count()
        };
        let degrees = match ring {
            RingSpec::Integers => unreachable!("handled above"),
            RingSpec::Rationals => self
                .degrees
                .iter()
                .map(|h| DegreeHomology { rank: h.rank, torsion: Vec::new() })
                .collect(),
            RingSpec::PrimeField(p) => {
                let mut out = Vec::with_capacity(self.degrees.len() + 1);
                for i in 0..self.degrees.len() {
                    let below = if i == 0 { 0 } else { count_divisible(&self.degrees[i - 1], p) };
                    let h = &self.degrees[i];
                    out.push(DegreeHomology {
                        rank: h.rank + count_divisible(h, p) + below,
                        torsion: Vec::new(),
                    });
                }
                // Tor of the top listed degree lands one degree up.
                if let Some(last) = self.degrees.last() {
                    let extra = count_divisible(last, p);
                    if extra > 0 {
                        out.push(DegreeHomology { rank: extra, torsion: Vec::new() });
                    }
                }
                if !self.complete {
                    // The shifted Tor term of an uncovered degree is unknown.
                    out.truncate(self.degrees.len());
                }
                out
            }
        };
        Ok(HomologySummary { ring, degrees: trim(degrees, self.complete), complete: self.complete })
    }

    /// True iff `H̃_i` vanishes for all `i < k`; `None` if some such degree is
    /// not covered by the certificate.
    pub fn vanishes_below(&self, k: usize) -> Option<bool> {
        let mut all = true;
        for i in 0..k {
            {
                let h = self.degree(i)?;
                all &= h.is_zero()
            }
        }
        Some(all)
    }

    /// First degree `< k` (or any degree when `k` is `None`) with nonzero
    /// homology. `Err(i)` reports the first uncovered degree.
    pub fn first_nonvanishing(&self, k: Option<usize>) -> Result<Option<usize>, usize> {
        let limit = match k {
            Some(k) => k,
            None if self.complete => self.degrees.len(),
            None => return Err(self.degrees.len()),
        };
        for i in 0..limit {
            match self.degree(i) {
                Some(h) if !h.is_zero() => return Ok(Some(i)),
                Some(_) => {}
                None => return Err(i),
            }
        }
        Ok(None)
    }

    pub fn is_acyclic(&self) -> bool {
        self.complete && self.degrees.iter().all(DegreeHomology::is_zero)
    }
}

fn trim(mut degrees: Vec<DegreeHomology>, complete: bool) -> Vec<DegreeHomology> {
    if complete {
        while degrees.last().is_some_and(DegreeHomology::is_zero) {
            degrees.pop();
        }
    }
    degrees
}

/// Reduced homology of `complex` over `ring`.
///
/// Over ℤ ranks and torsion come from invariant factors of the boundary
/// matrices; over a field from exact ranks in that field.
pub fn reduced_homology(complex: &SimplicialComplex, ring: RingSpec) -> HomologySummary {
    let chain = chain_complex(complex);
    let top = chain.top_dimension();
    let Some(top) = top else {
        return HomologySummary { ring, degrees: Vec::new(), complete: true };
    };
    // ranks[k] = rank of ∂_k, with ∂_0 the augmentation (rank 1 when nonempty).
    let mut ranks = vec![0usize; top + 2];
    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); top + 2];
    ranks[0] = usize::from(chain.rank(0) > 0);
    for k in 1..=top {
        let d = chain.boundary(k).expect("boundary below top");
        match ring {
            RingSpec::Integers => {
                let f = sparse::integer_invariant_factors(d);
                ranks[k] = f.len();
                factors[k] = f;
            }
            RingSpec::Rationals => ranks[k] = sparse::field_rank(&sparse::Rationals, d),
            RingSpec::PrimeField(p) => ranks[k] = sparse::field_rank(&sparse::PrimeField(p), d),
        }
    }
    let degrees = (0..=top)
        .map(|k| {
            let rank = chain.rank(k) - ranks[k] - ranks[k + 1];
            let mut torsion: Vec<BigUint> = factors[k + 1]
                .iter()
                .filter(|x| !x.is_one())
                .map(|x| x.magnitude().clone())
                .collect();
            torsion.sort();
            DegreeHomology { rank, torsion }
        })
        .collect();
    HomologySummary { ring, degrees: trim(degrees, true), complete: true }
}

/// Reduced homology over ℤ, ℚ and each listed prime field.
pub fn homology_certificates(
    complex: &SimplicialComplex,
    primes: &[u64],
) -> Result<Vec<HomologySummary>, HomologyError> {
    let mut rings = vec![RingSpec::Integers, RingSpec::Rationals];
    for &p in primes {
        rings.push(RingSpec::prime_field(p)?);
    }
    Ok(rings.into_iter().map(|r| reduced_homology(complex, r)).collect())
}

/// Convenience for tests and reports: `H̃_i` torsion as machine integers.
pub fn torsion_u64(h: &DegreeHomology) -> Vec<u64> {
    h.torsion.iter().map(|t| t.to_u64().expect("torsion fits in u64")).collect()
}

/// Checks that `factors` is a divisibility chain.
pub fn is_divisibility_chain(factors: &[BigInt]) -> bool {
    factors.windows(2).all(|w| w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && w[1].is_multiple_of(&w[0]))
}

pub(crate) mod torsion_format {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Factor {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| match x.to_u64() {
                Some(n) => Factor::Small(n),
                None => Factor::Big(x.to_string()),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Factor>::deserialize(d)?
            .into_iter()
            .map(|f| match f {
                Factor::Small(n) => Ok(BigUint::from(n)),
                Factor::Big(s) => s.parse().map_err(serde::de::Error::custom),
            })
            .collect()
    }
}
