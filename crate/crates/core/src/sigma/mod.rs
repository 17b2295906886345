//! Finitely described assignments `σ: ℤ → covers of L` and the finiteness
//! decisions they determine.
//!
//! A [`SigmaSpec`] lists finitely many exceptional heights and one tail rule
//! per sign. An entry *recurs* when the tail rule uses it at infinitely many
//! heights; only recurring entries matter for the decisions.

mod builders;
mod constants;
mod registry;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

pub use builders::{induced_sigma, sigma_f, sigma_field_example, sigma_prime_set, SigmaFInput};
pub use constants::{
    alpha, alpha_times_exceeds, b_term, choose_constants, min_kernel_length_bound,
    separation_ratio_check, BTerm, RatioBound, SeparationFailure,
};
pub use registry::{CoverDegree, EntryKind, RegistryEntry};

use crate::covers::{CoverComplex, CoverError};
use crate::groups::{certify_simply_connected, PresentationError, SimpleConnectivity};
use crate::homology::{is_prime, HomologyError, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SigmaError {
    #[error("entry {0:?} is not in the registry")]
    UnknownEntry(String),
    #[error("entry id {0:?} appears twice in the registry")]
    DuplicateEntry(String),
    #[error("recurrent set is empty")]
    EmptyRecurrent,
    #[error("height {0} is prime but no family member is registered for it")]
    UnregisteredPrime(i64),
    #[error("entry {entry:?} has no homology certificate over {ring} covering degree {degree}")]
    MissingHomology { entry: String, ring: RingSpec, degree: usize },
    #[error("entry {0:?} does not record whether it is simply connected")]
    MissingSimplyConnected(String),
    #[error("entry {0:?} lacks a finiteness certificate for its quotient")]
    HypothesisUnset(String),
    #[error("specs use different registries")]
    RegistryMismatch,
    #[error("could not find where the specs differ below height {0}")]
    Undecided(u64),
    #[error("support height C_{0}^(2^{0}) overflows")]
    HeightOverflow(usize),
    #[error("support heights collide at index {0}")]
    HeightCollision(usize),
    #[error("support formula index {0} has no constant")]
    MissingConstant(usize),
    #[error("entry {0:?} is a disconnected cover")]
    DisconnectedEntry(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("spec file: {0}")]
    File(String),
}

/// Entries at the heights `C_i^(2^i)` for the listed indices `i`, `default`
/// at every other height of the sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportFormula {
    /// `C_1, C_2, …`.
    pub constants: Vec<u64>,
    /// `(i, entry)` pairs, `i >= 1`.
    pub assignments: Vec<(usize, String)>,
    pub default: String,
}

impl SupportFormula {
    /// `C_i^(2^i)`.
    pub fn height(&self, i: usize) -> Result<i64, SigmaError> {
        let c = *self.constants.get(i.wrapping_sub(1)).ok_or(SigmaError::MissingConstant(i))?;
        let exponent = 1u32.checked_shl(i as u32).ok_or(SigmaError::HeightOverflow(i))?;
        i64::try_from(c)
            .ok()
            .and_then(|c| c.checked_pow(exponent))
            .ok_or(SigmaError::HeightOverflow(i))
    }

    /// Height → entry for the assigned indices.
    pub fn support(&self) -> Result<BTreeMap<i64, String>, SigmaError> {
        let mut out = BTreeMap::new();
        for (i, id) in &self.assignments {
            if out.insert(self.height(*i)?, id.clone()).is_some() {
                return Err(SigmaError::HeightCollision(*i));
            }
        }
        Ok(out)
    }
}

/// Members at prime heights, `otherwise` elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFamily {
    /// `(p, entry)` pairs; each prime is used at exactly one height.
    pub members: Vec<(u64, String)>,
    pub otherwise: String,
    /// Primes below this use `otherwise`.
    #[serde(default = "default_min_prime")]
    pub min_prime: u64,
}

fn default_min_prime() -> u64 {
    2
}

/// Rule for all heights of one sign outside the exceptions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tail {
    Constant(String),
    /// Round-robin: height `n >= 0` uses index `n mod len`, height `n < 0`
    /// uses index `(|n| - 1) mod len`.
    Recurrent(Vec<String>),
    PrimeFamily(PrimeFamily),
    SupportFormula(SupportFormula),
}

impl Tail {
    fn referenced(&self) -> Vec<&String> {
        match self {
            Tail::Constant(id) => vec![id],
            Tail::Recurrent(ids) => ids.iter().collect(),
            Tail::PrimeFamily(f) => f.members.iter().map(|(_, id)| id).chain([&f.otherwise]).collect(),
            Tail::SupportFormula(s) => s.assignments.iter().map(|(_, id)| id).chain([&s.default]).collect(),
        }
    }

    /// Entries used at infinitely many heights, individually.
    fn recurring(&self) -> Vec<&String> {
        match self {
            Tail::Constant(id) => vec![id],
            Tail::Recurrent(ids) => ids.iter().collect(),
            Tail::PrimeFamily(f) => vec![&f.otherwise],
            // Sparse support heights stand for an infinite family.
            Tail::SupportFormula(s) => s.assignments.iter().map(|(_, id)| id).chain([&s.default]).collect(),
        }
    }

    fn value(&self, n: i64) -> Result<&str, SigmaError> {
        match self {
            Tail::Constant(id) => Ok(id),
            Tail::Recurrent(ids) => {
                let k = if n >= 0 { n.unsigned_abs() } else { n.unsigned_abs() - 1 };
                Ok(&ids[(k % ids.len() as u64) as usize])
            }
            Tail::PrimeFamily(f) => {
                let m = n.unsigned_abs();
                if n > 0 && m >= f.min_prime && is_prime(m) {
                    f.members
                        .iter()
                        .find(|(p, _)| *p == m)
                        .map(|(_, id)| id.as_str())
                        .ok_or(SigmaError::UnregisteredPrime(n))
                } else {
                    Ok(&f.otherwise)
                }
            }
            Tail::SupportFormula(s) => {
                for (i, id) in &s.assignments {
                    if s.height(*i)? == n.abs() {
                        return Ok(id);
                    }
                }
                Ok(&s.default)
            }
        }
    }

    /// Heights past which the tail is periodic with the returned period.
    fn horizon(&self) -> Result<(u64, u64), SigmaError> {
        Ok(match self {
            Tail::Constant(_) => (0, 1),
            Tail::Recurrent(ids) => (0, ids.len() as u64),
            Tail::PrimeFamily(_) => (u64::MAX, 1),
            Tail::SupportFormula(s) => {
                let top = s.support()?.keys().map(|h| h.unsigned_abs()).max().unwrap_or(0);
                (top, 1)
            }
        })
    }
}

/// A finitely described `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSpec {
    registry: Vec<RegistryEntry>,
    base_id: String,
    exceptions: BTreeMap<i64, String>,
    positive_tail: Tail,
    negative_tail: Tail,
}

/// Verdict of a finiteness decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// An entry recurring infinitely often with nonvanishing invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub entry: String,
    /// Homology degree, absent for simple-connectivity witnesses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

impl Verdict {
    fn yes() -> Self {
        Verdict { holds: true, witness: None }
    }

    fn no(entry: &str, degree: Option<usize>) -> Self {
        Verdict { holds: false, witness: Some(Witness { entry: entry.to_string(), degree }) }
    }

    pub fn label(&self) -> &'static str {
        if self.holds {
            "YES"
        } else {
            "NO"
        }
    }
}

/// `FP_k` for a given `k`, or `FP`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FpTarget {
    Degree(usize),
    All,
}

impl std::str::FromStr for FpTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("fp") {
            return Ok(FpTarget::All);
        }
        s.parse().map(FpTarget::Degree).map_err(|_| format!("expected an integer or FP, got {s:?}"))
    }
}

impl SigmaSpec {
    pub fn new(
        registry: Vec<RegistryEntry>,
        base_id: impl Into<String>,
        exceptions: BTreeMap<i64, String>,
        positive_tail: Tail,
        negative_tail: Tail,
    ) -> Result<Self, SigmaError> {
        let spec = SigmaSpec {
            registry,
            base_id: base_id.into(),
            exceptions,
            positive_tail,
            negative_tail,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), SigmaError> {
        let mut ids = BTreeSet::new();
        for e in &self.registry {
            if !ids.insert(e.id.as_str()) {
                return Err(SigmaError::DuplicateEntry(e.id.clone()));
            }
        }
        for tail in [&self.positive_tail, &self.negative_tail] {
            if let Tail::Recurrent(v) = tail {
                if v.is_empty() {
                    return Err(SigmaError::EmptyRecurrent);
                }
            }
            if let Tail::SupportFormula(s) = tail {
                s.support()?;
            }
        }
        let referenced = std::iter::once(&self.base_id)
            .chain(self.exceptions.values())
            .chain(self.positive_tail.referenced())
            .chain(self.negative_tail.referenced());
        for id in referenced {
            if !ids.contains(id.as_str()) {
                return Err(SigmaError::UnknownEntry(id.clone()));
            }
        }
        Ok(())
    }

    pub fn registry(&self) -> &[RegistryEntry] {
        &self.registry
    }

    pub fn base_id(&self) -> &str {
        &self.base_id
    }

    pub fn exceptions(&self) -> &BTreeMap<i64, String> {
        &self.exceptions
    }

    pub fn positive_tail(&self) -> &Tail {
        &self.positive_tail
    }

    pub fn negative_tail(&self) -> &Tail {
        &self.negative_tail
    }

    pub fn entry(&self, id: &str) -> Result<&RegistryEntry, SigmaError> {
        self.registry.iter().find(|e| e.id == id).ok_or_else(|| SigmaError::UnknownEntry(id.to_string()))
    }

    /// The entry at height `n`; exceptions override the tails. The
    /// nonnegative tail covers height 0.
    pub fn sigma_value(&self, n: i64) -> Result<&str, SigmaError> {
        if let Some(id) = self.exceptions.get(&n) {
            return Ok(id);
        }
        if n >= 0 {
            self.positive_tail.value(n)
        } else {
            self.negative_tail.value(n)
        }
    }

    fn all_referenced(&self) -> BTreeSet<&String> {
        std::iter::once(&self.base_id)
            .chain(self.exceptions.values())
            .chain(self.positive_tail.referenced())
            .chain(self.negative_tail.referenced())
            .collect()
    }

    fn recurring(&self) -> Vec<&String> {
        let mut seen = BTreeSet::new();
        self.positive_tail
            .recurring()
            .into_iter()
            .chain(self.negative_tail.recurring())
            .filter(|id| seen.insert(*id))
            .collect()
    }

    fn check_hypothesis(&self) -> Result<(), SigmaError> {
        for id in self.all_referenced() {
            if !self.entry(id)?.quotient_hypothesis() {
                return Err(SigmaError::HypothesisUnset(id.clone()));
            }
        }
        Ok(())
    }

    /// First degree below the target with nonvanishing homology over `ring`.
    fn nonvanishing(&self, id: &str, ring: RingSpec, target: FpTarget) -> Result<Option<usize>, SigmaError> {
        let limit = match target {
            FpTarget::Degree(k) => Some(k),
            FpTarget::All => None,
        };
        let missing = |degree| SigmaError::MissingHomology { entry: id.to_string(), ring, degree };
        let h = self.entry(id)?.homology_over(ring).ok_or_else(|| missing(0))?;
        h.first_nonvanishing(limit).map_err(missing)
    }

    /// `FP_k(R)` holds iff every recurring entry has `H̃_i(·; R) = 0` for
    /// `i < k` (all `i` for `FP`). Prime-family members are each used once, but
    /// infinitely many of them exist, so a member with nonvanishing homology
    /// over `R` is a witness unless `R` is its own prime field.
    pub fn fp_decide(&self, ring: RingSpec, target: FpTarget) -> Result<Verdict, SigmaError> {
        self.check_hypothesis()?;
        for id in self.recurring() {
            if let Some(i) = self.nonvanishing(id, ring, target)? {
                return Ok(Verdict::no(id, Some(i)));
            }
        }
        for tail in [&self.positive_tail, &self.negative_tail] {
            if let Tail::PrimeFamily(f) = tail {
                for (p, id) in &f.members {
                    if ring == RingSpec::PrimeField(*p) {
                        continue;
                    }
                    if let Some(i) = self.nonvanishing(id, ring, target)? {
                        return Ok(Verdict::no(id, Some(i)));
                    }
                }
            }
        }
        Ok(Verdict::yes())
    }

    /// Finitely presented iff every recurring entry (and every prime-family
    /// member) is simply connected.
    pub fn finitely_presented_decide(&self) -> Result<Verdict, SigmaError> {
        self.check_hypothesis()?;
        let mut candidates: Vec<&String> = self.recurring();
        for tail in [&self.positive_tail, &self.negative_tail] {
            if let Tail::PrimeFamily(f) = tail {
                candidates.extend(f.members.iter().map(|(_, id)| id));
            }
        }
        for id in candidates {
            match self.entry(id)?.simply_connected {
                Some(true) => {}
                Some(false) => return Ok(Verdict::no(id, None)),
                None => return Err(SigmaError::MissingSimplyConnected(id.clone())),
            }
        }
        Ok(Verdict::yes())
    }

    /// `min{|n| : σ(n) ≠ σ'(n)}`, `None` when the specs agree everywhere.
    pub fn m_of(&self, other: &SigmaSpec) -> Result<Option<u64>, SigmaError> {
        let ids = |s: &SigmaSpec| s.registry.iter().map(|e| e.id.clone()).collect::<BTreeSet<_>>();
        if ids(self) != ids(other) {
            return Err(SigmaError::RegistryMismatch);
        }
        let mut horizon = 0u64;
        let mut period = 1u64;
        let mut unbounded = false;
        for spec in [self, other] {
            if let Some(top) = spec.exceptions.keys().map(|h| h.unsigned_abs()).max() {
                horizon = horizon.max(top);
            }
            for tail in [&spec.positive_tail, &spec.negative_tail] {
                let (h, p) = tail.horizon()?;
                if h == u64::MAX {
                    unbounded = true;
                } else {
                    horizon = horizon.max(h);
                }
                period = num_integer::lcm(period, p);
            }
        }
        let tails_equal =
            self.positive_tail == other.positive_tail && self.negative_tail == other.negative_tail;
        let limit = if tails_equal || !unbounded {
            horizon.saturating_add(period).saturating_add(1)
        } else {
            horizon.max(SCAN_LIMIT)
        };
        let mut m = 0u64;
        while m <= limit {
            let n = m as i64;
            for h in [n, -n] {
                if self.sigma_value(h)? != other.sigma_value(h)? {
                    return Ok(Some(m));
                }
            }
            // Jump over stretches where both specs follow constant tails.
            m = self.next_event(other, m).unwrap_or(m + 1).max(m + 1);
        }
        if tails_equal || !unbounded {
            Ok(None)
        } else {
            Err(SigmaError::Undecided(limit))
        }
    }

    /// Smallest event height above `m` when both specs only have constant
    /// tails and sparse data, so heights in between need not be scanned.
    fn next_event(&self, other: &SigmaSpec, m: u64) -> Option<u64> {
        let simple = |t: &Tail| matches!(t, Tail::Constant(_) | Tail::SupportFormula(_));
        if ![self, other].iter().all(|s| simple(&s.positive_tail) && simple(&s.negative_tail)) {
            return None;
        }
        let mut events = BTreeSet::new();
        for spec in [self, other] {
            events.extend(spec.exceptions.keys().map(|h| h.unsigned_abs()));
            for tail in [&spec.positive_tail, &spec.negative_tail] {
                if let Tail::SupportFormula(s) = tail {
                    events.extend(s.support().ok()?.keys().map(|h| h.unsigned_abs()));
                }
            }
        }
        Some(events.range(m + 1..).next().copied().unwrap_or(u64::MAX - 1))
    }

    pub fn to_file(&self) -> SigmaSpecFile {
        SigmaSpecFile {
            registry: RegistryRef::Inline(self.registry.clone()),
            base_id: self.base_id.clone(),
            exceptions: self.exceptions.iter().map(|(&h, id)| (h, id.clone())).collect(),
            positive_tail: self.positive_tail.clone(),
            negative_tail: self.negative_tail.clone(),
        }
    }
}

const SCAN_LIMIT: u64 = 1 << 20;

/// Registry given inline or as a path to a JSON list of entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RegistryRef {
    Path(String),
    Inline(Vec<RegistryEntry>),
}

/// On-disk form of a [`SigmaSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaSpecFile {
    pub registry: RegistryRef,
    pub base_id: String,
    #[serde(default)]
    pub exceptions: Vec<(i64, String)>,
    pub positive_tail: Tail,
    pub negative_tail: Tail,
}

impl SigmaSpecFile {
    /// Resolves a path-valued registry relative to `dir`.
    pub fn into_spec(self, dir: Option<&Path>) -> Result<SigmaSpec, SigmaError> {
        let registry = match self.registry {
            RegistryRef::Inline(r) => r,
            RegistryRef::Path(p) => {
                let path = dir.map_or_else(|| p.clone().into(), |d| d.join(&p));
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| SigmaError::File(format!("{}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| SigmaError::File(format!("{}: {e}", path.display())))?
            }
        };
        let mut exceptions = BTreeMap::new();
        for (h, id) in self.exceptions {
            if exceptions.insert(h, id).is_some() {
                return Err(SigmaError::Invalid(format!("height {h} listed twice in exceptions")));
            }
        }
        SigmaSpec::new(registry, self.base_id, exceptions, self.positive_tail, self.negative_tail)
    }
}

/// Longest loop among the normal generators of a connected cover; 0 when the
/// total space is certified simply connected within `budget` coset rows.
pub fn r_upper_bound(cover: &CoverComplex, budget: usize) -> Result<usize, SigmaError> {
    if !cover.is_connected() {
        return Err(CoverError::CoverDisconnected.into());
    }
    if certify_simply_connected(cover.total(), budget)? == SimpleConnectivity::SimplyConnected {
        return Ok(0);
    }
    Ok(cover.normal_generators()?.iter().map(|l| l.len() - 1).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{DegreeHomology, HomologySummary};
    use num_bigint::BigUint;

    pub(crate) fn h1(ring: RingSpec, torsion: &[u32], rank: usize) -> HomologySummary {
        HomologySummary {
            ring,
            degrees: vec![
                DegreeHomology::default(),
                DegreeHomology { rank, torsion: torsion.iter().map(|&t| BigUint::from(t)).collect() },
            ],
            complete: true,
        }
    }

    fn entry(id: &str, torsion: &[u32], simply_connected: bool) -> RegistryEntry {
        let h = if torsion.is_empty() {
            HomologySummary { ring: RingSpec::Integers, degrees: vec![], complete: true }
        } else {
            h1(RingSpec::Integers, torsion, 0)
        };
        RegistryEntry::declared(id, "test", vec![h], Some(simply_connected), CoverDegree::Finite(1))
    }

    fn registry() -> Vec<RegistryEntry> {
        vec![entry("L", &[5], false), entry("U", &[], true), entry("C", &[3], false)]
    }

    #[test]
    fn exceptions_override_tails() {
        let s = SigmaSpec::new(
            registry(),
            "L",
            BTreeMap::from([(3, "C".to_string())]),
            Tail::Constant("L".into()),
            Tail::Constant("U".into()),
        )
        .unwrap();
        assert_eq!(s.sigma_value(3).unwrap(), "C");
        assert_eq!(s.sigma_value(4).unwrap(), "L");
        assert_eq!(s.sigma_value(-7).unwrap(), "U");
    }

    #[test]
    fn support_formula_heights() {
        let f = SupportFormula { constants: vec![4, 5], assignments: vec![(1, "C".into())], default: "U".into() };
        assert_eq!(f.height(1).unwrap(), 16);
        assert_eq!(f.height(2).unwrap(), 625);
        assert_eq!(f.height(3), Err(SigmaError::MissingConstant(3)));
        let s = SigmaSpec::new(registry(), "L", BTreeMap::new(), Tail::SupportFormula(f), Tail::Constant("U".into()))
            .unwrap();
        assert_eq!(s.sigma_value(16).unwrap(), "C");
        assert_eq!(s.sigma_value(17).unwrap(), "U");
    }

    #[test]
    fn unknown_ids_rejected() {
        let err = SigmaSpec::new(registry(), "L", BTreeMap::new(), Tail::Constant("X".into()), Tail::Constant("U".into()));
        assert_eq!(err.unwrap_err(), SigmaError::UnknownEntry("X".into()));
    }

    #[test]
    fn recurrent_torsion_truth_table() {
        let s = SigmaSpec::new(registry(), "L", BTreeMap::new(), Tail::Recurrent(vec!["L".into()]), Tail::Constant("U".into()))
            .unwrap();
        let fp2 = FpTarget::Degree(2);
        assert!(s.fp_decide(RingSpec::Rationals, fp2).unwrap().holds);
        let no = s.fp_decide(RingSpec::PrimeField(5), fp2).unwrap();
        assert_eq!(no, Verdict::no("L", Some(1)));
        assert!(s.fp_decide(RingSpec::PrimeField(7), fp2).unwrap().holds);
        assert!(!s.fp_decide(RingSpec::Integers, fp2).unwrap().holds);
        // Monotone in k.
        assert!(s.fp_decide(RingSpec::Integers, FpTarget::Degree(1)).unwrap().holds);
        assert!(!s.finitely_presented_decide().unwrap().holds);
    }

    #[test]
    fn missing_certificates_are_errors() {
        let mut reg = registry();
        reg[0].homology.clear();
        let s = SigmaSpec::new(reg.clone(), "L", BTreeMap::new(), Tail::Constant("L".into()), Tail::Constant("U".into()))
            .unwrap();
        assert!(matches!(
            s.fp_decide(RingSpec::Rationals, FpTarget::Degree(2)),
            Err(SigmaError::MissingHomology { .. })
        ));
        reg[0].quotient_is_finite = false;
        let s = SigmaSpec::new(reg, "L", BTreeMap::new(), Tail::Constant("U".into()), Tail::Constant("U".into())).unwrap();
        assert_eq!(
            s.fp_decide(RingSpec::Rationals, FpTarget::Degree(2)),
            Err(SigmaError::HypothesisUnset("L".into()))
        );
    }

    #[test]
    fn disagreement_heights() {
        let make = |ex: &[(i64, &str)]| {
            SigmaSpec::new(
                registry(),
                "L",
                ex.iter().map(|&(h, id)| (h, id.to_string())).collect(),
                Tail::Constant("U".into()),
                Tail::Constant("U".into()),
            )
            .unwrap()
        };
        let a = make(&[(0, "L")]);
        assert_eq!(a.m_of(&a).unwrap(), None);
        let b = make(&[(0, "L"), (16, "C"), (-16, "C")]);
        assert_eq!(a.m_of(&b).unwrap(), Some(16));
        assert_eq!(b.m_of(&a).unwrap(), Some(16));
        let mut other = registry();
        other.pop();
        let c = SigmaSpec::new(other, "L", BTreeMap::new(), Tail::Constant("U".into()), Tail::Constant("U".into())).unwrap();
        assert_eq!(a.m_of(&c), Err(SigmaError::RegistryMismatch));
    }

    #[test]
    fn spec_file_round_trip() {
        let s = SigmaSpec::new(
            registry(),
            "L",
            BTreeMap::from([(3, "C".to_string())]),
            Tail::Recurrent(vec!["L".into(), "C".into()]),
            Tail::Constant("U".into()),
        )
        .unwrap();
        let json = serde_json::to_string(&s.to_file()).unwrap();
        assert!(json.contains("\"recurrent\":[\"L\",\"C\"]"));
        assert!(json.contains("\"exceptions\":[[3,\"C\"]]"));
        let back: SigmaSpecFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_spec(None).unwrap(), s);
    }

    #[test]
    fn fp_target_parsing() {
        assert_eq!("2".parse::<FpTarget>().unwrap(), FpTarget::Degree(2));
        assert_eq!("FP".parse::<FpTarget>().unwrap(), FpTarget::All);
        assert!("x".parse::<FpTarget>().is_err());
    }

    #[test]
    fn r_bounds_of_small_covers() {
        use crate::complex::standard;
        use crate::covers::{build_cover, Permutation, VoltageAssignment};
        let swap = Permutation::transposition(2, 0, 1);
        let doubled = build_cover(&VoltageAssignment::new(standard::cycle(4), 2, [((3, 0), swap)]).unwrap()).unwrap();
        assert_eq!(r_upper_bound(&doubled, 100).unwrap(), 8);
        let trivial = build_cover(&VoltageAssignment::identity(standard::cycle(5), 1).unwrap()).unwrap();
        assert_eq!(r_upper_bound(&trivial, 100).unwrap(), 5);
        let disk = build_cover(&VoltageAssignment::identity(standard::simplex(2), 1).unwrap()).unwrap();
        assert_eq!(r_upper_bound(&disk, 100).unwrap(), 0);
        let split = build_cover(&VoltageAssignment::identity(standard::cycle(4), 2).unwrap()).unwrap();
        assert!(r_upper_bound(&split, 100).is_err());
    }
}
