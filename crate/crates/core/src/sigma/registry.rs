use std::fmt;

use serde::{Deserialize, Serialize};

use super::SigmaError;
use crate::covers::CoverComplex;
use crate::groups::{certify_simply_connected, SimpleConnectivity};
use crate::homology::{reduced_homology, HomologySummary, RingSpec};

/// Number of sheets, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverDegree {
    Finite(usize),
    Infinite,
}

impl fmt::Display for CoverDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverDegree::Finite(d) => write!(f, "{d}"),
            CoverDegree::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for CoverDegree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            CoverDegree::Finite(d) => serializer.serialize_u64(*d as u64),
            CoverDegree::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for CoverDegree {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(usize),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(0) => Err(serde::de::Error::custom("cover degree must be positive")),
            Raw::Number(d) => Ok(CoverDegree::Finite(d)),
            Raw::Text(s) if s == "infinite" => Ok(CoverDegree::Infinite),
            Raw::Text(s) => Err(serde::de::Error::custom(format!("bad cover degree {s:?}"))),
        }
    }
}

/// How an entry's data was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    /// Built from a voltage assignment; `cover` optionally names its file.
    Constructed {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cover: Option<String>,
    },
    /// Entered by hand; `note` says where the facts come from.
    Declared { note: String },
}

/// A cover of the base complex with the facts finiteness decisions consume.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryEntry {
    pub id: String,
    pub kind: EntryKind,
    /// Reduced homology certificates, at most one per ring.
    #[serde(default)]
    pub homology: Vec<HomologySummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simply_connected: Option<bool>,
    /// The deck group is finite, so the quotient is of every finiteness type.
    #[serde(default)]
    pub quotient_is_finite: bool,
    /// The quotient is known by other means to satisfy the finiteness
    /// hypotheses.
    #[serde(default)]
    pub quotient_fp_certified: bool,
    pub degree: CoverDegree,
}

impl RegistryEntry {
    /// Records homology over ℤ, ℚ and the given prime fields, and simple
    /// connectivity when it can be certified within `budget` coset rows.
    pub fn constructed(
        id: impl Into<String>,
        cover: &CoverComplex,
        primes: &[u64],
        budget: usize,
    ) -> Result<Self, SigmaError> {
        if !cover.is_connected() {
            return Err(SigmaError::DisconnectedEntry(id.into()));
        }
        let total = cover.total();
        let mut homology = vec![
            reduced_homology(total, RingSpec::Integers),
            reduced_homology(total, RingSpec::Rationals),
        ];
        for &p in primes {
            homology.push(reduced_homology(total, RingSpec::prime_field(p)?));
        }
        let simply_connected = match certify_simply_connected(total, budget)? {
            SimpleConnectivity::SimplyConnected => Some(true),
            SimpleConnectivity::NotSimplyConnected => Some(false),
            SimpleConnectivity::Unknown => None,
        };
        Ok(RegistryEntry {
            id: id.into(),
            kind: EntryKind::Constructed { cover: None },
            homology,
            simply_connected,
            quotient_is_finite: true,
            quotient_fp_certified: false,
            degree: CoverDegree::Finite(cover.degree()),
        })
    }

    /// Hand-entered entry.
    pub fn declared(
        id: impl Into<String>,
        note: impl Into<String>,
        homology: Vec<HomologySummary>,
        simply_connected: Option<bool>,
        degree: CoverDegree,
    ) -> Self {
        RegistryEntry {
            id: id.into(),
            kind: EntryKind::Declared { note: note.into() },
            homology,
            simply_connected,
            quotient_is_finite: matches!(degree, CoverDegree::Finite(_)),
            quotient_fp_certified: false,
            degree,
        }
    }

    pub fn with_quotient_fp_certified(mut self, certified: bool) -> Self {
        self.quotient_fp_certified = certified;
        self
    }

    /// True when the finiteness hypotheses on the quotient are met.
    pub fn quotient_hypothesis(&self) -> bool {
        self.quotient_is_finite || self.quotient_fp_certified
    }

    /// Homology over `ring`: a stored certificate for that ring, or one
    /// derived from the integral certificate by universal coefficients.
    pub fn homology_over(&self, ring: RingSpec) -> Option<HomologySummary> {
        if let Some(h) = self.homology.iter().find(|h| h.ring == ring) {
            return Some(h.clone());
        }
        self.homology
            .iter()
            .find(|h| h.ring == RingSpec::Integers)
            .and_then(|h| h.change_ring(ring).ok())
    }

    /// Re-derives the stored certificates from the built cover.
    pub fn matches_cover(&self, cover: &CoverComplex) -> bool {
        self.homology.iter().all(|h| reduced_homology(cover.total(), h.ring) == *h)
    }
}
