//! The `k`-related comparison of length spectra.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::SpectrumError;

/// A spectrum known exactly up to `ceiling`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScannedSpectrum {
    pub lengths: BTreeSet<u64>,
    pub ceiling: u64,
}

impl ScannedSpectrum {
    pub fn new(lengths: impl IntoIterator<Item = u64>, ceiling: u64) -> Result<Self, SpectrumError> {
        let lengths: BTreeSet<u64> = lengths.into_iter().collect();
        if let Some(&length) = lengths.range(ceiling + 1..).next() {
            return Err(SpectrumError::AboveCeiling { length, ceiling });
        }
        Ok(ScannedSpectrum { lengths, ceiling })
    }
}

/// For every `l ≥ k² + 2k + 2` up to the common ceiling: each `l` in one
/// spectrum has some `l'` in the other with `l/k ≤ l' ≤ lk`, in both
/// directions.
pub fn k_related(h: &ScannedSpectrum, h2: &ScannedSpectrum, k: u64) -> Result<bool, SpectrumError> {
    if k == 0 {
        return Err(SpectrumError::ZeroK);
    }
    let threshold = k * k + 2 * k + 2;
    let ceiling = h.ceiling.min(h2.ceiling);
    if ceiling < threshold {
        return Err(SpectrumError::CeilingTooSmall { ceiling, needed: threshold });
    }
    let covered = |from: &ScannedSpectrum, to: &ScannedSpectrum| {
        from.lengths.range(threshold..=ceiling).all(|&l| {
            let lo = l.div_ceil(k);
            to.lengths.range(lo..=(l * k).min(ceiling)).next().is_some()
        })
    };
    Ok(covered(h, h2) && covered(h2, h))
}
