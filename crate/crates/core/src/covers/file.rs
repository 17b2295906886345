use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CoverError, Permutation, VoltageAssignment};
use crate::complex::{ComplexFile, SimplicialComplex, Vertex};

/// Base complex given inline or as a path to a complex file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseRef {
    Path(String),
    Inline(ComplexFile),
}

/// Voltage on the directed edge `edge[0] → edge[1]`, as one-based images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VoltageEntry {
    pub edge: [Vertex; 2],
    pub images: Vec<usize>,
}

/// On-disk cover description; unlisted edges carry the identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverFile {
    pub base: BaseRef,
    pub degree: usize,
    #[serde(default)]
    pub voltages: Vec<VoltageEntry>,
}

impl CoverFile {
    /// Resolves a path-valued base relative to `dir`.
    pub fn load_base(&self, dir: Option<&Path>) -> Result<SimplicialComplex, CoverError> {
        let file = match &self.base {
            BaseRef::Inline(f) => f.clone(),
            BaseRef::Path(p) => {
                let path = match dir {
                    Some(d) => d.join(p),
                    None => p.into(),
                };
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CoverError::File(format!("{}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| CoverError::File(format!("{}: {e}", path.display())))?
            }
        };
        Ok(file.into_complex()?)
    }

    pub fn into_assignment(self, dir: Option<&Path>) -> Result<VoltageAssignment, CoverError> {
        let base = self.load_base(dir)?;
        let mut voltages = Vec::with_capacity(self.voltages.len());
        for entry in &self.voltages {
            let perm = Permutation::from_one_based(&entry.images).ok_or_else(|| {
                CoverError::File(format!("voltage on {:?} is not a permutation", entry.edge))
            })?;
            voltages.push(((entry.edge[0], entry.edge[1]), perm));
        }
        VoltageAssignment::new(base, self.degree, voltages)
    }
}
