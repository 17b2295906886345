//! Words, presentations, coset enumeration and the relator families of
//! branched-cover groups.

mod coset;
mod edge_path;
mod presentation;
mod text;
mod word;

pub use coset::{coset_enumerate, coset_table, CosetOutcome, CosetTable};
pub use edge_path::{certify_simply_connected, edge_path_presentation, simplify, SimpleConnectivity};
pub use presentation::{
    abelianization, glsigma_families, glsigma_presentation, glsigma_presentation_tagged,
    in_relator_lattice, power_spread, quotient_relators, raag_presentation, subpresentation_select,
    Abelianization, EdgeAlphabet, HeightWindow, LoopWord, Presentation, PresentationError,
    RelatorTag, SpreadFamily, Subpresentation,
};
pub use word::{Letter, Word};
