//! Flag complexes, spherical doubles, permutation-voltage covers, exact
//! homology, presentations of branched-cover groups, finiteness-property
//! decisions and taut loop length spectra.

pub mod complex;
pub mod covers;
pub mod double;
pub mod groups;
pub mod homology;
pub mod sigma;
pub mod spectrum;
