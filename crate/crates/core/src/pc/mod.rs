//! Normal-form arithmetic in groups given by SSP power-commutator presentations.

mod chain;
mod format;
mod presentation;
mod prime;
mod vector;
mod word;

pub use chain::EssentialChain;
pub use format::PresentationFile;
pub use presentation::PcPresentation;
pub use prime::PrimeModulus;
pub use vector::{ExponentVector, MAX_GENERATORS};
pub use word::GroupWord;
