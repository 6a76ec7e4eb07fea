pub mod error;
pub mod pc;
pub mod subgroups;
pub mod cli;
pub mod consistency;
pub mod enumerate;
pub mod invariants;
pub mod golden;
pub mod matrep;

pub use error::{Error, Result};
pub use pc::{
    EssentialChain, ExponentVector, GroupWord, PcPresentation, PresentationFile, PrimeModulus,
    MAX_GENERATORS,
};
