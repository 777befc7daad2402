pub mod cli;
pub mod error;
pub mod exactla;
pub mod generators;
pub mod multiindex;
pub mod simplicial;
pub mod suites;
pub mod tangent;

pub use error::{Error, Result};
