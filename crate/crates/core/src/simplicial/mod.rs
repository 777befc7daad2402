//! Simplicial vector spaces, horns, normalization and Dold–Kan realization.

mod chain;
mod dold_kan;
pub mod format;
mod horn;
mod moore;
mod svs;

pub use chain::ChainComplex;
pub use dold_kan::{dk_normalize, dk_realize};
pub use horn::{horn_space, kan_report, HornCheck, HornSpace, KanReport};
pub use moore::{moore_complex, normalize, Normalized};
pub use svs::{validate, Identity, SimplicialVS, Violation};

pub(crate) use moore::restrict_d0;
