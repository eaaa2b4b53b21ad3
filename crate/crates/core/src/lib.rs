//! Spectral radius `ρ(D)` and signless Laplacian spectral radius `q(D)` of
//! strongly connected digraphs, with degree-based bounds, extremal families,
//! arc/vertex transformations and exhaustive small-order verification.

pub mod bounds;
pub mod digraph;
pub mod error;
pub mod families;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use digraph::Digraph;
pub use error::{Error, Result};
