//! Order dimension toolkit: posets, realizer certificates for the
//! Dushnik–Miller, local and Boolean dimensions, exact solvers, constructive
//! bounds, graph decompositions, and the path-width local-realizer pipeline.

pub mod constructions;
pub mod decomposition;
pub mod dot;
pub mod error;
pub mod experiments;
pub mod generators;
pub mod io;
mod matching;
pub mod pipeline;
pub mod poset;
pub mod random;
pub mod realizer;
pub mod solvers;

pub use error::{Error, Result};
pub use poset::{ChainDecomposition, Poset, RelationMode, Subposet, WidthCertificate};
pub use realizer::{BitString, BooleanRealizer, LinearOrder, PleFamily};
