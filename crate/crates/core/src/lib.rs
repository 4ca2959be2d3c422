//! Independence complexes of claw-free graphs.
//!
//! Graphs and their families live in [`graph`]; [`complex`] builds
//! independence complexes and the usual constructions on simplicial
//! complexes; [`collapse`] implements fold and free-face collapses;
//! [`homology`] computes reduced integral homology through exact Smith normal
//! forms ([`snf`]) together with a bounded `π1` check ([`pi1`]); [`harness`]
//! turns the connectivity bounds and decomposition theorems into executable
//! checks over concrete graphs.

pub mod analysis;
pub mod collapse;
pub mod complex;
pub mod ensemble;
pub mod error;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod io;
pub mod pi1;
pub mod snf;
pub mod suites;
pub mod vertex_set;

pub use complex::{independence_complex, Caps, Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{Family, Graph, Subgraph};
pub use homology::{Connectivity, ConnectivityReport, HomologyGroup, HomologyProfile};
pub use pi1::{Pi1Status, TietzeBudget};
pub use vertex_set::VertexSet;
