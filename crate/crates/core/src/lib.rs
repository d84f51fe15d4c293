//! Exact computation of zero forcing, power domination and related
//! parameters on small graphs, plus a harness that checks structural
//! claims about them against exhaustive enumeration.

pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod products;
pub mod propagation;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use theorems::{verify, TheoremId, VerifyConfig, VerifyReport};
