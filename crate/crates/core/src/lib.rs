//! Exact domination and bondage numbers for products of paths, with a
//! harness that replays the known closed forms against exhaustive search.

mod bits;
pub mod bondage;
pub mod cli;
pub mod domination;
pub mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod verify;

pub use bondage::{
    bondage_number, is_bondage_set, lemma1_bound, lemma2_bound, BondageOptions, BondageResult,
    BondageValue,
};
pub use domination::{
    domination_number, enumerate_gamma_sets, exists_dominating_set, is_dominating, GammaSetFamily,
};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, GridSpec, ProductKind, VertexSet};
pub use oracle::{Prediction, ResidueClass};
