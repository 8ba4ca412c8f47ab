//! Exact computation of graph polynomials, constructions of graphs sharing a
//! polynomial ("mates"), and desk-scale experiments on how often graphs in a
//! class are determined by a polynomial.

pub mod canon;
pub mod classes;
pub mod experiments;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod mates;
pub mod pendant;
pub mod planarity;
pub mod poly;

pub use canon::{are_isomorphic, canonical_form, canonical_form_colored, CanonKey, CanonicalForm};
pub use error::{Error, Result};
pub use classes::{enumerate_class, GraphClass};
pub use graph::Graph;
pub use pendant::{find_pendant_occurrences, graft_pendant, replace_pendant, MatchMode, PendantOccurrence, RootedPendant};
pub use planarity::is_planar;
pub use poly::Polynomial;
