//! Exact covers, matchings and fractional covers of r-partite intersecting
//! hypergraphs, with generators for the classical extremal constructions and
//! checkers that emit machine-readable certificates.

pub mod certificates;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod fractional;
pub mod hypergraph;
pub mod solvers;

pub use error::{Error, Result};
pub use fractional::Rational;
pub use hypergraph::{GeneralHypergraph, Hypergraph, PartiteHypergraph, VertexRef};
