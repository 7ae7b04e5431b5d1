//! Alternative (oriented) chains and cochains on finite simplicial complexes.
//!
//! Ordered vertex tuples stand in for singular simplices. On top of them the
//! crate builds exact rational cochains with the alternative-maker projector
//! and the alternative cup product, the alternative chain quotient with its
//! order-2 torsion, integer homology through Smith normal forms, and the
//! prism operator of a contiguous pair of simplicial maps.

pub mod alt_chain;
pub mod chain;
pub mod cochain;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod homology;
pub mod homotopy;
pub mod linalg;
pub mod permutation;
pub mod verify;

pub use complex::{Limits, OrderedGenerator, SimplicialComplex};
pub use error::{Error, Result};
