//! Ordered matroids and positroids: decorated permutations, Grassmann
//! necklaces, positroid envelopes and envelope classes, connectivity
//! decompositions, whirl constructions and small-field classification.

pub mod census;
pub mod classify;
pub mod connectivity;
pub mod constructions;
pub mod corpus;
pub mod cyclic;
pub mod error;
pub mod exec;
pub mod label;
pub mod matroid;
pub mod positroid;
pub mod subset;

pub use error::{Error, Result};
pub use exec::Strategy;
pub use label::{GroundLabel, GroundSet};
pub use matroid::{Matroid, MinorWitness, SubsetFamily};
pub use subset::Subset;
