//! Finite semigroups, natural conjugacy and partial inner automorphisms.
//!
//! A semigroup is a dense Cayley table over `0..n`. Everything quantified
//! over `S¹` goes through [`WithOne`], which adjoins an identity when the
//! table lacks one. Partial maps compose left to right.

pub mod conjugacy;
pub mod corpus;
pub mod constructors;
pub mod green;
pub mod gset;
pub mod inner;
pub mod io;
pub mod partial_map;
pub mod partition;
pub mod semigroup;
pub mod tx;
pub mod verify;
pub mod wcalc;

pub use conjugacy::{conjugacy_classes, conjugators, k_pairs, ConjugacyWitness};
pub use green::{green, GreenData};
pub use inner::{domain_dgh, generators, inn, phi, reduce_conjugators, InnGenerator};
pub use partial_map::{abstract_cayley, closure, PartialMap, PartialMapError};
pub use partition::{Partition, UnionFind};
pub use semigroup::{FiniteSemigroup, OmegaData, SemigroupError, WithOne};
