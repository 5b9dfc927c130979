//! Coset lattices of finite groups.
//!
//! Builds the coset poset and coset lattice of a finite group, labels the
//! lattice's cover relations for complemented groups presented as direct
//! products of square-free groups, verifies the labeling and the resulting
//! shelling directly, and checks the homological consequences exactly.

pub mod arith;
pub mod complex;
pub mod dot;
pub mod error;
pub mod expr;
pub mod gf;
pub mod group;
pub mod homology;
pub mod labeling;
pub mod lattice;
pub mod par;
pub mod poset;
pub mod report;
pub mod shelling;

pub use error::{Error, Result};
