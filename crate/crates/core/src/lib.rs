//! Exact computations with Mirković–Vilonen polytopes in type A.
//!
//! Generalized permutahedra are stored as integer submodular-function tables
//! ([`polytope::GenPermutahedron`]). On top of that representation the crate
//! decides the MV property through tropical Plücker relations, runs the crystal
//! operators, and provides the matroid, flag matroid, Bruhat interval,
//! Schubitope and polynomial constructions that produce interesting MV polytopes.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod base;
pub mod catalog;
pub mod error;
pub mod flag;
pub mod matroid;
pub mod mv;
pub mod polynomial;
pub mod polytope;
pub mod schubitope;

pub use base::{Permutation, Subset, MAX_N};
pub use error::{Error, Result};
pub use polytope::{GenPermutahedron, LatticePoint};
