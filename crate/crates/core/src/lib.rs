//! Generalized Gardiner-Praeger graphs `CPM(m,s,n;r)` and the machinery to
//! reason about their symmetries.
//!
//! The crate is `no_std` and only needs an allocator. Everything here is
//! deterministic: vertex indices follow a fixed breadth-first order and all
//! searches branch on the lowest index first, so permutations and generator
//! lists are reproducible between runs.
//!
//! * [`modring`]: residues modulo `n` and the arithmetic conditions on `r`.
//! * [`graphs`]: parameters, vertices, the graph container, Praeger-Xu graphs.
//! * [`permgroup`]: permutations, Schreier-Sims, automorphism and isomorphism search.
//! * [`symmetry`]: the explicit automorphisms and the classification verdicts.
//! * [`cycles`]: anchors, codes, traces and bounded cycle enumeration.
//! * [`isomorphisms`]: explicit isomorphisms, normalization and isomorphism decisions.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cycles;
mod error;
pub mod graphs;
pub mod isomorphisms;
pub mod maps;
pub mod modring;
pub mod permgroup;
pub mod symmetry;

pub use error::{Error, Result};
pub use graphs::{CpmGraph, Family, Params, Vertex};
pub use permgroup::{PermGroup, Permutation};
pub use symmetry::{classify, SymClass, SymKind};
