//! Finite order theory and Scott topology.
//!
//! `dcpo-core` works with finite posets as bit matrices and computes the
//! objects that decide whether a dcpo is determined by its lattice of Scott
//! closed sets: the closed-set lattice `C_σ(P)`, the irreducible closed sets
//! `Irr_σ(P)`, sobriety-style classifications of the Scott space, and the
//! domain-theoretic predicates (way-below, quasicontinuity, property M,
//! down-linearity, C-compactness). The [`witness`] module carries symbolic
//! versions of the Johnstone and Kou dcpos together with bounded-window
//! verifiers for their structural properties.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod bits;
mod caps;
mod error;

pub mod canon;
pub mod domain;
pub mod iso;
pub mod lattice;
pub mod poset;
pub mod report;
pub mod topology;
pub mod witness;

pub use bits::ElementSet;
pub use caps::Caps;
pub use error::{Error, Result};
pub use iso::{poset_isomorphism, OrderIsomorphism};
pub use lattice::FiniteLattice;
pub use poset::{Direction, FinitePoset, SubPoset};
pub use report::{CheckReport, Status};
pub use topology::{ClosedFamily, IrrPoset, SpaceClassification};
