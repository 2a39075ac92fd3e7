//! Universal algebraic geometry of finite group representations over
//! prime fields.
//!
//! A representation `(V, G)` is treated as a two-sorted algebra: vectors
//! and group elements, with the right action `v ∘ g`. This crate computes
//! solution sets of equations over the free representation
//! `(XKF(Y), F(Y))`, their closures (full and action-type), checks
//! quasi-identities, and decides geometric equivalence with
//! independently re-checkable certificates.
//!
//! Everything is exhaustive: fields are `GF(p)` with `p <= 97`, groups are
//! finite Cayley tables, and every enumeration is bounded by [`Caps`].
//!
//! The runnable programs under `examples/` walk through each capability.

pub mod audit;
pub mod caps;
pub mod cli;
pub mod error;
pub mod field;
pub mod geometry;
pub mod group;
pub mod rep;
pub mod term;
pub mod textio;

pub use caps::Caps;
pub use error::{Error, Result, SourceSpan};
pub use field::{Matrix, PrimeField, Vector};
pub use group::{enumerate_group_homs, quotient_group, FiniteGroup, GroupHom, Subgroup};
pub use rep::{enumerate_rep_homs, rep_isomorphic, FaithfulImage, RepHom, Representation};
pub use term::{Assignment, Atom, EquationSystem, FreeContext, GroupWord, ModuleElement, QuasiIdentity, RingElement};
