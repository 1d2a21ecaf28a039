#![cfg_attr(not(feature = "std"), no_std)]
//! Multisymplectic variational integrators for (1+1)-dimensional De Donder--Weyl
//! Hamiltonian PDEs.
//!
//! The building blocks are per-cell generating maps assembled from partitioned
//! Runge--Kutta tableaus and their symplectic pairs ([`tableau`]), solved by
//! Newton iteration and marched in time ([`solver`]), together with diagnostics
//! that certify the discrete multisymplectic conservation law, the discrete
//! Noether theorem, and the difference form of the field equations
//! ([`diagnostics`]). Hamiltonians are written in a small expression language
//! with exact symbolic differentiation ([`hamdsl`]). A sine--Gordon soliton
//! benchmark lives in [`sgbench`].
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default `std`
//! feature to use it in that configuration. File formats and the command-line
//! driver live in the companion `msvi-cli` crate.

extern crate alloc;

pub mod diagnostics;
pub mod fields;
pub mod grid;
pub mod hamdsl;
pub mod hamiltonian;
pub mod linalg;
pub(crate) mod math;
pub mod sgbench;
pub mod solver;
pub mod tableau;
