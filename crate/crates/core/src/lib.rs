//! Two-state discrete-time quantum walks on Bravais lattices.
//!
//! A walker carries a single qubit. Each lattice axis uses the eigenbasis of a
//! different Pauli operator as its pair of translation states: σ3 for `Z`, σ1
//! for `X`, σ2 for `Y`. One sub-step applies a coin rotation expressed in the
//! axis eigenbasis and then moves the `+` component one displacement forward
//! and the `−` component one displacement back. A full step chains the
//! sub-steps of every axis the lattice carries.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command-line
//! front end and the verification report live in the `pauliwalk-cli` crate.
//!
//! ```
//! use pauliwalk_core::{evolve, LatticeKind, Spinor2, WalkConfig};
//! use pauliwalk_core::analysis::distribution;
//!
//! let config = WalkConfig::new(LatticeKind::Square, 3, [0.0; 3], Spinor2::plus_i()).unwrap();
//! let field = evolve(&config).unwrap();
//! let dist = distribution(&field);
//! assert!((dist.total() - 1.0).abs() < 1e-12);
//! ```

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod engine;
mod error;
pub mod grover;
pub mod lattice;
pub mod momentum;
pub mod recursion;
pub mod spinor;

pub use engine::{apply_substep, evolve, initial_state, step, SpinorField, WalkConfig};
pub use error::{Result, WalkError};
pub use lattice::{kagome_site_axes, lattice_spec, Displacement, LatticeKind, LatticeSpec, Position, SiteType};
pub use spinor::{coin_operator, pauli_eigenbasis, pauli_matrix, Complex, Matrix2, PauliAxis, Spinor2};
