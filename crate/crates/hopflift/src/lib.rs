//! Exact constructions of the best known kissing configurations in
//! dimensions 4, 8 and 16 — the 24-cell, the E8 root system and the
//! minimal vectors of the Barnes–Wall lattice Λ16 — obtained by lifting
//! small antipodal point sets through the Hopf maps
//! S³ → S², S⁷ → S⁴ and S¹⁵ → S⁸.
//!
//! Everything runs over the field ℚ(√2) with arbitrary-precision
//! rational components, so equality of coordinates, inner products and
//! lattice invariants is decided exactly: there are no tolerances
//! anywhere in this crate.
//!
//! The crate is organised in four layers:
//!
//! * [`algebra`] — the scalar field ℚ(√2) and the Cayley–Dickson tower
//!   𝔸₀…𝔸₄ (reals, complexes, quaternions, octonions, sedenions).
//! * [`hopf`] — the Hopf maps in direct and factored (`h2 ∘ h1`) form,
//!   and exact fiber parameterization.
//! * [`constructions`] — the lifted configurations plus independent
//!   canonical constructions used as oracles.
//! * [`analysis`] — exact dot spectra, kissing checks, neighbor
//!   decompositions and integer-lattice certificates (Gram matrix,
//!   determinant, evenness via Hermite normal form).
//!
//! The library is `no_std` (with `alloc`); IO, file formats, rendering
//! and the command-line front end live in the companion `hopflift-cli`
//! crate.

#![cfg_attr(not(test), no_std)]
// Error variants carry exact witnesses (offending points, dots); that
// is their job, so their size is accepted.
#![allow(clippy::result_large_err)]

extern crate alloc;

pub mod algebra;
pub mod analysis;
pub mod constructions;
pub mod hopf;

pub use algebra::{ExactScalar, Hyper};
pub use constructions::{Configuration, FiberLabel};
