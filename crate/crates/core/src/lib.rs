//! Helicity-basis plane-wave solutions for the `(1/2,0)⊕(0,1/2)` and
//! `(1,0)⊕(0,1)` representations of the Lorentz group.
//!
//! The crate builds the helicity 2-, 3-, 4- and 6-component field functions
//! for on-shell momenta, and checks them numerically against:
//!
//!   * the helicity eigenvalue equations and normalizations,
//!   * the Dirac, Tucker-Hammer and Weinberg momentum-space equations,
//!   * the expansion of parity-basis Dirac spinors in the helicity basis,
//!   * the action of parity `P`, charge conjugation `C` and their products,
//!   * the first-order (Duffin-Kemmer-Petiau style) system and the Proca
//!     equations for the spin-1 potentials.
//!
//! Conventions: natural units, metric `(+,−,−,−)`, `ε^{123} = +1`, plane
//! waves `e^{−ip·x}`. The azimuth `φ` is never reduced modulo `2π`.
//!
//! [`report::run_suite`] runs every check over seeded random kinematics and
//! produces a deterministic [`report::VerificationReport`].

pub mod algebra;
pub mod error;
pub mod field_eq;
pub mod kinematics;
pub mod phase;
pub mod report;
pub mod spin_half;
pub mod spin_one;

#[doc(hidden)]
pub mod cli;

pub use error::{Error, Result};
pub use kinematics::Kinematics;

pub use num_complex::Complex64;
