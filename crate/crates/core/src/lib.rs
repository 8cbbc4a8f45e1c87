//! Exact computation of representation-degree spectra of compact semisimple
//! Lie groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootsys`]: irreducible root systems in Bourbaki coordinates, Weyl-group
//!   reductions and closed subsystems.
//! - [`repdegrees`]: the Weyl dimension formula, group specifications with
//!   intermediate lattices, and tables of zeta-function coefficients.
//! - [`weylpoly`]: dimensions along one-parameter families `x ↦ xμ + ν` as
//!   exact rational polynomials.
//! - [`efficiency`]: efficiency and level of root systems.
//! - [`gassmann`]: pairs of quotients of `SU(2)^n` with equal zeta functions.

pub mod efficiency;
pub mod error;
pub mod gassmann;
pub mod linalg;
pub mod repdegrees;
pub mod rootsys;
pub mod verify;
pub mod weylpoly;

pub use error::{Error, Result};
pub use rootsys::{FamilyRank, RootSystem, Weight};
