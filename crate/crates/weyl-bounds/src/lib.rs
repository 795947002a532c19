//! Weyl-type eigenvalue bounds for the Dirichlet Laplacian.
//!
//! This crate evaluates a catalog of universal eigenvalue inequalities for
//! the fixed (Dirichlet) and free (Neumann) membrane, builds exact spectra
//! for boxes and balls to test them against, and reproduces the reference
//! numerical tables with per-cell diffing.
//!
//! The three layers:
//!
//! * [`specfun`] — Bessel functions of the first kind, their positive
//!   zeros, the Gamma function, unit-ball volumes, and the semiclassical
//!   constant;
//! * [`bounds`] — the dimension-dependent constants bundle (the Weyl-type
//!   constant `H_n`, the sup-norm coefficient, the ball ratio
//!   `j_{n/2,1}^2/j_{n/2-1,1}^2`) and every bound evaluator;
//! * [`spectra`] + [`verify`] — exact eigenvalue oracles for boxes under
//!   both boundary conditions and balls under Dirichlet, and the audit
//!   engine that checks each inequality against them, with CSV export.
//!
//! A thin CLI (`weyl-bounds`) exposes constants, bound evaluation, spectrum
//! generation, audits, table reproduction, and bound-comparison curves; see
//! the `examples/` directory for library usage per capability.

pub mod bounds;
pub mod cli;
mod dd;
pub mod error;
pub mod specfun;
pub mod spectra;
pub mod verify;

pub use bounds::{ConstantsBundle, Dim};
pub use error::{Error, Result};
