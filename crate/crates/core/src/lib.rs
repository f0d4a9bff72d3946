//! Grassmann/Berezin calculus and a time-sliced coherent-state path integral
//! for the single-mode fermionic oscillator `H = ω c†c`.
//!
//! - [`grassmann`]: sparse Grassmann algebra, derivatives, Berezin integrals,
//!   Gaussian integrals and the coherent-state trace.
//! - [`oscillator`]: the 2×2 operator picture, used as ground truth.
//! - [`path_integral`]: slicing, eager pair contraction, boundary closures and
//!   the determinant route.
//! - [`selftest`]: the invariant checks run by the CLI.

pub mod error;
pub mod grassmann;
pub mod oscillator;
pub mod path_integral;
pub mod selftest;

pub use error::{Error, Result};
