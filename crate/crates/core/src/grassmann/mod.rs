//! Finite-dimensional real Grassmann algebra with Berezin calculus.

mod calculus;
mod element;
mod gaussian;
mod monomial;
mod registry;

pub use calculus::trace_functional;
pub use element::{GrassmannElement, DROP_TOLERANCE};
pub use gaussian::{
    determinant, gaussian_integral_expand, gaussian_integral_expand_capped, SquareMatrix,
    GAUSSIAN_CAP,
};
pub use monomial::{Monomial, MAX_GENERATORS};
pub use registry::GeneratorRegistry;
