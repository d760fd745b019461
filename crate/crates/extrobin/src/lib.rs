//! Lowest Robin eigenvalue in the exterior of a compact set.
//!
//! The library computes the bottom of the spectrum of the Laplacian on the
//! complement of a compact set under an attractive Robin boundary condition
//! `du/dn = alpha u` (`alpha <= 0`):
//!
//! * [`ball`] — exact solver for exteriors of balls in any dimension d >= 2,
//!   via root-finding on a modified-Bessel ratio;
//! * [`geometry`] — planar multi-component boundaries and convex bodies of
//!   revolution, with curvature functionals and Steiner-type polynomials;
//! * [`effective1d`] — reduced half-line Rayleigh quotients with polynomial
//!   weights, giving certified upper bounds for general exteriors;
//! * [`pde2d`] — a finite-element validator for smooth convex planar sets
//!   in boundary-fitted parallel coordinates;
//! * [`cli`] — experiment drivers with deterministic CSV/JSON output.
//!
//! See the crate `examples/` directory for one runnable program per
//! capability, and the `extrobin` binary for the command-line front end.

pub mod ball;
pub mod cli;
pub mod effective1d;
pub mod error;
pub mod geometry;
mod mesh;
pub mod pde2d;
pub mod specfun;

pub use error::{Error, Result};
