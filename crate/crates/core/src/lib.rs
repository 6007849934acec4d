//! Construction and verification of the permutation modules of the finite
//! orthogonal groups `O_m(3)` acting on the nonsingular points of their
//! natural `F_3`-modules, over coefficient fields of cross characteristic.
//!
//! The crate is organized in five layers:
//!
//! * [`gfmat`] — exact dense linear algebra over small prime fields plus
//!   exact integer-matrix ranks; everything else rides on this kernel.
//! * [`geometry`] — the orthogonal `F_3`-spaces, point enumeration,
//!   reflection generators and the rank-3 parameter certificates.
//! * [`permmod`] — the permutation modules themselves: adjacency operator,
//!   graph submodules, canonical submodules, orthogonality maps.
//! * [`repanalysis`] — a MeatAxe-style engine: spinning, irreducibility,
//!   composition series, Hom spaces, socles, duals, summand splitting.
//! * [`harness`] — embedded expected structures, the verification runner
//!   and report emission used by the CLI.

pub mod error;
pub mod geometry;
pub mod gfmat;
pub mod harness;
pub mod permmod;
pub mod repanalysis;

pub use error::{Error, Result};
