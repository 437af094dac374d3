//! Normal and spun normal surface theory on ideal triangulations.
//!
//! The crate is organised bottom-up:
//!
//! * [`triangulation`] parses and validates face-gluing tables and derives
//!   edge classes, cusp links, orientations and the orientable double cover.
//! * [`linalg`] is exact integer/rational linear algebra (rank, saturated
//!   integer nullspaces, Smith normal form, subgroup indices).
//! * [`normal`] builds the 7k-coordinate compatibility system and its
//!   canonical basis of tetrahedral and edge solutions.
//! * [`qtheory`] builds the quadrilateral matching equations.
//! * [`hilbert`] enumerates fundamental (Hilbert basis) solutions.
//! * [`boundary`] maps quadrilateral solutions to cusp homology classes.
//!
//! Everything is exact: integers are arbitrary precision and no floating
//! point is used anywhere.

// Index loops read more clearly than zipped iterators in the matrix code.
#![allow(clippy::needless_range_loop)]

pub mod boundary;
pub mod builtin;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod normal;
pub mod perm;
pub mod qtheory;
pub mod triangulation;

pub use error::{Error, Result};
pub use perm::Perm4;
pub use triangulation::Triangulation;
