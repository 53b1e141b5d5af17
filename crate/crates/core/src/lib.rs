//! Castelnuovo–Mumford regularity of finitely generated graded modules over
//! `K[x_1, ..., x_n]`, `K = F_p`.
//!
//! Regularity is computed three ways: from the graded Betti numbers of a
//! minimal free resolution, from graded local cohomology obtained by local
//! duality, and from postulation numbers (or saturation indices) of
//! filter-regular hyperplane restrictions. The [`harness`] module generates
//! seeded random instances and checks the known bounds for tensor products,
//! `IM` and `Hom` against these computations.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod degree;
pub mod error;
pub mod groebner;
pub mod harness;
pub mod hilbert;
pub mod homological;
pub mod linalg;
pub mod random;
pub mod regularity;

pub use degree::{ExtInt, NEG_INFINITY};
pub use error::{Error, Result};

#[cfg(test)]
mod testing;
