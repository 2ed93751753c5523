//! Quadratic type of the projective indecomposable modules of the double
//! cover 2.A_n in characteristic 2.
//!
//! The crate has two halves. The [`classify`] and [`classes`] modules decide
//! everything combinatorially from partition statistics. The [`specht`],
//! [`gf2`] and [`oracle`] modules rebuild the James modules D^μ over GF(2) at
//! small n and check the same answers by brute force over involutions.

pub mod classes;
pub mod classify;
pub mod cli;
pub mod error;
pub mod gf2;
pub mod gf4;
pub mod oracle;
pub mod partitions;
pub mod permgroup;
pub mod specht;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use permgroup::Permutation;
