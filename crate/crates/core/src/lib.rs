#![allow(clippy::needless_range_loop)]

//! Finite-dimensional Hom-bialgebras over ℚ: structure checks, convolution,
//! relative antipodes and their properties.

pub mod antipode;
pub mod constructions;
pub mod convolution;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod format;
pub mod linalg;
pub mod qmatrix;
pub mod report;
pub mod structures;

pub use error::{Error, Result};
pub use field::Scalar;
pub use linalg::{LinMap, SolutionSpace, SparseSystem, SparseVec, Vector};
