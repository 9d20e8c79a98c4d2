//! Affine Kac–Moody algebras realized as double extensions of
//! Laurent-polynomial loop algebras, with exact arithmetic throughout.
//!
//! The exact layers are [`scalar`], [`matrix`], [`base_lie`],
//! [`loop_algebra`] and [`kac_moody`]. [`group_action`] adds loop-group words
//! and a floating-point monodromy solver, [`geometry`] the curvature and
//! symmetric-space checks, and [`cartan`] the generalized Cartan matrices.

pub mod base_lie;
pub mod cartan;
pub mod error;
pub mod geometry;
pub mod group_action;
pub mod kac_moody;
pub mod loop_algebra;
pub mod matrix;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::ExactComplex;
