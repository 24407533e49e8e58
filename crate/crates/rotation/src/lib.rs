//! Rotation-set experiments for torus homeomorphism lifts.
//!
//! Lifts are compositions of invertible primitives (translations and shears
//! with 1-periodic profiles), so Z^2-equivariance holds by construction and
//! is additionally verified on seeded random samples when a lift is built.
//! The rotation set is estimated as the convex hull of average-displacement
//! vectors over a grid of starting points and a window of iterate counts;
//! the estimator's budgets are explicit because the true set is a double
//! limit.

mod degree;
mod diagnostic;
mod estimate;
mod lift;
mod polygon;

pub use degree::{degree_on_box, find_periodic, DegreeCertificate, FindOutcome};
pub use diagnostic::{boundary_diagnostic, rational_approximation, FlaggedEdge};
pub use estimate::{
    check_homogeneity, deviation_profile, displacement, measure_rotation, rotation_set_estimate,
    EmpiricalMeasure, EstimateBudget,
};
pub use lift::{Primitive, Profile, TorusLift};
pub use polygon::RotationPolygon;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RotationError {
    #[error("composition is not Z^2-equivariant: defect {defect:e} at sample {index}")]
    NotEquivariant { defect: f64, index: usize },
    #[error("linear primitive must have positive determinant, got {det}")]
    NonPositiveDeterminant { det: f64 },
    #[error("displacement field vanishes on the box boundary (|F| = {norm:e} < {threshold:e}); shrink or shift the box")]
    IndeterminateBoundary { norm: f64, threshold: f64 },
    #[error("boundary sampling cap of {cap} reached without angular resolution")]
    SamplingCapReached { cap: usize },
    #[error("measure weights must be non-negative and sum to 1 (sum = {sum})")]
    BadMeasure { sum: f64 },
    #[error("iterate count must be at least 1")]
    ZeroIterations,
    #[error("grid resolution must be at least 2")]
    GridTooSmall,
    #[error("estimate window requires warmup < total iterations (N = {warmup}, n = {total})")]
    BadWindow { warmup: usize, total: usize },
}
