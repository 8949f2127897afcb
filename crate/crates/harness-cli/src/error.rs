//! Error type for the harness layer.
//!
//! Most failures bubble up from the computational crates; the variants native
//! to this crate cover report preconditions (Hall measures need `x > 0`, a
//! rank-1 report needs a shipped generator that actually lies on the curve)
//! and sweep configuration mistakes.

use curve_core::CurveError;
use diophantine_search::SearchError;
use division_polynomials::DivisionPolyError;
use elliptic_analytic::AnalyticError;
use heights::HeightError;
use multiple_classifier::ClassifierError;
use thiserror::Error;

/// Everything that can go wrong while assembling reports or running sweeps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    /// Hall measures `sqrt(x)/|B|` are only defined for points with `x > 0`.
    #[error("Hall measure requires a point with positive x-coordinate")]
    NonPositiveX,

    /// The requested operation needs an integral affine point.
    #[error("expected an integral affine point")]
    NotIntegralPoint,

    /// No generator is on file for this coefficient.
    #[error("no rank-1 generator fixture for B = {b}")]
    NoGeneratorFixture { b: i64 },

    /// A fixture generator failed the on-curve re-check; the fixture table
    /// and the curve disagree, which should never pass silently.
    #[error("fixture generator for B = {b} does not lie on the curve")]
    GeneratorNotOnCurve { b: i64 },

    /// Malformed sweep configuration (unknown check name, zero shards, ...).
    #[error("invalid sweep configuration: {0}")]
    ConfigError(String),

    #[error(transparent)]
    Curve(#[from] CurveError),

    #[error(transparent)]
    DivisionPoly(#[from] DivisionPolyError),

    #[error(transparent)]
    Height(#[from] HeightError),

    #[error(transparent)]
    Analytic(#[from] AnalyticError),

    #[error(transparent)]
    Classifier(#[from] ClassifierError),

    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, HarnessError>;
