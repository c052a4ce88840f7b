//! Exact-arithmetic construction and verification of the ten-point
//! Wood–Desargues configuration.
//!
//! The crate has three layers: [`kernel`] (rational points, lines, circles,
//! similarities), [`configuration`] (the seeded construction and the figures
//! derived from it) and [`verifier`] (the theorem checks and their report).

pub mod configuration;
pub mod error;
pub mod kernel;
pub mod scalar;
pub mod verifier;

pub use configuration::{
    build_configuration, derive_figures, perspective_table, CenterLabel, CircleLabel,
    ConfigurationSeed, DegenerateReason, DegenerateSeed, DerivedFigures, PerspectiveRecord,
    PointLabel, WoodDesarguesConfiguration,
};
pub use error::GeometryError;
pub use kernel::{Circle, CircleParam, Line, Point, Similarity};
pub use scalar::Scalar;
pub use verifier::{verify_all, CheckResult, CheckStatus, VerificationReport, Witness};
