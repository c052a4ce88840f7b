//! Front end for the `tenpoint` binary: seed text, JSON documents, fuzz
//! campaigns, SVG rendering and a floating-point cross-check.

pub mod app;
pub mod cross_check;
pub mod document;
pub mod error;
pub mod fuzz;
pub mod render;
pub mod seed_text;

pub use error::CliError;
