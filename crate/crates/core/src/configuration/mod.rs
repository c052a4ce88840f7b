//! The seeded ten-point construction, its perspective table and the figures
//! derived from it.

mod build;
mod derive;
mod labels;
mod seed;
mod table;

pub use build::{build_configuration, DegenerateReason, DegenerateSeed, WoodDesarguesConfiguration};
pub use derive::{
    derive_figures, derive_hagge_centres, derive_orthocentres, derive_pentagon, hagge_centre,
    DerivedFigures, HaggeCentre, Orthocentres, PentagonFigure,
};
pub use labels::{CenterLabel, CircleLabel, PointLabel};
pub use seed::ConfigurationSeed;
pub use table::{perspective_table, PerspectiveRecord};
