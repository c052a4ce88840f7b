//! Exact checks of every theorem about the configuration, aggregated into a
//! deterministic report.

mod checks;
mod lemmas;
mod report;

pub use checks::{
    center_images, check_core_similarity, check_five_circles, check_hagge, check_half_turn,
    check_lemma1_instance, check_lemma2_instance, check_names, check_orthocentre_quadrangle,
    check_pentagon_perspectives, check_pentagon_quadrangles, check_perspective, check_steiner_line,
    check_tangent_concurrency, hagge_quadrangle, verify_all, verify_with, ASSUMPTIONS,
};
pub use lemmas::{
    check_lemma1, check_lemma2, concurrency, lemma1_perpendiculars, lemma2_points,
    printed_triple_holds, Concurrency, Lemma2Points, LemmaInputError,
};
pub use report::{format_point, CheckResult, CheckStatus, Summary, VerificationReport, Witness};
