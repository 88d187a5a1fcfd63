//! Machine-checked reports for the counting lemmas, degree thresholds,
//! counterexamples and exhaustive searches.

mod checks;
mod lemmas;
mod report;
mod search;
mod suites;

pub use checks::{
    check_biased, check_exponential, check_fano_fraction, check_named_examples, check_plane_families,
    fractional_profile, STRONG_SIDE_LIMIT,
};
pub use lemmas::{
    check_mindeg, check_onefact, check_sidecover, check_stndrdcnt, lb_f, lb_f_slope, lb_f_terms, mindeg_floor,
};
pub use report::{CertificateReport, Claim, Relation};
pub use search::{
    check_linearity_of_achievers, check_linearity_of_achievers_with, enumerate_achievers, extremal_search,
    ExtremalSearch, SearchOptions, SearchVerdict, ACHIEVER_EDGES_R4,
};
pub use suites::{check_bound_values, run_suite, Suite, SuiteOutcome, LEMMA_INSTANCES, LEMMA_SEED_BASE};
