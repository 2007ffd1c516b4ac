//! Verification suite: Betti tables, exactness certificates, span comparisons,
//! identity checks and mutation tests, with machine-readable reports.

pub mod betti;
pub mod certify;
pub mod checks;
pub mod mutation;
pub mod report;
pub mod spans;
pub mod suite;

pub use betti::{betti_table, expected_betti, general_table, table_rank_four, table_rank_three, BettiTable};
pub use certify::{certify_exactness, evaluate_mod_p, ExactnessCertificate};
pub use checks::{all_of, check_chain_map, check_d_squared, check_equal, check_minimality, first_entry};
pub use report::{reports_to_json, timed, CheckReport, Status, Witness};
pub use spans::compare_spans;
pub use suite::{betti_checks, chainmap_checks, check_identity_suite, d2_checks, decomposition_checks, duality_checks, exactness_checks, grading_checks, h0_checks, iso_checks, minimality_checks, Context};
pub use mutation::{mutation_battery, run_mutations, seeded_mutations, Mutation, MutationKind, MutationOutcome};
