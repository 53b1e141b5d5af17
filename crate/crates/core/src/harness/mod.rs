//! Random instance generation and the theorem checkers.

pub mod checks;
pub mod complex;
pub mod recipe;
pub mod report;
pub mod runner;

pub use checks::{
    check_chain_independence, check_hom_bound, check_ideal_module_bound, check_prop_almost,
    check_regularity_routes, check_serre_formula, check_tensor_bound, verify_complex_lemma,
    verify_complex_lemma_tight,
};
pub use complex::ExplicitComplex;
pub use recipe::{generate_instance, splitmix64, CorpusInstance, Recipe, RecipeKind};
pub use report::{CheckReport, Hypothesis, Tally, Verdict};
pub use runner::{evaluate, instance_seed, plan_check, run_checks, CheckKind};
