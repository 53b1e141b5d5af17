//! Minimal free resolutions, Betti tables, Tor, Hom, Ext and graded local
//! cohomology.

mod functors;
mod local;
mod resolution;

pub use functors::{ext_module, ext_with, hom_module, homology, tensor_product, tor, tor_with};
pub use local::{
    depth_and_cm_test, local_cohomology_profile, partial_regularity, DepthInfo, IndexSet, LocalCohomologyProfile,
};
pub use resolution::{betti_table, free_resolution, regularity_from_betti, BettiTable, FreeResolution};
