//! Koszul complexes, free resolutions, dual complexes, Ext presentations and
//! comparison maps between resolutions.

mod complex;
mod ext;
mod lift;
mod matrix;
mod presentation;
mod resolution;

pub use complex::{
    koszul_complex, self_duality_check, shuffle_sign, subsets, FreeComplex, SelfDuality,
};
pub use ext::{ext_from_resolution, ext_module};
pub use lift::{lift_map, mapping_cone, ComparisonLift, ImageSolver};
pub use matrix::Matrix;
pub use presentation::{
    homology_at, koszul_homology, matrix_kernel, subquotient, GradedModulePresentation,
    KoszulHomology,
};
pub use resolution::{free_resolution, minimize, schreyer_resolution};
