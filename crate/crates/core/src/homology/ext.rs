//! `Ext^k(M, P)` from a free resolution.

use super::complex::FreeComplex;
use super::presentation::{homology_at, GradedModulePresentation};
use super::resolution::free_resolution;
use crate::error::Result;

/// `Ext^k(M, P) = ker(d_{k+1}^T) / im(d_k^T)` in `F_k^*`, with the kernel
/// generators as lifts.
pub fn ext_module(m: &GradedModulePresentation, k: usize) -> Result<GradedModulePresentation> {
    let f = free_resolution(m, m.ring.nvars() + 1)?;
    ext_from_resolution(&f, k)
}

/// As [`ext_module`], for an already computed resolution.
pub fn ext_from_resolution(f: &FreeComplex, k: usize) -> Result<GradedModulePresentation> {
    let l = f.length();
    if k > l {
        return Ok(GradedModulePresentation::new(
            &f.ring,
            Vec::new(),
            Vec::new(),
        ));
    }
    homology_at(&f.dual(), l - k)
}
