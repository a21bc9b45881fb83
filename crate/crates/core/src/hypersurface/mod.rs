//! Polynomial vector fields on ℂ^{k+2}, tangency to the model hypersurface
//! `Re w = 2 Σ Re(z₀ʰ z̄ₕ)`, the catalogue of its infinitesimal symmetries
//! and the verification suites built on them.

mod catalogue;
mod field;
mod poly;
mod suites;

pub use catalogue::{catalogue, Catalogue};
pub use field::{
    defining_function, field_bracket, real_bracket, real_tangency, tangency, tangency_form, tangency_residual,
    HoloField, RealField, MAX_DEGREE,
};
pub use poly::{Monomial, Poly, Variables};
pub use suites::{
    iso_certificate, iso_images, run_suite, verify_abelian, verify_ascdes, verify_cpx, verify_irrep, verify_sl2,
    verify_su2, CheckResult, Suite, SuiteReport,
};
