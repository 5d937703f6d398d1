//! The homogeneous monogenic polynomials `X_n^l`, `Y_n^m`: exact
//! construction, independent closed-form evaluators, recurrences,
//! normalization and pointwise bounds.

mod closed_form;
mod construct;
mod index;
mod normalize;
mod recurrence;
pub mod table;

pub use closed_form::{
    basis_closed_form_eval, basis_via_spherical_harmonics, closed_form_trig, hyperholomorphic_constant_closed_form,
    hyperholomorphic_constant_trig, pointwise_bound, spherical_harmonic_form_trig,
};
pub use construct::{
    basis_or_zero, basis_polynomial, hyperholomorphic_constant_polynomial, hyperholomorphic_scale, solid_harmonic,
    HarmonicKind,
};
pub use index::{degree_indices, indices_up_to, BasisIndex, Family};
pub use normalize::{norm_sq, normalize, unit_norm_sq, NormalizedBasisElement};
pub use table::{basis_table, BasisTable, TableEntry, TABLE_SCHEMA};
pub use recurrence::{recurrence_check, recurrence_check_with, Recurrence, RecurrenceOutcome};
