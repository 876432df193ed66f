//! Symmetric and quasisymmetric functions with exact coefficients.

mod monomial;
mod qsym;
mod suites;
mod sym;
mod transition;

pub use monomial::MonoPoly;
pub use qsym::{
    composition_to_mask, fundamental_p_series_closed, mask_to_composition, mask_to_set,
    set_to_mask, QSymBasis, QSymElem,
};
pub use suites::verify_basis_round_trips;
pub use sym::{h_series, m_coefficient, SymBasis, SymElem};
