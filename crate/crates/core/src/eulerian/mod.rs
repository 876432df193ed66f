//! The Eulerian quasisymmetric functions Q_{n,j}, Q_{n,j,k} and Q_{λ,j}, their formulas,
//! and the verification suites for the identities and conjectures about them.

mod formulas;
mod suites;
mod table;

pub use formulas::{
    char_table, erase, g_lambda, generating_geometric, generating_quotient, q_closed_form,
    q_power_sum, q_recurrence, t_coeff_i64, CharTable,
};
pub use suites::*;
pub use table::{
    exc_table, q_def, q_lambda, q_lambda_t, q_n_tr, q_nj, q_njk, to_h, ExcTable, QSelector,
    LAMBDA_CAP, NJK_CAP,
};
