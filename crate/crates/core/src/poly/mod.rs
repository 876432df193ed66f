//! Multivariate Laurent polynomials, q-analogs, truncated series and joint enumerators.

mod enumerators;
mod mpoly;
mod qanalog;
mod series;

pub use enumerators::{enumerate_over, eulerian_numbers, eulerian_poly, joint_enumerator};
pub use mpoly::{int, unit_exps, Coef, Exps, MPoly, Var, NVARS};
pub use qanalog::{gauss, gauss_table, pochhammer, q_fact, q_int, q_int_of, q_multinomial};
pub use series::{cap_exp_q_series, exp_q_series, QExpSeries, Ring, TruncatedSeries};
pub mod identities;
