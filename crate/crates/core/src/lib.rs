//! q-Eulerian polynomials, their symmetric and quasisymmetric refinements, the
//! bijections behind them, and the poset topology they describe.

pub mod bijections;
pub mod combinatorics;
mod error;
pub mod eulerian;
pub mod poly;
pub mod poset;
pub mod registry;
pub mod report;
pub mod shelling;
pub mod symfunc;

pub use error::{check_cap, Caps, Error, Result, DEFAULT_DEGREE_CAP, DEFAULT_PERM_CAP};
