//! Necklaces, ornaments and banners over the bicolored alphabet, and the bijections and
//! involutions between them.

mod banner;
mod involution;
mod lyndon;
mod necklace;
mod suites;

pub use banner::{
    banner_weights, enumerate_banners, enumerate_marked, gamma, gamma_inverse, Banner,
    MarkedSequence,
};
pub use involution::{involution_complement, involution_value_swap};
pub use suites::{
    verify_banner_ornament, verify_gamma, verify_gr_round_trip, verify_involutions,
    verify_periodic_comparison,
};
pub use lyndon::{
    increasing_factorization_by, is_lyndon_by, lyndon_factorization_by, lyndon_type_by,
};
pub use necklace::{
    enumerate_necklaces, enumerate_ornaments, gr_eta, gr_phi, ornament_weights, Necklace,
    Ornament,
};
