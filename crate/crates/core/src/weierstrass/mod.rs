//! Gap sequences, weights and the Weierstrass divisor.

mod gaps;
mod report;
mod wronskian;

pub use gaps::{ell_ladder, fibre_orders, vanishing_orders, GapData, DEFAULT_START_PRECISION};
pub use report::{weierstrass_report, Method, WeightEntry, WeightReport};
pub use wronskian::{wronskian_delta, wronskian_divisor, wronskian_loci, WeightLocus};

/// `g (g^2 - 1)`.
pub fn expected_total_weight(g: u32) -> u64 {
    let g = g as u64;
    g * (g * g - 1)
}
