//! The curve `y^n = h(x)`: model, places, local expansions, functions,
//! divisors and holomorphic differentials.

pub mod chart;
pub mod differentials;
pub mod divisor;
pub mod function;
pub mod model;
pub mod place;

pub use chart::{local_expansion, Expandable};
pub use differentials::{differential_basis, Differential};
pub use divisor::{div_dx, divisor_of, valuation, Divisor};
pub use function::FunctionFieldElement;
pub use model::{build_trigonal, BranchLocus, SuperellipticCurve, TrigonalCurve, TrigonalParams};
pub use place::{places_over, Locus, Place, PlaceKind};
