//! Hyperelliptic Jacobians (Cantor arithmetic), zeta functions over prime
//! fields, and the two torsion checks on Weierstrass point differences.

mod mumford;
mod prop5;
mod prop6;
mod verdict;
mod zeta;

pub use mumford::{class_of_difference, odd_degree_model, HyperellipticJacobian, MumfordClass};
pub use prop5::{weierstrass_subgroup_2torsion, Prop5Outcome};
pub use prop6::verify_trigonal_3torsion;
pub use verdict::{Assertion, Verdict};
pub use zeta::{lagrange_check, zeta, ZetaData, DEFAULT_BUDGET};
