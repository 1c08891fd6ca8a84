pub mod algebra;
pub mod cli;
pub mod curve;
pub mod error;
pub mod io;
pub mod jacobian;
pub mod weierstrass;

pub use error::{Error, Result};
