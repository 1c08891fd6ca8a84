//! Exact arithmetic: base fields, polynomials, residue algebras, truncated
//! power series and the small amount of linear algebra the rest needs.

pub mod factor;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod residue;
pub mod ring;
pub mod series;
pub mod zpoly;

pub use field::{BaseField, ExtensionField, FieldValue};
pub use poly::{Poly, PolyRing};
pub use residue::ResidueRing;
pub use ring::{AlgebraError, Ring};
pub use series::{SeriesRing, TruncatedSeries};
