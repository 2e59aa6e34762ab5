//! Exact arithmetic over `Z[i][a, h]`.

mod gaussian;
mod poly;
mod text;

pub use gaussian::GaussianInteger;
pub use poly::{units, Monomial, RingPoly};
pub use text::{parse_poly, PolyParseError};
