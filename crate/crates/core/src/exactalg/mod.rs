//! Exact arithmetic: rationals, polynomials, truncated series, determinants,
//! resultants.

pub mod det;
pub mod linalg;
pub mod multipoly;
pub mod resultant;
pub mod ring;
pub mod roots;
pub mod series;
pub mod unipoly;

pub use det::{det, det_bareiss};
pub use multipoly::{Monomial, MultiPoly, Var};
pub use resultant::{discriminant, resultant};
pub use ring::{format_rational, parse_rational, rat, ratio, ExactDiv, Rational, Ring};
pub use roots::rational_roots;
pub use series::{Convention, Series};
pub use unipoly::UniPoly;
