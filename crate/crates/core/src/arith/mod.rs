//! Exact scalars and the one-variable coefficient carriers.

mod laurent;
mod linalg;
mod poly;
mod rational;
mod ring;
mod series;

pub use laurent::LaurentPoly;
pub use linalg::{determinant_gauss, solve_linear};
pub use poly::DensePoly;
pub use rational::{format_rational, parse_rational, parse_rational_at, rat, Rational};
pub use ring::{determinant_expand, CommRing, Matrix};
pub use series::Series;
