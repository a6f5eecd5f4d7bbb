//! Exact polynomials and rational functions in the Laplace variable `s`.

mod poly;
mod rf;

pub use poly::{poly_add, poly_divmod, poly_gcd, poly_mul, Polynomial};
pub use rf::{rf_eval, rf_is_proper, rf_normalize, RationalFunction};
