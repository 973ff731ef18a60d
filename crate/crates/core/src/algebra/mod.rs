//! Exact arithmetic over GF(p): residues, polynomials, rational functions,
//! truncated Laurent series, matrices and discriminants.

pub mod fp;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod resultant;
pub mod series;

pub use fp::{fp_is_square, is_prime, FpElem};
pub use matrix::{kernel, FpMatrix};
pub use poly::{poly_divmod, poly_gcd, poly_is_squarefree, Poly};
pub use ratfun::{proper_split, ratfun_deg, RatFun};
pub use resultant::discriminant_in_t;
pub use series::{series_sqrt, LaurentSeries};
