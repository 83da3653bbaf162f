//! Exact Euler polynomials and the denominator of `E_n(x) - E_n(1)`.
//!
//! `E_n(x)` is built twice, once from the generating-function recurrence and
//! once coefficientwise from Bernoulli numbers, and the denominator of
//! `E*_n(x) = E_n(x) - E_n(1)` is checked against `2^{v2(n+1) - g(n)}`, where
//! `g(n) = 1` exactly when `n = 2^m - 1`.
//!
//! ```
//! use euler_denom::denominator::{poly_denominator, shifted_poly_denom_closed};
//! use euler_denom::euler::shifted_euler;
//!
//! let shifted = shifted_euler(7);
//! assert_eq!(poly_denominator(&shifted), shifted_poly_denom_closed(7));
//! assert_eq!(shifted.to_string(), "x^7 - 7/2x^6 + 35/4x^4 - 21/2x^2 + 17/4");
//! ```

pub mod denominator;
pub mod error;
pub mod euler;
pub mod identities;
pub mod numeric;
pub mod oeis;
pub mod poly;
pub mod special;

pub use error::{Error, Result};
pub use numeric::{Integer, Rational};
pub use poly::Polynomial;
