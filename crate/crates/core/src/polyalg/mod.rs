//! Exact polynomial algebra over ℚ and ℚ(√13).
//!
//! Covers the reciprocal (palindromic) descent `s = r + 1/r`, its inverse,
//! and the norm `R · R̄` of a ℚ(√13) cubic. Arithmetic never rounds.

pub mod catalog;
mod descent;
mod eval;
pub mod json;
mod quad;
mod rat;

pub use descent::{descend_palindromic, lift_descent, spot_values, DescentPair};
pub use eval::{embed, eval_poly, Evaluate};
pub use quad::{expand_conjugate_product, QuadNum, QuadPoly};
pub use rat::{is_palindromic, RatPoly};
