//! Arbitrary-precision real and complex arithmetic, the trisection kernel,
//! and numeric root oracles.
//!
//! Every value is a pure function of its inputs and a [`PrecisionContext`].

mod complex;
mod context;
mod real;
mod roots;
mod trisect;

pub use complex::PrecComplex;
pub use context::{make_context, PrecisionContext, DEFAULT_DIGITS, MIN_DIGITS};
pub use real::PrecReal;
pub use roots::{poly_roots_numeric, roots_of_unity, sort_roots};
pub use trisect::{cube_roots_of_unity, solve_cubic_trig, trisect_unit, CubeRootsOfUnity, TrisectionResult};

/// Radians to degrees.
pub fn to_degrees(radians: &PrecReal) -> PrecReal {
    radians.mul_i64(180) / radians.pi_like()
}
