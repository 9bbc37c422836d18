//! Trisection-based constructions of the regular heptagon and triskaidecagon.
//!
//! Three vertices of a regular p-gon arise as sums `R1·ε_j + R2·ζ_k` of a
//! cube root of unity and a cube root of a unit complex number, the latter
//! being an angle trisection. The crate builds every such construction for
//! p = 7 and p = 13, checks the results against independent oracles, and
//! generalizes the recipe to other primes p ≡ 1 (mod 6) via Cardano's method.

pub mod construct;
pub mod error;
pub mod figio;
pub mod general;
pub mod mpnum;
pub mod polyalg;
pub mod verify;

pub use error::{Error, Result};
