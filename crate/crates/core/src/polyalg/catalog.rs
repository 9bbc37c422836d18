//! Polynomials as printed in the construction literature, plus corrected forms.
//!
//! Printed lists are claims; the verify module adjudicates them.

use super::quad::{QuadNum, QuadPoly};
use super::RatPoly;

/// `s³ + 6s² − 9s − 41`.
pub fn q7() -> RatPoly {
    RatPoly::from_i64(&[-41, -9, 6, 1])
}

/// The heptagon sextic as printed, linear term `−6r`.
pub fn p7_printed() -> RatPoly {
    RatPoly::from_i64(&[1, -6, -6, -29, -6, 6, 1])
}

/// The palindromic sextic `Q7(r + 1/r) · r³`, linear term `+6r`.
pub fn p7_corrected() -> RatPoly {
    RatPoly::from_i64(&[1, 6, -6, -29, -6, 6, 1])
}

/// The degree-12 palindromic polynomial for the triskaidecagon, as printed.
pub fn p12_printed() -> RatPoly {
    RatPoly::from_i64(&[
        1, 12, -12, -274, -441, 441, 1275, 441, -441, -274, -12, 12, 1,
    ])
}

/// `s⁶ + 12s⁵ − 18s⁴ − 334s³ − 384s² + 1323s + 2131`.
pub fn q13() -> RatPoly {
    RatPoly::from_i64(&[2131, 1323, -384, -334, -18, 12, 1])
}

/// The cubic factor of `Q13` over ℚ(√13) with the printed constant `(15 + 107√13)/2`.
pub fn r13_printed() -> QuadPoly {
    r13_with_constant(QuadNum::from_ints(15, 107, 2, 13))
}

/// The cubic factor of `Q13` over ℚ(√13) with constant `(107 + 15√13)/2`.
pub fn r13_corrected() -> QuadPoly {
    r13_with_constant(QuadNum::from_ints(107, 15, 2, 13))
}

/// `s³ + 3(2 + √13)s² + 21(3 + √13)/2 · s + constant`.
pub fn r13_with_constant(constant: QuadNum) -> QuadPoly {
    QuadPoly::new(
        vec![
            constant,
            QuadNum::from_ints(63, 21, 2, 13),
            QuadNum::from_ints(6, 3, 1, 13),
            QuadNum::from_ints(1, 0, 1, 13),
        ],
        13,
    )
}
