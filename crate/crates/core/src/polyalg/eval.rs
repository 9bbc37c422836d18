use crate::mpnum::{PrecComplex, PrecReal, PrecisionContext};

use super::quad::{QuadNum, QuadPoly};
use super::RatPoly;

/// Horner evaluation at context precision.
pub trait Evaluate {
    fn eval_at(&self, x: &PrecComplex, ctx: PrecisionContext) -> PrecComplex;
}

impl Evaluate for RatPoly {
    fn eval_at(&self, x: &PrecComplex, ctx: PrecisionContext) -> PrecComplex {
        self.coeffs().iter().rev().fold(PrecComplex::zero(ctx), |acc, c| {
            &(&acc * x) + &PrecComplex::from_real(PrecReal::from_rational(c, ctx))
        })
    }
}

impl Evaluate for QuadPoly {
    fn eval_at(&self, x: &PrecComplex, ctx: PrecisionContext) -> PrecComplex {
        let root = PrecReal::from_i64(self.discriminant(), ctx).sqrt();
        self.coeffs().iter().rev().fold(PrecComplex::zero(ctx), |acc, c| {
            &(&acc * x) + &PrecComplex::from_real(embed(c, &root, ctx))
        })
    }
}

/// Numeric value of `a + b√d` given `√d`.
pub fn embed(c: &QuadNum, sqrt_d: &PrecReal, ctx: PrecisionContext) -> PrecReal {
    PrecReal::from_rational(&c.a, ctx) + PrecReal::from_rational(&c.b, ctx) * sqrt_d
}

pub fn eval_poly<P: Evaluate>(poly: &P, x: &PrecComplex, ctx: PrecisionContext) -> PrecComplex {
    poly.eval_at(x, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpnum::{make_context, solve_cubic_trig};
    use crate::polyalg::catalog;

    #[test]
    fn q7_vanishes_at_its_largest_root() {
        let c = make_context(50).unwrap();
        let roots = solve_cubic_trig(
            &PrecReal::from_i64(6, c),
            &PrecReal::from_i64(-9, c),
            &PrecReal::from_i64(-41, c),
            c,
        )
        .unwrap();
        let v = eval_poly(&catalog::q7(), &PrecComplex::from_real(roots[2].clone()), c);
        assert!(v.abs() < PrecReal::pow10(-40, c));
    }

    #[test]
    fn simple_values() {
        let c = make_context(50).unwrap();
        let v = eval_poly(&RatPoly::from_i64(&[1, 0, 1]), &PrecComplex::i(c), c);
        assert!(v.abs() < c.tolerance());
        let q = eval_poly(&catalog::q13(), &PrecComplex::zero(c), c);
        assert_eq!(q, PrecComplex::from_i64(2131, 0, c));
    }

    #[test]
    fn quad_poly_embedding() {
        let c = make_context(50).unwrap();
        // s + √13 at s = −√13
        let r = QuadPoly::new(
            vec![QuadNum::from_ints(0, 1, 1, 13), QuadNum::from_ints(1, 0, 1, 13)],
            13,
        );
        let x = PrecComplex::from_real(-PrecReal::from_i64(13, c).sqrt());
        assert!(eval_poly(&r, &x, c).abs() < c.tolerance());
    }
}
