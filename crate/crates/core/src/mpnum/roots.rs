use std::cmp::Ordering;

use num_complex::Complex64;
use num_traits::Zero;

use super::{PrecComplex, PrecReal, PrecisionContext};
use crate::error::{Error, Result};
use crate::polyalg::RatPoly;

/// `e^{2πik/p}` for `k = 0..p`.
pub fn roots_of_unity(p: usize, ctx: PrecisionContext) -> Vec<PrecComplex> {
    assert!(p >= 1, "roots_of_unity needs p >= 1");
    let two_pi = PrecReal::pi(ctx).mul_i64(2);
    (0..p)
        .map(|k| {
            if k == 0 {
                PrecComplex::one(ctx)
            } else {
                PrecComplex::cis(&two_pi.mul_i64(k as i64).div_i64(p as i64))
            }
        })
        .collect()
}

const MAX_F64_ITERS: usize = 500;
const MAX_PREC_ITERS: usize = 200;

/// All complex roots of a rational polynomial, found with Aberth–Ehrlich iteration.
///
/// A double-precision pass seeds a full-precision pass. Roots whose imaginary
/// part is below tolerance are returned as exact reals. Ordering is by real
/// part, then imaginary part.
pub fn poly_roots_numeric(poly: &RatPoly, ctx: PrecisionContext) -> Result<Vec<PrecComplex>> {
    let degree = match poly.degree() {
        None => return Err(Error::InvalidArgument("zero polynomial has no roots".into())),
        Some(0) => {
            return Err(Error::InvalidArgument(
                "constant polynomial has no roots".into(),
            ))
        }
        Some(d) => d,
    };
    let lead = PrecReal::from_rational(&poly.coeffs()[degree], ctx);
    let monic: Vec<PrecReal> = poly
        .coeffs()
        .iter()
        .map(|q| PrecReal::from_rational(q, ctx) / &lead)
        .collect();

    let seeds = aberth_f64(&monic.iter().map(PrecReal::to_f64).collect::<Vec<_>>());
    let mut z: Vec<PrecComplex> = seeds.into_iter().map(|s| PrecComplex::from_c64(s, ctx)).collect();

    let stop = PrecReal::pow10(-(ctx.digits() as i32) - 12, ctx);
    let mut converged = false;
    for _ in 0..MAX_PREC_ITERS {
        let mut max_step = PrecReal::zero(ctx);
        for k in 0..degree {
            let (value, deriv) = horner_with_derivative(&monic, &z[k]);
            if value.abs().is_zero() {
                continue;
            }
            let ratio = &value / &deriv;
            let mut repulsion = PrecComplex::zero(ctx);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    repulsion = &repulsion + &(&z[k] - zj).recip();
                }
            }
            let denom = &PrecComplex::one(ctx) - &(&ratio * &repulsion);
            let step = &ratio / &denom;
            let size = step.abs() / (PrecReal::one(ctx) + z[k].abs());
            max_step = max_step.max(size);
            z[k] = &z[k] - &step;
        }
        if max_step < stop {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Internal(format!(
            "root iteration did not converge for polynomial of degree {degree}"
        )));
    }

    let tol = ctx.tolerance();
    let coeff_scale = monic
        .iter()
        .fold(PrecReal::one(ctx), |m, c| m.max(c.abs()));
    for root in z.iter_mut() {
        let bound = &tol * &(PrecReal::one(ctx) + root.re.abs());
        if root.im.abs() < bound {
            root.im = PrecReal::zero(ctx);
        }
        let (value, _) = horner_with_derivative(&monic, root);
        let mag = PrecReal::one(ctx).max(root.abs()).powi(degree);
        if value.abs() >= &tol * &coeff_scale * mag {
            return Err(Error::Internal(format!(
                "root residual {} exceeds tolerance",
                value.abs().to_sci(6)
            )));
        }
    }
    sort_roots(&mut z, &tol);
    Ok(z)
}

/// Deterministic root ordering: ascending real part; near-equal real parts by imaginary part.
pub fn sort_roots(roots: &mut [PrecComplex], tol: &PrecReal) {
    roots.sort_by(|a, b| {
        let scale = a.re.int_like(1).max(a.re.abs()).max(b.re.abs());
        if (&a.re - &b.re).abs() < tol * &scale {
            a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal)
        } else {
            a.re.partial_cmp(&b.re).unwrap_or(Ordering::Equal)
        }
    });
}

fn horner_with_derivative(coeffs: &[PrecReal], x: &PrecComplex) -> (PrecComplex, PrecComplex) {
    let n = coeffs.len();
    let mut value = PrecComplex::from_real(coeffs[n - 1].clone());
    let mut deriv = PrecComplex::from_real(coeffs[n - 1].int_like(0));
    for c in coeffs[..n - 1].iter().rev() {
        deriv = &(&deriv * x) + &value;
        value = &(&value * x) + &PrecComplex::from_real(c.clone());
    }
    (value, deriv)
}

fn aberth_f64(monic: &[f64]) -> Vec<Complex64> {
    let degree = monic.len() - 1;
    let bound = 1.0
        + monic[..degree]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs()));
    let radius = bound.min(1e6) * 0.5 + 0.5;
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / degree as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    for _ in 0..MAX_F64_ITERS {
        let mut max_step = 0.0f64;
        for k in 0..degree {
            let (mut v, mut d) = (Complex64::new(monic[degree], 0.0), Complex64::zero());
            for &c in monic[..degree].iter().rev() {
                d = d * z[k] + v;
                v = v * z[k] + c;
            }
            if v == Complex64::zero() {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-14 {
            break;
        }
    }
    z
}
