use super::{PrecComplex, PrecReal, PrecisionContext};
use crate::error::{Error, Result};

/// The cube roots of unity `ε_k = ((−1 + √3 i)/2)^k`.
#[derive(Debug, Clone)]
pub struct CubeRootsOfUnity {
    pub eps: [PrecComplex; 3],
}

impl CubeRootsOfUnity {
    /// `ε_k` with the index taken mod 3.
    pub fn get(&self, k: usize) -> &PrecComplex {
        &self.eps[k % 3]
    }
}

pub fn cube_roots_of_unity(ctx: PrecisionContext) -> CubeRootsOfUnity {
    let half = PrecReal::parse("0.5", ctx).expect("literal");
    let h = PrecReal::from_i64(3, ctx).sqrt().half();
    CubeRootsOfUnity {
        eps: [
            PrecComplex::one(ctx),
            PrecComplex::new(-&half, h.clone()),
            PrecComplex::new(-half, -h),
        ],
    }
}

/// The three cube roots of a unit complex number.
#[derive(Debug, Clone)]
pub struct TrisectionResult {
    pub input: PrecComplex,
    /// Angle being trisected, `arg(input)` in (−π, π].
    pub theta: PrecReal,
    /// `ζ_k = ε_k ζ_0` with `ζ_0 = e^{iθ/3}`.
    pub zetas: [PrecComplex; 3],
}

impl TrisectionResult {
    pub fn zeta(&self, k: usize) -> &PrecComplex {
        &self.zetas[k % 3]
    }

    /// The trisection of the complex conjugate: `ζ'_k = conj(ζ_{−k})`.
    ///
    /// Valid for inputs off the negative real axis, where the principal
    /// branch commutes with conjugation.
    pub fn conjugated(&self) -> TrisectionResult {
        TrisectionResult {
            input: self.input.conj(),
            theta: -&self.theta,
            zetas: [
                self.zetas[0].conj(),
                self.zetas[2].conj(),
                self.zetas[1].conj(),
            ],
        }
    }
}

/// Trisects the angle of a unit complex number by taking its three cube roots.
pub fn trisect_unit(z: &PrecComplex, ctx: PrecisionContext) -> Result<TrisectionResult> {
    let deviation = (z.abs() - PrecReal::one(ctx)).abs();
    if deviation >= ctx.tolerance() {
        return Err(Error::InvalidArgument(format!(
            "trisection needs a unit complex number; | |z| - 1 | = {}",
            deviation.to_sci(6)
        )));
    }
    let theta = z.arg();
    let zeta0 = PrecComplex::cis(&theta.div_i64(3));
    let eps = cube_roots_of_unity(ctx);
    let zetas = [
        zeta0.clone(),
        eps.get(1) * &zeta0,
        eps.get(2) * &zeta0,
    ];
    Ok(TrisectionResult {
        input: z.clone(),
        theta,
        zetas,
    })
}

/// Real roots of `s³ + a s² + b s + c`, ascending, via the trigonometric method.
///
/// The depressed cubic `t³ + p t + q` with `p < 0` has roots
/// `t = 2√(−p/3) cos φ_k`, where `e^{iφ_k}` are the cube roots of the unit
/// number whose real part is `(3q / 2p) √(−3/p)`. That cube-root step is
/// exactly [`trisect_unit`].
pub fn solve_cubic_trig(
    a: &PrecReal,
    b: &PrecReal,
    c: &PrecReal,
    ctx: PrecisionContext,
) -> Result<[PrecReal; 3]> {
    let shift = a.div_i64(3);
    let p = b - &(a * a).div_i64(3);
    let q = (a * a * a).mul_i64(2).div_i64(27) - (a * b).div_i64(3) + c;
    // discriminant of t³ + pt + q
    let disc = -((&p * &p * &p).mul_i64(4) + (&q * &q).mul_i64(27));
    let scale = a.abs().max(b.abs()).max(c.abs()).max(PrecReal::one(ctx));
    let slack = ctx.tolerance() * scale.powi(6);
    if disc < -&slack {
        return Err(Error::Domain(format!(
            "cubic has a complex-conjugate root pair; discriminant = {}",
            disc.to_sci(12)
        )));
    }

    let mut roots = if p.is_zero() || (p.is_positive()) {
        // p >= 0 with non-negative discriminant forces p = q = 0 up to rounding
        let t = (-q).cbrt();
        [t.clone(), t.clone(), t]
    } else {
        let amp = (-&p).div_i64(3).sqrt().mul_i64(2);
        let mut x = (q.mul_i64(3) / p.mul_i64(2)) * (PrecReal::from_i64(-3, ctx) / &p).sqrt();
        let one = PrecReal::one(ctx);
        if x > one {
            x = one.clone();
        } else if x < -&one {
            x = -&one;
        }
        let y = (&one - &x * &x).max(PrecReal::zero(ctx)).sqrt();
        let tri = trisect_unit(&PrecComplex::new(x, y), ctx)?;
        [
            &amp * &tri.zetas[0].re,
            &amp * &tri.zetas[1].re,
            &amp * &tri.zetas[2].re,
        ]
    };
    for r in roots.iter_mut() {
        *r = &*r - &shift;
    }
    roots.sort_by(|x, y| x.partial_cmp(y).expect("finite roots"));
    Ok(roots)
}
