use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{PrecReal, PrecisionContext};

/// A complex number with [`PrecReal`] parts.
#[derive(Clone, PartialEq)]
pub struct PrecComplex {
    pub re: PrecReal,
    pub im: PrecReal,
}

impl PrecComplex {
    pub fn new(re: PrecReal, im: PrecReal) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: PrecReal) -> Self {
        let im = re.int_like(0);
        Self { re, im }
    }

    pub fn zero(ctx: PrecisionContext) -> Self {
        Self::new(PrecReal::zero(ctx), PrecReal::zero(ctx))
    }

    pub fn one(ctx: PrecisionContext) -> Self {
        Self::new(PrecReal::one(ctx), PrecReal::zero(ctx))
    }

    pub fn i(ctx: PrecisionContext) -> Self {
        Self::new(PrecReal::zero(ctx), PrecReal::one(ctx))
    }

    pub fn from_i64(re: i64, im: i64, ctx: PrecisionContext) -> Self {
        Self::new(PrecReal::from_i64(re, ctx), PrecReal::from_i64(im, ctx))
    }

    /// `e^{iθ}`.
    pub fn cis(theta: &PrecReal) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    pub fn from_polar(r: &PrecReal, theta: &PrecReal) -> Self {
        Self::cis(theta).scale(r)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> PrecReal {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> PrecReal {
        self.norm_sqr().sqrt()
    }

    /// Argument in the principal range (−π, π].
    pub fn arg(&self) -> PrecReal {
        PrecReal::atan2(&self.im, &self.re)
    }

    pub fn scale(&self, k: &PrecReal) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        Self::new(&self.re / &n, -(&self.im / &n))
    }

    pub fn powi(&self, n: usize) -> Self {
        let mut acc = Self::from_real(self.re.int_like(1));
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Principal square root (argument in (−π/2, π/2]).
    pub fn sqrt(&self) -> Self {
        let r = self.abs();
        if r.is_zero() {
            return self.clone();
        }
        let re = ((&r + &self.re).half()).sqrt();
        let im_mag = ((&r - &self.re).half()).sqrt();
        let im = if self.im.is_negative() { -im_mag } else { im_mag };
        Self::new(re, im)
    }

    /// Principal cube root: modulus `|z|^(1/3)`, argument `arg(z)/3` in (−π/3, π/3].
    pub fn principal_cbrt(&self) -> Self {
        let r = self.abs();
        if r.is_zero() {
            return self.clone();
        }
        let theta = self.arg().div_i64(3);
        Self::from_polar(&r.cbrt(), &theta)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn dist(&self, other: &Self) -> PrecReal {
        (self - other).abs()
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn from_c64(z: num_complex::Complex64, ctx: PrecisionContext) -> Self {
        Self::new(PrecReal::from_f64(z.re, ctx), PrecReal::from_f64(z.im, ctx))
    }
}

impl fmt::Display for PrecComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(30).max(1);
        let im = self.im.to_sci(sig);
        if let Some(rest) = im.strip_prefix('-') {
            write!(f, "{} - {}i", self.re.to_sci(sig), rest)
        } else {
            write!(f, "{} + {}i", self.re.to_sci(sig), im)
        }
    }
}

impl fmt::Debug for PrecComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrecComplex({:.25})", self)
    }
}

impl<'a> Add<&'a PrecComplex> for &'a PrecComplex {
    type Output = PrecComplex;
    fn add(self, rhs: &'a PrecComplex) -> PrecComplex {
        PrecComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a PrecComplex> for &'a PrecComplex {
    type Output = PrecComplex;
    fn sub(self, rhs: &'a PrecComplex) -> PrecComplex {
        PrecComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a PrecComplex> for &'a PrecComplex {
    type Output = PrecComplex;
    fn mul(self, rhs: &'a PrecComplex) -> PrecComplex {
        PrecComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a PrecComplex> for &'a PrecComplex {
    type Output = PrecComplex;
    fn div(self, rhs: &'a PrecComplex) -> PrecComplex {
        let n = rhs.norm_sqr();
        PrecComplex::new(
            (&self.re * &rhs.re + &self.im * &rhs.im) / &n,
            (&self.im * &rhs.re - &self.re * &rhs.im) / &n,
        )
    }
}

macro_rules! owned_forward {
    ($trait:ident, $method:ident) => {
        impl $trait<PrecComplex> for PrecComplex {
            type Output = PrecComplex;
            fn $method(self, rhs: PrecComplex) -> PrecComplex {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a PrecComplex> for PrecComplex {
            type Output = PrecComplex;
            fn $method(self, rhs: &'a PrecComplex) -> PrecComplex {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<PrecComplex> for &'a PrecComplex {
            type Output = PrecComplex;
            fn $method(self, rhs: PrecComplex) -> PrecComplex {
                self.$method(&rhs)
            }
        }
    };
}

owned_forward!(Add, add);
owned_forward!(Sub, sub);
owned_forward!(Mul, mul);
owned_forward!(Div, div);

impl Neg for PrecComplex {
    type Output = PrecComplex;
    fn neg(self) -> PrecComplex {
        PrecComplex::new(-self.re, -self.im)
    }
}

impl Neg for &PrecComplex {
    type Output = PrecComplex;
    fn neg(self) -> PrecComplex {
        PrecComplex::new(-&self.re, -&self.im)
    }
}
