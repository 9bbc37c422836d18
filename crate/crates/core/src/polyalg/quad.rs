use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::rat::rat;
use super::RatPoly;
use crate::error::{Error, Result};

/// `a + b√d` for a fixed squarefree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    pub a: BigRational,
    pub b: BigRational,
    pub d: i64,
}

impl QuadNum {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        Self { a, b, d }
    }

    /// `(a + b√d) / den` with integer parts.
    pub fn from_ints(a: i64, b: i64, den: i64, d: i64) -> Self {
        let den = BigInt::from(den);
        Self::new(
            BigRational::new(BigInt::from(a), den.clone()),
            BigRational::new(BigInt::from(b), den),
            d,
        )
    }

    pub fn zero(d: i64) -> Self {
        Self::new(BigRational::zero(), BigRational::zero(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a − b√d`.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.d, other.d, "mixing quadratic fields");
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        // common denominator form (p + q√d)/den reads like the printed formulas
        let den = num_integer::Integer::lcm(self.a.denom(), self.b.denom());
        let p = (&self.a * BigRational::from_integer(den.clone())).to_integer();
        let q = (&self.b * BigRational::from_integer(den.clone())).to_integer();
        let sign = if q.is_negative() { '-' } else { '+' };
        let qa = q.abs();
        let radical = if qa == BigInt::from(1) {
            format!("√{}", self.d)
        } else {
            format!("{qa}√{}", self.d)
        };
        let body = if p.is_zero() {
            if q.is_negative() {
                format!("-{radical}")
            } else {
                radical
            }
        } else {
            format!("{p} {sign} {radical}")
        };
        if den == BigInt::from(1) {
            if p.is_zero() {
                f.write_str(&body)
            } else {
                write!(f, "({body})")
            }
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &'a QuadNum) -> QuadNum {
        self.check_field(rhs);
        QuadNum::new(&self.a + &rhs.a, &self.b + &rhs.b, self.d)
    }
}

impl<'a> Sub<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &'a QuadNum) -> QuadNum {
        self.check_field(rhs);
        QuadNum::new(&self.a - &rhs.a, &self.b - &rhs.b, self.d)
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &'a QuadNum) -> QuadNum {
        self.check_field(rhs);
        let d = rat(self.d);
        QuadNum::new(
            &self.a * &rhs.a + &self.b * &rhs.b * d,
            &self.a * &rhs.b + &self.b * &rhs.a,
            self.d,
        )
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::new(-&self.a, -&self.b, self.d)
    }
}

/// A polynomial over ℚ(√d), ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadPoly {
    coeffs: Vec<QuadNum>,
    d: i64,
}

impl QuadPoly {
    pub fn new(mut coeffs: Vec<QuadNum>, d: i64) -> Self {
        assert!(coeffs.iter().all(|c| c.d == d), "coefficients from another field");
        while coeffs.last().is_some_and(QuadNum::is_zero) {
            coeffs.pop();
        }
        Self { coeffs, d }
    }

    pub fn coeffs(&self) -> &[QuadNum] {
        &self.coeffs
    }

    pub fn discriminant(&self) -> i64 {
        self.d
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> QuadNum {
        self.coeffs.get(i).cloned().unwrap_or_else(|| QuadNum::zero(self.d))
    }

    /// Coefficient-wise `√d ↦ −√d`.
    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(QuadNum::conj).collect(), self.d)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.d, rhs.d, "mixing quadratic fields");
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::new(Vec::new(), self.d);
        }
        let mut out = vec![QuadNum::zero(self.d); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out, self.d)
    }

    /// The rational polynomial, if every √d-part is zero.
    pub fn to_rational(&self) -> Option<RatPoly> {
        if self.coeffs.iter().all(QuadNum::is_rational) {
            Some(RatPoly::new(self.coeffs.iter().map(|c| c.a.clone()).collect()))
        } else {
            None
        }
    }

    /// Replaces the coefficient of `x^i`.
    pub fn with_coeff(&self, i: usize, c: QuadNum) -> Self {
        let mut coeffs: Vec<QuadNum> = (0..self.coeffs.len().max(i + 1)).map(|k| self.coeff(k)).collect();
        coeffs[i] = c;
        Self::new(coeffs, self.d)
    }

    pub fn pretty(&self, var: &str) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let one = c.is_rational() && c.a == rat(1);
            if i > 0 && one {
                terms.push(power);
            } else if i > 0 {
                terms.push(format!("{c} {power}"));
            } else {
                terms.push(c.to_string());
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Expands `R · R̄` where `R̄` is the ℚ(√d)-conjugate of `R`.
///
/// The √d-parts of the product cancel identically; a surviving irrational part
/// is reported as an internal failure.
pub fn expand_conjugate_product(r: &QuadPoly) -> Result<RatPoly> {
    let product = r.mul(&r.conj());
    product.to_rational().ok_or_else(|| {
        Error::Internal("conjugate product kept an irrational coefficient".into())
    })
}
