use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial with exact rational coefficients, ascending degree.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Largest coefficient magnitude, at least 1.
    pub fn coefficient_scale(&self) -> BigRational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .fold(BigRational::one(), |m, c| if c > m { c } else { m })
    }

    /// Renders the polynomial in descending powers of `var`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("({mag})")
            };
            match i {
                0 => out.push_str(&coeff),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&coeff);
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("x"))
    }
}

impl<'a> Add<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &'a RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &'a RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &'a RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// True iff the coefficient list reads the same in both directions.
pub fn is_palindromic(p: &RatPoly) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}
