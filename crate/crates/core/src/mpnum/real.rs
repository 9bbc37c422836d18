use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;

use super::PrecisionContext;
use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// A real number carried at a fixed binary precision.
///
/// Binary operations run at the larger precision of their operands, so values
/// built from the same [`PrecisionContext`] stay at that context's precision.
#[derive(Clone)]
pub struct PrecReal {
    value: BigFloat,
    bits: usize,
}

impl PrecReal {
    fn wrap(value: BigFloat, bits: usize) -> Self {
        Self { value, bits }
    }

    pub fn zero(ctx: PrecisionContext) -> Self {
        Self::from_i64(0, ctx)
    }

    pub fn one(ctx: PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    pub fn from_i64(v: i64, ctx: PrecisionContext) -> Self {
        let bits = ctx.bits();
        Self::wrap(BigFloat::from_i64(v, bits), bits)
    }

    pub fn from_f64(v: f64, ctx: PrecisionContext) -> Self {
        let bits = ctx.bits();
        Self::wrap(BigFloat::from_f64(v, bits), bits)
    }

    pub fn from_bigint(v: &BigInt, ctx: PrecisionContext) -> Self {
        Self::parse(&v.to_string(), ctx).expect("integer literal parses")
    }

    pub fn from_rational(q: &BigRational, ctx: PrecisionContext) -> Self {
        Self::from_bigint(q.numer(), ctx) / Self::from_bigint(q.denom(), ctx)
    }

    /// Parses a decimal literal such as `-1.25e-3`.
    pub fn parse(text: &str, ctx: PrecisionContext) -> Result<Self> {
        let bits = ctx.bits();
        let value = with_consts(|cc| BigFloat::parse(text, Radix::Dec, bits, RM, cc));
        if value.is_nan() || value.is_inf() {
            return Err(Error::InvalidArgument(format!("not a finite decimal: {text:?}")));
        }
        Ok(Self::wrap(value, bits))
    }

    /// `10^exponent`, rounded once.
    pub fn pow10(exponent: i32, ctx: PrecisionContext) -> Self {
        Self::parse(&format!("1e{exponent}"), ctx).expect("power of ten parses")
    }

    pub fn pi(ctx: PrecisionContext) -> Self {
        let bits = ctx.bits();
        Self::wrap(with_consts(|cc| cc.pi(bits, RM)), bits)
    }

    /// π at this value's precision.
    pub fn pi_like(&self) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(self.bits, RM)), self.bits)
    }

    /// The integer `v` at this value's precision.
    pub fn int_like(&self, v: i64) -> Self {
        Self::wrap(BigFloat::from_i64(v, self.bits), self.bits)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(self.bits, RM), self.bits)
    }

    /// Real cube root (odd function, so negative inputs give negative roots).
    pub fn cbrt(&self) -> Self {
        Self::wrap(self.value.cbrt(self.bits, RM), self.bits)
    }

    pub fn sin(&self) -> Self {
        let v = with_consts(|cc| self.value.sin(self.bits, RM, cc));
        Self::wrap(v, self.bits)
    }

    pub fn cos(&self) -> Self {
        let v = with_consts(|cc| self.value.cos(self.bits, RM, cc));
        Self::wrap(v, self.bits)
    }

    pub fn atan(&self) -> Self {
        let v = with_consts(|cc| self.value.atan(self.bits, RM, cc));
        Self::wrap(v, self.bits)
    }

    /// Four-quadrant arctangent of `y / x` in the principal range (−π, π].
    ///
    /// A zero `y` with negative `x` yields +π regardless of the zero's sign.
    pub fn atan2(y: &Self, x: &Self) -> Self {
        let bits = y.bits.max(x.bits);
        let pi = Self::wrap(with_consts(|cc| cc.pi(bits, RM)), bits);
        if x.is_zero() && y.is_zero() {
            return Self::wrap(BigFloat::from_i64(0, bits), bits);
        }
        let y_nonneg = y.is_zero() || y.is_positive();
        if x.abs() >= y.abs() {
            let base = (y / x).atan();
            if x.is_positive() {
                base
            } else if y_nonneg {
                base + pi
            } else {
                base - pi
            }
        } else {
            let half_pi = pi.half();
            let base = (x / y).atan();
            if y_nonneg {
                half_pi - base
            } else {
                -half_pi - base
            }
        }
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.value.powi(n, self.bits, RM), self.bits)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.bits)
    }

    pub fn half(&self) -> Self {
        self / &Self::wrap(BigFloat::from_i64(2, self.bits), self.bits)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self * &Self::wrap(BigFloat::from_i64(k, self.bits), self.bits)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self / &Self::wrap(BigFloat::from_i64(k, self.bits), self.bits)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.value.is_zero() && self.value.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        !self.value.is_zero() && self.value.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !(self.value.is_nan() || self.value.is_inf())
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Nearest `f64`, truncating the mantissa to its top word.
    pub fn to_f64(&self) -> f64 {
        if self.value.is_nan() {
            return f64::NAN;
        }
        if self.value.is_inf() {
            return if self.value.is_positive() { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if self.value.is_zero() {
            return 0.0;
        }
        let (words, _, sign, exponent, _) = self.value.as_raw_parts().expect("finite value");
        let n = words.len();
        let top = words[n - 1] as f64;
        let next = if n > 1 { words[n - 2] as f64 } else { 0.0 };
        // mantissa is 0.1xxx in binary, top word holds the leading 64 bits
        let m = top * 2f64.powi(-64) + next * 2f64.powi(-128);
        let v = m * 2f64.powi(exponent);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    /// Scientific notation with exactly `significant` digits, e.g. `-7.91066e+1`.
    pub fn to_sci(&self, significant: usize) -> String {
        assert!(significant >= 1);
        if self.value.is_zero() {
            return format!("{}e+0", pad_mantissa(&[0], significant));
        }
        if !self.is_finite() {
            return "NaN".into();
        }
        let (sign, digits, exponent) = with_consts(|cc| {
            self.value.convert_to_radix(Radix::Dec, RoundingMode::None, cc)
        })
        .expect("finite value converts");
        let (rounded, carry) = round_digits(&digits, significant);
        // convert_to_radix reports 0.d1d2... × 10^exponent
        let sci_exp = exponent as i64 - 1 + carry as i64;
        let mantissa = pad_mantissa(&rounded, significant);
        let sign = if sign == Sign::Neg { "-" } else { "" };
        format!("{sign}{mantissa}e{sci_exp:+}")
    }
}

fn round_digits(digits: &[u8], significant: usize) -> (Vec<u8>, bool) {
    let mut out: Vec<u8> = digits.iter().copied().take(significant).collect();
    out.resize(significant, 0);
    let round_up = digits.get(significant).is_some_and(|&d| d >= 5);
    if !round_up {
        return (out, false);
    }
    for d in out.iter_mut().rev() {
        if *d == 9 {
            *d = 0;
        } else {
            *d += 1;
            return (out, false);
        }
    }
    // all nines rolled over
    let mut carried = vec![1];
    carried.extend(std::iter::repeat_n(0, significant - 1));
    (carried, true)
}

fn pad_mantissa(digits: &[u8], significant: usize) -> String {
    let mut s = String::with_capacity(significant + 1);
    for i in 0..significant {
        let d = digits.get(i).copied().unwrap_or(0);
        s.push(char::from(b'0' + d));
        if i == 0 && significant > 1 {
            s.push('.');
        }
    }
    s
}

impl fmt::Display for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(30).max(1);
        f.write_str(&self.to_sci(sig))
    }
}

impl fmt::Debug for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrecReal({})", self.to_sci(40))
    }
}

impl PartialEq for PrecReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for PrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a PrecReal> for &'a PrecReal {
            type Output = PrecReal;
            fn $method(self, rhs: &'a PrecReal) -> PrecReal {
                let bits = self.bits.max(rhs.bits);
                PrecReal::wrap(self.value.$method(&rhs.value, bits, RM), bits)
            }
        }
        impl $trait<PrecReal> for PrecReal {
            type Output = PrecReal;
            fn $method(self, rhs: PrecReal) -> PrecReal {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a PrecReal> for PrecReal {
            type Output = PrecReal;
            fn $method(self, rhs: &'a PrecReal) -> PrecReal {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<PrecReal> for &'a PrecReal {
            type Output = PrecReal;
            fn $method(self, rhs: PrecReal) -> PrecReal {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for PrecReal {
    type Output = PrecReal;
    fn neg(self) -> PrecReal {
        PrecReal::wrap(self.value.neg(), self.bits)
    }
}

impl Neg for &PrecReal {
    type Output = PrecReal;
    fn neg(self) -> PrecReal {
        PrecReal::wrap(self.value.clone().neg(), self.bits)
    }
}
