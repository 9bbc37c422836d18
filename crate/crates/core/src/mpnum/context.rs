use crate::error::{Error, Result};

/// Guard digits carried beyond the requested precision in every working value.
const GUARD_DIGITS: u32 = 20;

/// Default number of significant decimal digits.
pub const DEFAULT_DIGITS: u32 = 50;

/// Smallest precision the pipeline accepts.
pub const MIN_DIGITS: u32 = 16;

/// Precision settings shared by every numeric operation.
///
/// `digits` is the nominal precision; values are carried with an extra
/// [`GUARD_DIGITS`] so that checks against [`PrecisionContext::tolerance`]
/// (which is `10^(10 - digits)`) have ample headroom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::InvalidArgument(format!(
                "precision of {digits} digits is below the minimum of {MIN_DIGITS}"
            )));
        }
        Ok(Self { digits })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Binary mantissa length used for working values.
    pub fn bits(&self) -> usize {
        let decimal = f64::from(self.digits + GUARD_DIGITS);
        (decimal * std::f64::consts::LOG2_10).ceil() as usize
    }

    /// Base-10 exponent of the verification tolerance.
    pub fn tolerance_exponent(&self) -> i32 {
        10 - self.digits as i32
    }

    /// Verification tolerance `10^(10 - digits)`.
    pub fn tolerance(&self) -> super::PrecReal {
        super::PrecReal::pow10(self.tolerance_exponent(), *self)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            digits: DEFAULT_DIGITS,
        }
    }
}

/// Builds a precision context, rejecting anything below 16 digits.
pub fn make_context(digits: u32) -> Result<PrecisionContext> {
    PrecisionContext::new(digits)
}
