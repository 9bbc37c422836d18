use serde::{Deserialize, Serialize};

use super::Family;
use crate::mpnum::{PrecComplex, PrecReal};
use crate::polyalg::{Evaluate, RatPoly};
use crate::mpnum::PrecisionContext;

/// Which reading of the triskaidecagon root-ladder formula to follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Cosine scale `√(13 ± √13)`, trisecting `ζ±` itself.
    Printed,
    /// Cosine scale `√((13 ± √13)/2)`, trisecting `ζ±` with its real part negated.
    Corrected,
}

/// The Type II radii: roots of a palindromic polynomial, built from s-values
/// `s = r + 1/r` through `r = (s ± √(s² − 4))/2`.
#[derive(Debug, Clone)]
pub struct RootLadder {
    pub p: u32,
    pub convention: Convention,
    /// Three per family, indexed by the trisection's ζ_k.
    pub s_values: Vec<PrecReal>,
    /// `radii[b·3 + k]` uses the `+` sign for even `b`, `−` for odd `b`, on
    /// `s_values[(b / 2)·3 + k]`. Complex (unit-modulus) when `|s| < 2`.
    pub radii: Vec<PrecComplex>,
    pub family_of: Vec<Option<Family>>,
}

impl RootLadder {
    pub(crate) fn from_s_values(
        p: u32,
        convention: Convention,
        s_values: Vec<PrecReal>,
        families: &[Option<Family>],
        ctx: PrecisionContext,
    ) -> Self {
        let mut radii = Vec::with_capacity(s_values.len() * 2);
        let mut family_of = Vec::with_capacity(s_values.len() * 2);
        for (chunk, family) in s_values.chunks(3).zip(families) {
            for sign in [1i64, -1] {
                for s in chunk {
                    radii.push(radius_from_s(s, sign, ctx));
                    family_of.push(*family);
                }
            }
        }
        Self {
            p,
            convention,
            s_values,
            radii,
            family_of,
        }
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    /// The radius at `k` if it is real.
    pub fn real_radius(&self, k: usize) -> Option<PrecReal> {
        let r = self.radii.get(k)?;
        r.im.is_zero().then(|| r.re.clone())
    }

    /// Index of the reciprocal partner `r_{k±3}`.
    pub fn partner(&self, k: usize) -> usize {
        if (k / 3).is_multiple_of(2) {
            k + 3
        } else {
            k - 3
        }
    }

    /// The s-value a radius was built from.
    pub fn s_of(&self, k: usize) -> &PrecReal {
        &self.s_values[(k / 6) * 3 + k % 3]
    }

    /// Largest `|poly(s)|` over the s-values.
    pub fn max_residual_s(&self, poly: &RatPoly, ctx: PrecisionContext) -> PrecReal {
        self.s_values.iter().fold(PrecReal::zero(ctx), |m, s| {
            m.max(poly.eval_at(&PrecComplex::from_real(s.clone()), ctx).abs())
        })
    }
}

fn radius_from_s(s: &PrecReal, sign: i64, ctx: PrecisionContext) -> PrecComplex {
    let disc = s * s - PrecReal::from_i64(4, ctx);
    if disc.is_negative() {
        let im = (-disc).sqrt().half().mul_i64(sign);
        PrecComplex::new(s.half(), im)
    } else {
        let root = disc.sqrt().mul_i64(sign);
        PrecComplex::from_real((s + &root).half())
    }
}
