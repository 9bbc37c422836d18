use super::ladder::{Convention, RootLadder};
use super::{type2_with_radius, Kind, Pairing, TriangleConstruction};
use crate::error::{Error, Result};
use crate::mpnum::{trisect_unit, PrecComplex, PrecReal, PrecisionContext};

/// `ζ = (1 − 3√3 i) / (2√7)`, a unit complex number with angle ≈ −79.1066°.
pub fn heptagon_zeta(ctx: PrecisionContext) -> PrecComplex {
    let den = PrecReal::from_i64(7, ctx).sqrt().mul_i64(2);
    let im = -PrecReal::from_i64(27, ctx).sqrt();
    PrecComplex::new(PrecReal::one(ctx) / &den, im / &den)
}

/// Radii `√((7 ± √21)/18)`.
fn heptagon_radii(ctx: PrecisionContext) -> (PrecReal, PrecReal) {
    let root21 = PrecReal::from_i64(21, ctx).sqrt();
    let seven = PrecReal::from_i64(7, ctx);
    (
        (&seven + &root21).div_i64(18).sqrt(),
        (&seven - &root21).div_i64(18).sqrt(),
    )
}

/// Heptagon Type I: vertices for the residues {1, 2, 4}.
pub fn heptagon_type1(ctx: PrecisionContext) -> Result<TriangleConstruction> {
    let zetas = trisect_unit(&heptagon_zeta(ctx), ctx)?;
    let (r1, r2) = heptagon_radii(ctx);
    let mut tc = TriangleConstruction::assemble(7, Kind::TypeI, r1, r2, zetas, Pairing::PRINTED, ctx);
    tc.coset_label = Some([1, 2, 4]);
    Ok(tc)
}

/// The six real roots of `r⁶ + 6r⁵ − 6r⁴ − 29r³ − 6r² + 6r + 1`.
///
/// `s_k = −2 + √7 (ζ_k + ζ̄_k)` are the roots of `s³ + 6s² − 9s − 41`;
/// `r_k, r_{k+3} = (s_k ± √(s_k² − 4))/2`.
pub fn heptagon_type2_radii(ctx: PrecisionContext) -> Result<RootLadder> {
    let zetas = trisect_unit(&heptagon_zeta(ctx), ctx)?;
    let root7 = PrecReal::from_i64(7, ctx).sqrt();
    let s_values = zetas
        .zetas
        .iter()
        .map(|z| PrecReal::from_i64(-2, ctx) + &root7 * &z.re.mul_i64(2))
        .collect();
    Ok(RootLadder::from_s_values(7, Convention::Corrected, s_values, &[None], ctx))
}

/// Heptagon Type II on ladder radius `k` (0..6).
pub fn heptagon_type2(k: usize, ctx: PrecisionContext) -> Result<TriangleConstruction> {
    let ladder = heptagon_type2_radii(ctx)?;
    let r = ladder
        .real_radius(k)
        .ok_or(Error::IndexOutOfRange { index: k, len: ladder.len() })?;
    let mut tc = type2_with_radius(7, r, ctx)?;
    tc.ladder_index = Some(k);
    Ok(tc)
}
