use super::ladder::{Convention, RootLadder};
use super::{type2_with_radius, Family, Kind, Pairing, TriangleConstruction};
use crate::error::{Error, Result};
use crate::mpnum::{trisect_unit, PrecComplex, PrecReal, PrecisionContext};

/// `ζ± = (√(26 ± 5√13) − √(26 ∓ 5√13) i) / (2√13)`.
pub fn tridecagon_zeta(family: Family, ctx: PrecisionContext) -> PrecComplex {
    let sg = family.sign();
    let root13 = PrecReal::from_i64(13, ctx).sqrt();
    let five_root13 = root13.mul_i64(5);
    let twenty_six = PrecReal::from_i64(26, ctx);
    let re = (&twenty_six + &five_root13.mul_i64(sg)).sqrt();
    let im = -(&twenty_six - &five_root13.mul_i64(sg)).sqrt();
    let den = root13.mul_i64(2);
    PrecComplex::new(re / &den, im / &den)
}

/// `R1, R2 = √((√(13 ± √13) ± √(5 ± √13)) / (2√2))`, with `R1·R2 = 1`.
pub fn tridecagon_radii(family: Family, ctx: PrecisionContext) -> (PrecReal, PrecReal) {
    let root13 = PrecReal::from_i64(13, ctx).sqrt().mul_i64(family.sign());
    let a = (PrecReal::from_i64(13, ctx) + &root13).sqrt();
    let b = (PrecReal::from_i64(5, ctx) + &root13).sqrt();
    let den = PrecReal::from_i64(2, ctx).sqrt().mul_i64(2);
    (((&a + &b) / &den).sqrt(), ((&a - &b) / &den).sqrt())
}

fn coset_label(family: Family, mirror: bool) -> [u32; 3] {
    match (family, mirror) {
        (Family::Plus, false) => [1, 3, 9],
        (Family::Plus, true) => [4, 10, 12],
        (Family::Minus, false) => [2, 5, 6],
        (Family::Minus, true) => [7, 8, 11],
    }
}

/// Triskaidecagon Type I.
///
/// `mirror` trisects the conjugate angle `−θ±` (principal branch), which
/// yields the negated residue coset.
pub fn tridecagon_type1(
    family: Family,
    mirror: bool,
    ctx: PrecisionContext,
) -> Result<TriangleConstruction> {
    let zeta = tridecagon_zeta(family, ctx);
    let target = if mirror { zeta.conj() } else { zeta };
    let zetas = trisect_unit(&target, ctx)?;
    let (r1, r2) = tridecagon_radii(family, ctx);
    let mut tc = TriangleConstruction::assemble(13, Kind::TypeI, r1, r2, zetas, Pairing::PRINTED, ctx);
    tc.coset_label = Some(coset_label(family, mirror));
    tc.family = Some(family);
    tc.mirror = mirror;
    Ok(tc)
}

/// The twelve Type II radii for p = 13, six per family.
///
/// `s_k± = −(2 ± √13) + scale± · (ζ'_k + ζ̄'_k)`. Under
/// [`Convention::Corrected`] the scale is `√((13 ± √13)/2)` and `ζ'_k` are the
/// cube roots of `−conj(ζ±)`; the s-values are then the roots of `R` (plus)
/// and `R̄` (minus). [`Convention::Printed`] uses scale `√(13 ± √13)` on the
/// cube roots of `ζ±` and does not reproduce the sextic.
pub fn tridecagon_type2_radii(convention: Convention, ctx: PrecisionContext) -> Result<RootLadder> {
    let mut s_values = Vec::with_capacity(6);
    let root13 = PrecReal::from_i64(13, ctx).sqrt();
    for family in [Family::Plus, Family::Minus] {
        let signed_root = root13.mul_i64(family.sign());
        let zeta = tridecagon_zeta(family, ctx);
        let (target, scale) = match convention {
            Convention::Corrected => (
                -zeta.conj(),
                (PrecReal::from_i64(13, ctx) + &signed_root).half().sqrt(),
            ),
            Convention::Printed => (zeta, (PrecReal::from_i64(13, ctx) + &signed_root).sqrt()),
        };
        let offset = -(PrecReal::from_i64(2, ctx) + &signed_root);
        let zetas = trisect_unit(&target, ctx)?;
        for z in &zetas.zetas {
            s_values.push(&offset + &scale * &z.re.mul_i64(2));
        }
    }
    Ok(RootLadder::from_s_values(
        13,
        convention,
        s_values,
        &[Some(Family::Plus), Some(Family::Minus)],
        ctx,
    ))
}

/// Triskaidecagon Type II on corrected-ladder radius `k` (0..12).
pub fn tridecagon_type2(k: usize, ctx: PrecisionContext) -> Result<TriangleConstruction> {
    let ladder = tridecagon_type2_radii(Convention::Corrected, ctx)?;
    let r = ladder
        .real_radius(k)
        .ok_or(Error::IndexOutOfRange { index: k, len: ladder.len() })?;
    let mut tc = type2_with_radius(13, r, ctx)?;
    tc.ladder_index = Some(k);
    tc.family = ladder.family_of[k];
    Ok(tc)
}
