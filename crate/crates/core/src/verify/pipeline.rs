use crate::construct::{Kind, TriangleConstruction};
use crate::error::Result;
use crate::mpnum::{PrecReal, PrecisionContext};

use super::fit::{coset_check, fit_to_polygon, label_orientation, Orientation, PolygonFit};
use super::triangle::{isosceles_report, TriangleReport};

/// Coset label checks for a labeled construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetVerdict {
    pub claimed: [u32; 3],
    /// Gap multisets agree (reflection-invariant).
    pub gap_match: bool,
    /// Reading direction of the exponents in which the label matches exactly.
    pub orientation: Option<Orientation>,
}

/// Everything checked about one construction.
#[derive(Debug, Clone)]
pub struct Verification {
    /// `max_j |V_j − (R1·ε_j + R2·ζ_{π(j)})|`.
    pub assembly_residual: PrecReal,
    pub fit: PolygonFit,
    pub triangle: TriangleReport,
    pub coset: Option<CosetVerdict>,
    pub passed: bool,
}

/// Fits, classifies and cross-checks a construction.
///
/// Passing requires the assembly identity, a polygon fit within tolerance,
/// the gap multiset of the coset label (when labeled) and, for Types II and
/// III, an isosceles triangle whose axis runs through the origin.
pub fn verify_construction(tc: &TriangleConstruction, ctx: PrecisionContext) -> Result<Verification> {
    let tol = ctx.tolerance();
    let assembly_residual = tc.recompute_residual();
    let fit = fit_to_polygon(&tc.vertices, tc.p, ctx)?;
    let triangle = isosceles_report(&tc.vertices, ctx);
    let coset = tc.coset_label.map(|claimed| CosetVerdict {
        claimed,
        gap_match: coset_check(&fit, &claimed, tc.p),
        orientation: label_orientation(&fit, &claimed, tc.p),
    });
    let shape_ok = match tc.kind {
        Kind::TypeI => true,
        Kind::TypeII | Kind::TypeIII => triangle
            .axis_through_origin_residual
            .as_ref()
            .is_some_and(|r| *r < tol),
    };
    let passed = assembly_residual < tol
        && fit.passes(ctx)
        && coset.as_ref().is_none_or(|c| c.gap_match)
        && shape_ok;
    Ok(Verification {
        assembly_residual,
        fit,
        triangle,
        coset,
        passed,
    })
}
