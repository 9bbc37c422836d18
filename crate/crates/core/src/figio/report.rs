use serde::{Deserialize, Serialize};

use crate::construct::{RootLadder, TriangleConstruction};
use crate::error::{Error, Result};
use crate::general::{ConstructibilityProfile, GeneralConstruction};
use crate::mpnum::{to_degrees, PrecComplex, PrecReal, PrecisionContext};
use crate::polyalg::RatPoly;
use crate::verify::{gap_multiset, Orientation, ErratumReport, Finding, PolygonFit, TriangleReport, Verification};

pub const SCHEMA_VERSION: &str = "1.0";

/// Significant digits of every numeral in a report.
pub const REPORT_DIGITS: usize = 30;

fn n(x: &PrecReal) -> String {
    x.to_sci(REPORT_DIGITS)
}

fn c(z: &PrecComplex) -> [String; 2] {
    [n(&z.re), n(&z.im)]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionBlock {
    pub label: String,
    pub p: u32,
    pub kind: String,
    pub family: Option<String>,
    pub mirror: bool,
    pub ladder_index: Option<usize>,
    pub coset_label: Option<[u32; 3]>,
    pub pairing: [usize; 3],
    pub r1: String,
    pub r2: String,
    pub theta_degrees: String,
    pub vertices: Vec<[String; 2]>,
}

impl ConstructionBlock {
    pub fn from_triangle(tc: &TriangleConstruction) -> Self {
        Self {
            label: tc.label(),
            p: tc.p,
            kind: tc.kind.to_string(),
            family: tc.family.map(|f| f.to_string()),
            mirror: tc.mirror,
            ladder_index: tc.ladder_index,
            coset_label: tc.coset_label,
            pairing: tc.pairing.0,
            r1: n(&tc.r1),
            r2: n(&tc.r2),
            theta_degrees: n(&to_degrees(&tc.theta)),
            vertices: tc.vertices.iter().map(c).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitBlock {
    pub p: u32,
    pub exponents: [u32; 3],
    pub gap_multiset: [u32; 3],
    pub center: [String; 2],
    pub rotation_degrees: String,
    pub scale: String,
    pub residual: String,
}

impl FitBlock {
    pub fn from_fit(fit: &PolygonFit) -> Self {
        Self {
            p: fit.p,
            exponents: fit.exponents,
            gap_multiset: gap_multiset(fit),
            center: c(&fit.center),
            rotation_degrees: n(&to_degrees(&fit.rotation)),
            scale: n(&fit.scale),
            residual: n(&fit.residual),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleBlock {
    pub side_lengths: Vec<String>,
    pub apex_index: Option<usize>,
    pub axis_angle_degrees: Option<String>,
    pub axis_through_origin_residual: Option<String>,
}

impl TriangleBlock {
    pub fn from_report(t: &TriangleReport) -> Self {
        Self {
            side_lengths: t.side_lengths.iter().map(n).collect(),
            apex_index: t.apex_index,
            axis_angle_degrees: t.axis_angle.as_ref().map(|a| n(&to_degrees(a))),
            axis_through_origin_residual: t.axis_through_origin_residual.as_ref().map(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetBlock {
    pub claimed: [u32; 3],
    pub gap_match: bool,
    pub orientation: Option<Orientation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationBlock {
    pub passed: bool,
    pub assembly_residual: String,
    pub fit: FitBlock,
    pub triangle: TriangleBlock,
    pub coset: Option<CosetBlock>,
}

impl VerificationBlock {
    pub fn from_verification(v: &Verification) -> Self {
        Self {
            passed: v.passed,
            assembly_residual: n(&v.assembly_residual),
            fit: FitBlock::from_fit(&v.fit),
            triangle: TriangleBlock::from_report(&v.triangle),
            coset: v.coset.as_ref().map(|cv| CosetBlock {
                claimed: cv.claimed,
                gap_match: cv.gap_match,
                orientation: cv.orientation,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderBlock {
    pub p: u32,
    pub convention: String,
    pub s_values: Vec<String>,
    /// `[re, im]`; the imaginary part is zero for real radii.
    pub radii: Vec<[String; 2]>,
    pub family_of: Vec<Option<String>>,
    /// `max |P(s)|` against the reference s-polynomial.
    pub max_s_residual: String,
    pub reference_polynomial: String,
}

impl LadderBlock {
    pub fn from_ladder(ladder: &RootLadder, reference: &RatPoly, ctx: PrecisionContext) -> Self {
        Self {
            p: ladder.p,
            convention: format!("{:?}", ladder.convention).to_lowercase(),
            s_values: ladder.s_values.iter().map(n).collect(),
            radii: ladder.radii.iter().map(c).collect(),
            family_of: ladder.family_of.iter().map(|f| f.map(|f| f.to_string())).collect(),
            max_s_residual: n(&ladder.max_residual_s(reference, ctx)),
            reference_polynomial: reference.pretty("s"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralBlock {
    pub p: u32,
    pub coset: [u32; 3],
    pub center: [String; 2],
    pub r1: String,
    pub r2: String,
    pub theta_degrees: String,
    pub vertices: Vec<[String; 2]>,
    pub residual: String,
}

impl GeneralBlock {
    pub fn from_general(g: &GeneralConstruction) -> Self {
        Self {
            p: g.p,
            coset: g.coset,
            center: c(&g.center),
            r1: n(&g.r1),
            r2: n(&g.r2),
            theta_degrees: n(&to_degrees(&g.theta)),
            vertices: g.vertices.iter().map(c).collect(),
            residual: n(&g.residual),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileBlock {
    pub p: u32,
    pub coset_count: u32,
    pub two_exponent: u32,
    pub three_exponent: u32,
    pub remainder: u32,
    pub tower_feasible: bool,
    pub note: String,
}

impl ProfileBlock {
    pub fn from_profile(pr: &ConstructibilityProfile) -> Self {
        Self {
            p: pr.p,
            coset_count: pr.coset_count,
            two_exponent: pr.two_exponent,
            three_exponent: pr.three_exponent,
            remainder: pr.remainder,
            tower_feasible: pr.tower_feasible,
            note: ConstructibilityProfile::NOTE.into(),
        }
    }
}

/// The JSON report. Absent blocks serialize as `null` or `[]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub precision_digits: u32,
    pub construction: Option<ConstructionBlock>,
    pub verification: Option<VerificationBlock>,
    pub ladder: Option<LadderBlock>,
    pub general: Vec<GeneralBlock>,
    pub profile: Option<ProfileBlock>,
    pub errata: Vec<Finding>,
}

impl ReportDocument {
    pub fn new(ctx: PrecisionContext) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            precision_digits: ctx.digits(),
            construction: None,
            verification: None,
            ladder: None,
            general: Vec::new(),
            profile: None,
            errata: Vec::new(),
        }
    }

    pub fn with_construction(mut self, tc: &TriangleConstruction) -> Self {
        self.construction = Some(ConstructionBlock::from_triangle(tc));
        self
    }

    pub fn with_verification(mut self, v: &Verification) -> Self {
        self.verification = Some(VerificationBlock::from_verification(v));
        self
    }

    pub fn with_errata(mut self, report: &ErratumReport) -> Self {
        self.errata = report.findings.clone();
        self
    }
}

/// Pretty JSON with keys sorted at every level and a trailing newline.
pub fn report_json(doc: &ReportDocument) -> Result<String> {
    // serde_json's Value map is a BTreeMap, so this sorts every object's keys
    let value = serde_json::to_value(doc).map_err(|e| Error::Internal(e.to_string()))?;
    let mut text = serde_json::to_string_pretty(&value).map_err(|e| Error::Internal(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn parse_report(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("not a report document: {e}")))
}
