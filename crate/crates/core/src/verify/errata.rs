use std::fmt;

use serde::{Deserialize, Serialize};

use crate::construct::{tridecagon_type2_radii, Convention};
use crate::error::Result;
use crate::mpnum::{PrecReal, PrecisionContext};
use crate::polyalg::{catalog, expand_conjugate_product, lift_descent, RatPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ErratumId {
    E1,
    E2,
    E3,
}

impl fmt::Display for ErratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    PrintedConsistent,
    PrintedInconsistent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PrintedConsistent => "printed-consistent",
            Verdict::PrintedInconsistent => "printed-inconsistent",
        })
    }
}

impl Verdict {
    fn from_consistent(ok: bool) -> Self {
        if ok {
            Verdict::PrintedConsistent
        } else {
            Verdict::PrintedInconsistent
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub id: ErratumId,
    pub subject: String,
    pub printed_form: String,
    pub derived_form: String,
    /// Name of the operation that produced `derived_form`.
    pub oracle: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErratumReport {
    pub findings: Vec<Finding>,
}

impl ErratumReport {
    pub fn get(&self, id: ErratumId) -> Option<&Finding> {
        self.findings.iter().find(|f| f.id == id)
    }
}

/// Monic coefficients of `∏ (s − s_i)`, ascending.
pub fn monic_from_roots(roots: &[PrecReal], ctx: PrecisionContext) -> Vec<PrecReal> {
    let mut coeffs = vec![PrecReal::one(ctx)];
    for r in roots {
        let mut next = vec![PrecReal::zero(ctx); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * r);
        }
        coeffs = next;
    }
    coeffs
}

/// The nearest integer, when `x` lies within tolerance of it.
pub fn as_integer(x: &PrecReal, ctx: PrecisionContext) -> Option<i64> {
    let n = x.to_f64().round();
    let near = (x - &PrecReal::from_f64(n, ctx)).abs() < ctx.tolerance();
    near.then_some(n as i64)
}

fn describe(x: &PrecReal, ctx: PrecisionContext) -> String {
    match as_integer(x, ctx) {
        Some(n) => n.to_string(),
        None => x.to_sci(12),
    }
}

/// `s⁴` and `s³` coefficients of the monic sextic over a root ladder's s-values.
pub fn ladder_coefficients(convention: Convention, ctx: PrecisionContext) -> Result<[PrecReal; 2]> {
    let ladder = tridecagon_type2_radii(convention, ctx)?;
    let c = monic_from_roots(&ladder.s_values, ctx);
    Ok([c[4].clone(), c[3].clone()])
}

fn e1() -> Result<Finding> {
    let printed = catalog::p7_printed();
    let derived = lift_descent(&catalog::q7(), 3)?;
    Ok(Finding {
        id: ErratumId::E1,
        subject: "heptagon sextic P7".into(),
        printed_form: printed.pretty("r"),
        derived_form: derived.pretty("r"),
        oracle: "lift_descent(Q7, 3)".into(),
        verdict: Verdict::from_consistent(printed == derived),
        detail: format!(
            "linear coefficient: printed {}, derived {}",
            printed.coeff(1),
            derived.coeff(1)
        ),
    })
}

fn e2() -> Result<Finding> {
    let q13 = catalog::q13();
    let printed = catalog::r13_printed();
    let corrected = catalog::r13_corrected();
    let from_printed = expand_conjugate_product(&printed)?;
    let from_corrected = expand_conjugate_product(&corrected)?;
    Ok(Finding {
        id: ErratumId::E2,
        subject: "cubic factor R of Q13 over Q(sqrt 13)".into(),
        printed_form: printed.pretty("s"),
        derived_form: corrected.pretty("s"),
        oracle: "expand_conjugate_product(R)".into(),
        verdict: Verdict::from_consistent(from_printed == q13),
        detail: format!(
            "constant of R*conj(R): printed constant gives {}, corrected gives {}, Q13 has {}; corrected product equals Q13: {}",
            from_printed.coeff(0),
            from_corrected.coeff(0),
            q13.coeff(0),
            from_corrected == q13
        ),
    })
}

fn e3(ctx: PrecisionContext) -> Result<Finding> {
    let q13: RatPoly = catalog::q13();
    let [p4, p3] = ladder_coefficients(Convention::Printed, ctx)?;
    let [c4, c3] = ladder_coefficients(Convention::Corrected, ctx)?;
    let target = |i: usize| q13.coeff(i).to_integer().to_string();
    let matches = |x: &PrecReal, i: usize| describe(x, ctx) == target(i);
    let printed_ok = matches(&p4, 4) && matches(&p3, 3);
    let corrected_ok = matches(&c4, 4) && matches(&c3, 3);
    Ok(Finding {
        id: ErratumId::E3,
        subject: "triskaidecagon root ladder s-values".into(),
        printed_form: "s = -(2 ± √13) + √(13 ± √13)·(ζ + conj ζ), ζ cube roots of ζ±".into(),
        derived_form: "s = -(2 ± √13) + √((13 ± √13)/2)·(ζ + conj ζ), ζ cube roots of -conj(ζ±)".into(),
        oracle: "symmetric functions of tridecagon_type2_radii s-values".into(),
        verdict: Verdict::from_consistent(printed_ok),
        detail: format!(
            "s^4 and s^3 coefficients of the monic sextic: printed {}, {}; corrected {}, {}; Q13 {}, {}; corrected matches: {}",
            describe(&p4, ctx),
            describe(&p3, ctx),
            describe(&c4, ctx),
            describe(&c3, ctx),
            target(4),
            target(3),
            corrected_ok
        ),
    })
}

/// Runs the three adjudications.
pub fn resolve_errata(ctx: PrecisionContext) -> Result<ErratumReport> {
    Ok(ErratumReport {
        findings: vec![e1()?, e2()?, e3(ctx)?],
    })
}
