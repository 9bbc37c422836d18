//! One test per acceptance criterion; each prints a PASS/FAIL line.
//!
//! Run with `cargo test --test acceptance -- --nocapture --test-threads=1`
//! to see the lines in order.

mod common;

use std::collections::BTreeSet;

use common::*;
use trisectagon::construct::{
    c3_shift, heptagon_type1, heptagon_type2, heptagon_type2_radii, shift_ladder_index,
    tridecagon_radii, tridecagon_type1, tridecagon_type2, tridecagon_type2_radii, type3_from,
    Convention, Family, TriangleConstruction,
};
use trisectagon::figio::{render_svg, report_json, Figure, ReportDocument, RenderOptions};
use trisectagon::general::{cardano_all, cardano_from_coset, order3_cosets};
use trisectagon::mpnum::{roots_of_unity, to_degrees, PrecComplex, PrecReal};
use trisectagon::polyalg::{catalog, expand_conjugate_product, lift_descent, Evaluate};
use trisectagon::verify::{
    as_integer, coset_check, fit_to_polygon, gap_multiset, isosceles_report, ladder_coefficients,
    resolve_errata, similarity_classes, verify_construction, ErratumId, Verdict,
};

fn degrees_close(theta: &PrecReal, expected: &str, ctx: trisectagon::mpnum::PrecisionContext) -> (String, bool) {
    let deg = to_degrees(theta);
    let want = PrecReal::parse(expected, ctx).unwrap();
    let ok = (&deg - &want).abs() < PrecReal::pow10(-4, ctx);
    (format!("angle {} deg vs {expected}", deg.to_sci(10)), ok)
}

#[test]
fn criterion_01_angles() {
    let ctx = ctx50();
    let checks = vec![
        degrees_close(&heptagon_type1(ctx).unwrap().theta, "-79.1066", ctx),
        degrees_close(&tridecagon_type1(Family::Plus, false, ctx).unwrap().theta, "-23.0510", ctx),
        degrees_close(&tridecagon_type1(Family::Minus, false, ctx).unwrap().theta, "-66.9489", ctx),
    ];
    conclude(1, "trisected angles", &checks);
}

#[test]
fn criterion_02_heptagon_type1_geometry() {
    let ctx = ctx50();
    let tol = tol40(ctx);
    let tc = heptagon_type1(ctx).unwrap();
    let roots = roots_of_unity(7, ctx);
    let mut sides: Vec<PrecReal> = (0..3)
        .map(|j| tc.vertices[j].dist(&tc.vertices[(j + 1) % 3]))
        .collect();
    sides.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut checks = Vec::new();
    for (k, side) in (1..=3).zip(&sides) {
        // chord between roots 0 and k of the unit heptagon
        let chord = roots[0].dist(&roots[k]);
        checks.push((format!("side {k}: |{} - 2 sin({k}pi/7)|", side.to_sci(12)), (side - &chord).abs() < tol));
    }
    let fit = fit_to_polygon(&tc.vertices, 7, ctx).unwrap();
    checks.push((format!("scale {}", fit.scale.to_sci(12)), (&fit.scale - PrecReal::one(ctx)).abs() < tol));
    checks.push((format!("residual {}", fit.residual.to_sci(6)), fit.residual < tol));
    checks.push((format!("gap multiset {:?}", gap_multiset(&fit)), gap_multiset(&fit) == [1, 2, 3]));
    checks.push(("coset {1,2,4}".into(), coset_check(&fit, &[1, 2, 4], 7)));
    conclude(2, "heptagon Type I geometry", &checks);
}

#[test]
fn criterion_03_tridecagon_type1() {
    let ctx = ctx50();
    let tol = tol40(ctx);
    let mut checks = Vec::new();
    for family in [Family::Plus, Family::Minus] {
        let (r1, r2) = tridecagon_radii(family, ctx);
        let prod = &r1 * &r2;
        checks.push((format!("{family}: R1 R2 = {}", prod.to_sci(12)), (prod - PrecReal::one(ctx)).abs() < tol));
    }
    let runs = [
        (Family::Plus, false, [1, 3, 9]),
        (Family::Plus, true, [4, 10, 12]),
        (Family::Minus, false, [2, 5, 6]),
        (Family::Minus, true, [7, 8, 11]),
    ];
    let mut union = BTreeSet::new();
    for (family, mirror, label) in runs {
        let tc = tridecagon_type1(family, mirror, ctx).unwrap();
        let fit = fit_to_polygon(&tc.vertices, 13, ctx).unwrap();
        checks.push((format!("{} residual {}", tc.label(), fit.residual.to_sci(6)), fit.residual < tol));
        checks.push((format!("{} vs {label:?}", tc.label()), coset_check(&fit, &label, 13)));
        checks.push((format!("{} carries label {label:?}", tc.label()), tc.coset_label == Some(label)));
        union.extend(label);
    }
    checks.push((
        format!("labels partition 1..12: {union:?}"),
        union == (1..=12).collect::<BTreeSet<u32>>(),
    ));
    conclude(3, "triskaidecagon Type I", &checks);
}

fn type2_checks(tcs: &[TriangleConstruction], p: u32, checks: &mut Vec<(String, bool)>) {
    for tc in tcs {
        let ctx = tc.ctx;
        let tol = tol40(ctx);
        let fit = fit_to_polygon(&tc.vertices, p, ctx).unwrap();
        checks.push((format!("{} fit residual {}", tc.label(), fit.residual.to_sci(6)), fit.residual < tol));
        let rep = isosceles_report(&tc.vertices, ctx);
        let axis = rep.axis_through_origin_residual.clone();
        checks.push((
            format!("{} isosceles, axis offset {:?}", tc.label(), axis.as_ref().map(|a| a.to_sci(6))),
            axis.is_some_and(|a| a < tol),
        ));
    }
}

#[test]
fn criterion_04_type2_ladders() {
    let ctx = ctx50();
    let tol = tol40(ctx);
    let mut checks = Vec::new();

    let p7 = catalog::p7_corrected();
    let ladder7 = heptagon_type2_radii(ctx).unwrap();
    for k in 0..ladder7.len() {
        let r = ladder7.real_radius(k).unwrap();
        let res = residual_at(&p7, &r, ctx);
        let bound = &tol * &eval_scale(&p7, &r, ctx);
        checks.push((format!("|P7(r{k})| = {}", res.to_sci(6)), res < bound));
        let prod = &r * &ladder7.real_radius(ladder7.partner(k)).unwrap();
        checks.push((format!("r{k} r{} = 1", ladder7.partner(k)), (prod - PrecReal::one(ctx)).abs() < tol));
    }

    let p12 = catalog::p12_printed();
    let ladder13 = tridecagon_type2_radii(Convention::Corrected, ctx).unwrap();
    for k in 0..ladder13.len() {
        let Some(r) = ladder13.real_radius(k) else {
            checks.push((format!("tridecagon radius {k} is real"), false));
            continue;
        };
        let res = residual_at(&p12, &r, ctx);
        let bound = &tol * &eval_scale(&p12, &r, ctx);
        checks.push((format!("|P12(r{k})| = {}", res.to_sci(6)), res < bound));
        let partner = ladder13.real_radius(ladder13.partner(k)).unwrap();
        checks.push((format!("r{k} r{} = 1", ladder13.partner(k)), (&r * &partner - PrecReal::one(ctx)).abs() < tol));
    }

    let hept: Vec<_> = (0..6).map(|k| heptagon_type2(k, ctx).unwrap()).collect();
    let tri: Vec<_> = (0..12).map(|k| tridecagon_type2(k, ctx).unwrap()).collect();
    type2_checks(&hept, 7, &mut checks);
    type2_checks(&tri, 13, &mut checks);
    conclude(4, "Type II root ladders", &checks);
}

#[test]
fn criterion_05_similarity_classes() {
    let ctx = ctx50();
    let hept: Vec<_> = (0..6).map(|k| heptagon_type2(k, ctx).unwrap().vertices).collect();
    let tri: Vec<_> = (0..12).map(|k| tridecagon_type2(k, ctx).unwrap().vertices).collect();
    let h = similarity_classes(&hept, ctx);
    let t = similarity_classes(&tri, ctx);
    let checks = vec![
        (format!("heptagon classes {:?}", h.classes), h.count() == 3),
        (format!("triskaidecagon classes {:?}", t.classes), t.count() == 6),
    ];
    conclude(5, "similarity classes", &checks);
}

#[test]
fn criterion_06_type3_equivalence() {
    let ctx = ctx50();
    let tol = tol40(ctx);
    let mut checks = Vec::new();
    let all = (0..6)
        .map(|k| heptagon_type2(k, ctx).unwrap())
        .chain((0..12).map(|k| tridecagon_type2(k, ctx).unwrap()));
    for tc in all {
        let t3 = type3_from(&tc).unwrap();
        let d = vertex_distance(&tc, &t3);
        let negated = (&t3.r2 + &tc.r2).abs() < tol;
        checks.push((format!("{} vs Type III: {}", tc.label(), d.to_sci(6)), d < tol && negated));
    }
    conclude(6, "Type III equals Type II", &checks);
}

#[test]
fn criterion_07_errata() {
    let ctx = ctx50();
    let mut checks = Vec::new();

    let lifted = lift_descent(&catalog::q7(), 3).unwrap();
    let six = num_rational::BigRational::from_integer(6.into());
    checks.push((format!("E1 derived linear coefficient {}", lifted.coeff(1)), lifted.coeff(1) == six));
    checks.push((
        format!("E1 printed linear coefficient {}", catalog::p7_printed().coeff(1)),
        catalog::p7_printed().coeff(1) == -six.clone() && lifted != catalog::p7_printed(),
    ));

    let q13 = catalog::q13();
    let corrected = expand_conjugate_product(&catalog::r13_corrected()).unwrap();
    let printed = expand_conjugate_product(&catalog::r13_printed()).unwrap();
    checks.push(("E2 corrected R conj(R) = Q13".into(), corrected == q13));
    checks.push((
        format!("E2 printed constant gives {} != 2131", printed.coeff(0)),
        printed.coeff(0) == num_rational::BigRational::from_integer((-37153).into()) && printed != q13,
    ));

    let [p4, _] = ladder_coefficients(Convention::Printed, ctx).unwrap();
    let [c4, c3] = ladder_coefficients(Convention::Corrected, ctx).unwrap();
    checks.push((format!("E3 printed s^4 coefficient {}", p4.to_sci(12)), as_integer(&p4, ctx) == Some(-57)));
    checks.push((format!("E3 corrected s^4 coefficient {}", c4.to_sci(12)), as_integer(&c4, ctx) == Some(-18)));
    checks.push((format!("E3 corrected s^3 coefficient {}", c3.to_sci(12)), as_integer(&c3, ctx) == Some(-334)));

    let report = resolve_errata(ctx).unwrap();
    for id in [ErratumId::E1, ErratumId::E2, ErratumId::E3] {
        let f = report.get(id);
        checks.push((
            format!("{id} reported printed-inconsistent with both forms"),
            f.is_some_and(|f| {
                f.verdict == Verdict::PrintedInconsistent
                    && !f.printed_form.is_empty()
                    && !f.derived_form.is_empty()
                    && f.printed_form != f.derived_form
                    && !f.oracle.is_empty()
            }),
        ));
    }

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = trisectagon::figio::cli::run(["trisectagon", "errata"], &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    checks.push((format!("errata command exit code {code}"), code == 0));
    for id in ["E1", "E2", "E3"] {
        checks.push((format!("errata output names {id}"), text.contains(&format!("{id} "))));
    }
    checks.push((
        "errata output shows printed and derived forms".into(),
        text.matches("printed:").count() == 3 && text.matches("derived:").count() == 3,
    ));
    conclude(7, "erratum adjudication", &checks);
}

#[test]
fn criterion_08_c3_action() {
    let ctx = ctx50();
    let tol = tol40(ctx);
    let mut checks = Vec::new();

    let mut starts = vec![heptagon_type1(ctx).unwrap()];
    for (f, m) in [(Family::Plus, false), (Family::Plus, true), (Family::Minus, false), (Family::Minus, true)] {
        starts.push(tridecagon_type1(f, m, ctx).unwrap());
    }
    starts.push(heptagon_type2(0, ctx).unwrap());
    starts.push(tridecagon_type2(7, ctx).unwrap());
    for tc in &starts {
        let once = c3_shift(tc).unwrap();
        let thrice = c3_shift(&c3_shift(&once).unwrap()).unwrap();
        let d = vertex_distance(tc, &thrice);
        checks.push((format!("{}: c3^3 distance {}", tc.label(), d.to_sci(6)), d < tol));
    }

    let mut tc = heptagon_type1(ctx).unwrap();
    for step in 1..=3 {
        tc = c3_shift(&tc).unwrap();
        let fit = fit_to_polygon(&tc.vertices, 7, ctx).unwrap();
        checks.push((
            format!(
                "heptagon Type I shifted {step}x: gaps {:?}, scale {}, residual {}",
                gap_multiset(&fit),
                fit.scale.to_sci(12),
                fit.residual.to_sci(6)
            ),
            gap_multiset(&fit) == [1, 2, 3]
                && (&fit.scale - PrecReal::one(ctx)).abs() < tol
                && fit.residual < tol,
        ));
    }

    let ladder7 = heptagon_type2_radii(ctx).unwrap();
    let q7 = catalog::q7();
    for k in 0..6 {
        let shifted = c3_shift(&heptagon_type2(k, ctx).unwrap()).unwrap();
        let next = shift_ladder_index(k);
        let want = ladder7.real_radius(next).unwrap();
        let s = &shifted.r2 + &(PrecReal::one(ctx) / &shifted.r2);
        checks.push((
            format!("heptagon r{k} -> r{next}, s root of Q7"),
            shifted.ladder_index == Some(next)
                && (&shifted.r2 - &want).abs() < tol
                && residual_at(&q7, &s, ctx) < &tol * &eval_scale(&q7, &s, ctx)
                && next / 3 == k / 3,
        ));
    }
    let ladder13 = tridecagon_type2_radii(Convention::Corrected, ctx).unwrap();
    let r13 = catalog::r13_corrected();
    for k in 0..12 {
        let shifted = c3_shift(&tridecagon_type2(k, ctx).unwrap()).unwrap();
        let next = shift_ladder_index(k);
        let want = ladder13.real_radius(next).unwrap();
        let s = &shifted.r2 + &(PrecReal::one(ctx) / &shifted.r2);
        let factor = if k < 6 { r13.clone() } else { r13.conj() };
        let res = factor.eval_at(&PrecComplex::from_real(s.clone()), ctx).abs();
        checks.push((
            format!("triskaidecagon r{k} -> r{next} within its family cubic ({})", res.to_sci(6)),
            shifted.ladder_index == Some(next)
                && (&shifted.r2 - &want).abs() < tol
                && ladder13.family_of[k] == ladder13.family_of[next]
                && res < tol.mul_i64(1000),
        ));
    }
    conclude(8, "C3 action", &checks);
}

#[test]
fn criterion_09_generalization() {
    let ctx = ctx50();
    let tol = tol40(ctx);
    let mut checks = Vec::new();
    let radii_match = |a: (&PrecReal, &PrecReal), b: (&PrecReal, &PrecReal)| {
        let straight = (a.0 - b.0).abs().max((a.1 - b.1).abs());
        let swapped = (a.0 - b.1).abs().max((a.1 - b.0).abs());
        straight.min(swapped)
    };

    let g7 = cardano_from_coset(7, &[1, 2, 4], ctx).unwrap();
    let h7 = heptagon_type1(ctx).unwrap();
    let d = radii_match((&g7.r1, &g7.r2), (&h7.r1, &h7.r2));
    checks.push((format!("p=7 {{1,2,4}} radii vs closed form: {}", d.to_sci(6)), d < tol));

    for (family, coset) in [(Family::Plus, [1, 3, 9]), (Family::Minus, [2, 5, 6])] {
        let g = cardano_from_coset(13, &coset, ctx).unwrap();
        let (r1, r2) = tridecagon_radii(family, ctx);
        let d = radii_match((&g.r1, &g.r2), (&r1, &r2));
        checks.push((
            format!(
                "p=13 {coset:?} radii {{{}, {}}} vs closed form {{{}, {}}}: {}",
                g.r1.to_sci(10),
                g.r2.to_sci(10),
                r1.to_sci(10),
                r2.to_sci(10),
                d.to_sci(6)
            ),
            d < tol,
        ));
    }

    for p in [19u32, 31] {
        let decomposition = order3_cosets(p).unwrap();
        if p == 19 {
            checks.push((format!("p=19 subgroup {:?}", decomposition.subgroup), decomposition.subgroup == [1, 7, 11]));
        }
        let all = cardano_all(p, ctx).unwrap();
        let mut covered = vec![PrecComplex::one(ctx)];
        for g in &all {
            checks.push((format!("p={p} coset {:?} residual {}", g.coset, g.residual.to_sci(6)), g.residual < tol));
            covered.extend(g.vertices.iter().cloned());
        }
        let d = multiset_distance(&covered, &roots_of_unity(p as usize, ctx), ctx);
        checks.push((
            format!("p={p}: {} points cover the roots of unity ({})", covered.len(), d.to_sci(6)),
            covered.len() == p as usize && d < tol,
        ));
    }
    conclude(9, "Cardano generalization", &checks);
}

fn golden_outputs() -> Vec<(&'static str, String)> {
    let ctx = ctx50();
    let hept = heptagon_type1(ctx).unwrap();
    let tri = tridecagon_type1(Family::Plus, false, ctx).unwrap();
    let mut out = Vec::new();
    for (json_name, svg_name, tc) in [
        ("heptagon_type1.json", "heptagon_type1.svg", &hept),
        ("tridecagon_plus.json", "tridecagon_plus.svg", &tri),
    ] {
        let v = verify_construction(tc, ctx).unwrap();
        let doc = ReportDocument::new(ctx).with_construction(tc).with_verification(&v);
        out.push((json_name, report_json(&doc).unwrap()));
        let svg = render_svg(&Figure::from_triangle(tc).unwrap(), &RenderOptions::default()).unwrap();
        out.push((svg_name, svg));
    }
    out
}

#[test]
fn criterion_10_determinism() {
    let dir = fixture_dir();
    let first = golden_outputs();
    let second = golden_outputs();
    if std::env::var_os("TRISECTAGON_BLESS").is_some() {
        std::fs::create_dir_all(&dir).unwrap();
        for (name, text) in &first {
            std::fs::write(dir.join(name), text).unwrap();
        }
    }
    let mut checks = Vec::new();
    for ((name, a), (_, b)) in first.iter().zip(&second) {
        checks.push((format!("{name}: two runs identical"), a == b));
        let golden = std::fs::read(dir.join(name)).unwrap_or_default();
        checks.push((format!("{name}: matches checked-in fixture"), golden == a.as_bytes()));
    }
    conclude(10, "golden fixtures", &checks);
}
