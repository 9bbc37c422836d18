#![allow(dead_code)]

use std::path::PathBuf;

use trisectagon::construct::TriangleConstruction;
use trisectagon::mpnum::{make_context, PrecComplex, PrecReal, PrecisionContext};
use trisectagon::polyalg::{Evaluate, RatPoly};

pub fn ctx50() -> PrecisionContext {
    make_context(50).unwrap()
}

pub fn tol40(ctx: PrecisionContext) -> PrecReal {
    PrecReal::pow10(-40, ctx)
}

/// Hausdorff distance between two point sets.
pub fn multiset_distance(a: &[PrecComplex], b: &[PrecComplex], ctx: PrecisionContext) -> PrecReal {
    let nearest = |z: &PrecComplex, set: &[PrecComplex]| {
        set.iter().map(|w| z.dist(w)).reduce(PrecReal::min).unwrap()
    };
    a.iter()
        .map(|z| nearest(z, b))
        .chain(b.iter().map(|z| nearest(z, a)))
        .fold(PrecReal::zero(ctx), PrecReal::max)
}

pub fn vertex_distance(a: &TriangleConstruction, b: &TriangleConstruction) -> PrecReal {
    multiset_distance(&a.vertices, &b.vertices, a.ctx)
}

/// `Σ |c_i| |x|^i`, the size of the terms summed when evaluating at `x`.
pub fn eval_scale(poly: &RatPoly, x: &PrecReal, ctx: PrecisionContext) -> PrecReal {
    let ax = x.abs();
    poly.coeffs()
        .iter()
        .enumerate()
        .fold(PrecReal::zero(ctx), |acc, (i, c)| {
            acc + PrecReal::from_rational(c, ctx).abs() * ax.powi(i)
        })
}

pub fn residual_at(poly: &RatPoly, x: &PrecReal, ctx: PrecisionContext) -> PrecReal {
    poly.eval_at(&PrecComplex::from_real(x.clone()), ctx).abs()
}

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

/// Prints the outcome line for an acceptance criterion and fails on a miss.
pub fn conclude(criterion: u32, title: &str, checks: &[(String, bool)]) {
    let failed: Vec<&String> = checks.iter().filter(|c| !c.1).map(|c| &c.0).collect();
    if failed.is_empty() {
        println!("criterion {criterion} [{title}]: PASS ({} checks)", checks.len());
    } else {
        println!(
            "criterion {criterion} [{title}]: FAIL ({} of {} checks failed)",
            failed.len(),
            checks.len()
        );
        for f in &failed {
            println!("  failed: {f}");
        }
        panic!("criterion {criterion} failed: {failed:?}");
    }
}
