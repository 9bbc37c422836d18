use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mpnum::{roots_of_unity, PrecComplex, PrecReal, PrecisionContext};

/// Largest polygon order accepted by [`fit_to_polygon`].
pub const MAX_FIT_ORDER: u32 = 97;

/// Candidates carried from the double-precision screen into the full-precision pass.
const REFINE_LIMIT: usize = 12;

/// Best placement of three points onto vertices of a regular p-gon.
///
/// The model point for exponent `e` is `center + scale·e^{i·rotation}·ω^e`
/// with `ω = e^{2πi/p}`.
#[derive(Debug, Clone)]
pub struct PolygonFit {
    pub p: u32,
    /// `exponents[j]` is the vertex assigned to `points[j]`; `exponents[0] = 0`.
    pub exponents: [u32; 3],
    pub center: PrecComplex,
    pub rotation: PrecReal,
    pub scale: PrecReal,
    pub residual: PrecReal,
}

impl PolygonFit {
    /// Model position for the `j`-th point.
    pub fn model_point(&self, j: usize, ctx: PrecisionContext) -> PrecComplex {
        let omega = &roots_of_unity(self.p as usize, ctx)[self.exponents[j] as usize];
        &self.center + &(&PrecComplex::from_polar(&self.scale, &self.rotation) * omega)
    }

    /// Residual below `tolerance · max(1, scale)`.
    pub fn passes(&self, ctx: PrecisionContext) -> bool {
        let tol = ctx.tolerance();
        let bound = (&tol * &self.scale).max(tol);
        self.residual < bound
    }
}

fn check_order(p: u32) -> Result<()> {
    if !(3..=MAX_FIT_ORDER).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "polygon order must lie in 3..={MAX_FIT_ORDER}, got {p}"
        )));
    }
    Ok(())
}

/// Fits `points` to three vertices `(0, b, c)` of a regular p-gon.
///
/// Every ordered pair `(b, c)` is tried: two points fix the similarity, the
/// third gives the residual. A double-precision screen picks the candidates
/// that are re-evaluated at full precision. Among candidates within
/// tolerance of the minimum, the lexicographically smallest triple wins.
/// Degenerate input yields a large residual rather than an error.
pub fn fit_to_polygon(points: &[PrecComplex; 3], p: u32, ctx: PrecisionContext) -> Result<PolygonFit> {
    check_order(p)?;
    let pf: Vec<Complex64> = points.iter().map(PrecComplex::to_c64).collect();
    let size = pf
        .iter()
        .flat_map(|a| pf.iter().map(move |b| (a - b).norm()))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let omega: Vec<Complex64> = (0..p)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * f64::from(k) / f64::from(p)))
        .collect();

    let mut screened: Vec<(f64, u32, u32)> = Vec::new();
    for b in 1..p {
        for c in 1..p {
            if b == c {
                continue;
            }
            let w = (pf[1] - pf[0]) / (omega[b as usize] - 1.0);
            let center = pf[0] - w;
            let res = (pf[2] - (center + w * omega[c as usize])).norm();
            screened.push((if res.is_finite() { res } else { f64::INFINITY }, b, c));
        }
    }
    screened.sort_by(|x, y| x.0.total_cmp(&y.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    let best = screened[0].0;
    let cutoff = best * 4.0 + 1e-9 * size;
    let candidates: Vec<(u32, u32)> = screened
        .iter()
        .take_while(|s| s.0 <= cutoff)
        .take(REFINE_LIMIT)
        .map(|s| (s.1, s.2))
        .collect();

    let roots = roots_of_unity(p as usize, ctx);
    let one = PrecComplex::one(ctx);
    let mut refined: Vec<PolygonFit> = candidates
        .into_iter()
        .map(|(b, c)| {
            let w = &(&points[1] - &points[0]) / &(&roots[b as usize] - &one);
            let center = &points[0] - &w;
            let model = &center + &(&w * &roots[c as usize]);
            let mut residual = points[2].dist(&model);
            if !residual.is_finite() {
                residual = PrecReal::from_f64(f64::MAX, ctx);
            }
            PolygonFit {
                p,
                exponents: [0, b, c],
                center,
                rotation: w.arg(),
                scale: w.abs(),
                residual,
            }
        })
        .collect();
    let min = refined
        .iter()
        .map(|f| f.residual.clone())
        .fold(None, |m: Option<PrecReal>, r| Some(m.map_or(r.clone(), |m| m.min(r))))
        .expect("at least one candidate");
    let slack = &min + &ctx.tolerance();
    refined.retain(|f| f.residual <= slack);
    refined.sort_by_key(|f| f.exponents);
    Ok(refined.swap_remove(0))
}

/// Pairwise exponent differences folded by `d ↦ min(d, p − d)`, sorted.
pub fn gap_multiset_of(residues: &[u32; 3], p: u32) -> [u32; 3] {
    let fold = |a: u32, b: u32| {
        let d = (a + p - b % p) % p;
        d.min(p - d)
    };
    let mut gaps = [
        fold(residues[0], residues[1]),
        fold(residues[1], residues[2]),
        fold(residues[0], residues[2]),
    ];
    gaps.sort_unstable();
    gaps
}

/// The gap multiset of a fit: a similarity invariant of the triangle.
pub fn gap_multiset(fit: &PolygonFit) -> [u32; 3] {
    gap_multiset_of(&fit.exponents, fit.p)
}

/// True iff the fitted triangle has the same gap multiset as `claimed`.
///
/// Identifies triangles up to rigid motion and reflection, so a coset and its
/// negative are not told apart; see [`oriented_coset_check`].
pub fn coset_check(fit: &PolygonFit, claimed: &[u32; 3], p: u32) -> bool {
    fit.p == p && gap_multiset(fit) == gap_multiset_of(claimed, p)
}

/// Direction in which polygon exponents increase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Counterclockwise,
    Clockwise,
}

/// True iff the fitted vertex set, with exponents read in `orientation`, is a
/// rotation of `claimed`. Unlike [`coset_check`] this separates `C` from `−C`.
pub fn oriented_coset_check(fit: &PolygonFit, claimed: &[u32; 3], p: u32, orientation: Orientation) -> bool {
    if fit.p != p {
        return false;
    }
    let mut target = claimed.map(|a| a % p);
    target.sort_unstable();
    let read = |e: u32| match orientation {
        Orientation::Counterclockwise => e % p,
        Orientation::Clockwise => (p - e % p) % p,
    };
    (0..p).any(|t| {
        let mut moved = fit.exponents.map(|e| (read(e) + t) % p);
        moved.sort_unstable();
        moved == target
    })
}

/// The orientation in which `claimed` labels the fitted vertices, if any.
pub fn label_orientation(fit: &PolygonFit, claimed: &[u32; 3], p: u32) -> Option<Orientation> {
    [Orientation::Counterclockwise, Orientation::Clockwise]
        .into_iter()
        .find(|&o| oriented_coset_check(fit, claimed, p, o))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpnum::make_context;

    fn ctx() -> PrecisionContext {
        make_context(50).unwrap()
    }

    #[test]
    fn identity_placement() {
        let c = ctx();
        let roots = roots_of_unity(7, c);
        let pts = [roots[1].clone(), roots[2].clone(), roots[4].clone()];
        let fit = fit_to_polygon(&pts, 7, c).unwrap();
        assert!(fit.residual < c.tolerance());
        assert!((&fit.scale - PrecReal::one(c)).abs() < c.tolerance());
        assert!(fit.center.abs() < c.tolerance());
        assert_eq!(fit.exponents, [0, 1, 3]);
        assert_eq!(gap_multiset(&fit), [1, 2, 3]);
        for (j, pt) in pts.iter().enumerate() {
            assert!(fit.model_point(j, c).dist(pt) < c.tolerance());
        }
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap_multiset_of(&[1, 2, 4], 7), [1, 2, 3]);
        assert_eq!(gap_multiset_of(&[1, 3, 9], 13), [2, 5, 6]);
        assert_eq!(gap_multiset_of(&[2, 5, 6], 13), [1, 3, 4]);
    }

    #[test]
    fn rejects_bad_order() {
        let c = ctx();
        let pts = std::array::from_fn(|k| PrecComplex::from_i64(k as i64, 0, c));
        assert!(fit_to_polygon(&pts, 2, c).is_err());
        assert!(fit_to_polygon(&pts, 98, c).is_err());
    }

    #[test]
    fn degenerate_points_give_large_residual() {
        let c = ctx();
        let pts = [
            PrecComplex::from_i64(0, 0, c),
            PrecComplex::from_i64(1, 0, c),
            PrecComplex::from_i64(2, 0, c),
        ];
        let fit = fit_to_polygon(&pts, 7, c).unwrap();
        assert!(fit.residual > PrecReal::parse("1e-3", c).unwrap());
        let same = [pts[0].clone(), pts[0].clone(), pts[1].clone()];
        let fit = fit_to_polygon(&same, 7, c).unwrap();
        assert!(!fit.passes(c));
    }

    #[test]
    fn oriented_check_separates_negated_coset() {
        let c = ctx();
        let roots = roots_of_unity(13, c);
        // clockwise reading of {1,3,9}
        let pts = [1usize, 3, 9].map(|a| roots[(13 - a) % 13].clone());
        let fit = fit_to_polygon(&pts, 13, c).unwrap();
        assert!(coset_check(&fit, &[1, 3, 9], 13));
        assert!(coset_check(&fit, &[4, 10, 12], 13));
        let cw = Orientation::Clockwise;
        assert!(oriented_coset_check(&fit, &[1, 3, 9], 13, cw));
        assert!(!oriented_coset_check(&fit, &[4, 10, 12], 13, cw));
        assert!(!oriented_coset_check(&fit, &[2, 5, 6], 13, cw));
        assert_eq!(label_orientation(&fit, &[1, 3, 9], 13), Some(cw));
        assert_eq!(label_orientation(&fit, &[4, 10, 12], 13), Some(Orientation::Counterclockwise));
        assert_eq!(label_orientation(&fit, &[2, 5, 6], 13), None);
    }
}
