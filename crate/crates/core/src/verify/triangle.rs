use crate::construct::{assemble_vertices, Pairing};
use crate::error::Result;
use crate::mpnum::{cube_roots_of_unity, PrecComplex, PrecReal, PrecisionContext, TrisectionResult};

use super::fit::{fit_to_polygon, PolygonFit};

/// Side lengths and, for an isosceles triangle, its symmetry axis.
#[derive(Debug, Clone)]
pub struct TriangleReport {
    /// `side_lengths[j]` is the side opposite vertex `j`.
    pub side_lengths: [PrecReal; 3],
    pub apex_index: Option<usize>,
    /// Direction of the symmetry axis in [0, π), radians.
    pub axis_angle: Option<PrecReal>,
    /// Distance of the origin from the symmetry axis.
    pub axis_through_origin_residual: Option<PrecReal>,
}

impl TriangleReport {
    pub fn is_isosceles(&self) -> bool {
        self.apex_index.is_some()
    }
}

fn side_tolerance(sides: &[PrecReal; 3], ctx: PrecisionContext) -> PrecReal {
    let longest = sides.iter().cloned().fold(PrecReal::one(ctx), PrecReal::max);
    ctx.tolerance() * longest
}

/// Side lengths and symmetry axis of a triangle.
///
/// The apex is the vertex whose two adjacent sides agree; for an equilateral
/// triangle it is vertex 0.
pub fn isosceles_report(points: &[PrecComplex; 3], ctx: PrecisionContext) -> TriangleReport {
    let side_lengths: [PrecReal; 3] =
        std::array::from_fn(|j| points[(j + 1) % 3].dist(&points[(j + 2) % 3]));
    let tol = side_tolerance(&side_lengths, ctx);
    let apex_index = (0..3).find(|&j| {
        (&side_lengths[(j + 1) % 3] - &side_lengths[(j + 2) % 3]).abs() < tol
    });
    let (axis_angle, axis_through_origin_residual) = match apex_index {
        Some(j) => {
            let mid = (&points[(j + 1) % 3] + &points[(j + 2) % 3]).scale(&PrecReal::one(ctx).half());
            let dir = &points[j] - &mid;
            let len = dir.abs();
            let mut angle = dir.arg();
            let pi = PrecReal::pi(ctx);
            if angle.is_negative() {
                angle = angle + &pi;
            }
            if angle >= pi {
                angle = angle - &pi;
            }
            // |cross(dir, −mid)| / |dir|
            let cross = &dir.re * &mid.im - &dir.im * &mid.re;
            (Some(angle), Some(cross.abs() / len))
        }
        None => (None, None),
    };
    TriangleReport {
        side_lengths,
        apex_index,
        axis_angle,
        axis_through_origin_residual,
    }
}

/// Triangles grouped by shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityClasses {
    /// Member indices per class, in order of first appearance.
    pub classes: Vec<Vec<usize>>,
}

impl SimilarityClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

fn shape_key(points: &[PrecComplex; 3]) -> [PrecReal; 2] {
    let mut sides: Vec<PrecReal> = (0..3)
        .map(|j| points[(j + 1) % 3].dist(&points[(j + 2) % 3]))
        .collect();
    sides.sort_by(|a, b| a.partial_cmp(b).expect("finite side lengths"));
    [&sides[0] / &sides[2], &sides[1] / &sides[2]]
}

/// Groups triangles by their sorted side-length ratios.
pub fn similarity_classes(triangles: &[[PrecComplex; 3]], ctx: PrecisionContext) -> SimilarityClasses {
    let tol = ctx.tolerance();
    let mut keys: Vec<[PrecReal; 2]> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, t) in triangles.iter().enumerate() {
        let key = shape_key(t);
        let found = keys.iter().position(|k| {
            (&k[0] - &key[0]).abs() < tol && (&k[1] - &key[1]).abs() < tol
        });
        match found {
            Some(c) => classes[c].push(i),
            None => {
                keys.push(key);
                classes.push(vec![i]);
            }
        }
    }
    SimilarityClasses { classes }
}

/// Outcome of trying all six ε↔ζ pairings.
#[derive(Debug, Clone)]
pub struct PairingSearch {
    /// Every pairing with its fit, in lexicographic pairing order.
    pub tried: Vec<(Pairing, PolygonFit)>,
}

impl PairingSearch {
    /// Pairings whose vertices fit the polygon within tolerance.
    pub fn passing(&self, ctx: PrecisionContext) -> Vec<Pairing> {
        self.tried
            .iter()
            .filter(|(_, f)| f.passes(ctx))
            .map(|(pr, _)| *pr)
            .collect()
    }

    /// The pairing with the smallest residual (first in order on ties).
    pub fn best(&self) -> &(Pairing, PolygonFit) {
        self.tried
            .iter()
            .reduce(|a, b| if b.1.residual < a.1.residual { b } else { a })
            .expect("six pairings tried")
    }
}

/// Assembles and fits the vertices for each of the six pairings.
pub fn pairing_search(
    r1: &PrecReal,
    r2: &PrecReal,
    zetas: &TrisectionResult,
    p: u32,
    ctx: PrecisionContext,
) -> Result<PairingSearch> {
    let eps = cube_roots_of_unity(ctx);
    let tried = Pairing::all()
        .into_iter()
        .map(|pr| {
            let v = assemble_vertices(r1, r2, &eps, zetas, pr);
            fit_to_polygon(&v, p, ctx).map(|f| (pr, f))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PairingSearch { tried })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpnum::make_context;

    fn ctx() -> PrecisionContext {
        make_context(50).unwrap()
    }

    #[test]
    fn equilateral_apex_is_zero() {
        let c = ctx();
        let eps = cube_roots_of_unity(c);
        let pts = [eps.get(0).clone(), eps.get(1).clone(), eps.get(2).clone()];
        let rep = isosceles_report(&pts, c);
        assert_eq!(rep.apex_index, Some(0));
        assert!(rep.axis_through_origin_residual.unwrap() < c.tolerance());
        assert!(rep.axis_angle.unwrap().is_zero());
    }

    #[test]
    fn scalene_has_no_apex() {
        let c = ctx();
        let pts = [
            PrecComplex::from_i64(0, 0, c),
            PrecComplex::from_i64(4, 0, c),
            PrecComplex::from_i64(0, 3, c),
        ];
        let rep = isosceles_report(&pts, c);
        assert!(!rep.is_isosceles());
        assert_eq!(rep.side_lengths[0], PrecReal::from_i64(5, c));
    }

    #[test]
    fn off_origin_axis_is_measured() {
        let c = ctx();
        let pts = [
            PrecComplex::from_i64(1, 1, c),
            PrecComplex::from_i64(3, 1, c),
            PrecComplex::from_i64(2, 5, c),
        ];
        let rep = isosceles_report(&pts, c);
        assert_eq!(rep.apex_index, Some(2));
        assert!((rep.axis_through_origin_residual.unwrap() - PrecReal::from_i64(2, c)).abs() < c.tolerance());
    }

    #[test]
    fn single_and_scaled_triangles() {
        let c = ctx();
        let t = [
            PrecComplex::from_i64(0, 0, c),
            PrecComplex::from_i64(4, 0, c),
            PrecComplex::from_i64(0, 3, c),
        ];
        assert_eq!(similarity_classes(std::slice::from_ref(&t), c).count(), 1);
        let scaled = t.clone().map(|z| z.scale(&PrecReal::from_i64(3, c)));
        let other = [
            PrecComplex::from_i64(0, 0, c),
            PrecComplex::from_i64(1, 0, c),
            PrecComplex::from_i64(0, 1, c),
        ];
        let classes = similarity_classes(&[t, other, scaled], c);
        assert_eq!(classes.classes, vec![vec![0, 2], vec![1]]);
    }
}
