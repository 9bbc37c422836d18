//! Two radii, one trisection and a translation for primes `p ≡ 1 (mod 6)`.
//!
//! For a coset `C` of the order-3 subgroup of `(ℤ/p)^×`, the three roots
//! `e^{2πia/p}`, `a ∈ C`, solve a cubic. Depressing it about its centroid
//! `c = e1/3` and applying Cardano's method writes each root as
//! `c + ε_j u + ε_j² v`: a two-radius construction with trisected angle
//! `arg u³`, translated by `c`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mpnum::{cube_roots_of_unity, PrecComplex, PrecReal, PrecisionContext};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetDecomposition {
    pub p: u32,
    /// `{1, h, h²}`, ascending.
    pub subgroup: [u32; 3],
    /// Each coset ascending; cosets ordered by smallest element.
    pub cosets: Vec<[u32; 3]>,
}

impl CosetDecomposition {
    /// Index of the coset `−C`.
    pub fn negated(&self, index: usize) -> Option<usize> {
        let c = self.cosets.get(index)?;
        let target = sorted(c.map(|a| self.p - a));
        self.cosets.iter().position(|d| *d == target)
    }
}

fn sorted(mut a: [u32; 3]) -> [u32; 3] {
    a.sort_unstable();
    a
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d: &u32| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn check_prime(p: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if p % 6 != 1 {
        return Err(Error::InvalidArgument(format!(
            "{p} is not congruent to 1 mod 6, so no order-3 subgroup exists"
        )));
    }
    Ok(())
}

fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) * u64::from(b)) % u64::from(p)) as u32
}

/// The order-3 subgroup of `(ℤ/p)^×` and its cosets.
pub fn order3_cosets(p: u32) -> Result<CosetDecomposition> {
    check_prime(p)?;
    let h = (2..p)
        .find(|&h| mulmod(mulmod(h, h, p), h, p) == 1)
        .expect("p ≡ 1 mod 3 has an element of order 3");
    let subgroup = sorted([1, h, mulmod(h, h, p)]);
    let mut seen = vec![false; p as usize];
    let mut cosets = Vec::new();
    for g in 1..p {
        if seen[g as usize] {
            continue;
        }
        let coset = sorted(subgroup.map(|s| mulmod(g, s, p)));
        for a in coset {
            seen[a as usize] = true;
        }
        cosets.push(coset);
    }
    Ok(CosetDecomposition { p, subgroup, cosets })
}

/// Cardano data for one coset.
#[derive(Debug, Clone)]
pub struct GeneralConstruction {
    pub p: u32,
    pub coset: [u32; 3],
    pub center: PrecComplex,
    pub u: PrecComplex,
    pub v: PrecComplex,
    /// `|u|`.
    pub r1: PrecReal,
    /// `|v|`.
    pub r2: PrecReal,
    /// `arg u³`, radians.
    pub theta: PrecReal,
    /// `center + ε_j u + ε_j² v`.
    pub vertices: [PrecComplex; 3],
    /// Linear coefficient of the depressed cubic.
    pub depressed_linear: PrecComplex,
    /// Largest distance between a vertex and its root of unity.
    pub residual: PrecReal,
}

/// Runs Cardano's method on the coset cubic.
///
/// Of the nine cube-root branch pairs, those with `u·v = −P/3` (P the
/// depressed linear coefficient) are kept; the one with the smallest
/// `|arg u|` wins. A reconstruction residual at or above tolerance is an
/// internal failure.
pub fn cardano_from_coset(p: u32, coset: &[u32; 3], ctx: PrecisionContext) -> Result<GeneralConstruction> {
    let decomposition = order3_cosets(p)?;
    let coset = sorted(coset.map(|a| a % p));
    if !decomposition.cosets.contains(&coset) {
        return Err(Error::InvalidArgument(format!(
            "{coset:?} is not a coset of the order-3 subgroup {:?} mod {p}",
            decomposition.subgroup
        )));
    }
    let two_pi = PrecReal::pi(ctx).mul_i64(2);
    let roots: Vec<PrecComplex> = coset
        .iter()
        .map(|&a| PrecComplex::cis(&two_pi.mul_i64(i64::from(a)).div_i64(i64::from(p))))
        .collect();
    let e1 = &(&roots[0] + &roots[1]) + &roots[2];
    let e2 = &(&(&roots[0] * &roots[1]) + &(&roots[0] * &roots[2])) + &(&roots[1] * &roots[2]);
    let e3 = &(&roots[0] * &roots[1]) * &roots[2];

    let third = |z: &PrecComplex| z.scale(&PrecReal::one(ctx).div_i64(3));
    let center = third(&e1);
    let e1_sq = &e1 * &e1;
    let big_p = &e2 - &third(&e1_sq);
    let big_q = &(&(&e1_sq * &e1).scale(&PrecReal::from_i64(-2, ctx).div_i64(27))
        + &third(&(&e1 * &e2)))
        - &e3;

    // u³, v³ solve w² + Q w − P³/27 = 0
    let p_cubed_27 = (&(&big_p * &big_p) * &big_p).scale(&PrecReal::one(ctx).div_i64(27));
    let half_q = big_q.scale(&PrecReal::one(ctx).half());
    let disc = (&(&half_q * &half_q) + &p_cubed_27).sqrt();
    let u3 = &(-&half_q) + &disc;
    let v3 = &(-&half_q) - &disc;
    let target_uv = -third(&big_p);

    let eps = cube_roots_of_unity(ctx);
    let u0 = u3.principal_cbrt();
    let v0 = v3.principal_cbrt();
    let tol = ctx.tolerance();
    let mut best: Option<(PrecReal, PrecComplex, PrecComplex)> = None;
    for a in 0..3 {
        for b in 0..3 {
            let u = eps.get(a) * &u0;
            let v = eps.get(b) * &v0;
            if (&u * &v).dist(&target_uv) >= tol {
                continue;
            }
            let key = u.arg().abs();
            if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                best = Some((key, u, v));
            }
        }
    }
    let (_, u, v) = best.ok_or_else(|| {
        Error::Internal(format!("no Cardano branch pair satisfies u·v = -P/3 for coset {coset:?} mod {p}"))
    })?;

    let vertices: [PrecComplex; 3] = std::array::from_fn(|j| {
        &(&center + &(eps.get(j) * &u)) + &(eps.get(2 * j) * &v)
    });
    let residual = matching_residual(&vertices, &roots, ctx);
    if residual >= tol {
        return Err(Error::Internal(format!(
            "Cardano reconstruction for coset {coset:?} mod {p} misses by {}",
            residual.to_sci(6)
        )));
    }
    Ok(GeneralConstruction {
        p,
        coset,
        center,
        r1: u.abs(),
        r2: v.abs(),
        theta: u3.arg(),
        u,
        v,
        vertices,
        depressed_linear: big_p,
        residual,
    })
}

/// Hausdorff distance between the vertices and the target roots.
fn matching_residual(vertices: &[PrecComplex; 3], roots: &[PrecComplex], ctx: PrecisionContext) -> PrecReal {
    let nearest = |z: &PrecComplex, set: &[PrecComplex]| {
        set.iter()
            .map(|w| z.dist(w))
            .reduce(PrecReal::min)
            .expect("nonempty set")
    };
    let forward = vertices.iter().map(|z| nearest(z, roots));
    let backward = roots.iter().map(|z| nearest(z, vertices));
    forward.chain(backward).fold(PrecReal::zero(ctx), PrecReal::max)
}

/// Cardano constructions for every coset of `p`, in coset order.
pub fn cardano_all(p: u32, ctx: PrecisionContext) -> Result<Vec<GeneralConstruction>> {
    order3_cosets(p)?
        .cosets
        .iter()
        .map(|c| cardano_from_coset(p, c, ctx))
        .collect()
}

/// Factorization `(p − 1)/3 = 2^a · 3^b · m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructibilityProfile {
    pub p: u32,
    pub coset_count: u32,
    pub two_exponent: u32,
    pub three_exponent: u32,
    pub remainder: u32,
    /// `m = 1`: the coset cubic's coefficients lie in a field reachable by
    /// square roots and trisections. A heuristic, not a proof.
    pub tower_feasible: bool,
}

impl ConstructibilityProfile {
    pub const NOTE: &'static str =
        "heuristic: tower-feasible means (p-1)/3 = 2^a 3^b; this is not a constructibility proof";
}

pub fn constructibility_profile(p: u32) -> Result<ConstructibilityProfile> {
    check_prime(p)?;
    let n = (p - 1) / 3;
    let mut m = n;
    let mut strip = |d: u32| {
        let mut k = 0;
        while m.is_multiple_of(d) {
            m /= d;
            k += 1;
        }
        k
    };
    let two_exponent = strip(2);
    let three_exponent = strip(3);
    Ok(ConstructibilityProfile {
        p,
        coset_count: n,
        two_exponent,
        three_exponent,
        remainder: m,
        tower_feasible: m == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpnum::make_context;

    fn ctx() -> PrecisionContext {
        make_context(50).unwrap()
    }

    #[test]
    fn subgroups() {
        assert_eq!(order3_cosets(7).unwrap().subgroup, [1, 2, 4]);
        assert_eq!(order3_cosets(13).unwrap().subgroup, [1, 3, 9]);
        assert_eq!(order3_cosets(19).unwrap().subgroup, [1, 7, 11]);
        let d = order3_cosets(13).unwrap();
        assert_eq!(d.cosets, vec![[1, 3, 9], [2, 5, 6], [4, 10, 12], [7, 8, 11]]);
        assert_eq!(d.negated(0), Some(2));
        assert_eq!(d.negated(1), Some(3));
    }

    #[test]
    fn rejects_bad_primes() {
        for p in [1, 9, 11, 15, 25] {
            assert!(matches!(order3_cosets(p), Err(Error::InvalidArgument(_))), "{p}");
        }
        assert!(constructibility_profile(5).is_err());
    }

    #[test]
    fn heptagon_center_and_product() {
        let c = ctx();
        let g = cardano_from_coset(7, &[4, 1, 2], c).unwrap();
        assert_eq!(g.coset, [1, 2, 4]);
        let root7 = PrecReal::from_i64(7, c).sqrt();
        let center = PrecComplex::new(PrecReal::from_i64(-1, c).div_i64(6), root7.div_i64(6));
        assert!(g.center.dist(&center) < c.tolerance());
        assert!((&g.r1 * &g.r2 - root7.div_i64(9)).abs() < c.tolerance());
        assert!((&g.r1 * &g.r2 - g.depressed_linear.abs().div_i64(3)).abs() < c.tolerance());
    }

    #[test]
    fn non_coset_is_rejected() {
        assert!(cardano_from_coset(7, &[1, 2, 3], ctx()).is_err());
    }

    #[test]
    fn profiles() {
        let f = |p| {
            let r = constructibility_profile(p).unwrap();
            (r.coset_count, r.two_exponent, r.three_exponent, r.remainder, r.tower_feasible)
        };
        assert_eq!(f(7), (2, 1, 0, 1, true));
        assert_eq!(f(13), (4, 2, 0, 1, true));
        assert_eq!(f(19), (6, 1, 1, 1, true));
        assert_eq!(f(31), (10, 1, 0, 5, false));
    }
}
