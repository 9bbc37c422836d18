//! Every construction: heptagon and triskaidecagon, Types I, II and III.
//!
//! A construction places three vertices `V_j = R1·ε_j + R2·ζ_{π(j)}`, where
//! `ε_j` are the cube roots of unity, `ζ_k` the cube roots of a unit number
//! (the trisected angle) and `π` a pairing of ε- to ζ-indices. A negative
//! `R2` negates the second parallelogram vector.

mod heptagon;
mod ladder;
mod tridecagon;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mpnum::{
    cube_roots_of_unity, trisect_unit, CubeRootsOfUnity, PrecComplex, PrecReal, PrecisionContext,
    TrisectionResult,
};

pub use heptagon::{heptagon_type1, heptagon_type2, heptagon_type2_radii, heptagon_zeta};
pub use ladder::{Convention, RootLadder};
pub use tridecagon::{
    tridecagon_radii, tridecagon_type1, tridecagon_type2, tridecagon_type2_radii, tridecagon_zeta,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    TypeI,
    TypeII,
    TypeIII,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::TypeI => "I",
            Kind::TypeII => "II",
            Kind::TypeIII => "III",
        })
    }
}

/// The two triskaidecagon families, tied to the sign choice `±√13`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Plus,
    Minus,
}

impl Family {
    pub fn sign(self) -> i64 {
        match self {
            Family::Plus => 1,
            Family::Minus => -1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Plus => "plus",
            Family::Minus => "minus",
        })
    }
}

/// Bijection from ε-index to ζ-index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pairing(pub [usize; 3]);

impl Pairing {
    /// `ε_0 ↔ ζ_1`, `ε_1 ↔ ζ_0`, `ε_2 ↔ ζ_2`.
    pub const PRINTED: Pairing = Pairing([1, 0, 2]);

    /// All six bijections in lexicographic order.
    pub fn all() -> [Pairing; 6] {
        [
            Pairing([0, 1, 2]),
            Pairing([0, 2, 1]),
            Pairing([1, 0, 2]),
            Pairing([1, 2, 0]),
            Pairing([2, 0, 1]),
            Pairing([2, 1, 0]),
        ]
    }

    /// Advances every ζ-index by `by` (mod 3).
    pub fn shifted(self, by: usize) -> Pairing {
        Pairing(self.0.map(|k| (k + by) % 3))
    }

    pub fn zeta_index(self, j: usize) -> usize {
        self.0[j % 3]
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "(0→{a}, 1→{b}, 2→{c})")
    }
}

/// One complete construction instance.
#[derive(Debug, Clone)]
pub struct TriangleConstruction {
    pub p: u32,
    pub kind: Kind,
    pub ctx: PrecisionContext,
    pub r1: PrecReal,
    /// May be negative: the ζ-vector of the parallelogram is then negated.
    pub r2: PrecReal,
    /// Angle trisected, radians.
    pub theta: PrecReal,
    pub zetas: TrisectionResult,
    pub pairing: Pairing,
    pub vertices: [PrecComplex; 3],
    pub coset_label: Option<[u32; 3]>,
    pub family: Option<Family>,
    /// True when the trisected angle was negated.
    pub mirror: bool,
    /// Index into the Type II root ladder, when the radius came from one.
    pub ladder_index: Option<usize>,
}

/// `V_j = R1·ε_j + R2·ζ_{π(j)}`.
pub fn assemble_vertices(
    r1: &PrecReal,
    r2: &PrecReal,
    eps: &CubeRootsOfUnity,
    zetas: &TrisectionResult,
    pairing: Pairing,
) -> [PrecComplex; 3] {
    std::array::from_fn(|j| {
        &eps.get(j).scale(r1) + &zetas.zeta(pairing.zeta_index(j)).scale(r2)
    })
}

impl TriangleConstruction {
    /// Builds a construction from its raw data, computing the vertices.
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        p: u32,
        kind: Kind,
        r1: PrecReal,
        r2: PrecReal,
        zetas: TrisectionResult,
        pairing: Pairing,
        ctx: PrecisionContext,
    ) -> Self {
        let eps = cube_roots_of_unity(ctx);
        let vertices = assemble_vertices(&r1, &r2, &eps, &zetas, pairing);
        Self {
            p,
            kind,
            ctx,
            theta: zetas.theta.clone(),
            r1,
            r2,
            zetas,
            pairing,
            vertices,
            coset_label: None,
            family: None,
            mirror: false,
            ladder_index: None,
        }
    }

    /// The pairing identity `V_j = R1·ε_j + R2·ζ_{π(j)}` evaluated afresh; max deviation.
    pub fn recompute_residual(&self) -> PrecReal {
        let eps = cube_roots_of_unity(self.ctx);
        let fresh = assemble_vertices(&self.r1, &self.r2, &eps, &self.zetas, self.pairing);
        fresh
            .iter()
            .zip(self.vertices.iter())
            .fold(PrecReal::zero(self.ctx), |m, (a, b)| m.max(a.dist(b)))
    }

    pub fn label(&self) -> String {
        let mut s = format!("p={} type {}", self.p, self.kind);
        if let Some(f) = self.family {
            s.push_str(&format!(" family {f}"));
        }
        if self.mirror {
            s.push_str(" mirror");
        }
        if let Some(k) = self.ladder_index {
            s.push_str(&format!(" root {k}"));
        }
        s
    }
}

/// Type II construction: θ = 0, so `ζ_k = ε_k`; `R1 = 1`, `R2 = r`.
pub fn type2_with_radius(p: u32, r: PrecReal, ctx: PrecisionContext) -> Result<TriangleConstruction> {
    let zetas = trisect_unit(&PrecComplex::one(ctx), ctx)?;
    Ok(TriangleConstruction::assemble(
        p,
        Kind::TypeII,
        PrecReal::one(ctx),
        r,
        zetas,
        Pairing::PRINTED,
        ctx,
    ))
}

/// Type III form of a Type II construction: trisect θ = π and negate `R2`.
///
/// The principal cube roots of −1 satisfy `ζ_{k+1} = −ε_k`, so advancing the
/// pairing by one makes `(−R2)·ζ_{π(j)+1} = R2·ε_{π(j)}`: the same vertices.
pub fn type3_from(tc: &TriangleConstruction) -> Result<TriangleConstruction> {
    if tc.kind != Kind::TypeII {
        return Err(Error::InvalidArgument(format!(
            "Type III is derived from a Type II construction, got type {}",
            tc.kind
        )));
    }
    let ctx = tc.ctx;
    let zetas = trisect_unit(&PrecComplex::from_i64(-1, 0, ctx), ctx)?;
    let mut out = TriangleConstruction::assemble(
        tc.p,
        Kind::TypeIII,
        tc.r1.clone(),
        -&tc.r2,
        zetas,
        tc.pairing.shifted(1),
        ctx,
    );
    out.coset_label = tc.coset_label;
    out.family = tc.family;
    out.ladder_index = tc.ladder_index;
    Ok(out)
}

/// Next ladder index under `ζ_k → ζ_{k+1}`: cycles within each block of three.
pub fn shift_ladder_index(k: usize) -> usize {
    k / 3 * 3 + (k % 3 + 1) % 3
}

/// The order-3 action `ζ_k → ζ_{k+1}`.
///
/// For Type I the ζ-indices in the pairing advance. For Type II/III built on
/// a root ladder the radius moves to the next root of the same cubic, since
/// the ladder's s-values are themselves indexed by the ζ_k.
pub fn c3_shift(tc: &TriangleConstruction) -> Result<TriangleConstruction> {
    match (tc.kind, tc.ladder_index) {
        (Kind::TypeII, Some(k)) => type2_by_index(tc.p, shift_ladder_index(k), tc.ctx),
        (Kind::TypeIII, Some(k)) => type3_from(&type2_by_index(tc.p, shift_ladder_index(k), tc.ctx)?),
        _ => {
            let mut out = TriangleConstruction::assemble(
                tc.p,
                tc.kind,
                tc.r1.clone(),
                tc.r2.clone(),
                tc.zetas.clone(),
                tc.pairing.shifted(1),
                tc.ctx,
            );
            out.coset_label = tc.coset_label;
            out.family = tc.family;
            out.mirror = tc.mirror;
            out.ladder_index = tc.ladder_index;
            Ok(out)
        }
    }
}

fn type2_by_index(p: u32, k: usize, ctx: PrecisionContext) -> Result<TriangleConstruction> {
    match p {
        7 => heptagon_type2(k, ctx),
        13 => tridecagon_type2(k, ctx),
        _ => Err(Error::InvalidArgument(format!(
            "no root ladder for p = {p}"
        ))),
    }
}

/// Selector for the paper-defined constructions, as exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selector {
    pub p: u32,
    pub construction: u8,
    pub root_index: usize,
    pub family: Family,
    pub mirror: bool,
}

impl Default for Selector {
    fn default() -> Self {
        Self {
            p: 7,
            construction: 1,
            root_index: 0,
            family: Family::Plus,
            mirror: false,
        }
    }
}

pub fn build(sel: &Selector, ctx: PrecisionContext) -> Result<TriangleConstruction> {
    match (sel.p, sel.construction) {
        (7, 1) => heptagon_type1(ctx),
        (13, 1) => tridecagon_type1(sel.family, sel.mirror, ctx),
        (7 | 13, 2) => type2_by_index(sel.p, sel.root_index, ctx),
        (7 | 13, 3) => type3_from(&type2_by_index(sel.p, sel.root_index, ctx)?),
        (7 | 13, c) => Err(Error::InvalidArgument(format!(
            "construction must be 1, 2 or 3, got {c}"
        ))),
        (p, _) => Err(Error::InvalidArgument(format!(
            "closed-form constructions exist for p = 7 and p = 13, got {p}"
        ))),
    }
}
