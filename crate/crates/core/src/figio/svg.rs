use std::fmt::Write as _;

use crate::construct::TriangleConstruction;
use crate::error::{Error, Result};
use crate::general::GeneralConstruction;
use crate::mpnum::{cube_roots_of_unity, roots_of_unity, PrecComplex, PrecisionContext};
use crate::verify::fit_to_polygon;

/// Parallelogram colors, by vertex index.
pub const VERTEX_COLORS: [&str; 3] = ["red", "green", "blue"];

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Width and height in pixels, at least 100.
    pub canvas: u32,
    /// Fraction of the canvas left blank on each side.
    pub margin: f64,
    pub show_circles: bool,
    pub show_triangles: bool,
    pub show_parallelograms: bool,
    pub show_overlay: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            canvas: 1000,
            margin: 0.08,
            show_circles: true,
            show_triangles: true,
            show_parallelograms: true,
            show_overlay: true,
        }
    }
}

impl RenderOptions {
    fn validate(&self) -> Result<()> {
        if self.canvas < 100 {
            return Err(Error::InvalidArgument(format!(
                "canvas must be at least 100 pixels, got {}",
                self.canvas
            )));
        }
        if !(0.0..0.5).contains(&self.margin) {
            return Err(Error::InvalidArgument(format!(
                "margin must lie in [0, 0.5), got {}",
                self.margin
            )));
        }
        Ok(())
    }
}

/// Plane data shared by both construction kinds.
#[derive(Debug, Clone)]
pub struct Figure {
    pub p: u32,
    pub title: String,
    pub center: PrecComplex,
    /// `a_j` and `b_j` with `V_j = center + a_j + b_j`.
    pub first: [PrecComplex; 3],
    pub second: [PrecComplex; 3],
    pub vertices: [PrecComplex; 3],
    /// Regular p-gon positions and which of them are vertices.
    pub overlay: Vec<(PrecComplex, bool)>,
}

fn overlay_for(vertices: &[PrecComplex; 3], p: u32, ctx: PrecisionContext) -> Result<Vec<(PrecComplex, bool)>> {
    let fit = fit_to_polygon(vertices, p, ctx)?;
    let frame = PrecComplex::from_polar(&fit.scale, &fit.rotation);
    Ok(roots_of_unity(p as usize, ctx)
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let hit = fit.exponents.contains(&(k as u32));
            (&fit.center + &(&frame * w), hit)
        })
        .collect())
}

impl Figure {
    pub fn from_triangle(tc: &TriangleConstruction) -> Result<Self> {
        let ctx = tc.ctx;
        let eps = cube_roots_of_unity(ctx);
        let first = std::array::from_fn(|j| eps.get(j).scale(&tc.r1));
        let second = std::array::from_fn(|j| tc.zetas.zeta(tc.pairing.zeta_index(j)).scale(&tc.r2));
        check_finite(&tc.vertices)?;
        Ok(Self {
            p: tc.p,
            title: tc.label(),
            center: PrecComplex::zero(ctx),
            first,
            second,
            vertices: tc.vertices.clone(),
            overlay: overlay_for(&tc.vertices, tc.p, ctx)?,
        })
    }

    pub fn from_general(g: &GeneralConstruction, ctx: PrecisionContext) -> Result<Self> {
        let eps = cube_roots_of_unity(ctx);
        let first = std::array::from_fn(|j| eps.get(j) * &g.u);
        let second = std::array::from_fn(|j| eps.get(2 * j) * &g.v);
        check_finite(&g.vertices)?;
        let overlay = roots_of_unity(g.p as usize, ctx)
            .into_iter()
            .enumerate()
            .map(|(k, w)| (w, g.coset.contains(&(k as u32))))
            .collect();
        Ok(Self {
            p: g.p,
            title: format!("p={} coset {:?}", g.p, g.coset),
            center: g.center.clone(),
            first,
            second,
            vertices: g.vertices.clone(),
            overlay,
        })
    }
}

fn check_finite(vertices: &[PrecComplex; 3]) -> Result<()> {
    if vertices.iter().all(PrecComplex::is_finite) {
        Ok(())
    } else {
        Err(Error::InvalidArgument("cannot render a non-finite vertex".into()))
    }
}

/// Six decimals, without a negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

struct Frame {
    scale: f64,
    half: f64,
}

impl Frame {
    fn point(&self, z: (f64, f64)) -> String {
        format!("{},{}", num(self.half + z.0 * self.scale), num(self.half - z.1 * self.scale))
    }

    fn path(&self, pts: &[(f64, f64)]) -> String {
        let mut d = String::new();
        for (i, z) in pts.iter().enumerate() {
            d.push_str(if i == 0 { "M" } else { " L" });
            d.push_str(&self.point(*z));
        }
        d.push_str(" Z");
        d
    }
}

fn xy(z: &PrecComplex) -> (f64, f64) {
    (z.re.to_f64(), z.im.to_f64())
}

fn add(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 + b.0, a.1 + b.1)
}

/// SVG 1.1 drawing of a construction: the two circles, the two equilateral
/// triangles, the three vertex parallelograms and the p-gon overlay.
pub fn render_svg(fig: &Figure, opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    let c = xy(&fig.center);
    let first: Vec<_> = fig.first.iter().map(xy).collect();
    let second: Vec<_> = fig.second.iter().map(xy).collect();
    let verts: Vec<_> = fig.vertices.iter().map(xy).collect();
    let overlay: Vec<_> = fig.overlay.iter().map(|(z, hit)| (xy(z), *hit)).collect();
    let r1 = (first[0].0 * first[0].0 + first[0].1 * first[0].1).sqrt();
    let r2 = (second[0].0 * second[0].0 + second[0].1 * second[0].1).sqrt();

    let mut extent = r1.max(r2) + c.0.abs().max(c.1.abs());
    for z in verts.iter().chain(overlay.iter().map(|(z, _)| z)) {
        extent = extent.max(z.0.abs()).max(z.1.abs());
    }
    let extent = if extent > 0.0 { extent } else { 1.0 };
    let size = f64::from(opts.canvas);
    let frame = Frame {
        scale: size * (0.5 - opts.margin) / extent,
        half: size / 2.0,
    };

    let mut s = String::new();
    let w = opts.canvas;
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", fig.title);
    let _ = writeln!(s, r#"<rect class="background" x="0" y="0" width="{w}" height="{w}" fill="white"/>"#);
    let (cx, cy) = (num(frame.half + c.0 * frame.scale), num(frame.half - c.1 * frame.scale));
    if opts.show_circles {
        for r in [r1, r2] {
            let _ = writeln!(
                s,
                r##"<circle class="radius" cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="#999999" stroke-width="1.5"/>"##,
                num(r * frame.scale)
            );
        }
    }
    if opts.show_triangles {
        for tri in [&first, &second] {
            let pts: Vec<_> = tri.iter().map(|z| add(c, *z)).collect();
            let _ = writeln!(
                s,
                r#"<path class="triangle" d="{}" fill="none" stroke="black" stroke-width="1"/>"#,
                frame.path(&pts)
            );
        }
    }
    if opts.show_parallelograms {
        for j in 0..3 {
            let pts = [c, add(c, first[j]), verts[j], add(c, second[j])];
            let _ = writeln!(
                s,
                r#"<path class="parallelogram" d="{}" fill="{col}" fill-opacity="0.15" stroke="{col}" stroke-width="2"/>"#,
                frame.path(&pts),
                col = VERTEX_COLORS[j]
            );
        }
    }
    if opts.show_overlay && !overlay.is_empty() {
        let ring: Vec<_> = overlay.iter().map(|(z, _)| *z).collect();
        let _ = writeln!(
            s,
            r##"<path class="polygon" d="{}" fill="none" stroke="#cccccc" stroke-width="1"/>"##,
            frame.path(&ring)
        );
        let half_side = 4.0;
        for (z, hit) in &overlay {
            let x = frame.half + z.0 * frame.scale - half_side;
            let y = frame.half - z.1 * frame.scale - half_side;
            let (class, fill) = if *hit { ("mark highlight", "black") } else { ("mark", "white") };
            let _ = writeln!(
                s,
                r#"<rect class="{class}" x="{}" y="{}" width="8.000000" height="8.000000" fill="{fill}" stroke="black" stroke-width="1"/>"#,
                num(x),
                num(y)
            );
        }
    }
    for (j, v) in verts.iter().enumerate() {
        let x = frame.half + v.0 * frame.scale + 8.0;
        let y = frame.half - v.1 * frame.scale - 8.0;
        let _ = writeln!(
            s,
            r#"<text class="label" x="{}" y="{}" fill="{}" font-family="sans-serif" font-size="18">V{j}</text>"#,
            num(x),
            num(y),
            VERTEX_COLORS[j]
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
