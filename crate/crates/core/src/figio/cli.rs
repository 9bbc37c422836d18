use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construct::{build, heptagon_type2_radii, tridecagon_type2_radii, Convention, Family, Selector};
use crate::error::{Error, Result};
use crate::general::{cardano_all, cardano_from_coset, constructibility_profile, order3_cosets};
use crate::mpnum::{make_context, to_degrees, PrecisionContext, DEFAULT_DIGITS};
use crate::polyalg::catalog;
use crate::verify::{resolve_errata, verify_construction, Orientation};

use super::report::{report_json, GeneralBlock, LadderBlock, ProfileBlock, ReportDocument};
use super::svg::{render_svg, Figure, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "trisectagon", version, about = "Heptagon and triskaidecagon vertices from one angle trisection")]
struct Cli {
    /// Significant decimal digits of working precision.
    #[arg(long, global = true, env = "TRISECTAGON_DIGITS")]
    digits: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConventionArg {
    Printed,
    Corrected,
}

#[derive(Debug, Args)]
struct SelectorArgs {
    #[arg(long)]
    p: u32,
    /// 1 = Type I, 2 = Type II, 3 = Type III.
    #[arg(long, default_value_t = 1)]
    construction: u8,
    /// Root-ladder index for Types II and III.
    #[arg(long, default_value_t = 0)]
    root_index: usize,
    #[arg(long, value_enum, default_value = "plus")]
    family: FamilyArg,
    /// Trisect the conjugate angle.
    #[arg(long)]
    mirror: bool,
}

impl SelectorArgs {
    fn selector(&self) -> Selector {
        Selector {
            p: self.p,
            construction: self.construction,
            root_index: self.root_index,
            family: match self.family {
                FamilyArg::Plus => Family::Plus,
                FamilyArg::Minus => Family::Minus,
            },
            mirror: self.mirror,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a construction and print its radii, angle and vertices.
    Construct {
        #[command(flatten)]
        sel: SelectorArgs,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Build a construction and check it against a regular polygon.
    Verify {
        #[command(flatten)]
        sel: SelectorArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the Type II root ladder.
    Roots {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "corrected")]
        convention: ConventionArg,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Adjudicate the printed polynomials.
    Errata {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cardano data for the order-3 cosets of a prime p ≡ 1 (mod 6).
    Generalize {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        coset: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Figure for the selected coset (requires --coset).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write the SVG figure of a construction.
    Render {
        #[command(flatten)]
        sel: SelectorArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

fn write_json(path: Option<&PathBuf>, doc: &ReportDocument) -> Result<()> {
    match path {
        Some(p) => write_file(p, &report_json(doc)?),
        None => Ok(()),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = make_context(cli.digits.unwrap_or(DEFAULT_DIGITS))
        .and_then(|ctx| dispatch(cli.command, ctx, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, ctx: PrecisionContext, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Internal(format!("cannot write output: {e}"));
    match command {
        Command::Construct { sel, json, svg } => {
            let tc = build(&sel.selector(), ctx)?;
            writeln!(out, "{}", tc.label()).map_err(io)?;
            writeln!(out, "R1 = {}", tc.r1).map_err(io)?;
            writeln!(out, "R2 = {}", tc.r2).map_err(io)?;
            writeln!(out, "theta = {} deg", to_degrees(&tc.theta)).map_err(io)?;
            writeln!(out, "pairing = {}", tc.pairing).map_err(io)?;
            for (j, v) in tc.vertices.iter().enumerate() {
                writeln!(out, "V{j} = {v}").map_err(io)?;
            }
            write_json(json.as_ref(), &ReportDocument::new(ctx).with_construction(&tc))?;
            if let Some(path) = svg {
                write_file(&path, &render_svg(&Figure::from_triangle(&tc)?, &RenderOptions::default())?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { sel, json } => {
            let tc = build(&sel.selector(), ctx)?;
            let v = verify_construction(&tc, ctx)?;
            writeln!(out, "{}", tc.label()).map_err(io)?;
            writeln!(out, "fit exponents = {:?}, scale = {}", v.fit.exponents, v.fit.scale).map_err(io)?;
            writeln!(out, "fit residual = {}", v.fit.residual.to_sci(6)).map_err(io)?;
            writeln!(out, "assembly residual = {}", v.assembly_residual.to_sci(6)).map_err(io)?;
            if let Some(cv) = &v.coset {
                writeln!(
                    out,
                    "coset {:?}: gap multiset {}, label read {}",
                    cv.claimed,
                    if cv.gap_match { "matches" } else { "differs" },
                    match cv.orientation {
                        Some(Orientation::Counterclockwise) => "counterclockwise",
                        Some(Orientation::Clockwise) => "clockwise",
                        None => "in neither direction",
                    }
                )
                .map_err(io)?;
            }
            if let Some(apex) = v.triangle.apex_index {
                let residual = v.triangle.axis_through_origin_residual.as_ref().expect("apex has axis");
                writeln!(out, "isosceles, apex V{apex}, axis offset from origin = {}", residual.to_sci(6)).map_err(io)?;
            }
            writeln!(out, "{}", if v.passed { "VERIFIED" } else { "FAILED" }).map_err(io)?;
            write_json(
                json.as_ref(),
                &ReportDocument::new(ctx).with_construction(&tc).with_verification(&v),
            )?;
            Ok(if v.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Roots { p, convention, json } => {
            let (ladder, reference) = match (p, convention) {
                (7, _) => (heptagon_type2_radii(ctx)?, catalog::q7()),
                (13, ConventionArg::Corrected) => (tridecagon_type2_radii(Convention::Corrected, ctx)?, catalog::q13()),
                (13, ConventionArg::Printed) => (tridecagon_type2_radii(Convention::Printed, ctx)?, catalog::q13()),
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "root ladders exist for p = 7 and p = 13, got {p}"
                    )))
                }
            };
            let block = LadderBlock::from_ladder(&ladder, &reference, ctx);
            writeln!(out, "p = {p}, convention {}", block.convention).map_err(io)?;
            for (i, s) in ladder.s_values.iter().enumerate() {
                writeln!(out, "s{i} = {s}").map_err(io)?;
            }
            for (k, r) in ladder.radii.iter().enumerate() {
                writeln!(out, "r{k} = {r}").map_err(io)?;
            }
            writeln!(out, "max |{}| over s = {}", block.reference_polynomial, block.max_s_residual).map_err(io)?;
            let mut doc = ReportDocument::new(ctx);
            doc.ladder = Some(block);
            write_json(json.as_ref(), &doc)?;
            Ok(EXIT_OK)
        }
        Command::Errata { json } => {
            let report = resolve_errata(ctx)?;
            for f in &report.findings {
                writeln!(out, "{} {}: {}", f.id, f.subject, f.verdict).map_err(io)?;
                writeln!(out, "  printed: {}", f.printed_form).map_err(io)?;
                writeln!(out, "  derived: {}", f.derived_form).map_err(io)?;
                writeln!(out, "  oracle:  {}", f.oracle).map_err(io)?;
                writeln!(out, "  {}", f.detail).map_err(io)?;
            }
            write_json(json.as_ref(), &ReportDocument::new(ctx).with_errata(&report))?;
            Ok(EXIT_OK)
        }
        Command::Generalize { p, coset, json, svg } => {
            let decomposition = order3_cosets(p)?;
            let profile = constructibility_profile(p)?;
            let constructions = match coset {
                Some(i) => {
                    let c = decomposition.cosets.get(i).ok_or(Error::IndexOutOfRange {
                        index: i,
                        len: decomposition.cosets.len(),
                    })?;
                    vec![cardano_from_coset(p, c, ctx)?]
                }
                None => cardano_all(p, ctx)?,
            };
            writeln!(out, "p = {p}, subgroup {:?}, {} cosets", decomposition.subgroup, decomposition.cosets.len()).map_err(io)?;
            writeln!(
                out,
                "(p-1)/3 = {} = 2^{} 3^{} {}, tower-feasible: {} ({})",
                profile.coset_count,
                profile.two_exponent,
                profile.three_exponent,
                profile.remainder,
                profile.tower_feasible,
                crate::general::ConstructibilityProfile::NOTE
            )
            .map_err(io)?;
            for g in &constructions {
                writeln!(
                    out,
                    "coset {:?}: center {}, R1 = {}, R2 = {}, theta = {} deg, residual {}",
                    g.coset,
                    g.center,
                    g.r1,
                    g.r2,
                    to_degrees(&g.theta),
                    g.residual.to_sci(6)
                )
                .map_err(io)?;
            }
            let mut doc = ReportDocument::new(ctx);
            doc.general = constructions.iter().map(GeneralBlock::from_general).collect();
            doc.profile = Some(ProfileBlock::from_profile(&profile));
            write_json(json.as_ref(), &doc)?;
            if let Some(path) = svg {
                if coset.is_none() {
                    return Err(Error::InvalidArgument("--svg with generalize needs --coset".into()));
                }
                let fig = Figure::from_general(&constructions[0], ctx)?;
                write_file(&path, &render_svg(&fig, &RenderOptions::default())?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Render { sel, out: path } => {
            let tc = build(&sel.selector(), ctx)?;
            write_file(&path, &render_svg(&Figure::from_triangle(&tc)?, &RenderOptions::default())?)?;
            writeln!(out, "wrote {}", path.display()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kinds_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::Internal("x".into())), EXIT_INTERNAL);
        assert_eq!(exit_code(&Error::InvalidArgument("x".into())), EXIT_INVALID);
        assert_eq!(exit_code(&Error::Domain("x".into())), EXIT_INVALID);
        assert_eq!(exit_code(&Error::IndexOutOfRange { index: 1, len: 0 }), EXIT_INVALID);
        assert_eq!((EXIT_OK, EXIT_VERIFY_FAILED), (0, 2));
    }
}
