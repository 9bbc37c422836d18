//! SVG figures, JSON reports and the command-line interface.

pub mod cli;
mod report;
mod svg;

pub use report::{
    parse_report, report_json, ConstructionBlock, CosetBlock, FitBlock, GeneralBlock, LadderBlock,
    ProfileBlock, ReportDocument, TriangleBlock, VerificationBlock, REPORT_DIGITS, SCHEMA_VERSION,
};
pub use svg::{render_svg, Figure, RenderOptions, VERTEX_COLORS};
