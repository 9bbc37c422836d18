//! Independent checks that constructed points are polygon vertices, plus
//! triangle shape classification and the adjudication of printed formulas.

mod errata;
mod fit;
mod pipeline;
mod triangle;

pub use errata::{
    as_integer, ladder_coefficients, monic_from_roots, resolve_errata, ErratumId, ErratumReport,
    Finding, Verdict,
};
pub use fit::{
    coset_check, fit_to_polygon, gap_multiset, gap_multiset_of, label_orientation,
    oriented_coset_check, Orientation, PolygonFit, MAX_FIT_ORDER,
};
pub use pipeline::{verify_construction, CosetVerdict, Verification};
pub use triangle::{
    isosceles_report, pairing_search, similarity_classes, PairingSearch, SimilarityClasses,
    TriangleReport,
};
