//! Exhaustive searches over normalized decagon frames and octagon
//! configurations, unimodular canonical forms and a random generator of
//! polygons satisfying Bolle's edge conditions.

pub mod canonical;
pub mod decagon;
pub mod octagon;
pub mod random;

pub use canonical::{canonical_form, canonical_form_scaled};
pub use decagon::{enumerate_decagon_frames, search_decagon_frames, DecagonFrameCandidate, DecagonSearchReport};
pub use octagon::{enumerate_octagon_configs, search_octagon_configs, OctagonConfigCandidate, OctagonSearchReport};
pub use random::random_bolle_polygon;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("canonical form needs integral vertices, found {0}")]
    NonIntegralVertices(crate::vector::Point2),
    #[error("coordinate {0} too large for the canonical form")]
    Overflow(Rational),
    #[error("no valid polygon with m = {m} and bound {bound} after {attempts} attempts")]
    GenerationExhausted { m: usize, bound: i64, attempts: usize },
}
