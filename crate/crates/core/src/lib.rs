//! Exact rational geometry for multiple lattice tilings of the plane by
//! centrally symmetric convex polygons.

pub mod affine;
pub mod bolle;
pub mod error;
pub mod families;
pub mod format;
pub mod lattice;
pub mod oracle;
pub mod polygon;
pub mod rational;
pub mod region;
pub mod search;
pub mod vector;

pub use affine::AffineMap;
pub use error::{ConvexityDefect, DefectKind, GeometryError};
pub use lattice::Lattice2;
pub use polygon::{apply_map, validate_cs_polygon, CsPolygon};
pub use rational::{q, Rational};
pub use region::{clip, lattice_point_counts, ConvexRegion, Location, RegionKind};
pub use vector::{pt, Point2, Vec2};
