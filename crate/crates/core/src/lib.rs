//! Guarding x-monotone orthogonal polygons with 2-transmitters.
//!
//! A k-transmitter is a guard that slides along an axis-parallel segment and
//! sees a point when the perpendicular from that point to the segment crosses
//! the polygon boundary at most `k` times. This crate provides:
//!
//! * exact integer ingestion of monotone orthogonal polygons ([`polygon`],
//!   [`profile`]) and a coordinate-compressed cell grid ([`grid`]);
//! * exact visibility regions as unions of grid cells ([`visibility`]);
//! * the reflex-extension candidate family, its domination pruning and the
//!   standard-form canonicalization of arbitrary solutions ([`candidates`]);
//! * the left-to-right 2-approximation ([`approx`]) and a brute-force
//!   minimum cover used as an optimality oracle ([`exact`]);
//! * fixtures and a seeded random polygon generator ([`instances`]).

pub mod approx;
pub mod candidates;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod grid;
pub mod instances;
pub mod polygon;
pub mod profile;
pub mod solution;
pub mod visibility;

pub use approx::{approximate_2transmitters, hv_finder, vh_finder, FinderResult};
pub use candidates::{
    augment_candidates, canonicalize_solution, extension_set, prune_dominated, reflex_vertices,
    standard_candidates, SegmentSet,
};
pub use error::{Error, PolygonError};
pub use exact::{exact_min_transmitters, ExactMode};
pub use geometry::{Interval, Orientation, Point, Transmitter};
pub use grid::CellGrid;
pub use instances::{fixture, random_monotone, Fixture};
pub use polygon::{parse_polygon, validate, OrthoPolygon};
pub use profile::SlabProfile;
pub use solution::{Solution, SolverKind};
pub use visibility::{Power, RectUnion, Scene};
