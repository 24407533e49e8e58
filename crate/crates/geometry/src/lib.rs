//! Planar geometry primitives shared by the rotation and plane-dynamics crates.
//!
//! Everything works on `f64` with explicit tolerances passed by the caller;
//! nothing here tries to be exact. Exact arithmetic lives in the interval
//! crate, which has its own rational machinery.

mod convex;
mod rect;
mod segment;
mod vec2;

pub use convex::{convex_hull, ConvexPolygon};
pub use rect::Rect;
pub use segment::{
    dist_point_segment, dist_segment_segment, polyline_distance, polyline_length,
    polyline_min_distance, polyline_point_at, segment_intersection, SegIntersection,
};
pub use vec2::Vec2;
