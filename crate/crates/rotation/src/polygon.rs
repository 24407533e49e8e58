use forcing_geometry::{ConvexPolygon, Vec2};

/// Rotation-set estimate: a convex polygon, possibly degenerate (a segment
/// or a single vector).
#[derive(Debug, Clone, PartialEq)]
pub struct RotationPolygon {
    hull: ConvexPolygon,
}

pub(crate) const HAUSDORFF_SAMPLES: usize = 512;

impl RotationPolygon {
    pub fn from_points(points: &[Vec2]) -> Self {
        RotationPolygon { hull: ConvexPolygon::hull_of(points) }
    }

    pub fn vertices(&self) -> &[Vec2] {
        self.hull.vertices()
    }

    pub fn is_point(&self) -> bool {
        self.vertices().len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices().len() == 2
    }

    /// Distance from a vector to the filled polygon (0 inside).
    pub fn distance(&self, v: Vec2) -> f64 {
        self.hull.distance(v)
    }

    pub fn contains(&self, v: Vec2, tol: f64) -> bool {
        self.hull.contains(v, tol)
    }

    pub fn contains_disk(&self, center: Vec2, radius: f64) -> bool {
        self.hull.contains_disk(center, radius)
    }

    /// Hausdorff distance via 512-point boundary sampling plus exact
    /// point-to-polygon distances.
    pub fn hausdorff(&self, other: &RotationPolygon) -> f64 {
        self.hull.hausdorff(&other.hull, HAUSDORFF_SAMPLES)
    }

    pub fn scale(&self, k: f64) -> RotationPolygon {
        RotationPolygon { hull: self.hull.scale(k) }
    }

    pub fn translate(&self, v: Vec2) -> RotationPolygon {
        RotationPolygon { hull: self.hull.translate(v) }
    }

    pub fn linear_image(&self, m: [[f64; 2]; 2]) -> RotationPolygon {
        RotationPolygon { hull: self.hull.linear_image(m) }
    }

    /// Edges as vertex pairs (one edge for a segment, none for a point).
    pub fn edges(&self) -> Vec<(Vec2, Vec2)> {
        self.hull.edges()
    }

    /// Largest vertex-to-vertex distance; 0 for a point.
    pub fn diameter(&self) -> f64 {
        let vs = self.vertices();
        let mut d = 0.0f64;
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                d = d.max(a.dist(*b));
            }
        }
        d
    }
}
