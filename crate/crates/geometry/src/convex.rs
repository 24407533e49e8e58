use crate::segment::dist_point_segment;
use crate::vec2::orient;
use crate::Vec2;

/// Convex hull by monotone chain. Returns vertices in counterclockwise order
/// with collinear points dropped. Degenerate inputs give a point or segment.
pub fn convex_hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    let n = pts.len();
    if n <= 2 {
        return pts;
    }
    let mut lower: Vec<Vec2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        // all points collinear; keep the two extremes
        let mut ends = vec![pts[0], pts[n - 1]];
        ends.dedup_by(|a, b| a.x == b.x && a.y == b.y);
        return ends;
    }
    lower
}

/// A convex polygon in counterclockwise order; may degenerate to a segment
/// (two vertices) or a point (one vertex).
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

impl ConvexPolygon {
    /// Hull of an arbitrary point cloud.
    pub fn hull_of(points: &[Vec2]) -> ConvexPolygon {
        ConvexPolygon { vertices: convex_hull(points) }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as vertex pairs; a segment yields one edge, a point none.
    pub fn edges(&self) -> Vec<(Vec2, Vec2)> {
        match self.vertices.len() {
            0 | 1 => Vec::new(),
            2 => vec![(self.vertices[0], self.vertices[1])],
            n => (0..n).map(|i| (self.vertices[i], self.vertices[(i + 1) % n])).collect(),
        }
    }

    /// Distance from a point to the polygon as a filled set: 0 inside.
    pub fn distance(&self, p: Vec2) -> f64 {
        match self.vertices.len() {
            0 => f64::INFINITY,
            1 => p.dist(self.vertices[0]),
            2 => dist_point_segment(p, self.vertices[0], self.vertices[1]),
            n => {
                let mut inside = true;
                let mut best = f64::INFINITY;
                for i in 0..n {
                    let a = self.vertices[i];
                    let b = self.vertices[(i + 1) % n];
                    if orient(a, b, p) < 0.0 {
                        inside = false;
                    }
                    best = best.min(dist_point_segment(p, a, b));
                }
                if inside {
                    0.0
                } else {
                    best
                }
            }
        }
    }

    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        self.distance(p) <= tol
    }

    /// True if the closed disk around `c` lies inside the polygon.
    pub fn contains_disk(&self, c: Vec2, radius: f64) -> bool {
        if self.vertices.len() < 3 {
            return false;
        }
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let d = (b - a).norm();
            if d == 0.0 {
                return false;
            }
            // signed distance of c inside edge (a,b); must exceed radius
            if orient(a, b, c) / d < radius {
                return false;
            }
        }
        true
    }

    /// Evenly spaced boundary samples (by arclength). A point gives itself.
    pub fn boundary_samples(&self, count: usize) -> Vec<Vec2> {
        match self.vertices.len() {
            0 => Vec::new(),
            1 => vec![self.vertices[0]],
            _ => {
                let mut loop_pts = self.vertices.clone();
                if self.vertices.len() > 2 {
                    loop_pts.push(self.vertices[0]);
                } else {
                    // segment: walk there and back
                    loop_pts.push(self.vertices[0]);
                }
                let total: f64 = loop_pts.windows(2).map(|w| w[0].dist(w[1])).sum();
                if total == 0.0 {
                    return vec![self.vertices[0]];
                }
                let mut out = Vec::with_capacity(count);
                for k in 0..count {
                    let s = total * k as f64 / count as f64;
                    out.push(crate::segment::polyline_point_at(&loop_pts, s));
                }
                out
            }
        }
    }

    /// Hausdorff distance between polygons as filled convex sets, computed
    /// from boundary samplings plus exact point-to-polygon distances.
    pub fn hausdorff(&self, other: &ConvexPolygon, samples: usize) -> f64 {
        let a = self.boundary_samples(samples);
        let b = other.boundary_samples(samples);
        let d_ab = a.iter().map(|&p| other.distance(p)).fold(0.0, f64::max);
        let d_ba = b.iter().map(|&p| self.distance(p)).fold(0.0, f64::max);
        d_ab.max(d_ba)
    }

    pub fn translate(&self, v: Vec2) -> ConvexPolygon {
        ConvexPolygon { vertices: self.vertices.iter().map(|&p| p + v).collect() }
    }

    pub fn scale(&self, k: f64) -> ConvexPolygon {
        let pts: Vec<Vec2> = self.vertices.iter().map(|&p| p * k).collect();
        // negative k flips orientation; re-hull to restore the invariant
        ConvexPolygon::hull_of(&pts)
    }

    /// Image under a linear map (re-hulled to keep counterclockwise order).
    pub fn linear_image(&self, m: [[f64; 2]; 2]) -> ConvexPolygon {
        let pts: Vec<Vec2> = self
            .vertices
            .iter()
            .map(|&p| Vec2::new(m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y))
            .collect();
        ConvexPolygon::hull_of(&pts)
    }
}
