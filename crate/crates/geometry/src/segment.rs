use crate::vec2::orient;
use crate::Vec2;

/// Result of intersecting two closed segments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegIntersection {
    None,
    /// Transverse or touching intersection at a single point.
    Point(Vec2),
    /// Collinear segments sharing more than a point.
    Overlap(Vec2, Vec2),
}

/// Intersection of segments [a1,a2] and [b1,b2] with tolerance `eps` for
/// near-parallel and endpoint-touching cases. Collinear overlap is reported.
pub fn segment_intersection(a1: Vec2, a2: Vec2, b1: Vec2, b2: Vec2, eps: f64) -> SegIntersection {
    let da = a2 - a1;
    let db = b2 - b1;
    let denom = da.cross(db);
    let scale = da.norm().max(db.norm()).max(1.0);

    if denom.abs() > eps * scale * scale {
        let t = (b1 - a1).cross(db) / denom;
        let u = (b1 - a1).cross(da) / denom;
        let tol_t = eps / da.norm().max(eps);
        let tol_u = eps / db.norm().max(eps);
        if t >= -tol_t && t <= 1.0 + tol_t && u >= -tol_u && u <= 1.0 + tol_u {
            return SegIntersection::Point(a1 + da * t.clamp(0.0, 1.0));
        }
        return SegIntersection::None;
    }

    // near-parallel: either disjoint, or collinear with possible overlap
    if dist_point_line(b1, a1, a2) > eps {
        return SegIntersection::None;
    }
    // collinear: project onto da
    let axis = if da.norm_sq() >= db.norm_sq() { da } else { db };
    let axis = axis.normalized();
    if axis == Vec2::ZERO {
        // both segments degenerate
        return if a1.dist(b1) <= eps {
            SegIntersection::Point(a1)
        } else {
            SegIntersection::None
        };
    }
    let proj = |p: Vec2| (p - a1).dot(axis);
    let (mut s0, mut s1) = (proj(a1), proj(a2));
    if s0 > s1 {
        std::mem::swap(&mut s0, &mut s1);
    }
    let (mut t0, mut t1) = (proj(b1), proj(b2));
    if t0 > t1 {
        std::mem::swap(&mut t0, &mut t1);
    }
    let lo = s0.max(t0);
    let hi = s1.min(t1);
    if lo > hi + eps {
        return SegIntersection::None;
    }
    let p_lo = a1 + axis * lo;
    let p_hi = a1 + axis * hi;
    if (hi - lo).abs() <= eps {
        SegIntersection::Point(p_lo)
    } else {
        SegIntersection::Overlap(p_lo, p_hi)
    }
}

fn dist_point_line(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    let n = d.norm();
    if n == 0.0 {
        return p.dist(a);
    }
    (orient(a, b, p) / n).abs()
}

/// Distance from a point to a closed segment.
pub fn dist_point_segment(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    let len_sq = d.norm_sq();
    if len_sq == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(d) / len_sq).clamp(0.0, 1.0);
    p.dist(a + d * t)
}

/// Distance between two closed segments.
pub fn dist_segment_segment(a1: Vec2, a2: Vec2, b1: Vec2, b2: Vec2) -> f64 {
    if let SegIntersection::Point(_) | SegIntersection::Overlap(_, _) =
        segment_intersection(a1, a2, b1, b2, 0.0)
    {
        return 0.0;
    }
    dist_point_segment(a1, b1, b2)
        .min(dist_point_segment(a2, b1, b2))
        .min(dist_point_segment(b1, a1, a2))
        .min(dist_point_segment(b2, a1, a2))
}

/// Distance from a point to a polyline (chain of vertices).
pub fn polyline_distance(p: Vec2, chain: &[Vec2]) -> f64 {
    if chain.is_empty() {
        return f64::INFINITY;
    }
    if chain.len() == 1 {
        return p.dist(chain[0]);
    }
    chain
        .windows(2)
        .map(|w| dist_point_segment(p, w[0], w[1]))
        .fold(f64::INFINITY, f64::min)
}

/// Minimum distance between two polylines.
pub fn polyline_min_distance(a: &[Vec2], b: &[Vec2]) -> f64 {
    if a.len() < 2 || b.len() < 2 {
        let mut best = f64::INFINITY;
        for &p in a {
            best = best.min(polyline_distance(p, b));
        }
        for &p in b {
            best = best.min(polyline_distance(p, a));
        }
        return best;
    }
    let mut best = f64::INFINITY;
    for sa in a.windows(2) {
        for sb in b.windows(2) {
            best = best.min(dist_segment_segment(sa[0], sa[1], sb[0], sb[1]));
            if best == 0.0 {
                return 0.0;
            }
        }
    }
    best
}

pub fn polyline_length(chain: &[Vec2]) -> f64 {
    chain.windows(2).map(|w| w[0].dist(w[1])).sum()
}

/// Point at arclength `s` from the start of the chain, clamped to the ends.
pub fn polyline_point_at(chain: &[Vec2], s: f64) -> Vec2 {
    assert!(!chain.is_empty());
    if s <= 0.0 {
        return chain[0];
    }
    let mut acc = 0.0;
    for w in chain.windows(2) {
        let len = w[0].dist(w[1]);
        if acc + len >= s {
            let t = if len == 0.0 { 0.0 } else { (s - acc) / len };
            return w[0].lerp(w[1], t);
        }
        acc += len;
    }
    *chain.last().unwrap()
}
