use crate::Vec2;

/// Axis-aligned rectangle, used as scenario bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub min: Vec2,
    pub max: Vec2,
}

impl Rect {
    pub fn new(min: Vec2, max: Vec2) -> Self {
        assert!(min.x <= max.x && min.y <= max.y, "degenerate rect");
        Rect { min, max }
    }

    pub fn from_center(center: Vec2, half: f64) -> Self {
        Rect::new(
            Vec2::new(center.x - half, center.y - half),
            Vec2::new(center.x + half, center.y + half),
        )
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn diameter(&self) -> f64 {
        (self.max - self.min).norm()
    }

    pub fn center(&self) -> Vec2 {
        (self.min + self.max) * 0.5
    }

    pub fn contains(&self, p: Vec2) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn contains_strict(&self, p: Vec2, margin: f64) -> bool {
        p.x >= self.min.x + margin
            && p.x <= self.max.x - margin
            && p.y >= self.min.y + margin
            && p.y <= self.max.y - margin
    }

    pub fn expanded(&self, by: f64) -> Rect {
        Rect::new(
            Vec2::new(self.min.x - by, self.min.y - by),
            Vec2::new(self.max.x + by, self.max.y + by),
        )
    }

    /// Smallest rect containing `self` and `p`.
    pub fn including(&self, p: Vec2) -> Rect {
        Rect::new(
            Vec2::new(self.min.x.min(p.x), self.min.y.min(p.y)),
            Vec2::new(self.max.x.max(p.x), self.max.y.max(p.y)),
        )
    }

    /// Corners in counterclockwise order starting from `min`.
    pub fn corners(&self) -> [Vec2; 4] {
        [
            self.min,
            Vec2::new(self.max.x, self.min.y),
            self.max,
            Vec2::new(self.min.x, self.max.y),
        ]
    }

    /// Perimeter position of a boundary point, counterclockwise from `min`,
    /// in [0, perimeter). Points are snapped to the nearest boundary edge.
    pub fn boundary_coordinate(&self, p: Vec2) -> f64 {
        let w = self.width();
        let h = self.height();
        // distances to the four edges
        let d_bottom = (p.y - self.min.y).abs();
        let d_right = (p.x - self.max.x).abs();
        let d_top = (p.y - self.max.y).abs();
        let d_left = (p.x - self.min.x).abs();
        let m = d_bottom.min(d_right).min(d_top).min(d_left);
        if m == d_bottom {
            (p.x - self.min.x).clamp(0.0, w)
        } else if m == d_right {
            w + (p.y - self.min.y).clamp(0.0, h)
        } else if m == d_top {
            w + h + (self.max.x - p.x).clamp(0.0, w)
        } else {
            2.0 * w + h + (self.max.y - p.y).clamp(0.0, h)
        }
    }

    /// Point on the boundary at the given counterclockwise perimeter coordinate.
    pub fn boundary_point(&self, s: f64) -> Vec2 {
        let w = self.width();
        let h = self.height();
        let total = 2.0 * (w + h);
        let mut s = s.rem_euclid(total);
        if s < w {
            return Vec2::new(self.min.x + s, self.min.y);
        }
        s -= w;
        if s < h {
            return Vec2::new(self.max.x, self.min.y + s);
        }
        s -= h;
        if s < w {
            return Vec2::new(self.max.x - s, self.max.y);
        }
        s -= w;
        Vec2::new(self.min.x, self.max.y - s)
    }

    /// Corner points strictly between two boundary coordinates, walking
    /// counterclockwise from `from` to `to`.
    pub fn corners_between(&self, from: f64, to: f64) -> Vec<Vec2> {
        let w = self.width();
        let h = self.height();
        let total = 2.0 * (w + h);
        let corner_coords = [0.0, w, w + h, 2.0 * w + h];
        let span = (to - from).rem_euclid(total);
        let mut out = Vec::new();
        for &c in &corner_coords {
            let rel = (c - from).rem_euclid(total);
            if rel > 1e-9 && rel < span - 1e-9 {
                out.push((rel, self.boundary_point(c)));
            }
        }
        out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        out.into_iter().map(|(_, p)| p).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_walk_roundtrip() {
        let r = Rect::new(Vec2::new(-1.0, -1.0), Vec2::new(1.0, 1.0));
        for i in 0..32 {
            let s = i as f64 * 0.25;
            let p = r.boundary_point(s);
            let s2 = r.boundary_coordinate(p);
            let total = 8.0;
            let diff = (s.rem_euclid(total) - s2).abs();
            assert!(diff < 1e-12 || (total - diff).abs() < 1e-12, "s={s} s2={s2}");
        }
    }

    #[test]
    fn corners_between_walks_ccw() {
        let r = Rect::new(Vec2::new(0.0, 0.0), Vec2::new(2.0, 2.0));
        // from midpoint of top edge to midpoint of bottom edge, CCW passes the
        // two left corners
        let from = r.boundary_coordinate(Vec2::new(1.0, 2.0));
        let to = r.boundary_coordinate(Vec2::new(1.0, 0.0));
        let cs = r.corners_between(from, to);
        assert_eq!(cs, vec![Vec2::new(0.0, 2.0), Vec2::new(0.0, 0.0)]);
    }
}
