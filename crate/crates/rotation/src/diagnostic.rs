use forcing_geometry::Vec2;
use serde::Serialize;

use crate::RotationPolygon;

const SLOPE_TOL: f64 = 1e-9;

/// Best rational approximation p/q with q <= max_den, by continued
/// fractions. Returns (p, q, |x - p/q|).
pub fn rational_approximation(x: f64, max_den: u64) -> (i64, u64, f64) {
    let mut best = (x.round() as i64, 1u64, (x - x.round()).abs());
    let (mut h0, mut k0): (i128, i128) = (1, 0);
    let (mut h1, mut k1): (i128, i128) = (x.floor() as i128, 1);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        let approx = h1 as f64 / k1 as f64;
        let err = (x - approx).abs();
        if (k1 as u64) <= max_den && err < best.2 {
            best = (h1 as i64, k1 as u64, err);
        }
        if frac.abs() < 1e-18 {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        let a = a as i128;
        let h2 = a * h1 + h0;
        let k2 = a * k1 + k0;
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
        if k1 as u64 > max_den && k0 as u64 > max_den {
            break;
        }
    }
    best
}

fn is_rational(x: f64, max_den: u64, tol: f64) -> Option<(i64, u64)> {
    let (p, q, err) = rational_approximation(x, max_den);
    if err <= tol {
        Some((p, q))
    } else {
        None
    }
}

/// A polygon edge flagged as numerically suspicious: its slope is not a
/// rational with small denominator, yet its interior holds a rational point.
/// True rotation-set boundaries never look like this, so flags indicate
/// estimation artifacts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlaggedEdge {
    pub from: [f64; 2],
    pub to: [f64; 2],
    pub slope: f64,
    /// Interior point with both coordinates rational (denominators <= D).
    pub witness: [f64; 2],
    pub witness_fractions: [(i64, u64); 2],
}

/// Flag edges whose slope fails the rational test at denominator bound
/// `max_den` while their interior contains a point with both coordinates
/// rational at the same bound. Vertical edges count as rational slope.
pub fn boundary_diagnostic(polygon: &RotationPolygon, max_den: u64) -> Vec<FlaggedEdge> {
    let mut flags = Vec::new();
    for (a, b) in polygon.edges() {
        let dx = b.x - a.x;
        let dy = b.y - a.y;
        if dx.abs() < 1e-12 {
            continue; // vertical: slope treated as rational
        }
        let slope = dy / dx;
        if is_rational(slope, max_den, SLOPE_TOL).is_some() {
            continue;
        }
        if let Some(flag) = interior_rational_point(a, b, slope, max_den) {
            flags.push(flag);
        }
    }
    flags
}

fn interior_rational_point(a: Vec2, b: Vec2, slope: f64, max_den: u64) -> Option<FlaggedEdge> {
    let (x_lo, x_hi) = if a.x < b.x { (a.x, b.x) } else { (b.x, a.x) };
    let margin = 1e-12;
    for den in 1..=max_den {
        let k_lo = (x_lo * den as f64).floor() as i64;
        let k_hi = (x_hi * den as f64).ceil() as i64;
        for k in k_lo..=k_hi {
            let x = k as f64 / den as f64;
            if x <= x_lo + margin || x >= x_hi - margin {
                continue;
            }
            let y = a.y + slope * (x - a.x);
            if let Some((py, qy)) = is_rational(y, max_den, SLOPE_TOL) {
                return Some(FlaggedEdge {
                    from: [a.x, a.y],
                    to: [b.x, b.y],
                    slope,
                    witness: [x, y],
                    witness_fractions: [(k, den), (py, qy)],
                });
            }
        }
    }
    None
}
