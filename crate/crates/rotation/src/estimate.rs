use forcing_geometry::{convex_hull, Vec2};
use rayon::prelude::*;

use crate::{RotationError, RotationPolygon, TorusLift};

/// Explicit truncation of the double limit defining the rotation set: an
/// m x m grid of starting points in [0,1)^2, displacements recorded for
/// iterate counts in (warmup, total].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EstimateBudget {
    pub grid: usize,
    pub warmup: usize,
    pub total: usize,
}

impl EstimateBudget {
    pub fn new(grid: usize, warmup: usize, total: usize) -> Result<Self, RotationError> {
        if grid < 2 {
            return Err(RotationError::GridTooSmall);
        }
        if warmup >= total {
            return Err(RotationError::BadWindow { warmup, total });
        }
        Ok(EstimateBudget { grid, warmup, total })
    }
}

/// Average displacement per step: (g^n(z) - z) / n.
pub fn displacement(g: &TorusLift, z: Vec2, n: usize) -> Result<Vec2, RotationError> {
    if n == 0 {
        return Err(RotationError::ZeroIterations);
    }
    Ok((g.iterate(z, n) - z) / n as f64)
}

/// Convex hull of displacements over the budget's grid and iterate window.
/// Deterministic for fixed inputs: rows are swept in order and merged in
/// order, and the final hull is a pure function of the collected points.
pub fn rotation_set_estimate(g: &TorusLift, budget: EstimateBudget) -> RotationPolygon {
    let m = budget.grid;
    let row_hulls: Vec<Vec<Vec2>> = (0..m)
        .into_par_iter()
        .map(|i| {
            let x = i as f64 / m as f64;
            let mut acc = HullAccumulator::new();
            for j in 0..m {
                let z = Vec2::new(x, j as f64 / m as f64);
                let mut cur = z;
                for step in 1..=budget.total {
                    cur = g.apply(cur);
                    if step > budget.warmup {
                        acc.push((cur - z) / step as f64);
                    }
                }
            }
            acc.finish()
        })
        .collect();
    let mut all = Vec::new();
    for h in row_hulls {
        all.extend(h);
    }
    RotationPolygon::from_points(&all)
}

/// Streaming hull: buffers points and periodically collapses to the hull so
/// memory stays proportional to the hull size, not the stream length.
struct HullAccumulator {
    buf: Vec<Vec2>,
}

const HULL_CHUNK: usize = 4096;

impl HullAccumulator {
    fn new() -> Self {
        HullAccumulator { buf: Vec::with_capacity(HULL_CHUNK + 64) }
    }

    fn push(&mut self, p: Vec2) {
        self.buf.push(p);
        if self.buf.len() >= HULL_CHUNK {
            self.buf = convex_hull(&self.buf);
        }
    }

    fn finish(self) -> Vec<Vec2> {
        convex_hull(&self.buf)
    }
}

/// Hausdorff distance between the estimate for g^k and k times the estimate
/// for g, at matched budgets. k = 1 compares two identical computations and
/// is exactly 0.
pub fn check_homogeneity(g: &TorusLift, k: usize, budget: EstimateBudget) -> Result<f64, RotationError> {
    if k == 0 {
        return Err(RotationError::ZeroIterations);
    }
    let lhs = rotation_set_estimate(&g.power(k), budget);
    let rhs = rotation_set_estimate(g, budget).scale(k as f64);
    Ok(lhs.hausdorff(&rhs))
}

/// For each n in `n_list`, the max over grid points of the distance from the
/// n-step displacement to the scaled rotation polygon n * rho.
pub fn deviation_profile(
    g: &TorusLift,
    grid: usize,
    n_list: &[usize],
    rho: &RotationPolygon,
) -> Result<Vec<(usize, f64)>, RotationError> {
    if grid < 2 {
        return Err(RotationError::GridTooSmall);
    }
    if n_list.is_empty() {
        return Ok(Vec::new());
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) || n_list[0] == 0 {
        return Err(RotationError::ZeroIterations);
    }
    let n_max = *n_list.last().unwrap();
    let scaled: Vec<(usize, RotationPolygon)> =
        n_list.iter().map(|&n| (n, rho.scale(n as f64))).collect();
    let sups: Vec<Vec<f64>> = (0..grid)
        .into_par_iter()
        .map(|i| {
            let x = i as f64 / grid as f64;
            let mut local = vec![0.0f64; n_list.len()];
            for j in 0..grid {
                let z = Vec2::new(x, j as f64 / grid as f64);
                let mut cur = z;
                let mut mark = 0usize;
                for step in 1..=n_max {
                    cur = g.apply(cur);
                    if mark < n_list.len() && step == n_list[mark] {
                        let d = scaled[mark].1.distance(cur - z);
                        if d > local[mark] {
                            local[mark] = d;
                        }
                        mark += 1;
                    }
                }
            }
            local
        })
        .collect();
    let mut out: Vec<(usize, f64)> = n_list.iter().map(|&n| (n, 0.0)).collect();
    for local in sups {
        for (slot, v) in out.iter_mut().zip(local) {
            slot.1 = slot.1.max(v);
        }
    }
    Ok(out)
}

/// Weighted point mass distribution on the torus.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalMeasure {
    points: Vec<(Vec2, f64)>,
}

impl EmpiricalMeasure {
    pub fn new(points: Vec<(Vec2, f64)>) -> Result<Self, RotationError> {
        let sum: f64 = points.iter().map(|(_, w)| *w).sum();
        if points.iter().any(|(_, w)| *w < 0.0) || (sum - 1.0).abs() > 1e-12 {
            return Err(RotationError::BadMeasure { sum });
        }
        Ok(EmpiricalMeasure { points })
    }

    /// Uniform measure on an m x m grid.
    pub fn uniform_grid(m: usize) -> Self {
        let w = 1.0 / (m * m) as f64;
        let mut points = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                points.push((Vec2::new(i as f64 / m as f64, j as f64 / m as f64), w));
            }
        }
        EmpiricalMeasure { points }
    }

    pub fn dirac(z: Vec2) -> Self {
        EmpiricalMeasure { points: vec![(z, 1.0)] }
    }

    pub fn points(&self) -> &[(Vec2, f64)] {
        &self.points
    }
}

/// Rotation vector of a measure: weighted average one-step displacement.
pub fn measure_rotation(g: &TorusLift, mu: &EmpiricalMeasure) -> Vec2 {
    let mut acc = Vec2::ZERO;
    for &(z, w) in mu.points() {
        acc += (g.apply(z) - z) * w;
    }
    acc
}
