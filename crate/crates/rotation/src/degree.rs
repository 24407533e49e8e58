use forcing_geometry::{Rect, Vec2};
use serde::Serialize;

use crate::{RotationError, TorusLift};

const VANISHING_THRESHOLD: f64 = 1e-9;
const SAMPLE_CAP: usize = 1 << 20;
const TARGET_DIAMETER: f64 = 1e-10;
const RESIDUAL_BOUND: f64 = 1e-8;
const MAX_DEPTH: usize = 40;

/// Winding-number certificate for the displacement field z -> g^q(z) - z - p
/// on a box boundary. Nonzero degree certifies a solution inside.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeCertificate {
    pub box_min: [f64; 2],
    pub box_max: [f64; 2],
    pub q: usize,
    pub p: [i64; 2],
    pub degree: i64,
    /// Minimum |F| over the boundary samples; the field is certified
    /// nonvanishing on the sampled boundary above this level.
    pub min_boundary_norm: f64,
    pub samples: usize,
}

/// Integer winding number of the boundary loop of z -> g^q(z) - z - p,
/// sampled adaptively until consecutive field directions turn less than
/// pi/2 (doubling refinement, capped).
pub fn degree_on_box(
    g: &TorusLift,
    q: usize,
    p: [i64; 2],
    rect: Rect,
) -> Result<DegreeCertificate, RotationError> {
    if q == 0 {
        return Err(RotationError::ZeroIterations);
    }
    let gq = g.power(q);
    let field = |z: Vec2| gq.apply(z) - z - Vec2::new(p[0] as f64, p[1] as f64);
    let perimeter = 2.0 * (rect.width() + rect.height());

    let mut samples = 64usize;
    loop {
        let mut min_norm = f64::INFINITY;
        let mut values = Vec::with_capacity(samples);
        for k in 0..samples {
            let s = perimeter * k as f64 / samples as f64;
            let v = field(rect.boundary_point(s));
            min_norm = min_norm.min(v.norm());
            values.push(v);
        }
        if min_norm < VANISHING_THRESHOLD {
            return Err(RotationError::IndeterminateBoundary {
                norm: min_norm,
                threshold: VANISHING_THRESHOLD,
            });
        }
        let mut total = 0.0f64;
        let mut max_turn = 0.0f64;
        for k in 0..samples {
            let a = values[k];
            let b = values[(k + 1) % samples];
            let turn = a.cross(b).atan2(a.dot(b));
            max_turn = max_turn.max(turn.abs());
            total += turn;
        }
        let winding = total / (2.0 * std::f64::consts::PI);
        if max_turn < std::f64::consts::FRAC_PI_2 && (winding - winding.round()).abs() < 0.25 {
            return Ok(DegreeCertificate {
                box_min: [rect.min.x, rect.min.y],
                box_max: [rect.max.x, rect.max.y],
                q,
                p,
                degree: winding.round() as i64,
                min_boundary_norm: min_norm,
                samples,
            });
        }
        samples *= 2;
        if samples > SAMPLE_CAP {
            return Err(RotationError::SamplingCapReached { cap: SAMPLE_CAP });
        }
    }
}

/// Result of the recursive degree-guided search.
#[derive(Debug, Clone, PartialEq)]
pub enum FindOutcome {
    Found {
        point: Vec2,
        residual: f64,
        /// Nested nonzero-degree certificates from seed box to the final one.
        certificates: Vec<DegreeCertificate>,
    },
    Failure {
        /// Certificates computed along the way (all degrees zero, or the
        /// boundary could not be resolved).
        certificates: Vec<DegreeCertificate>,
    },
}

impl FindOutcome {
    pub fn found(&self) -> Option<(Vec2, f64)> {
        match self {
            FindOutcome::Found { point, residual, .. } => Some((*point, *residual)),
            FindOutcome::Failure { .. } => None,
        }
    }

    pub fn certificates(&self) -> &[DegreeCertificate] {
        match self {
            FindOutcome::Found { certificates, .. } | FindOutcome::Failure { certificates } => {
                certificates
            }
        }
    }
}

/// Search for z with g^q(z) = z + p by recursive box subdivision guided by
/// the boundary degree. Indeterminate boundaries are retried with up to 8
/// half-cell offsets before giving up on that box.
pub fn find_periodic(
    g: &TorusLift,
    p: [i64; 2],
    q: usize,
    seed: Rect,
) -> Result<FindOutcome, RotationError> {
    if q == 0 {
        return Err(RotationError::ZeroIterations);
    }
    let gq = g.power(q);
    let residual_of = |z: Vec2| (gq.apply(z) - z - Vec2::new(p[0] as f64, p[1] as f64)).norm();

    // Degenerate case: the equation holds identically (e.g. a rational
    // translation hitting its own vector). No meaningful degree exists; any
    // point solves.
    let center = seed.center();
    if residual_of(center) < 1e-12 {
        return Ok(FindOutcome::Found {
            point: center,
            residual: residual_of(center),
            certificates: Vec::new(),
        });
    }

    let mut trail: Vec<DegreeCertificate> = Vec::new();
    let found = search(g, q, p, seed, 0, &mut trail, &residual_of)?;
    Ok(match found {
        Some(point) => {
            let residual = residual_of(point);
            if residual < RESIDUAL_BOUND {
                // keep the nested nonzero chain; zero-degree siblings were
                // only ever rejected
                trail.retain(|c| c.degree != 0);
                FindOutcome::Found { point, residual, certificates: trail }
            } else {
                FindOutcome::Failure { certificates: trail }
            }
        }
        None => FindOutcome::Failure { certificates: trail },
    })
}

fn search(
    g: &TorusLift,
    q: usize,
    p: [i64; 2],
    rect: Rect,
    depth: usize,
    trail: &mut Vec<DegreeCertificate>,
    residual_of: &dyn Fn(Vec2) -> f64,
) -> Result<Option<Vec2>, RotationError> {
    if depth > MAX_DEPTH {
        return Ok(None);
    }
    let cert = match degree_with_retries(g, q, p, rect) {
        Some(c) => c,
        None => return Ok(None),
    };
    let degree = cert.degree;
    trail.push(cert);
    if degree == 0 {
        return Ok(None);
    }
    if rect.diameter() < TARGET_DIAMETER {
        return Ok(Some(rect.center()));
    }
    let c = rect.center();
    let quads = [
        Rect::new(rect.min, c),
        Rect::new(Vec2::new(c.x, rect.min.y), Vec2::new(rect.max.x, c.y)),
        Rect::new(Vec2::new(rect.min.x, c.y), Vec2::new(c.x, rect.max.y)),
        Rect::new(c, rect.max),
    ];
    for quad in quads {
        if let Some(point) = search(g, q, p, quad, depth + 1, trail, residual_of)? {
            return Ok(Some(point));
        }
    }
    // Degree was nonzero but no quadrant resolved (zero can sit on the cut
    // lines). Fall back to the center if it already satisfies the residual.
    let center = rect.center();
    if residual_of(center) < RESIDUAL_BOUND {
        return Ok(Some(center));
    }
    Ok(None)
}

fn degree_with_retries(g: &TorusLift, q: usize, p: [i64; 2], rect: Rect) -> Option<DegreeCertificate> {
    match degree_on_box(g, q, p, rect) {
        Ok(c) => Some(c),
        Err(RotationError::IndeterminateBoundary { .. }) => {
            let dx = rect.width() / 4.0;
            let dy = rect.height() / 4.0;
            let offsets = [
                (dx, 0.0),
                (-dx, 0.0),
                (0.0, dy),
                (0.0, -dy),
                (dx, dy),
                (dx, -dy),
                (-dx, dy),
                (-dx, -dy),
            ];
            for (ox, oy) in offsets {
                let shifted = Rect::new(
                    Vec2::new(rect.min.x + ox, rect.min.y + oy),
                    Vec2::new(rect.max.x + ox, rect.max.y + oy),
                );
                if let Ok(c) = degree_on_box(g, q, p, shifted) {
                    return Some(c);
                }
            }
            None
        }
        Err(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Primitive, Profile};

    fn coupled_sine_shear() -> TorusLift {
        TorusLift::new(vec![
            Primitive::Hshear { profile: Profile::Sine, amplitude: 0.4 },
            Primitive::Vshear { profile: Profile::Sine, amplitude: 0.4 },
        ])
        .unwrap()
    }

    #[test]
    fn constant_field_has_degree_zero() {
        let g = TorusLift::translation([0.3, 0.0]);
        let cert = degree_on_box(&g, 1, [0, 0], Rect::from_center(Vec2::ZERO, 0.5)).unwrap();
        assert_eq!(cert.degree, 0);
        assert!(cert.min_boundary_norm > 0.29);
    }

    #[test]
    fn identity_with_shift_target_has_degree_zero() {
        let g = TorusLift::new(vec![]).unwrap();
        let cert = degree_on_box(&g, 1, [1, 0], Rect::from_center(Vec2::ZERO, 1.0)).unwrap();
        assert_eq!(cert.degree, 0);
        assert!((cert.min_boundary_norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn coupled_shear_fixed_point_has_nonzero_degree() {
        let g = coupled_sine_shear();
        let cert = degree_on_box(&g, 1, [0, 0], Rect::from_center(Vec2::ZERO, 0.1)).unwrap();
        assert_ne!(cert.degree, 0);
    }

    #[test]
    fn vanishing_boundary_is_reported() {
        // fixed point of the coupled shear at the origin: a box with the
        // origin on its boundary cannot be resolved
        let g = coupled_sine_shear();
        let rect = Rect::new(Vec2::ZERO, Vec2::new(0.2, 0.2));
        let err = degree_on_box(&g, 1, [0, 0], rect).unwrap_err();
        assert!(matches!(err, RotationError::IndeterminateBoundary { .. }));
    }

    #[test]
    fn find_periodic_locates_origin_fixed_point() {
        let g = coupled_sine_shear();
        let out = find_periodic(&g, [0, 0], 1, Rect::from_center(Vec2::new(0.03, -0.04), 0.2))
            .unwrap();
        let (point, residual) = out.found().expect("fixed point");
        assert!(residual < 1e-8, "residual {residual}");
        assert!(point.norm() < 1e-6, "point ({}, {})", point.x, point.y);
    }

    #[test]
    fn find_periodic_trivial_translation_case() {
        // g^2 = z + (1, 0) identically: any box works, residual ~ 0
        let g = TorusLift::translation([0.5, 0.0]);
        let out = find_periodic(&g, [1, 0], 2, Rect::from_center(Vec2::new(0.2, 0.7), 0.3)).unwrap();
        match out {
            FindOutcome::Found { residual, .. } => assert!(residual < 1e-12),
            FindOutcome::Failure { .. } => panic!("expected success"),
        }
    }

    #[test]
    fn find_periodic_negative_control() {
        let g = TorusLift::translation([0.5, 0.0]);
        let out = find_periodic(&g, [0, 1], 1, Rect::from_center(Vec2::ZERO, 1.0)).unwrap();
        match out {
            FindOutcome::Failure { certificates } => {
                assert!(!certificates.is_empty());
                assert!(certificates.iter().all(|c| c.degree == 0));
            }
            FindOutcome::Found { .. } => panic!("no solution exists"),
        }
    }
}
