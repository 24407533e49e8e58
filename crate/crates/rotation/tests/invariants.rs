//! Structural invariants: equivariance, lift-change covariance, conjugacy
//! behavior of estimates, and degree soundness.

use forcing_geometry::{Rect, Vec2};
use forcing_rotation::{
    degree_on_box, find_periodic, rotation_set_estimate, EstimateBudget, FindOutcome, Primitive,
    Profile, TorusLift,
};

fn coupled_sine_shear() -> TorusLift {
    TorusLift::new(vec![
        Primitive::Hshear { profile: Profile::Sine, amplitude: 0.4 },
        Primitive::Vshear { profile: Profile::Sine, amplitude: 0.4 },
    ])
    .unwrap()
}

#[test]
fn equivariance_holds_for_all_constructed_lifts() {
    let lifts = vec![
        TorusLift::translation([0.3, -0.7]),
        coupled_sine_shear(),
        TorusLift::new(vec![
            Primitive::Vshear { profile: Profile::RaisedCosine, amplitude: 1.3 },
            Primitive::Translation { vector: [0.1, 0.9] },
            Primitive::Hshear { profile: Profile::Sine, amplitude: -0.6 },
        ])
        .unwrap(),
    ];
    for g in &lifts {
        assert!(g.equivariance_defect() <= 1e-12);
    }
}

#[test]
fn lift_change_covariance() {
    // estimate(g o T_v) = estimate(g) + v for integer v, at identical budgets
    let g = coupled_sine_shear();
    let budget = EstimateBudget::new(16, 2, 24).unwrap();
    let base = rotation_set_estimate(&g, budget);
    for v in [[1i64, 0], [0, 1], [-2, 1]] {
        let shifted = rotation_set_estimate(&g.with_deck(v), budget);
        let expected = base.translate(Vec2::new(v[0] as f64, v[1] as f64));
        let d = shifted.hausdorff(&expected);
        assert!(d <= 1e-9, "v = {v:?}, hausdorff = {d:e}");
    }
}

#[test]
fn conjugacy_by_integer_shear_acts_linearly_on_estimates() {
    let g = coupled_sine_shear();
    let budget = EstimateBudget::new(16, 2, 32).unwrap();
    let base = rotation_set_estimate(&g, budget);
    for k in [1i64, -1] {
        let conj = g.conjugate_by_int_hshear(k).unwrap();
        let est = rotation_set_estimate(&conj, budget);
        let expected = base.linear_image([[1.0, k as f64], [0.0, 1.0]]);
        let d = est.hausdorff(&expected);
        assert!(d <= 1e-6, "k = {k}, hausdorff = {d:e}");
    }
}

#[test]
fn degree_soundness_nonzero_implies_residual_passes() {
    let g = coupled_sine_shear();
    let seed = Rect::from_center(Vec2::new(0.02, -0.03), 0.15);
    let cert = degree_on_box(&g, 1, [0, 0], seed).unwrap();
    assert_ne!(cert.degree, 0);
    match find_periodic(&g, [0, 0], 1, seed).unwrap() {
        FindOutcome::Found { residual, certificates, .. } => {
            assert!(residual < 1e-8);
            assert!(certificates.iter().all(|c| c.degree != 0));
        }
        FindOutcome::Failure { .. } => panic!("nonzero degree must yield a point"),
    }
}

#[test]
fn degree_zero_when_field_provably_nonvanishing() {
    // Box away from the zero set: verify |F| > 0 on the whole box by a dense
    // grid plus a Lipschitz bound, then the boundary degree must vanish.
    let g = coupled_sine_shear();
    let q = 1;
    let p = [0i64, 0];
    let rect = Rect::new(Vec2::new(0.2, 0.2), Vec2::new(0.3, 0.3));
    let field = |z: Vec2| g.apply(z) - z - Vec2::new(p[0] as f64, p[1] as f64);

    // Lipschitz constant of F on the box: each shear has derivative bounds
    // 1 and 0.4 * 2pi; the composition's Jacobian entries are bounded by
    // (1 + 0.8 pi)^2, and subtracting the identity adds 1.
    let lip = (1.0 + 0.8 * std::f64::consts::PI) * (1.0 + 0.8 * std::f64::consts::PI) + 1.0;
    let n = 64usize;
    let cell = rect.width() / n as f64;
    let mut min_norm = f64::INFINITY;
    for i in 0..=n {
        for j in 0..=n {
            let z = Vec2::new(
                rect.min.x + rect.width() * i as f64 / n as f64,
                rect.min.y + rect.height() * j as f64 / n as f64,
            );
            min_norm = min_norm.min(field(z).norm());
        }
    }
    assert!(
        min_norm > lip * cell * std::f64::consts::SQRT_2,
        "field not provably nonvanishing: min {min_norm}, bound {}",
        lip * cell * std::f64::consts::SQRT_2
    );
    let cert = degree_on_box(&g, q, p, rect).unwrap();
    assert_eq!(cert.degree, 0);
}
