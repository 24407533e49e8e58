use forcing_geometry::Vec2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::RotationError;

const EQUIVARIANCE_TOL: f64 = 1e-12;
const EQUIVARIANCE_SAMPLES: usize = 100;
const EQUIVARIANCE_SEED: u64 = 0x5eed_0001;

/// Named 1-periodic profile with sigma(0) = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    /// sin(2 pi t)
    Sine,
    /// (1 - cos(2 pi t)) / 2, range [0, 1]
    RaisedCosine,
}

impl Profile {
    pub fn eval(self, t: f64) -> f64 {
        match self {
            Profile::Sine => (2.0 * std::f64::consts::PI * t).sin(),
            Profile::RaisedCosine => (1.0 - (2.0 * std::f64::consts::PI * t).cos()) / 2.0,
        }
    }
}

/// One invertible building block of a lift.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Primitive {
    /// z -> z + v with v in Z^2 (deck transformations live here).
    IntTranslation { vector: [i64; 2] },
    /// z -> z + v.
    Translation { vector: [f64; 2] },
    /// x -> x + amplitude * profile(y).
    Hshear { profile: Profile, amplitude: f64 },
    /// y -> y + amplitude * profile(x).
    Vshear { profile: Profile, amplitude: f64 },
    /// x -> x + k y with integer k; only valid inside conjugation sandwiches,
    /// since alone it is not a lift of a torus map homotopic to the identity.
    IntHshear { k: i64 },
    /// y -> y + k x with integer k.
    IntVshear { k: i64 },
}

impl Primitive {
    fn apply(&self, z: Vec2) -> Vec2 {
        match *self {
            Primitive::IntTranslation { vector } => {
                Vec2::new(z.x + vector[0] as f64, z.y + vector[1] as f64)
            }
            Primitive::Translation { vector } => Vec2::new(z.x + vector[0], z.y + vector[1]),
            Primitive::Hshear { profile, amplitude } => {
                Vec2::new(z.x + amplitude * profile.eval(z.y), z.y)
            }
            Primitive::Vshear { profile, amplitude } => {
                Vec2::new(z.x, z.y + amplitude * profile.eval(z.x))
            }
            Primitive::IntHshear { k } => Vec2::new(z.x + k as f64 * z.y, z.y),
            Primitive::IntVshear { k } => Vec2::new(z.x, z.y + k as f64 * z.x),
        }
    }

    fn inverse(&self) -> Primitive {
        match *self {
            Primitive::IntTranslation { vector } => {
                Primitive::IntTranslation { vector: [-vector[0], -vector[1]] }
            }
            Primitive::Translation { vector } => {
                Primitive::Translation { vector: [-vector[0], -vector[1]] }
            }
            Primitive::Hshear { profile, amplitude } => {
                Primitive::Hshear { profile, amplitude: -amplitude }
            }
            Primitive::Vshear { profile, amplitude } => {
                Primitive::Vshear { profile, amplitude: -amplitude }
            }
            Primitive::IntHshear { k } => Primitive::IntHshear { k: -k },
            Primitive::IntVshear { k } => Primitive::IntVshear { k: -k },
        }
    }
}

/// A lift of a torus homeomorphism homotopic to the identity: primitives are
/// applied in list order. Z^2-equivariance is verified on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusLift {
    primitives: Vec<Primitive>,
}

impl TorusLift {
    pub fn new(primitives: Vec<Primitive>) -> Result<Self, RotationError> {
        let lift = TorusLift { primitives };
        lift.verify_equivariance()?;
        Ok(lift)
    }

    pub fn translation(v: [f64; 2]) -> Self {
        TorusLift { primitives: vec![Primitive::Translation { vector: v }] }
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.primitives
    }

    pub fn apply(&self, z: Vec2) -> Vec2 {
        let mut cur = z;
        for p in &self.primitives {
            cur = p.apply(cur);
        }
        cur
    }

    pub fn iterate(&self, z: Vec2, n: usize) -> Vec2 {
        let mut cur = z;
        for _ in 0..n {
            cur = self.apply(cur);
        }
        cur
    }

    /// g^k as a composition (primitive list repeated).
    pub fn power(&self, k: usize) -> TorusLift {
        let mut primitives = Vec::with_capacity(self.primitives.len() * k);
        for _ in 0..k {
            primitives.extend(self.primitives.iter().copied());
        }
        TorusLift { primitives }
    }

    /// g composed with a deck translation (commutes with g by equivariance).
    pub fn with_deck(&self, v: [i64; 2]) -> TorusLift {
        let mut primitives = vec![Primitive::IntTranslation { vector: v }];
        primitives.extend(self.primitives.iter().copied());
        TorusLift { primitives }
    }

    pub fn inverse(&self) -> TorusLift {
        TorusLift { primitives: self.primitives.iter().rev().map(|p| p.inverse()).collect() }
    }

    /// h o g o h^{-1} for an integer horizontal shear h (a change of
    /// coordinates by a torus automorphism). The result is checked for
    /// equivariance like any other composition.
    pub fn conjugate_by_int_hshear(&self, k: i64) -> Result<TorusLift, RotationError> {
        let mut primitives = vec![Primitive::IntHshear { k: -k }];
        primitives.extend(self.primitives.iter().copied());
        primitives.push(Primitive::IntHshear { k });
        TorusLift::new(primitives)
    }

    /// Max equivariance defect |g(z+v) - g(z) - v| over seeded samples.
    pub fn equivariance_defect(&self) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(EQUIVARIANCE_SEED);
        let mut worst = 0.0f64;
        for _ in 0..EQUIVARIANCE_SAMPLES {
            let z = Vec2::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
            let v = Vec2::new(rng.gen_range(-2..=2i64) as f64, rng.gen_range(-2..=2i64) as f64);
            let a = self.apply(z + v);
            let b = self.apply(z) + v;
            worst = worst.max((a - b).norm());
        }
        worst
    }

    fn verify_equivariance(&self) -> Result<(), RotationError> {
        let mut rng = ChaCha8Rng::seed_from_u64(EQUIVARIANCE_SEED);
        for index in 0..EQUIVARIANCE_SAMPLES {
            let z = Vec2::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
            let v = Vec2::new(rng.gen_range(-2..=2i64) as f64, rng.gen_range(-2..=2i64) as f64);
            let defect = (self.apply(z + v) - (self.apply(z) + v)).norm();
            if defect > EQUIVARIANCE_TOL {
                return Err(RotationError::NotEquivariant { defect, index });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shears_and_translations_are_equivariant() {
        let g = TorusLift::new(vec![
            Primitive::Hshear { profile: Profile::Sine, amplitude: 0.4 },
            Primitive::Vshear { profile: Profile::Sine, amplitude: 0.4 },
            Primitive::Translation { vector: [0.25, -0.125] },
        ])
        .unwrap();
        assert!(g.equivariance_defect() <= 1e-12);
    }

    #[test]
    fn lone_integer_shear_is_rejected() {
        let err = TorusLift::new(vec![Primitive::IntHshear { k: 1 }]).unwrap_err();
        assert!(matches!(err, RotationError::NotEquivariant { .. }));
    }

    #[test]
    fn conjugation_sandwich_is_equivariant() {
        let g = TorusLift::new(vec![
            Primitive::Hshear { profile: Profile::Sine, amplitude: 0.4 },
            Primitive::Vshear { profile: Profile::Sine, amplitude: 0.4 },
        ])
        .unwrap();
        let h = g.conjugate_by_int_hshear(1).unwrap();
        assert!(h.equivariance_defect() <= 1e-12);
    }

    #[test]
    fn inverse_undoes_apply() {
        let g = TorusLift::new(vec![
            Primitive::Hshear { profile: Profile::RaisedCosine, amplitude: 0.7 },
            Primitive::Translation { vector: [0.3, 0.1] },
            Primitive::Vshear { profile: Profile::Sine, amplitude: -0.2 },
        ])
        .unwrap();
        let inv = g.inverse();
        let z = Vec2::new(0.37, 0.81);
        let back = inv.apply(g.apply(z));
        assert!((back - z).norm() < 1e-12);
    }

    #[test]
    fn power_matches_iteration() {
        let g = TorusLift::new(vec![
            Primitive::Hshear { profile: Profile::Sine, amplitude: 0.4 },
            Primitive::Vshear { profile: Profile::Sine, amplitude: 0.4 },
        ])
        .unwrap();
        let g3 = g.power(3);
        let z = Vec2::new(0.2, 0.9);
        assert!((g3.apply(z) - g.iterate(z, 3)).norm() < 1e-14);
    }
}
