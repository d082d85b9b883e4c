//! Seeded generators for the property suites. Every generator takes the
//! caller's RNG, so a suite is reproducible from its seed alone.

use std::sync::Arc;

use rand::Rng;

use crate::fieldcalc::{ChargeFns, EmFns, Fn4, RadialFns};
use crate::lorentz::{Event4, Velocity};
use crate::malgebra::MNum;
use crate::mlinalg::{MMat3, MVec3};
use crate::physents::{AngMomState, ChargeCurrent, EMField};
use crate::scalar::{Rational, Scalar};

/// Speed ratios with a rational Lorentz factor.
pub const PYTHAGOREAN_BETAS: [(i64, i64); 4] = [(3, 5), (5, 13), (8, 17), (20, 29)];

pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::from_ratio(rng.random_range(-20..=20), rng.random_range(1..=12))
}

pub fn rational_mnum<R: Rng>(rng: &mut R) -> MNum<Rational> {
    MNum::new(rational(rng), rational(rng))
}

pub fn float<R: Rng>(rng: &mut R) -> f64 {
    rng.random_range(-5.0..5.0)
}

pub fn float_mnum<R: Rng>(rng: &mut R) -> MNum<f64> {
    MNum::new(float(rng), float(rng))
}

/// Random rational in the exact mode, random float otherwise.
pub fn scalar<S: Scalar, R: Rng>(rng: &mut R) -> S {
    let n = rng.random_range(-20..=20);
    let d = rng.random_range(1..=12);
    if S::EXACT {
        S::from_ratio(n, d)
    } else {
        S::from_ratio(n, d) + S::from_ratio(rng.random_range(-1000..=1000), 1_000_000)
    }
}

pub fn mnum<S: Scalar, R: Rng>(rng: &mut R) -> MNum<S> {
    MNum::new(scalar(rng), scalar(rng))
}

pub fn mvec<S: Scalar, R: Rng>(rng: &mut R) -> MVec3<S> {
    MVec3::from_fn(|_| mnum(rng))
}

pub fn mmat<S: Scalar, R: Rng>(rng: &mut R) -> MMat3<S> {
    let entries: Vec<MNum<S>> = (0..9).map(|_| mnum(rng)).collect();
    MMat3::from_fn(|i, j| entries[3 * i + j].clone())
}

/// Rational unit vector from the inverse stereographic projection of a
/// random rational point, with a random axis permutation and signs.
pub fn rational_direction<R: Rng>(rng: &mut R) -> [Rational; 3] {
    let p = Rational::from_ratio(rng.random_range(-6..=6), rng.random_range(1..=4));
    let q = Rational::from_ratio(rng.random_range(-6..=6), rng.random_range(1..=4));
    let one = Rational::from_i64(1);
    let two = Rational::from_i64(2);
    let norm = p.clone() * p.clone() + q.clone() * q.clone();
    let den = norm.clone() + one.clone();
    let mut v = [two.clone() * p / den.clone(), two * q / den.clone(), (norm - one) / den];
    let shift = rng.random_range(0..3);
    v.rotate_left(shift);
    if rng.random_bool(0.5) {
        v.swap(0, 1);
    }
    v.map(|c| if rng.random_bool(0.5) { -c } else { c })
}

pub fn pythagorean_velocity<R: Rng>(rng: &mut R) -> Velocity<Rational> {
    let (n, d) = PYTHAGOREAN_BETAS[rng.random_range(0..PYTHAGOREAN_BETAS.len())];
    let beta = Rational::from_ratio(n, d);
    Velocity::new(rational_direction(rng).map(|a| a * beta.clone())).expect("pythagorean speeds are subluminal")
}

pub fn float_direction<R: Rng>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 0.1 && n <= 1.0 {
            return v.map(|c| c / n);
        }
    }
}

pub fn float_velocity<R: Rng>(rng: &mut R) -> Velocity<f64> {
    let beta = rng.random_range(0.05..0.95);
    Velocity::new(float_direction(rng).map(|a| a * beta)).expect("speed below one")
}

/// Pythagorean boost in exact mode, arbitrary subluminal boost in float mode.
pub fn velocity<S: Scalar, R: Rng>(rng: &mut R) -> Velocity<S> {
    if S::EXACT {
        let v = pythagorean_velocity(rng);
        Velocity::new(v.components().clone().map(|c| S::from_rational(&c))).expect("exact components")
    } else {
        let v = float_velocity(rng);
        Velocity::new(v.components().map(S::from_f64)).expect("subluminal")
    }
}

pub fn event<S: Scalar, R: Rng>(rng: &mut R) -> Event4<S> {
    Event4::new(scalar(rng), scalar(rng), scalar(rng), scalar(rng))
}

pub fn triple<S: Scalar, R: Rng>(rng: &mut R) -> [S; 3] {
    std::array::from_fn(|_| scalar(rng))
}

pub fn charge_current<S: Scalar, R: Rng>(rng: &mut R) -> ChargeCurrent<S> {
    ChargeCurrent { j: triple(rng), rho: scalar(rng) }
}

pub fn em_field<S: Scalar, R: Rng>(rng: &mut R) -> EMField<S> {
    EMField { e: triple(rng), b: triple(rng) }
}

pub fn angmom_state<S: Scalar, R: Rng>(rng: &mut R) -> AngMomState<S> {
    AngMomState { pos: triple(rng), t: scalar(rng), p: triple(rng), energy: scalar(rng) }
}

#[derive(Clone, Debug)]
struct Wave {
    k: [f64; 4],
    amp: f64,
    phase: f64,
}

/// `c + l·p + Σ q_ab p_a p_b + Σ amp·sin(k·p + φ)` with small coefficients,
/// bounded and smooth on `[-2, 2]⁴`.
#[derive(Clone, Debug)]
pub struct SmoothFn {
    constant: f64,
    linear: [f64; 4],
    quadratic: Vec<(usize, usize, f64)>,
    waves: Vec<Wave>,
}

impl SmoothFn {
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let quadratic = (0..2)
            .map(|_| (rng.random_range(0..4), rng.random_range(0..4), rng.random_range(-0.2..0.2)))
            .collect();
        let waves = (0..2)
            .map(|_| Wave {
                k: std::array::from_fn(|_| rng.random_range(-1.5..1.5)),
                amp: rng.random_range(-1.0..1.0),
                phase: rng.random_range(0.0..std::f64::consts::TAU),
            })
            .collect();
        SmoothFn {
            constant: rng.random_range(-1.0..1.0),
            linear: std::array::from_fn(|_| rng.random_range(-0.5..0.5)),
            quadratic,
            waves,
        }
    }

    pub fn eval(&self, p: &[f64; 4]) -> f64 {
        let lin: f64 = self.linear.iter().zip(p).map(|(a, x)| a * x).sum();
        let quad: f64 = self.quadratic.iter().map(|&(a, b, c)| c * p[a] * p[b]).sum();
        let waves: f64 = self
            .waves
            .iter()
            .map(|w| w.amp * (w.k.iter().zip(p).map(|(k, x)| k * x).sum::<f64>() + w.phase).sin())
            .sum();
        self.constant + lin + quad + waves
    }

    pub fn into_fn4(self) -> Fn4 {
        Arc::new(move |p| self.eval(p))
    }
}

pub fn smooth_em<R: Rng>(rng: &mut R) -> EmFns {
    EmFns {
        e: std::array::from_fn(|_| SmoothFn::random(rng).into_fn4()),
        b: std::array::from_fn(|_| SmoothFn::random(rng).into_fn4()),
    }
}

pub fn smooth_charge<R: Rng>(rng: &mut R) -> ChargeFns {
    ChargeFns {
        j: std::array::from_fn(|_| SmoothFn::random(rng).into_fn4()),
        rho: SmoothFn::random(rng).into_fn4(),
    }
}

/// `s = base + amp·sin(k_r r - k_t t + φ)`, kept inside `[0.05, 0.75]`.
pub fn radial_profile<R: Rng>(rng: &mut R) -> RadialFns {
    let base = rng.random_range(0.3..0.5);
    let amp = rng.random_range(0.0..0.25);
    let kr = rng.random_range(-1.5..1.5);
    let kt = rng.random_range(-1.5..1.5);
    let phase = rng.random_range(0.0..std::f64::consts::TAU);
    RadialFns::new(move |r, t| base + amp * (kr * r - kt * t + phase).sin())
}

/// Base point `(x, y, z, t)` inside the sample box with `t ∈ [1, 2]`.
pub fn base_point<R: Rng>(rng: &mut R) -> [f64; 4] {
    [
        rng.random_range(-1.5..1.5),
        rng.random_range(-1.5..1.5),
        rng.random_range(-1.5..1.5),
        rng.random_range(1.0..2.0),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn directions_are_exact_unit_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = rational_direction(&mut rng);
            let n: Rational = a.iter().map(|c| c.clone() * c.clone()).sum();
            assert_eq!(n, Rational::from_i64(1));
        }
    }

    #[test]
    fn pythagorean_velocities_have_rational_gamma() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let v = pythagorean_velocity(&mut rng);
            assert!(v.gamma() > &Rational::from_i64(1));
        }
    }

    #[test]
    fn same_seed_same_draws() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = SmoothFn::random(&mut rng);
            (rational_mnum(&mut rng), f.eval(&[0.1, 0.2, 0.3, 1.5]))
        };
        assert_eq!(draw(9), draw(9));
    }

    #[test]
    fn smooth_fns_stay_bounded_on_box() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let f = SmoothFn::random(&mut rng);
            for corner in 0..16 {
                let p: [f64; 4] = std::array::from_fn(|k| if corner >> k & 1 == 1 { 2.0 } else { -2.0 });
                assert!(f.eval(&p).abs() < 10.0);
            }
        }
    }
}
