//! Classical boosts and their 𝕄-valued counterpart.
//!
//! The classical boost is applied in real form to `(x, y, z, ct)`. The
//! imaginary-time matrix acting on `(x, y, z, cti)` is available as
//! [`lambda_matrix`] and agrees entrywise after factoring out `i` (see
//! [`chi_vector`] and the tests below).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::malgebra::MNum;
use crate::mlinalg::{MMat3, MVec3, RMat6};
use crate::scalar::{Residual, Scalar};

/// Relative velocity of a moving frame, in units of `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct Velocity<S> {
    v: [S; 3],
    beta: S,
    alpha: [S; 3],
    gamma: S,
    c: S,
}

impl<S: Scalar> Velocity<S> {
    /// Velocity with `c = 1`. `v` is the velocity as a fraction of `c`.
    pub fn new(v: [S; 3]) -> Result<Self> {
        Self::with_light_speed(v, S::one())
    }

    pub fn with_light_speed(v: [S; 3], c: S) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NonPositiveLightSpeed);
        }
        let beta_sq = v.iter().fold(S::zero(), |acc, x| acc + x.clone() * x.clone());
        if beta_sq.is_zero() {
            return Err(Error::ZeroVelocity);
        }
        if beta_sq >= S::one() {
            return Err(Error::Superluminal(beta_sq.to_f64().sqrt()));
        }
        let beta = beta_sq
            .sqrt_exact()
            .ok_or_else(|| Error::IrrationalRoot(beta_sq.to_string()))?;
        let gamma_inv_sq = S::one() - beta_sq;
        let gamma = S::one()
            / gamma_inv_sq
                .sqrt_exact()
                .ok_or_else(|| Error::IrrationalRoot(gamma_inv_sq.to_string()))?;
        let alpha = std::array::from_fn(|k| v[k].clone() / beta.clone());
        Ok(Velocity { v, beta, alpha, gamma, c })
    }

    /// `β·α` for a unit direction `alpha`.
    pub fn from_speed_and_direction(beta: S, alpha: [S; 3]) -> Result<Self> {
        Self::new(alpha.map(|a| a * beta.clone()))
    }

    pub fn components(&self) -> &[S; 3] {
        &self.v
    }

    pub fn beta(&self) -> &S {
        &self.beta
    }

    /// Direction cosines `v / |v|`.
    pub fn alpha(&self) -> &[S; 3] {
        &self.alpha
    }

    pub fn gamma(&self) -> &S {
        &self.gamma
    }

    pub fn light_speed(&self) -> &S {
        &self.c
    }

    /// Same speed, opposite direction.
    pub fn reversed(&self) -> Self {
        Velocity {
            v: self.v.clone().map(|x| -x),
            beta: self.beta.clone(),
            alpha: self.alpha.clone().map(|x| -x),
            gamma: self.gamma.clone(),
            c: self.c.clone(),
        }
    }

    pub fn to_f64(&self) -> Velocity<f64> {
        Velocity {
            v: self.v.clone().map(|x| x.to_f64()),
            beta: self.beta.to_f64(),
            alpha: self.alpha.clone().map(|x| x.to_f64()),
            gamma: self.gamma.to_f64(),
            c: self.c.to_f64(),
        }
    }
}

/// An event `(x, y, z, t)` in some inertial frame.
#[derive(Clone, Debug, PartialEq)]
pub struct Event4<S> {
    pub x: S,
    pub y: S,
    pub z: S,
    pub t: S,
}

impl<S: Scalar> Event4<S> {
    pub fn new(x: S, y: S, z: S, t: S) -> Self {
        Event4 { x, y, z, t }
    }

    pub fn zero() -> Self {
        Event4::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn spatial(&self) -> [S; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    fn from_parts(r: [S; 3], t: S) -> Self {
        let [x, y, z] = r;
        Event4 { x, y, z, t }
    }
}

/// 𝕄³ representation of an event relative to a reference velocity.
#[derive(Clone, Debug, PartialEq)]
pub struct MEvent<S> {
    pub vec: MVec3<S>,
    /// Direction cosines of the velocity the representation was built for.
    pub alpha: [S; 3],
}

/// The 𝕄-Lorentz matrix together with the direction it was built for.
#[derive(Clone, Debug, PartialEq)]
pub struct LorentzMatrix<S> {
    pub mat: MMat3<S>,
    pub alpha: [S; 3],
}

pub(crate) fn dot3<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> S {
    (0..3).fold(S::zero(), |acc, k| acc + a[k].clone() * b[k].clone())
}

/// Boost a four-vector `(r, w)` whose fourth component is already in
/// length units (`ct`, `ρ`, energy, ...):
/// `r' = r + (γ-1)α(α·r) - γβα w`, `w' = γ(w - β α·r)`.
pub fn boost_four_vector<S: Scalar>(r: &[S; 3], w: &S, vel: &Velocity<S>) -> ([S; 3], S) {
    let alpha = vel.alpha();
    let (beta, gamma) = (vel.beta().clone(), vel.gamma().clone());
    let along = dot3(alpha, r);
    let r_out = std::array::from_fn(|k| {
        r[k].clone() + (gamma.clone() - S::one()) * alpha[k].clone() * along.clone()
            - gamma.clone() * beta.clone() * alpha[k].clone() * w.clone()
    });
    let w_out = gamma * (w.clone() - beta * along);
    (r_out, w_out)
}

/// Classical Lorentz boost of an event, in real form.
pub fn classical_boost<S: Scalar>(ev: &Event4<S>, vel: &Velocity<S>) -> Event4<S> {
    let c = vel.light_speed().clone();
    let (r, ct) = boost_four_vector(&ev.spatial(), &(c.clone() * ev.t.clone()), vel);
    Event4::from_parts(r, ct / c)
}

/// The 4×4 boost acting on `(x, y, z, cti)`, with `±βγα_k i` in the last
/// row and column.
pub fn lambda_matrix<S: Scalar>(vel: &Velocity<S>) -> [[Complex<S>; 4]; 4] {
    let a = vel.alpha();
    let (beta, gamma) = (vel.beta().clone(), vel.gamma().clone());
    let bg = beta * gamma.clone();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| match (i, j) {
            (3, 3) => Complex::new(gamma.clone(), S::zero()),
            (3, k) => Complex::new(S::zero(), -(bg.clone() * a[k].clone())),
            (k, 3) => Complex::new(S::zero(), bg.clone() * a[k].clone()),
            (i, j) => {
                let delta = if i == j { S::one() } else { S::zero() };
                Complex::new(delta + (gamma.clone() - S::one()) * a[i].clone() * a[j].clone(), S::zero())
            }
        })
    })
}

/// `(x, y, z, cti)`.
pub fn chi_vector<S: Scalar>(ev: &Event4<S>, c: &S) -> [Complex<S>; 4] {
    [
        Complex::new(ev.x.clone(), S::zero()),
        Complex::new(ev.y.clone(), S::zero()),
        Complex::new(ev.z.clone(), S::zero()),
        Complex::new(S::zero(), c.clone() * ev.t.clone()),
    ]
}

pub(crate) fn mat4_mul<S: Scalar>(a: &[[Complex<S>; 4]; 4], b: &[[Complex<S>; 4]; 4]) -> [[Complex<S>; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..4).fold(Complex::new(S::zero(), S::zero()), |acc, k| acc + a[i][k].clone() * b[k][j].clone())
        })
    })
}

pub fn mat4_vec<S: Scalar>(a: &[[Complex<S>; 4]; 4], x: &[Complex<S>; 4]) -> [Complex<S>; 4] {
    std::array::from_fn(|i| {
        (0..4).fold(Complex::new(S::zero(), S::zero()), |acc, k| acc + a[i][k].clone() * x[k].clone())
    })
}

/// Component `i` is `r_i e + (α_i c t) i`.
pub fn build_m_event<S: Scalar>(ev: &Event4<S>, vel: &Velocity<S>) -> MEvent<S> {
    let r = ev.spatial();
    let ct = vel.light_speed().clone() * ev.t.clone();
    let alpha = vel.alpha().clone();
    MEvent {
        vec: MVec3::from_fn(|k| MNum::new(r[k].clone(), alpha[k].clone() * ct.clone())),
        alpha,
    }
}

/// `L_ij = [δ_ij + (γ-1)α_iα_j] e - [βγ α_iα_j] i`.
pub fn build_l<S: Scalar>(vel: &Velocity<S>) -> LorentzMatrix<S> {
    let a = vel.alpha();
    let (beta, gamma) = (vel.beta().clone(), vel.gamma().clone());
    let mat = MMat3::from_fn(|i, j| {
        let aa = a[i].clone() * a[j].clone();
        let delta = if i == j { S::one() } else { S::zero() };
        MNum::new(
            delta + (gamma.clone() - S::one()) * aa.clone(),
            -(beta.clone() * gamma.clone() * aa),
        )
    });
    LorentzMatrix { mat, alpha: a.clone() }
}

fn same_alpha<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.close(y))
}

/// `x' = L·x`; the representation keeps the direction cosines of the
/// velocity that built `L`.
pub fn transform<S: Scalar>(l: &LorentzMatrix<S>, x: &MEvent<S>) -> Result<MEvent<S>> {
    if !same_alpha(&l.alpha, &x.alpha) {
        return Err(Error::AlphaMismatch);
    }
    Ok(MEvent { vec: l.mat.dot_mv(&x.vec), alpha: x.alpha.clone() })
}

/// Max-norm between `L·x` and the representation of the classically boosted event.
pub fn consistency_residual<S: Scalar>(ev: &Event4<S>, vel: &Velocity<S>) -> Residual<S> {
    let l = build_l(vel);
    let x = build_m_event(ev, vel);
    let via_l = transform(&l, &x).expect("representation built from the same velocity");
    let via_classical = build_m_event(&classical_boost(ev, vel), vel);
    via_l.vec.residual(&via_classical.vec)
}

/// Representation of a primed event as seen from the reverse frame pairing:
/// componentwise conjugate, with the direction cosines reversed.
pub fn reverse_representation<S: Scalar>(xp: &MEvent<S>) -> MEvent<S> {
    MEvent { vec: xp.vec.conj(), alpha: xp.alpha.clone().map(|a| -a) }
}

/// Undo [`transform`]: `conj(L·conj(x'))`.
pub fn invert_event<S: Scalar>(l: &LorentzMatrix<S>, xp: &MEvent<S>) -> Result<MEvent<S>> {
    if !same_alpha(&l.alpha, &xp.alpha) {
        return Err(Error::AlphaMismatch);
    }
    Ok(MEvent { vec: l.mat.dot_mv(&xp.vec.conj()).conj(), alpha: xp.alpha.clone() })
}

/// Relativistic velocity addition: frame B moves with `u` relative to A, and
/// C moves with `v` relative to B (measured in B). Returns C relative to A.
pub fn compose_velocities<S: Scalar>(u: &Velocity<S>, v: &Velocity<S>) -> Result<Velocity<S>> {
    let uv = dot3(u.components(), v.components());
    let gu = u.gamma().clone();
    let denom = S::one() + uv.clone();
    let w = std::array::from_fn(|k| {
        (v.components()[k].clone() / gu.clone()
            + u.components()[k].clone()
            + gu.clone() / (S::one() + gu.clone()) * uv.clone() * u.components()[k].clone())
            / denom.clone()
    });
    Velocity::with_light_speed(w, u.light_speed().clone())
}

/// Distance between applying `L(w_bc)` after `L(w_ab)` and the representation
/// of the doubly boosted event relative to the composed velocity `w_ac`.
/// Positive values show that the 𝕄-Lorentz matrices do not compose.
pub fn composition_gap<S: Scalar>(w_ab: &Velocity<S>, w_bc: &Velocity<S>, ev: &Event4<S>) -> Result<S> {
    let w_ac = compose_velocities(w_ab, w_bc)?;
    let x_ab = build_m_event(ev, w_ab);
    let chained = build_l(w_bc).mat.dot_mv(&build_l(w_ab).mat.dot_mv(&x_ab.vec));
    let double = classical_boost(&classical_boost(ev, w_ab), w_bc);
    let expected = build_m_event(&double, &w_ac);
    Ok(chained.residual(&expected.vec).diff)
}

/// The real 6×6 form of `L` in the coordinate order `(x, ct_x, y, ct_y, z, ct_z)`,
/// written out entrywise: diagonal cells of each 2×2 block carry
/// `δ_ij + (γ-1)α_iα_j` and off-diagonal cells `-βγα_iα_j`.
pub fn lorentz_r6_display<S: Scalar>(vel: &Velocity<S>) -> RMat6<S> {
    let a = vel.alpha();
    let g1 = vel.gamma().clone() - S::one();
    let bg = vel.beta().clone() * vel.gamma().clone();
    RMat6(std::array::from_fn(|row| {
        std::array::from_fn(|col| {
            let (i, j) = (row / 2, col / 2);
            let aa = a[i].clone() * a[j].clone();
            if row % 2 == col % 2 {
                let delta = if i == j { S::one() } else { S::zero() };
                delta + g1.clone() * aa
            } else {
                -(bg.clone() * aa)
            }
        })
    }))
}
