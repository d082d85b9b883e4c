//! Finite-difference calculus over the six coordinates `(x, y, z, t_x, t_y, t_z)`.
//!
//! Fields on ordinary spacetime are lifted to the six-coordinate domain through
//! `t = √(t_x² + t_y² + t_z²)` and `r = √(x² + y² + z²)`. The identity checks
//! compare a literal assumption sum of a lifted field against a combination of
//! ordinary derivatives, evaluated at points where `t_{x_i} = α_i t`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lorentz::{classical_boost, Event4, Velocity};
use crate::malgebra::MNum;
use crate::mlinalg::{MMat3, MVec3};
use crate::physents::{
    classical_cc_boost, classical_f_boost, em_tensor_from_alpha, em_vector_from_alpha, ChargeCurrent,
    EMField,
};

/// Real function of `(x, y, z, t)`.
pub type Fn4 = Arc<dyn Fn(&[f64; 4]) -> f64 + Send + Sync>;
/// Real function of the six coordinates.
pub type Fn6 = Arc<dyn Fn(&[f64; 6]) -> f64 + Send + Sync>;

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
pub const T: usize = 3;

/// Sign relating the literal (a2) sum of the lifted field vector to the
/// α-weighted Faraday combination.
pub const A2_CURL_SIGN: f64 = -1.0;
/// Sign relating the literal (a1) sum to the α-weighted Ampère combination.
pub const A1_CURL_SIGN: f64 = 1.0;
/// `a3_sum` of the field tensor is `+∇·B`.
pub const A3_DIV_SIGN: f64 = 1.0;
/// `a3_sum` of the dual tensor is `-∇·E`.
pub const A3_DUAL_DIV_SIGN: f64 = -1.0;
/// `a4_sum` of either tensor is minus its α-weighted curl combination.
pub const A4_CURL_SIGN: f64 = -1.0;

pub fn fn4(f: impl Fn(&[f64; 4]) -> f64 + Send + Sync + 'static) -> Fn4 {
    Arc::new(f)
}

pub fn fn6(f: impl Fn(&[f64; 6]) -> f64 + Send + Sync + 'static) -> Fn6 {
    Arc::new(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdOrder {
    Second,
    Fourth,
}

impl FdOrder {
    pub fn exponent(self) -> i32 {
        match self {
            FdOrder::Second => 2,
            FdOrder::Fourth => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FdConfig {
    /// Relative step; the actual step is `step · max(1, |coordinate|)`.
    pub step: f64,
    pub order: FdOrder,
    pub tolerance: f64,
}

impl Default for FdConfig {
    fn default() -> Self {
        FdConfig { step: 1e-4, order: FdOrder::Fourth, tolerance: 1e-5 }
    }
}

impl FdConfig {
    pub fn new(step: f64, order: FdOrder, tolerance: f64) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidArgument(format!("finite-difference step must be positive, got {step}")));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tolerance}")));
        }
        Ok(FdConfig { step, order, tolerance })
    }

    pub fn step_at(&self, coordinate: f64) -> f64 {
        self.step * coordinate.abs().max(1.0)
    }
}

/// Central difference of `f` in coordinate `var` at `p`.
pub fn fd_partial<const N: usize>(
    f: impl Fn(&[f64; N]) -> f64,
    var: usize,
    p: &[f64; N],
    cfg: &FdConfig,
) -> Result<f64> {
    let h = cfg.step_at(p[var]);
    let at = |k: f64| {
        let mut q = *p;
        q[var] += k * h;
        let v = f(&q);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { var, point: q.to_vec() })
        }
    };
    Ok(match cfg.order {
        FdOrder::Second => (at(1.0)? - at(-1.0)?) / (2.0 * h),
        FdOrder::Fourth => (-at(2.0)? + 8.0 * at(1.0)? - 8.0 * at(-1.0)? + at(-2.0)?) / (12.0 * h),
    })
}

/// `(x, y, z, t)` seen from the six coordinates.
pub fn spacetime_of(p: &[f64; 6]) -> [f64; 4] {
    [p[0], p[1], p[2], (p[3] * p[3] + p[4] * p[4] + p[5] * p[5]).sqrt()]
}

pub fn radius_of(p: &[f64; 6]) -> f64 {
    (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt()
}

/// Vector field over 𝕄 on the six coordinates; component `i` is `f_i e + g_i i`.
#[derive(Clone)]
pub struct MField {
    eval: Arc<dyn Fn(&[f64; 6]) -> MVec3<f64> + Send + Sync>,
    lifted: bool,
}

impl MField {
    pub fn new(eval: impl Fn(&[f64; 6]) -> MVec3<f64> + Send + Sync + 'static) -> Self {
        MField { eval: Arc::new(eval), lifted: false }
    }

    pub fn from_components(f: [Fn6; 3], g: [Fn6; 3]) -> Self {
        MField::new(move |p| MVec3::from_fn(|k| MNum::new(f[k](p), g[k](p))))
    }

    fn lifted(mut self) -> Self {
        self.lifted = true;
        self
    }

    /// Whether the field depends on the time coordinates only through `t`.
    pub fn is_lifted(&self) -> bool {
        self.lifted
    }

    pub fn at(&self, p: &[f64; 6]) -> MVec3<f64> {
        (self.eval)(p)
    }

    pub fn f(&self, k: usize) -> impl Fn(&[f64; 6]) -> f64 + '_ {
        move |p| self.at(p).0[k].re
    }

    pub fn g(&self, k: usize) -> impl Fn(&[f64; 6]) -> f64 + '_ {
        move |p| self.at(p).0[k].im
    }
}

/// Antisymmetric tensor field with entry `(i, j) = T_ij e + S_ij i` for `i < j`.
#[derive(Clone)]
pub struct ATensorField {
    eval: Arc<dyn Fn(&[f64; 6]) -> MMat3<f64> + Send + Sync>,
}

impl ATensorField {
    pub fn new(eval: impl Fn(&[f64; 6]) -> MMat3<f64> + Send + Sync + 'static) -> Self {
        ATensorField { eval: Arc::new(eval) }
    }

    /// From `[T₁₂, T₁₃, T₂₃]` and `[S₁₂, S₁₃, S₂₃]`.
    pub fn from_components(t: [Fn6; 3], s: [Fn6; 3]) -> Self {
        ATensorField::new(move |p| {
            crate::physents::antisymmetric(std::array::from_fn(|k| MNum::new(t[k](p), s[k](p))))
        })
    }

    pub fn at(&self, p: &[f64; 6]) -> MMat3<f64> {
        (self.eval)(p)
    }

    fn t(&self, i: usize, j: usize) -> impl Fn(&[f64; 6]) -> f64 + '_ {
        move |p| self.at(p).0[i][j].re
    }

    fn s(&self, i: usize, j: usize) -> impl Fn(&[f64; 6]) -> f64 + '_ {
        move |p| self.at(p).0[i][j].im
    }
}

#[derive(Clone)]
pub struct EmFns {
    pub e: [Fn4; 3],
    pub b: [Fn4; 3],
}

impl EmFns {
    pub fn at(&self, p: &[f64; 4]) -> EMField<f64> {
        EMField { e: std::array::from_fn(|k| self.e[k](p)), b: std::array::from_fn(|k| self.b[k](p)) }
    }

    pub fn constant(field: EMField<f64>) -> Self {
        EmFns {
            e: field.e.map(|c| fn4(move |_| c)),
            b: field.b.map(|c| fn4(move |_| c)),
        }
    }

    /// `E = (0, sin(z - t), 0)`, `B = (-sin(z - t), 0, 0)`, a vacuum solution.
    pub fn plane_wave() -> Self {
        let zero = || fn4(|_| 0.0);
        EmFns {
            e: [zero(), fn4(|p| (p[Z] - p[T]).sin()), zero()],
            b: [fn4(|p| -(p[Z] - p[T]).sin()), zero(), zero()],
        }
    }

    /// The field observed in the frame moving with `w`, as a function of
    /// that frame's coordinates.
    pub fn boosted(&self, w: &Velocity<f64>) -> Self {
        let back = w.reversed();
        let src = self.clone();
        let w = w.clone();
        let comp = move |k: usize| {
            let (src, back, w) = (src.clone(), back.clone(), w.clone());
            fn4(move |p| {
                let ev = classical_boost(&Event4::new(p[0], p[1], p[2], p[3]), &back);
                let here = src.at(&[ev.x, ev.y, ev.z, ev.t]);
                let f = classical_f_boost(&here, &w).unwrap_or(EMField { e: [f64::NAN; 3], b: [f64::NAN; 3] });
                if k < 3 {
                    f.e[k]
                } else {
                    f.b[k - 3]
                }
            })
        };
        EmFns { e: std::array::from_fn(&comp), b: std::array::from_fn(|k| comp(k + 3)) }
    }
}

#[derive(Clone)]
pub struct ChargeFns {
    pub j: [Fn4; 3],
    pub rho: Fn4,
}

impl ChargeFns {
    pub fn at(&self, p: &[f64; 4]) -> ChargeCurrent<f64> {
        ChargeCurrent { j: std::array::from_fn(|k| self.j[k](p)), rho: (self.rho)(p) }
    }

    pub fn boosted(&self, w: &Velocity<f64>) -> Self {
        let back = w.reversed();
        let src = self.clone();
        let w = w.clone();
        let comp = move |k: usize| {
            let (src, back, w) = (src.clone(), back.clone(), w.clone());
            fn4(move |p| {
                let ev = classical_boost(&Event4::new(p[0], p[1], p[2], p[3]), &back);
                let cc = classical_cc_boost(&src.at(&[ev.x, ev.y, ev.z, ev.t]), &w);
                if k < 3 {
                    cc.j[k]
                } else {
                    cc.rho
                }
            })
        };
        ChargeFns { j: std::array::from_fn(&comp), rho: comp(3) }
    }
}

/// Radial speed profile `s(r, t)`.
#[derive(Clone)]
pub struct RadialFns {
    pub s: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
}

impl RadialFns {
    pub fn new(s: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        RadialFns { s: Arc::new(s) }
    }

    pub fn at(&self, r: f64, t: f64) -> f64 {
        (self.s)(r, t)
    }

    pub fn gamma_at(&self, r: f64, t: f64) -> f64 {
        let s = self.at(r, t);
        1.0 / (1.0 - s * s).sqrt()
    }
}

#[derive(Clone)]
pub enum SpacetimeFns {
    Em(EmFns),
    Charge(ChargeFns),
    Radial(RadialFns),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    Delta,
    EmVector,
    Sigma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumKind {
    A1,
    A2,
}

pub fn lift_delta(cc: &ChargeFns, alpha: [f64; 3]) -> MField {
    let cc = cc.clone();
    MField::new(move |p| {
        let c = cc.at(&spacetime_of(p));
        MVec3::from_fn(|k| MNum::new(c.j[k], alpha[k] * c.rho))
    })
    .lifted()
}

pub fn lift_em_vector(em: &EmFns, alpha: [f64; 3]) -> MField {
    let em = em.clone();
    MField::new(move |p| em_vector_from_alpha(&em.at(&spacetime_of(p)), &alpha)).lifted()
}

/// `σ_i = γ_s α_i s e + γ_s α_i i` with `s = s(r, t)`.
pub fn lift_sigma(s: &RadialFns, alpha: [f64; 3]) -> MField {
    let s = s.clone();
    MField::new(move |p| {
        let (r, t) = (radius_of(p), spacetime_of(p)[T]);
        let speed = s.at(r, t);
        let gamma = 1.0 / (1.0 - speed * speed).sqrt();
        MVec3::from_fn(|k| MNum::new(gamma * alpha[k] * speed, gamma * alpha[k]))
    })
    .lifted()
}

pub fn lift_em_tensor(em: &EmFns, alpha: [f64; 3], dual: bool) -> ATensorField {
    let em = em.clone();
    ATensorField::new(move |p| em_tensor_from_alpha(&em.at(&spacetime_of(p)), &alpha, dual))
}

pub fn lift(fns: &SpacetimeFns, w: &Velocity<f64>, kind: LiftKind) -> Result<MField> {
    let alpha = *w.alpha();
    match (fns, kind) {
        (SpacetimeFns::Charge(cc), LiftKind::Delta) => Ok(lift_delta(cc, alpha)),
        (SpacetimeFns::Em(em), LiftKind::EmVector) => Ok(lift_em_vector(em, alpha)),
        (SpacetimeFns::Radial(s), LiftKind::Sigma) => Ok(lift_sigma(s, alpha)),
        _ => Err(Error::InvalidArgument(format!("{kind:?} lift needs matching field functions"))),
    }
}

/// `Σ (∂f_i/∂x_i + ∂g_i/∂t_{x_i})`.
pub fn a1_sum(field: &MField, p: &[f64; 6], cfg: &FdConfig) -> Result<f64> {
    (0..3).try_fold(0.0, |acc, i| {
        Ok(acc + fd_partial(field.f(i), i, p, cfg)? + fd_partial(field.g(i), i + 3, p, cfg)?)
    })
}

/// `Σ (∂f_i/∂t_{x_i} + ∂g_i/∂x_i)`.
pub fn a2_sum(field: &MField, p: &[f64; 6], cfg: &FdConfig) -> Result<f64> {
    (0..3).try_fold(0.0, |acc, i| {
        Ok(acc + fd_partial(field.f(i), i + 3, p, cfg)? + fd_partial(field.g(i), i, p, cfg)?)
    })
}

pub fn assumption_sum(field: &MField, which: SumKind, p: &[f64; 6], cfg: &FdConfig) -> Result<f64> {
    match which {
        SumKind::A1 => a1_sum(field, p, cfg),
        SumKind::A2 => a2_sum(field, p, cfg),
    }
}

// Entries (0,1), (0,2), (1,2) pair with z, y, x and alternate in sign.
const A34_TERMS: [(usize, usize, usize, f64); 3] = [(0, 1, Z, 1.0), (0, 2, Y, -1.0), (1, 2, X, 1.0)];

/// `(∂T₁₂/∂z - ∂S₁₂/∂t_z) - (∂T₁₃/∂y - ∂S₁₃/∂t_y) + (∂T₂₃/∂x - ∂S₂₃/∂t_x)`.
pub fn a3_sum(tensor: &ATensorField, p: &[f64; 6], cfg: &FdConfig) -> Result<f64> {
    A34_TERMS.iter().try_fold(0.0, |acc, &(i, j, v, sign)| {
        let term = fd_partial(tensor.t(i, j), v, p, cfg)? - fd_partial(tensor.s(i, j), v + 3, p, cfg)?;
        Ok(acc + sign * term)
    })
}

/// `(∂T₁₂/∂t_z - ∂S₁₂/∂z) - (∂T₁₃/∂t_y - ∂S₁₃/∂y) + (∂T₂₃/∂t_x - ∂S₂₃/∂x)`.
pub fn a4_sum(tensor: &ATensorField, p: &[f64; 6], cfg: &FdConfig) -> Result<f64> {
    A34_TERMS.iter().try_fold(0.0, |acc, &(i, j, v, sign)| {
        let term = fd_partial(tensor.t(i, j), v + 3, p, cfg)? - fd_partial(tensor.s(i, j), v, p, cfg)?;
        Ok(acc + sign * term)
    })
}

/// `(∂u/∂x + ∂v/∂y, ∂u/∂y + ∂v/∂x)`.
pub fn cr_residual(
    u: impl Fn(&[f64; 2]) -> f64,
    v: impl Fn(&[f64; 2]) -> f64,
    p: &[f64; 2],
    cfg: &FdConfig,
) -> Result<(f64, f64)> {
    Ok((
        fd_partial(&u, 0, p, cfg)? + fd_partial(&v, 1, p, cfg)?,
        fd_partial(&u, 1, p, cfg)? + fd_partial(&v, 0, p, cfg)?,
    ))
}

/// All first derivatives of `(E, B)` in `(x, y, z, t)`: `d[c][v]`, with
/// `c = 0..3` for `E` and `3..6` for `B`.
#[derive(Clone, Debug)]
pub struct EmJacobian {
    pub d: [[f64; 4]; 6],
}

impl EmJacobian {
    pub fn at(em: &EmFns, p: &[f64; 4], cfg: &FdConfig) -> Result<Self> {
        let mut d = [[0.0; 4]; 6];
        for (c, row) in d.iter_mut().enumerate() {
            let f = if c < 3 { &em.e[c] } else { &em.b[c - 3] };
            for (v, slot) in row.iter_mut().enumerate() {
                *slot = fd_partial(|q| f(q), v, p, cfg)?;
            }
        }
        Ok(EmJacobian { d })
    }

    pub fn e(&self, c: usize, v: usize) -> f64 {
        self.d[c][v]
    }

    pub fn b(&self, c: usize, v: usize) -> f64 {
        self.d[c + 3][v]
    }

    pub fn div_e(&self) -> f64 {
        self.e(X, X) + self.e(Y, Y) + self.e(Z, Z)
    }

    pub fn div_b(&self) -> f64 {
        self.b(X, X) + self.b(Y, Y) + self.b(Z, Z)
    }
}

/// Residuals of both curl equations.
#[derive(Clone, Debug, PartialEq)]
pub struct CurlResiduals {
    /// `A = ∂E_y/∂z - ∂E_z/∂y - ∂B_x/∂t`, `B = ∂E_z/∂x - ∂E_x/∂z - ∂B_y/∂t`,
    /// `C = ∂E_x/∂y - ∂E_y/∂x - ∂B_z/∂t`.
    pub faraday: [f64; 3],
    /// `A' = ∂B_z/∂x - ∂B_x/∂z + ∂E_y/∂t`, `B' = ∂B_y/∂x - ∂B_x/∂y - ∂E_z/∂t`,
    /// `C' = ∂B_z/∂y - ∂B_y/∂z - ∂E_x/∂t`.
    pub ampere: [f64; 3],
}

impl CurlResiduals {
    pub fn from_jacobian(j: &EmJacobian) -> Self {
        CurlResiduals {
            faraday: [
                j.e(Y, Z) - j.e(Z, Y) - j.b(X, T),
                j.e(Z, X) - j.e(X, Z) - j.b(Y, T),
                j.e(X, Y) - j.e(Y, X) - j.b(Z, T),
            ],
            ampere: [
                j.b(Z, X) - j.b(X, Z) + j.e(Y, T),
                j.b(Y, X) - j.b(X, Y) - j.e(Z, T),
                j.b(Z, Y) - j.b(Y, Z) - j.e(X, T),
            ],
        }
    }

    pub fn all(&self) -> [f64; 6] {
        let [a, b, c] = self.faraday;
        let [a2, b2, c2] = self.ampere;
        [a, b, c, a2, b2, c2]
    }
}

pub fn curl_residuals(em: &EmFns, p: &[f64; 4], cfg: &FdConfig) -> Result<CurlResiduals> {
    Ok(CurlResiduals::from_jacobian(&EmJacobian::at(em, p, cfg)?))
}

/// A six-coordinate point with `t_{x_i} = α_i t` and `t > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictedPoint {
    base: [f64; 4],
    alpha: [f64; 3],
}

impl RestrictedPoint {
    pub fn new(base: [f64; 4], alpha: [f64; 3]) -> Result<Self> {
        if !(base[T] > 0.0) {
            return Err(Error::NotRestricted(format!("time coordinate must be positive, got {}", base[T])));
        }
        let norm = alpha.iter().map(|a| a * a).sum::<f64>();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotRestricted(format!("direction cosines have squared norm {norm}")));
        }
        Ok(RestrictedPoint { base, alpha })
    }

    /// The point `x_i = α_i r`, `t_{x_i} = α_i t` on the radial line.
    pub fn radial(r: f64, t: f64, alpha: [f64; 3]) -> Result<Self> {
        if !(r > 0.0) {
            return Err(Error::NotRestricted(format!("radius must be positive, got {r}")));
        }
        RestrictedPoint::new([alpha[0] * r, alpha[1] * r, alpha[2] * r, t], alpha)
    }

    /// Check a raw six-coordinate point against `alpha`.
    pub fn from_six(p: &[f64; 6], alpha: [f64; 3]) -> Result<Self> {
        let t = spacetime_of(p)[T];
        let candidate = RestrictedPoint::new([p[0], p[1], p[2], t], alpha)?;
        let six = candidate.six();
        if (3..6).any(|k| (six[k] - p[k]).abs() > 1e-12 * t.max(1.0)) {
            return Err(Error::NotRestricted(format!("t_x/t, t_y/t, t_z/t differ from α at {p:?}")));
        }
        Ok(candidate)
    }

    pub fn base(&self) -> &[f64; 4] {
        &self.base
    }

    pub fn alpha(&self) -> &[f64; 3] {
        &self.alpha
    }

    pub fn t(&self) -> f64 {
        self.base[T]
    }

    pub fn radius(&self) -> f64 {
        self.base[..3].iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_radial(&self) -> bool {
        let r = self.radius();
        r > 0.0 && (0..3).all(|k| (self.base[k] - self.alpha[k] * r).abs() <= 1e-12 * r.max(1.0))
    }

    pub fn six(&self) -> [f64; 6] {
        let [x, y, z, t] = self.base;
        let [ax, ay, az] = self.alpha;
        [x, y, z, ax * t, ay * t, az * t]
    }

    /// Axes renamed as `x̃ = y`, `ỹ = z`, `z̃ = x`.
    pub fn permuted(&self) -> Self {
        let [x, y, z, t] = self.base;
        let [ax, ay, az] = self.alpha;
        RestrictedPoint { base: [y, z, x, t], alpha: [ay, az, ax] }
    }

    fn check_direction(&self, w: &Velocity<f64>) -> Result<()> {
        if self.alpha.iter().zip(w.alpha()).all(|(a, b)| (a - b).abs() <= 1e-12) {
            Ok(())
        } else {
            Err(Error::NotRestricted(format!("point built for α = {:?}, boost has α = {:?}", self.alpha, w.alpha())))
        }
    }
}

/// Left side computed from a lifted field, right side from ordinary derivatives.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityCheck {
    pub lhs: f64,
    pub rhs: f64,
}

impl IdentityCheck {
    pub fn gap(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }

    pub fn holds(&self, cfg: &FdConfig) -> bool {
        self.gap() < cfg.tolerance
    }
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Weights `(α_x s - 1, α_y s + 1, α_z s + 1)` with `s = α_x - α_y - α_z`.
pub fn faraday_weights(alpha: &[f64; 3]) -> [f64; 3] {
    let s = alpha[0] - alpha[1] - alpha[2];
    [alpha[0] * s - 1.0, alpha[1] * s + 1.0, alpha[2] * s + 1.0]
}

/// Weights `(α_x + α_z, α_x + α_y, α_y - α_z)`.
pub fn ampere_weights(alpha: &[f64; 3]) -> [f64; 3] {
    [alpha[0] + alpha[2], alpha[0] + alpha[1], alpha[1] - alpha[2]]
}

/// (a2) of the lifted field vector against the Faraday combination.
pub fn identity_a2_curl(em: &EmFns, w: &Velocity<f64>, p: &RestrictedPoint, cfg: &FdConfig) -> Result<IdentityCheck> {
    p.check_direction(w)?;
    let lhs = a2_sum(&lift_em_vector(em, *w.alpha()), &p.six(), cfg)?;
    let curl = curl_residuals(em, p.base(), cfg)?;
    Ok(IdentityCheck { lhs, rhs: A2_CURL_SIGN * dot(&faraday_weights(w.alpha()), &curl.faraday) })
}

/// (a1) of the lifted field vector against the Ampère combination.
pub fn identity_a1_curl(em: &EmFns, w: &Velocity<f64>, p: &RestrictedPoint, cfg: &FdConfig) -> Result<IdentityCheck> {
    p.check_direction(w)?;
    let lhs = a1_sum(&lift_em_vector(em, *w.alpha()), &p.six(), cfg)?;
    let curl = curl_residuals(em, p.base(), cfg)?;
    Ok(IdentityCheck { lhs, rhs: A1_CURL_SIGN * dot(&ampere_weights(w.alpha()), &curl.ampere) })
}

/// The field with axes renamed `x̃ = y`, `ỹ = z`, `z̃ = x`, as a function of
/// the renamed coordinates.
pub fn permute_axes(em: &EmFns) -> EmFns {
    let comp = |f: &Fn4| {
        let f = f.clone();
        fn4(move |q| f(&[q[2], q[0], q[1], q[3]]))
    };
    EmFns {
        e: [comp(&em.e[1]), comp(&em.e[2]), comp(&em.e[0])],
        b: [comp(&em.b[1]), comp(&em.b[2]), comp(&em.b[0])],
    }
}

/// (a1) of the axis-renamed lift against the renamed-axes combination,
/// written back in the original variables:
/// `(α_y+α_x)(∂B_x/∂y - ∂B_y/∂x + ∂E_z/∂t) + (α_y+α_z)(∂B_z/∂y - ∂B_y/∂z - ∂E_x/∂t)
///  + (α_z-α_x)(∂B_x/∂z - ∂B_z/∂x - ∂E_y/∂t)`.
pub fn identity_a1_curl_permuted(
    em: &EmFns,
    w: &Velocity<f64>,
    p: &RestrictedPoint,
    cfg: &FdConfig,
) -> Result<IdentityCheck> {
    p.check_direction(w)?;
    let q = p.permuted();
    let lhs = a1_sum(&lift_em_vector(&permute_axes(em), *q.alpha()), &q.six(), cfg)?;
    let j = EmJacobian::at(em, p.base(), cfg)?;
    let [ax, ay, az] = *w.alpha();
    let rhs = (ay + ax) * (j.b(X, Y) - j.b(Y, X) + j.e(Z, T))
        + (ay + az) * (j.b(Z, Y) - j.b(Y, Z) - j.e(X, T))
        + (az - ax) * (j.b(X, Z) - j.b(Z, X) - j.e(Y, T));
    Ok(IdentityCheck { lhs: A1_CURL_SIGN * lhs, rhs })
}

/// `a3_sum` of the tensor lift against `±∇·B` (field tensor) or `±∇·E` (dual).
pub fn divergence_check(
    em: &EmFns,
    w: &Velocity<f64>,
    p: &RestrictedPoint,
    dual: bool,
    cfg: &FdConfig,
) -> Result<IdentityCheck> {
    p.check_direction(w)?;
    let lhs = a3_sum(&lift_em_tensor(em, *w.alpha(), dual), &p.six(), cfg)?;
    let j = EmJacobian::at(em, p.base(), cfg)?;
    let rhs = if dual { A3_DUAL_DIV_SIGN * j.div_e() } else { A3_DIV_SIGN * j.div_b() };
    Ok(IdentityCheck { lhs, rhs })
}

/// α-weighted curl combination matched by (a4): the Faraday residuals for
/// the field tensor, and for the dual
/// `(∂B_y/∂z - ∂B_z/∂y + ∂E_x/∂t, ∂B_z/∂x - ∂B_x/∂z + ∂E_y/∂t, ∂B_x/∂y - ∂B_y/∂x + ∂E_z/∂t)`.
pub fn a4_combination(j: &EmJacobian, alpha: &[f64; 3], dual: bool) -> f64 {
    let terms = if dual {
        [
            j.b(Y, Z) - j.b(Z, Y) + j.e(X, T),
            j.b(Z, X) - j.b(X, Z) + j.e(Y, T),
            j.b(X, Y) - j.b(Y, X) + j.e(Z, T),
        ]
    } else {
        CurlResiduals::from_jacobian(j).faraday
    };
    dot(alpha, &terms)
}

pub fn a4_translation(
    em: &EmFns,
    w: &Velocity<f64>,
    p: &RestrictedPoint,
    dual: bool,
    cfg: &FdConfig,
) -> Result<IdentityCheck> {
    p.check_direction(w)?;
    let lhs = a4_sum(&lift_em_tensor(em, *w.alpha(), dual), &p.six(), cfg)?;
    let j = EmJacobian::at(em, p.base(), cfg)?;
    Ok(IdentityCheck { lhs, rhs: A4_CURL_SIGN * a4_combination(&j, w.alpha(), dual) })
}

/// (a1) of the charge-current lift against `∇·j + ∂ρ/∂t`.
pub fn continuity_identity(
    cc: &ChargeFns,
    w: &Velocity<f64>,
    p: &RestrictedPoint,
    cfg: &FdConfig,
) -> Result<IdentityCheck> {
    p.check_direction(w)?;
    let lhs = a1_sum(&lift_delta(cc, *w.alpha()), &p.six(), cfg)?;
    let div_j = (0..3).try_fold(0.0, |acc, k| Ok::<_, Error>(acc + fd_partial(|q| cc.j[k](q), k, p.base(), cfg)?))?;
    let rho_t = fd_partial(|q| (cc.rho)(q), T, p.base(), cfg)?;
    Ok(IdentityCheck { lhs, rhs: div_j + rho_t })
}

/// (a2) of the velocity-potential lift against
/// `γ_s ∂s/∂t + s ∂γ_s/∂t + ∂γ_s/∂r`, differentiated in `(r, t)`.
pub fn radial_residual(s: &RadialFns, p: &RestrictedPoint, cfg: &FdConfig) -> Result<IdentityCheck> {
    if !p.is_radial() {
        return Err(Error::NotRestricted(format!("{:?} is off the radial line of α", p.base())));
    }
    let (r, t) = (p.radius(), p.t());
    // Every stencil node of both computations lies in this box.
    let reach = 3.0 * cfg.step_at(r.max(t)) * 3f64.sqrt();
    for dr in [-reach, 0.0, reach] {
        for dt in [-reach, 0.0, reach] {
            let v = s.at(r + dr, t + dt);
            if !(v.abs() < 1.0) {
                return Err(Error::SuperluminalProfile(v));
            }
        }
    }
    let lhs = a2_sum(&lift_sigma(s, *p.alpha()), &p.six(), cfg)?;
    let q = [r, t];
    let speed = |q: &[f64; 2]| s.at(q[0], q[1]);
    let gamma = |q: &[f64; 2]| s.gamma_at(q[0], q[1]);
    let rhs = s.gamma_at(r, t) * fd_partial(speed, 1, &q, cfg)?
        + s.at(r, t) * fd_partial(gamma, 1, &q, cfg)?
        + fd_partial(gamma, 0, &q, cfg)?;
    Ok(IdentityCheck { lhs, rhs })
}

/// `|k/r² + s ∂s/∂r|` for an arbitrary speed profile `s(r)`.
pub fn newtonian_residual(profile: impl Fn(f64) -> f64, k: f64, r: f64, cfg: &FdConfig) -> Result<f64> {
    if !(k > 0.0 && r > 0.0) {
        return Err(Error::InvalidArgument(format!("need k > 0 and r > 0, got k = {k}, r = {r}")));
    }
    let ds = fd_partial(|q: &[f64; 1]| profile(q[0]), 0, &[r], cfg)?;
    Ok((k / (r * r) + profile(r) * ds).abs())
}

/// Residual for the energy-conservation profile `s = √(2k/r)`.
pub fn newtonian_check(k: f64, r: f64, cfg: &FdConfig) -> Result<f64> {
    newtonian_residual(|r| (2.0 * k / r).sqrt(), k, r, cfg)
}

/// The chosen sum in the original frame and, for the lift of the boosted
/// constituents, at the image point in the moving frame.
pub fn invariance_check(
    fns: &SpacetimeFns,
    w: &Velocity<f64>,
    p: &RestrictedPoint,
    which: SumKind,
    cfg: &FdConfig,
) -> Result<IdentityCheck> {
    p.check_direction(w)?;
    let [x, y, z, t] = *p.base();
    let image = classical_boost(&Event4::new(x, y, z, t), w);
    let primed = RestrictedPoint::new([image.x, image.y, image.z, image.t], *w.alpha())?;
    let (here, there) = match fns {
        SpacetimeFns::Em(em) => (lift_em_vector(em, *w.alpha()), lift_em_vector(&em.boosted(w), *w.alpha())),
        SpacetimeFns::Charge(cc) => (lift_delta(cc, *w.alpha()), lift_delta(&cc.boosted(w), *w.alpha())),
        SpacetimeFns::Radial(_) => {
            return Err(Error::InvalidArgument("no classical boost for a radial profile".into()));
        }
    };
    Ok(IdentityCheck {
        lhs: assumption_sum(&here, which, &p.six(), cfg)?,
        rhs: assumption_sum(&there, which, &primed.six(), cfg)?,
    })
}

/// `a1`, `a2` of the vector lift and `a3`, `a4` of both tensor lifts.
pub fn maxwell_sums(em: &EmFns, w: &Velocity<f64>, p: &RestrictedPoint, cfg: &FdConfig) -> Result<[f64; 6]> {
    p.check_direction(w)?;
    let six = p.six();
    let alpha = *w.alpha();
    let vector = lift_em_vector(em, alpha);
    let tensor = lift_em_tensor(em, alpha, false);
    let dual = lift_em_tensor(em, alpha, true);
    Ok([
        a1_sum(&vector, &six, cfg)?,
        a2_sum(&vector, &six, cfg)?,
        a3_sum(&tensor, &six, cfg)?,
        a4_sum(&tensor, &six, cfg)?,
        a3_sum(&dual, &six, cfg)?,
        a4_sum(&dual, &six, cfg)?,
    ])
}
