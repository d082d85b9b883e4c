//! Physical entities in classical four-dimensional form and in 𝕄 form, with
//! the checks that `L` acting on the 𝕄 form agrees with the classical boost.
//!
//! Entity formulas work in units with `c = 1`: the fourth component of each
//! classical four-vector (`ρ`, `t`, energy) is used as is.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lorentz::{boost_four_vector, build_l, lambda_matrix, mat4_mul, LorentzMatrix, Velocity};
use crate::malgebra::MNum;
use crate::mlinalg::{MMat3, MVec3};
use crate::scalar::{Residual, Scalar};

/// Current density `j` and charge density `ρ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeCurrent<S> {
    pub j: [S; 3],
    pub rho: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EMField<S> {
    pub e: [S; 3],
    pub b: [S; 3],
}

/// Position, time, momentum `P` and energy of a particle.
#[derive(Clone, Debug, PartialEq)]
pub struct AngMomState<S> {
    pub pos: [S; 3],
    pub t: S,
    pub p: [S; 3],
    pub energy: S,
}

pub type Mat4<S> = [[Complex<S>; 4]; 4];

impl<S: Scalar> ChargeCurrent<S> {
    pub fn zero() -> Self {
        ChargeCurrent { j: std::array::from_fn(|_| S::zero()), rho: S::zero() }
    }
}

impl<S: Scalar> EMField<S> {
    pub fn zero() -> Self {
        EMField { e: std::array::from_fn(|_| S::zero()), b: std::array::from_fn(|_| S::zero()) }
    }

    pub fn flatten(&self) -> Vec<S> {
        self.e.iter().chain(&self.b).cloned().collect()
    }
}

impl<S: Scalar> AngMomState<S> {
    pub fn zero() -> Self {
        let z = || std::array::from_fn(|_| S::zero());
        AngMomState { pos: z(), t: S::zero(), p: z(), energy: S::zero() }
    }
}

/// `δ_k = j_k e + α_k ρ i`.
pub fn build_delta<S: Scalar>(cc: &ChargeCurrent<S>, w: &Velocity<S>) -> MVec3<S> {
    let a = w.alpha();
    MVec3::from_fn(|k| MNum::new(cc.j[k].clone(), a[k].clone() * cc.rho.clone()))
}

/// `(j, ρ)` boosted as a four-vector.
pub fn classical_cc_boost<S: Scalar>(cc: &ChargeCurrent<S>, w: &Velocity<S>) -> ChargeCurrent<S> {
    let (j, rho) = boost_four_vector(&cc.j, &cc.rho, w);
    ChargeCurrent { j, rho }
}

pub fn delta_consistency<S: Scalar>(cc: &ChargeCurrent<S>, w: &Velocity<S>) -> Residual<S> {
    let via_l = build_l(w).mat.dot_mv(&build_delta(cc, w));
    let via_classical = build_delta(&classical_cc_boost(cc, w), w);
    via_l.residual(&via_classical)
}

/// The rank-one 𝕄 form of the electromagnetic field.
pub fn em_vector_from_alpha<S: Scalar>(f: &EMField<S>, alpha: &[S; 3]) -> MVec3<S> {
    let [ax, ay, az] = alpha.clone();
    let [ex, ey, ez] = f.e.clone();
    let [bx, by, bz] = f.b.clone();
    let (axx, ayy, azz) = (ax.clone() * ax.clone(), ay.clone() * ay.clone(), az.clone() * az.clone());
    let (axy, axz, ayz) = (ax.clone() * ay.clone(), ax.clone() * az.clone(), ay.clone() * az.clone());

    let re1 = ax.clone() * (by.clone() + bz.clone()) + ay.clone() * by.clone() + az.clone() * bz.clone();
    let im1 = axx.clone() * (ey.clone() - ez.clone()) + ayy.clone() * ey.clone() - azz.clone() * ez.clone()
        - axy.clone() * ez.clone()
        + axz.clone() * ey.clone()
        + ayz.clone() * (ez.clone() - ey.clone());

    let re2 = -(ax.clone() * bx.clone()) + ay.clone() * (bz.clone() - bx.clone()) - az.clone() * bz.clone();
    let im2 = -(axx.clone() * ex.clone()) - ayy.clone() * (ex.clone() + ez.clone()) - azz.clone() * ez.clone()
        - axy.clone() * ez.clone()
        - axz.clone() * (ex.clone() + ez.clone())
        + ayz.clone() * ex.clone();

    let re3 = -(ax * bx.clone()) - ay * by.clone() - az * (bx - by);
    let im3 = axx * ex.clone() + ayy * ey.clone() + azz * (ex.clone() + ey.clone()) + axy * (ex.clone() + ey.clone())
        + axz * ey
        - ayz * ex;

    MVec3([MNum::new(re1, im1), MNum::new(re2, im2), MNum::new(re3, im3)])
}

pub fn build_em_vector<S: Scalar>(f: &EMField<S>, w: &Velocity<S>) -> MVec3<S> {
    em_vector_from_alpha(f, w.alpha())
}

/// The classical antisymmetric field tensor with imaginary-time entries:
/// `F_12 = B_z, F_13 = -B_y, F_23 = B_x, F_k4 = -E_k i`.
pub fn classical_f<S: Scalar>(f: &EMField<S>) -> Mat4<S> {
    let re = |x: &S| Complex::new(x.clone(), S::zero());
    let im = |x: &S| Complex::new(S::zero(), x.clone());
    let zero = Complex::new(S::zero(), S::zero());
    let [ex, ey, ez] = &f.e;
    let [bx, by, bz] = &f.b;
    [
        [zero.clone(), re(bz), -re(by), -im(ex)],
        [-re(bz), zero.clone(), re(bx), -im(ey)],
        [re(by), -re(bx), zero.clone(), -im(ez)],
        [im(ex), im(ey), im(ez), zero],
    ]
}

/// Read `(E, B)` back from a matrix of the [`classical_f`] layout, checking the
/// layout on the way. The deviation is the largest entry that breaks it.
pub fn read_classical_f<S: Scalar>(m: &Mat4<S>) -> (EMField<S>, S) {
    let mut deviation = S::zero();
    let mut note = |x: S| deviation = deviation.clone().max_of(x.abs());
    for i in 0..4 {
        note(m[i][i].re.clone());
        note(m[i][i].im.clone());
        for j in 0..4 {
            let sum = m[i][j].clone() + m[j][i].clone();
            note(sum.re);
            note(sum.im);
            // spatial block real, time row/column imaginary
            if i < 3 && j < 3 {
                note(m[i][j].im.clone());
            } else if i != j {
                note(m[i][j].re.clone());
            }
        }
    }
    let field = EMField {
        e: std::array::from_fn(|k| m[3][k].im.clone()),
        b: [m[1][2].re.clone(), -m[0][2].re.clone(), m[0][1].re.clone()],
    };
    (field, deviation)
}

/// `F' = Λ F Λ⁻¹` with `Λ⁻¹ = Λ(-v)`, read back into `(E', B')`.
pub fn classical_f_boost<S: Scalar>(f: &EMField<S>, w: &Velocity<S>) -> Result<EMField<S>> {
    let boosted = mat4_mul(&mat4_mul(&lambda_matrix(w), &classical_f(f)), &lambda_matrix(&w.reversed()));
    let (field, deviation) = read_classical_f(&boosted);
    let scale = crate::scalar::scale_of(field.flatten().iter().chain(f.flatten().iter()));
    let bad = if S::EXACT {
        !deviation.is_zero()
    } else {
        deviation.to_f64() > 1e-12 * scale.to_f64()
    };
    if bad {
        return Err(Error::SkewStructureBroken(deviation.to_f64()));
    }
    Ok(field)
}

pub fn em_vector_consistency<S: Scalar>(f: &EMField<S>, w: &Velocity<S>) -> Result<Residual<S>> {
    let via_l = build_l(w).mat.dot_mv(&build_em_vector(f, w));
    let via_classical = build_em_vector(&classical_f_boost(f, w)?, w);
    Ok(via_l.residual(&via_classical))
}

/// Antisymmetric 𝕄 matrix from its three upper entries `(1,2), (1,3), (2,3)`.
pub fn antisymmetric<S: Scalar>(upper: [MNum<S>; 3]) -> MMat3<S> {
    let [m12, m13, m23] = upper;
    let mut out = MMat3::zero();
    out.0[0][1] = m12.clone();
    out.0[1][0] = -m12;
    out.0[0][2] = m13.clone();
    out.0[2][0] = -m13;
    out.0[1][2] = m23.clone();
    out.0[2][1] = -m23;
    out
}

/// Rank-two 𝕄 form of the field. The dual form swaps the roles of `E` and
/// `B`: real parts `-E_z, E_y, -E_x` and `B` in the imaginary parts.
pub fn em_tensor_from_alpha<S: Scalar>(f: &EMField<S>, alpha: &[S; 3], dual: bool) -> MMat3<S> {
    let [ax, ay, az] = alpha.clone();
    let (real_src, imag_src, sign) = if dual {
        (&f.e, &f.b, -S::one())
    } else {
        (&f.b, &f.e, S::one())
    };
    let [rx, ry, rz] = real_src.clone();
    let [ix, iy, iz] = imag_src.clone();
    antisymmetric([
        MNum::new(sign.clone() * rz, ax.clone() * iy.clone() - ay.clone() * ix.clone()),
        MNum::new(-(sign.clone() * ry), ax * iz.clone() - az.clone() * ix),
        MNum::new(sign * rx, ay * iz - az * iy),
    ])
}

pub fn build_em_tensor<S: Scalar>(f: &EMField<S>, w: &Velocity<S>, dual: bool) -> MMat3<S> {
    em_tensor_from_alpha(f, w.alpha(), dual)
}

/// `T' = (L·T)·L`.
pub fn tensor_transform<S: Scalar>(l: &LorentzMatrix<S>, t: &MMat3<S>) -> MMat3<S> {
    l.mat.dot_mm(t).dot_mm(&l.mat)
}

pub fn em_tensor_consistency<S: Scalar>(f: &EMField<S>, w: &Velocity<S>, dual: bool) -> Result<Residual<S>> {
    let via_l = tensor_transform(&build_l(w), &build_em_tensor(f, w, dual));
    let via_classical = build_em_tensor(&classical_f_boost(f, w)?, w, dual);
    Ok(via_l.residual(&via_classical))
}

/// Entry `(i, j)`: `(x_i P_j - x_j P_i) e + [α_j(x_i E - P_i t) - α_i(x_j E - P_j t)] i`.
pub fn angmom_tensor_from_alpha<S: Scalar>(s: &AngMomState<S>, alpha: &[S; 3]) -> MMat3<S> {
    let lever = |k: usize| s.pos[k].clone() * s.energy.clone() - s.p[k].clone() * s.t.clone();
    let entry = |i: usize, j: usize| {
        MNum::new(
            s.pos[i].clone() * s.p[j].clone() - s.pos[j].clone() * s.p[i].clone(),
            alpha[j].clone() * lever(i) - alpha[i].clone() * lever(j),
        )
    };
    antisymmetric([entry(0, 1), entry(0, 2), entry(1, 2)])
}

pub fn build_angmom_tensor<S: Scalar>(s: &AngMomState<S>, w: &Velocity<S>) -> MMat3<S> {
    angmom_tensor_from_alpha(s, w.alpha())
}

/// Classical `J = χpᵀ - pχᵀ` with `χ = (x, y, z, ti)` and `p = (P, E i)`.
pub fn classical_j<S: Scalar>(s: &AngMomState<S>) -> Mat4<S> {
    let chi: [Complex<S>; 4] = std::array::from_fn(|k| match k {
        3 => Complex::new(S::zero(), s.t.clone()),
        k => Complex::new(s.pos[k].clone(), S::zero()),
    });
    let mom: [Complex<S>; 4] = std::array::from_fn(|k| match k {
        3 => Complex::new(S::zero(), s.energy.clone()),
        k => Complex::new(s.p[k].clone(), S::zero()),
    });
    std::array::from_fn(|i| {
        std::array::from_fn(|j| chi[i].clone() * mom[j].clone() - mom[i].clone() * chi[j].clone())
    })
}

/// Position and momentum four-vectors boosted separately.
pub fn classical_angmom_boost<S: Scalar>(s: &AngMomState<S>, w: &Velocity<S>) -> AngMomState<S> {
    let (pos, t) = boost_four_vector(&s.pos, &s.t, w);
    let (p, energy) = boost_four_vector(&s.p, &s.energy, w);
    AngMomState { pos, t, p, energy }
}

/// `ΛJΛ⁻¹` against `J` rebuilt from the boosted constituents.
pub fn classical_angmom_residual<S: Scalar>(s: &AngMomState<S>, w: &Velocity<S>) -> Residual<S> {
    let boosted = mat4_mul(&mat4_mul(&lambda_matrix(w), &classical_j(s)), &lambda_matrix(&w.reversed()));
    let rebuilt = classical_j(&classical_angmom_boost(s, w));
    let flat = |m: &Mat4<S>| m.iter().flatten().flat_map(|c| [c.re.clone(), c.im.clone()]).collect::<Vec<_>>();
    Residual::between(&flat(&boosted), &flat(&rebuilt))
}

pub fn angmom_consistency<S: Scalar>(s: &AngMomState<S>, w: &Velocity<S>) -> Residual<S> {
    let via_l = tensor_transform(&build_l(w), &build_angmom_tensor(s, w));
    let via_classical = build_angmom_tensor(&classical_angmom_boost(s, w), w);
    via_l.residual(&via_classical)
}
