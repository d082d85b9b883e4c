//! Vectors and 3×3 matrices over 𝕄.
//!
//! The action of a matrix conjugates its entries first:
//! `(A·x)_i = Σ_k a_ik* x_k` and `(A·B)_ij = Σ_k a_ik* b_kj`. With this
//! convention the dot product is associative and matches the ℝ⁶ block
//! embedding `αe + βi ↦ [[α, β], [β, α]]`.

use std::ops::{Add, Neg, Sub};

use crate::malgebra::MNum;
use crate::scalar::{Residual, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MVec3<S>(pub [MNum<S>; 3]);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MMat3<S>(pub [[MNum<S>; 3]; 3]);

/// Real 6-vector in the order `(Re x₁, Im x₁, Re x₂, Im x₂, Re x₃, Im x₃)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RVec6<S>(pub [S; 6]);

#[derive(Clone, Debug, PartialEq)]
pub struct RMat6<S>(pub [[S; 6]; 6]);

impl<S: Scalar> MVec3<S> {
    pub fn zero() -> Self {
        MVec3(std::array::from_fn(|_| MNum::zero()))
    }

    pub fn from_fn(f: impl FnMut(usize) -> MNum<S>) -> Self {
        MVec3(std::array::from_fn(f))
    }

    pub fn scale(&self, lambda: &S) -> Self {
        MVec3::from_fn(|i| self.0[i].scale(lambda))
    }

    pub fn conj(&self) -> Self {
        MVec3::from_fn(|i| self.0[i].conj())
    }

    pub fn re(&self) -> [S; 3] {
        std::array::from_fn(|i| self.0[i].re.clone())
    }

    pub fn im(&self) -> [S; 3] {
        std::array::from_fn(|i| self.0[i].im.clone())
    }

    pub fn flatten(&self) -> Vec<S> {
        self.0.iter().flat_map(|m| [m.re.clone(), m.im.clone()]).collect()
    }

    pub fn residual(&self, other: &Self) -> Residual<S> {
        Residual::between(&self.flatten(), &other.flatten())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(MNum::is_zero)
    }
}

impl<S: Scalar> Add for MVec3<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a, b, c] = self.0;
        let [d, e, f] = rhs.0;
        MVec3([a + d, b + e, c + f])
    }
}

impl<S: Scalar> Sub for MVec3<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Neg for MVec3<S> {
    type Output = Self;
    fn neg(self) -> Self {
        let [a, b, c] = self.0;
        MVec3([-a, -b, -c])
    }
}

impl<S: Scalar> MMat3<S> {
    pub fn zero() -> Self {
        MMat3::from_fn(|_, _| MNum::zero())
    }

    /// `diag(e, e, e)`, a two-sided identity for the dot product.
    pub fn identity() -> Self {
        MMat3::from_fn(|i, j| if i == j { MNum::e() } else { MNum::zero() })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> MNum<S>) -> Self {
        MMat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn get(&self, i: usize, j: usize) -> &MNum<S> {
        &self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        MMat3::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn flatten(&self) -> Vec<S> {
        self.0
            .iter()
            .flatten()
            .flat_map(|m| [m.re.clone(), m.im.clone()])
            .collect()
    }

    pub fn residual(&self, other: &Self) -> Residual<S> {
        Residual::between(&self.flatten(), &other.flatten())
    }

    /// Zero diagonal and `a_ji = -a_ij`.
    pub fn is_antisymmetric(&self) -> bool {
        (0..3).all(|i| {
            self.0[i][i].is_zero()
                && (0..3).all(|j| self.0[j][i] == -self.0[i][j].clone())
        })
    }

    /// `A·x`, component `i` = `Σ_k conj(a_ik)·x_k`.
    pub fn dot_mv(&self, x: &MVec3<S>) -> MVec3<S> {
        MVec3::from_fn(|i| {
            (0..3).fold(MNum::zero(), |acc, k| acc + &self.0[i][k].conj() * &x.0[k])
        })
    }

    /// `A·B`, entry `(i, j)` = `Σ_k conj(a_ik)·b_kj`.
    pub fn dot_mm(&self, other: &Self) -> Self {
        MMat3::from_fn(|i, j| {
            (0..3).fold(MNum::zero(), |acc, k| acc + &self.0[i][k].conj() * &other.0[k][j])
        })
    }

    pub fn embed(&self) -> RMat6<S> {
        embed_mat(self)
    }
}

impl<S: Scalar> Add for MMat3<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        MMat3::from_fn(|i, j| self.0[i][j].clone() + rhs.0[i][j].clone())
    }
}

impl<S: Scalar> Neg for MMat3<S> {
    type Output = Self;
    fn neg(self) -> Self {
        MMat3::from_fn(|i, j| -self.0[i][j].clone())
    }
}

pub fn dot_mv<S: Scalar>(a: &MMat3<S>, x: &MVec3<S>) -> MVec3<S> {
    a.dot_mv(x)
}

pub fn dot_mm<S: Scalar>(a: &MMat3<S>, b: &MMat3<S>) -> MMat3<S> {
    a.dot_mm(b)
}

pub fn embed_vec<S: Scalar>(x: &MVec3<S>) -> RVec6<S> {
    let flat = x.flatten();
    RVec6(std::array::from_fn(|k| flat[k].clone()))
}

/// Replace each entry `αe + βi` by the block `[[α, β], [β, α]]`.
pub fn embed_mat<S: Scalar>(a: &MMat3<S>) -> RMat6<S> {
    RMat6(std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let entry = &a.0[r / 2][c / 2];
            if r % 2 == c % 2 {
                entry.re.clone()
            } else {
                entry.im.clone()
            }
        })
    }))
}

impl<S: Scalar> RMat6<S> {
    pub fn mul(&self, other: &Self) -> Self {
        RMat6(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..6).fold(S::zero(), |acc, k| acc + self.0[i][k].clone() * other.0[k][j].clone())
            })
        }))
    }

    pub fn mul_vec(&self, x: &RVec6<S>) -> RVec6<S> {
        RVec6(std::array::from_fn(|i| {
            (0..6).fold(S::zero(), |acc, k| acc + self.0[i][k].clone() * x.0[k].clone())
        }))
    }

    /// Inverse of [`embed_mat`]; `None` if some 2×2 block is not of the
    /// symmetric `[[α, β], [β, α]]` form.
    pub fn unembed(&self) -> Option<MMat3<S>> {
        let mut ok = true;
        let m = MMat3::from_fn(|i, j| {
            let (r, c) = (2 * i, 2 * j);
            ok &= self.0[r][c] == self.0[r + 1][c + 1] && self.0[r][c + 1] == self.0[r + 1][c];
            MNum::new(self.0[r][c].clone(), self.0[r][c + 1].clone())
        });
        ok.then_some(m)
    }
}
