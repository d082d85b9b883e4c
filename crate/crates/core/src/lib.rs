//! Verification toolkit for the pseudo-complex algebra 𝕄 and the three-dimensional
//! time model of special relativity built on top of it.
//!
//! Every routine is generic over [`Scalar`], so the same code runs with exact
//! rationals (zero-tolerance identity checks) or with `f64` (numerical checks).
//!
//! * [`malgebra`]: the scalar algebra, conjugation, inverses and the eight
//!   sign-variant algebras.
//! * [`mlinalg`]: 3×3 matrices over 𝕄 with the conjugated dot product and the ℝ⁶ embedding.
//! * [`lorentz`]: the classical boost, the 𝕄-Lorentz matrix and their consistency.
//! * [`physents`]: charge-current, electromagnetic and angular-momentum entities.
//! * [`fieldcalc`]: finite-difference field calculus on the six coordinates
//!   `(x, y, z, t_x, t_y, t_z)`.
//! * [`sampling`]: seeded generators used by the property suites.

pub mod error;
pub mod fieldcalc;
pub mod lorentz;
pub mod malgebra;
pub mod mlinalg;
pub mod physents;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
pub use malgebra::{MNum, SignVariant};
pub use mlinalg::{MMat3, MVec3};
pub use scalar::{Rational, Scalar};
