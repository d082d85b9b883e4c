//! Scalar field abstraction shared by exact and floating-point modes.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// A real scalar: either an exact rational or an `f64`.
///
/// Exact arithmetic never rounds; float comparisons always go through
/// [`Scalar::close`] or an explicit tolerance.
pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {
    /// `true` for rational arithmetic.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Nearest value; rationals take the exact binary expansion.
    fn from_f64(x: f64) -> Self;

    fn from_rational(q: &Rational) -> Self;

    /// Square root of a nonnegative value. Rationals return `None` unless the
    /// root is itself rational.
    fn sqrt_exact(&self) -> Option<Self>;

    /// Equality in exact mode, `|a - b| <= 1e-12 * max(1, |a|, |b|)` in float mode.
    fn close(&self, other: &Self) -> bool;

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_f64(x: f64) -> Self {
        x
    }

    fn from_rational(q: &Rational) -> Self {
        Scalar::to_f64(q)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn close(&self, other: &Self) -> bool {
        let scale = 1f64.max(self.abs()).max(other.abs());
        (self - other).abs() <= 1e-12 * scale
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_f64(x: f64) -> Self {
        BigRational::from_float(x).unwrap_or_else(BigRational::zero)
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        // BigRational is kept in lowest terms, so both parts must be squares.
        let root = |n: &BigInt| {
            let r = n.sqrt();
            (&r * &r == *n).then_some(r)
        };
        Some(BigRational::new(root(self.numer())?, root(self.denom())?))
    }

    fn close(&self, other: &Self) -> bool {
        self == other
    }
}

/// Parse `"p/q"`, `"p"` or a decimal literal into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p = BigInt::from_str_radix(p.trim(), 10).ok()?;
        let q = BigInt::from_str_radix(q.trim(), 10).ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Ok(n) = BigInt::from_str_radix(text, 10) {
        return Some(BigRational::from_integer(n));
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int, frac) = body.split_once('.')?;
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{}{}", if int.is_empty() { "0" } else { int }, frac);
    let numer = BigInt::from_str_radix(&digits, 10).ok()?;
    let denom = num_traits::pow(BigInt::from(10u8), frac.len());
    let value = BigRational::new(numer, denom);
    Some(if neg { -value } else { value })
}

/// Convert an `f64` that is known to be a finite binary fraction into an exact rational.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    <BigRational as FromPrimitive>::from_f64(x)
}

/// Largest absolute value among `values`, floored at one.
pub fn scale_of<'a, S: Scalar>(values: impl IntoIterator<Item = &'a S>) -> S {
    values
        .into_iter()
        .fold(S::one(), |acc, v| acc.max_of(v.abs()))
}

/// Difference between two computations together with the magnitude scale used
/// for relative float tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual<S> {
    /// Max-norm of the difference.
    pub diff: S,
    /// `max(1, max |entry|)` over both compared sides.
    pub scale: S,
}

impl<S: Scalar> Residual<S> {
    pub fn is_zero(&self) -> bool {
        self.diff.is_zero()
    }

    /// `diff <= tol * scale`.
    pub fn within(&self, tol: f64) -> bool {
        self.diff.to_f64() <= tol * self.scale.to_f64()
    }

    pub fn relative(&self) -> f64 {
        self.diff.to_f64() / self.scale.to_f64()
    }

    /// Compare two equally long lists of scalars entrywise.
    pub fn between(lhs: &[S], rhs: &[S]) -> Self {
        debug_assert_eq!(lhs.len(), rhs.len());
        let diff = lhs
            .iter()
            .zip(rhs)
            .fold(S::zero(), |acc, (a, b)| acc.max_of((a.clone() - b.clone()).abs()));
        let scale = scale_of(lhs.iter().chain(rhs));
        Residual { diff, scale }
    }

    /// Worst case of two residuals (largest relative difference).
    pub fn worst(self, other: Self) -> Self {
        if other.relative() > self.relative() {
            other
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn exact_sqrt_only_for_squares() {
        assert_eq!(q(9, 25).sqrt_exact(), Some(q(3, 5)));
        assert_eq!(q(16, 25).sqrt_exact(), Some(q(4, 5)));
        assert_eq!(q(2, 1).sqrt_exact(), None);
        assert_eq!(q(-1, 4).sqrt_exact(), None);
        assert_eq!(Rational::zero().sqrt_exact(), Some(Rational::zero()));
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/5"), Some(q(3, 5)));
        assert_eq!(parse_rational(" -5/13 "), Some(q(-5, 13)));
        assert_eq!(parse_rational("0.6"), Some(q(3, 5)));
        assert_eq!(parse_rational("-.25"), Some(q(-1, 4)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn residual_scale_floors_at_one() {
        let r = Residual::between(&[0.5, 0.25], &[0.5, 0.0]);
        assert_eq!(r.diff, 0.25);
        assert_eq!(r.scale, 1.0);
        let r = Residual::between(&[100.0], &[100.5]);
        assert_eq!(r.scale, 100.5);
        assert!(r.within(5e-3));
    }
}
