//! The two-dimensional pseudo-complex algebra 𝕄 with basis `{e, i}`.
//!
//! Products are the bilinear extension of a four-entry basis table. The
//! default table is `ee = e, ei = i, ie = -i, ii = -e`, which makes 𝕄
//! non-commutative, non-associative, and left-unital with unit `e`. The
//! remaining seven sign variants are kept as literal chart data in [`CHART`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sampling;
use crate::scalar::{Rational, Residual, Scalar};

/// `re·e + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MNum<S> {
    pub re: S,
    pub im: S,
}

pub type QNum = MNum<Rational>;

impl<S: Scalar> MNum<S> {
    pub fn new(re: S, im: S) -> Self {
        MNum { re, im }
    }

    pub fn zero() -> Self {
        MNum::new(S::zero(), S::zero())
    }

    pub fn e() -> Self {
        MNum::new(S::one(), S::zero())
    }

    pub fn i() -> Self {
        MNum::new(S::zero(), S::one())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        MNum::new(S::from_i64(re), S::from_i64(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Real scalar multiple `λx`, componentwise.
    pub fn scale(&self, lambda: &S) -> Self {
        MNum::new(lambda.clone() * self.re.clone(), lambda.clone() * self.im.clone())
    }

    /// Product under an arbitrary sign variant.
    pub fn mul_in(&self, other: &Self, variant: &SignVariant) -> Self {
        let [ee, ei, ie, ii] = variant.table;
        let terms = [
            (self.re.clone() * other.re.clone(), ee),
            (self.re.clone() * other.im.clone(), ei),
            (self.im.clone() * other.re.clone(), ie),
            (self.im.clone() * other.im.clone(), ii),
        ];
        terms
            .into_iter()
            .fold(MNum::zero(), |acc, (coef, product)| acc + product.times(coef))
    }

    /// `x* := x·e` under the default table, i.e. `Re(x)e - Im(x)i`.
    pub fn conj(&self) -> Self {
        self.mul_in(&MNum::e(), &SignVariant::M)
    }

    /// `x·e` under the given variant.
    pub fn conj_in(&self, variant: &SignVariant) -> Self {
        self.mul_in(&MNum::e(), variant)
    }

    /// `x⁻¹ = x / Re(x²)`, defined when `Re(x) ≠ ±Im(x)`. Satisfies
    /// `x⁻¹x = xx⁻¹ = e` even though `e` is only a left unit.
    pub fn invert(&self) -> Result<Self> {
        let norm = self.re.clone() * self.re.clone() - self.im.clone() * self.im.clone();
        if norm.is_zero() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        Ok(MNum::new(self.re.clone() / norm.clone(), self.im.clone() / norm))
    }

    pub fn to_f64(&self) -> MNum<f64> {
        MNum::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Max-norm of the componentwise difference.
    pub fn residual(&self, other: &Self) -> Residual<S> {
        Residual::between(
            &[self.re.clone(), self.im.clone()],
            &[other.re.clone(), other.im.clone()],
        )
    }
}

impl<S: Scalar> fmt::Display for MNum<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}e-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}e+{}i", self.re, self.im)
        }
    }
}

impl<S: Scalar> Add for MNum<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        MNum::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<S: Scalar> Sub for MNum<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        MNum::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<S: Scalar> Neg for MNum<S> {
    type Output = Self;
    fn neg(self) -> Self {
        MNum::new(-self.re, -self.im)
    }
}

/// Product in 𝕄 (default table).
impl<S: Scalar> Mul for MNum<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_in(&rhs, &SignVariant::M)
    }
}

impl<'a, S: Scalar> Mul<&'a MNum<S>> for &'a MNum<S> {
    type Output = MNum<S>;
    fn mul(self, rhs: &'a MNum<S>) -> MNum<S> {
        self.mul_in(rhs, &SignVariant::M)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    E,
    I,
}

/// One entry of a basis multiplication table: `±e` or `±i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisProduct {
    pub negative: bool,
    pub basis: Basis,
}

impl BasisProduct {
    pub const E: BasisProduct = BasisProduct { negative: false, basis: Basis::E };
    pub const NEG_E: BasisProduct = BasisProduct { negative: true, basis: Basis::E };
    pub const I: BasisProduct = BasisProduct { negative: false, basis: Basis::I };
    pub const NEG_I: BasisProduct = BasisProduct { negative: true, basis: Basis::I };

    fn times<S: Scalar>(self, coef: S) -> MNum<S> {
        let coef = if self.negative { -coef } else { coef };
        match self.basis {
            Basis::E => MNum::new(coef, S::zero()),
            Basis::I => MNum::new(S::zero(), coef),
        }
    }

    pub fn as_mnum<S: Scalar>(self) -> MNum<S> {
        self.times(S::one())
    }
}

impl fmt::Display for BasisProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        let basis = match self.basis {
            Basis::E => "e",
            Basis::I => "i",
        };
        write!(f, "{sign}{basis}")
    }
}

/// A two-dimensional algebra keyed by a sign triple, with basis table
/// `[ee, ei, ie, ii]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignVariant {
    pub key: [Sign; 3],
    pub table: [BasisProduct; 4],
}

use BasisProduct as P;
use Sign::{Minus as N, Plus as Y};

/// The eight sign-variant tables, in chart column order.
pub const CHART: [SignVariant; 8] = [
    SignVariant { key: [Y, Y, Y], table: [P::E, P::I, P::NEG_I, P::NEG_E] },
    SignVariant { key: [Y, N, Y], table: [P::E, P::I, P::I, P::E] },
    SignVariant { key: [N, Y, Y], table: [P::NEG_E, P::NEG_I, P::NEG_I, P::NEG_E] },
    SignVariant { key: [N, N, Y], table: [P::NEG_E, P::NEG_I, P::I, P::E] },
    SignVariant { key: [Y, Y, N], table: [P::E, P::NEG_I, P::I, P::NEG_E] },
    SignVariant { key: [Y, N, N], table: [P::E, P::NEG_I, P::NEG_I, P::E] },
    SignVariant { key: [N, Y, N], table: [P::NEG_E, P::I, P::I, P::NEG_E] },
    SignVariant { key: [N, N, N], table: [P::NEG_E, P::I, P::NEG_I, P::E] },
];

impl SignVariant {
    /// The algebra 𝕄 itself, key `+++`.
    pub const M: SignVariant = CHART[0];

    pub fn key_string(&self) -> String {
        self.key.iter().map(|s| s.symbol()).collect()
    }

    pub fn from_key(key: &str) -> Option<SignVariant> {
        CHART.iter().copied().find(|v| v.key_string() == key)
    }

    /// `"ee=e ei=i ie=-i ii=-e"`.
    pub fn table_string(&self) -> String {
        let names = ["ee", "ei", "ie", "ii"];
        names
            .iter()
            .zip(self.table)
            .map(|(n, p)| format!("{n}={p}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn mul<S: Scalar>(&self, x: &MNum<S>, y: &MNum<S>) -> MNum<S> {
        x.mul_in(y, self)
    }
}

/// Counterexample or certificate attached to a classification flag.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `x·y ≠ y·x`.
    NonCommuting(QNum, QNum),
    /// `(x·y)·z ≠ x·(y·z)`.
    NonAssociative(QNum, QNum, QNum),
    /// The element acting as unit.
    Unit(QNum),
    /// No unit exists. `candidate` is the only element that could serve
    /// (forced by the product with `e`), and `element` is where it fails.
    /// `candidate` is `None` when even the `e`-equation has no solution.
    NoUnit { candidate: Option<QNum>, element: QNum },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn yes(witness: Option<Witness>) -> Self {
        Verdict { holds: true, witness }
    }

    fn no(witness: Witness) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }
}

/// Structural flags of a sign-variant algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraClassification {
    pub variant: SignVariant,
    pub commutative: Verdict,
    pub associative: Verdict,
    pub two_sided_unit: Verdict,
    pub left_unit: Verdict,
    pub right_unit: Verdict,
}

impl AlgebraClassification {
    pub fn is_commutative(&self) -> bool {
        self.commutative.holds
    }

    pub fn is_associative(&self) -> bool {
        self.associative.holds
    }

    pub fn has_two_sided_unit(&self) -> bool {
        self.two_sided_unit.holds
    }

    pub fn has_left_unit(&self) -> bool {
        self.left_unit.holds
    }

    pub fn has_right_unit(&self) -> bool {
        self.right_unit.holds
    }

    pub fn unit(&self) -> Option<&QNum> {
        match &self.two_sided_unit.witness {
            Some(Witness::Unit(u)) if self.two_sided_unit.holds => Some(u),
            _ => None,
        }
    }

    /// Whether the algebra is isomorphic to ℂ: commutative, associative,
    /// unital, and some basis element `w` not parallel to the unit `u` obeys
    /// `w² = p·u + q·w` with negative discriminant `q² + 4p`.
    pub fn is_complex_like(&self) -> bool {
        if !(self.is_commutative() && self.is_associative()) {
            return false;
        }
        let Some(u) = self.unit().cloned() else {
            return false;
        };
        let w = if u.im.is_zero() { QNum::i() } else { QNum::e() };
        let w2 = w.mul_in(&w, &self.variant);
        // Solve w2 = p u + q w.
        let Some((p, q)) = solve2(
            [[u.re.clone(), w.re.clone()], [u.im.clone(), w.im.clone()]],
            [w2.re, w2.im],
        ) else {
            return false;
        };
        let disc = q.clone() * q + Rational::from_i64(4) * p;
        disc.is_negative()
    }
}

/// Cramer's rule for a 2×2 system; `None` when singular.
fn solve2(m: [[Rational; 2]; 2], rhs: [Rational; 2]) -> Option<(Rational, Rational)> {
    let [[a, b], [c, d]] = m;
    let det = a.clone() * d.clone() - b.clone() * c.clone();
    if det.is_zero() {
        return None;
    }
    let [r0, r1] = rhs;
    let p = (r0.clone() * d - b * r1.clone()) / det.clone();
    let q = (a * r1 - c * r0) / det;
    Some((p, q))
}

/// Unit search on one side. `left == true` looks for `u` with `u·x = x`.
fn find_unit(v: &SignVariant, left: bool) -> Verdict {
    let e = QNum::e();
    let i = QNum::i();
    // u = p e + q i; the product of u with e is linear in (p, q).
    let pe = e.mul_in(&e, v);
    let qe = if left { i.mul_in(&e, v) } else { e.mul_in(&i, v) };
    let solved = solve2([[pe.re, qe.re], [pe.im, qe.im]], [Rational::from_i64(1), Rational::from_i64(0)]);
    let Some((p, q)) = solved else {
        return Verdict::no(Witness::NoUnit { candidate: None, element: e });
    };
    let u = QNum::new(p, q);
    let act = |x: &QNum| if left { u.mul_in(x, v) } else { x.mul_in(&u, v) };
    for x in [&e, &i] {
        if act(x) != *x {
            return Verdict::no(Witness::NoUnit { candidate: Some(u.clone()), element: x.clone() });
        }
    }
    Verdict::yes(Some(Witness::Unit(u)))
}

/// Classify a sign variant by exhaustive basis checks (sufficient by
/// bilinearity) plus `sample_count` seeded random exact elements as a guard.
pub fn classify(v: &SignVariant, sample_count: usize, seed: u64) -> Result<AlgebraClassification> {
    if sample_count == 0 {
        return Err(Error::InvalidArgument("sample_count must be at least 1".into()));
    }
    let basis = [QNum::e(), QNum::i()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let randoms: Vec<[QNum; 3]> = (0..sample_count)
        .map(|_| std::array::from_fn(|_| sampling::rational_mnum(&mut rng)))
        .collect();

    let mut commutative = Verdict::yes(None);
    let pairs = basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
        .chain(randoms.iter().map(|[x, y, _]| (x.clone(), y.clone())));
    for (x, y) in pairs {
        if x.mul_in(&y, v) != y.mul_in(&x, v) {
            commutative = Verdict::no(Witness::NonCommuting(x, y));
            break;
        }
    }

    let mut associative = Verdict::yes(None);
    let mut basis_triples = Vec::new();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                basis_triples.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    for [x, y, z] in basis_triples.into_iter().chain(randoms.iter().cloned()) {
        if x.mul_in(&y, v).mul_in(&z, v) != x.mul_in(&y.mul_in(&z, v), v) {
            associative = Verdict::no(Witness::NonAssociative(x, y, z));
            break;
        }
    }

    let mut left_unit = find_unit(v, true);
    let mut right_unit = find_unit(v, false);
    for (verdict, left) in [(&mut left_unit, true), (&mut right_unit, false)] {
        let Some(Witness::Unit(u)) = verdict.witness.clone() else {
            continue;
        };
        for [x, _, _] in &randoms {
            let got = if left { u.mul_in(x, v) } else { x.mul_in(&u, v) };
            if got != *x {
                *verdict = Verdict::no(Witness::NoUnit { candidate: Some(u.clone()), element: x.clone() });
                break;
            }
        }
    }

    let two_sided_unit = match (&left_unit, &right_unit) {
        (Verdict { holds: true, witness: Some(Witness::Unit(l)) }, Verdict { holds: true, .. }) => {
            // A left and a right unit always coincide: l = l·r = r.
            Verdict::yes(Some(Witness::Unit(l.clone())))
        }
        (Verdict { holds: true, witness: Some(Witness::Unit(u)) }, other)
        | (other, Verdict { holds: true, witness: Some(Witness::Unit(u)) }) => {
            let element = match &other.witness {
                Some(Witness::NoUnit { element, .. }) => element.clone(),
                _ => QNum::i(),
            };
            Verdict::no(Witness::NoUnit { candidate: Some(u.clone()), element })
        }
        (failed, _) => Verdict::no(failed.witness.clone().expect("failed verdict carries a witness")),
    };

    Ok(AlgebraClassification {
        variant: *v,
        commutative,
        associative,
        two_sided_unit,
        left_unit,
        right_unit,
    })
}

/// Named residuals of the fifteen elementary identities of 𝕄, evaluated at
/// `(x, y, z)` and real scalar `lambda`. Every residual is identically zero.
pub fn identity_residuals<S: Scalar>(
    x: &MNum<S>,
    y: &MNum<S>,
    z: &MNum<S>,
    lambda: &S,
) -> Vec<(&'static str, Residual<S>)> {
    let e = MNum::<S>::e();
    let i = MNum::<S>::i();
    let zero = MNum::<S>::zero();
    let two = S::from_i64(2);
    let xs = x.conj();
    let ys = y.conj();
    let xy = x * y;
    let yx = y * x;
    let pairs = |lhs: &[&MNum<S>], rhs: &[&MNum<S>]| {
        let flat = |v: &[&MNum<S>]| v.iter().flat_map(|m| [m.re.clone(), m.im.clone()]).collect::<Vec<_>>();
        Residual::between(&flat(lhs), &flat(rhs))
    };
    let scalars = |lhs: &[S], rhs: &[S]| Residual::between(lhs, rhs);

    let sq = x * x;
    vec![
        (
            "real_scaling",
            scalars(
                &[lambda.clone() * x.re.clone(), lambda.clone() * x.im.clone()],
                &[x.scale(lambda).re, x.scale(lambda).im],
            ),
        ),
        ("left_unit", pairs(&[&(&e * x)], &[x])),
        (
            "basis_parts",
            scalars(
                &[e.re.clone(), e.im.clone(), i.re.clone(), i.im.clone(), zero.re.clone(), zero.im.clone()],
                &[S::one(), S::zero(), S::zero(), S::one(), S::zero(), S::zero()],
            ),
        ),
        ("basis_conjugates", pairs(&[&e.conj(), &i.conj()], &[&e, &(-i.clone())])),
        (
            "conj_formula",
            pairs(&[&xs], &[&(e.scale(&x.re) - i.scale(&x.im))]),
        ),
        ("conj_parts", scalars(&[xs.re.clone(), xs.im.clone()], &[x.re.clone(), -x.im.clone()])),
        (
            "product_formula",
            scalars(
                &[xy.re.clone(), xy.im.clone()],
                &[
                    x.re.clone() * y.re.clone() - x.im.clone() * y.im.clone(),
                    x.re.clone() * y.im.clone() - x.im.clone() * y.re.clone(),
                ],
            ),
        ),
        ("left_swap", pairs(&[&(x * &(y * z))], &[&(y * &(x * z))])),
        ("conj_reassociation", pairs(&[&(&xs * &(y * z))], &[&(&xy * z)])),
        ("outer_swap", pairs(&[&(&xy * z)], &[&(&(z * y) * x)])),
        (
            "conj_sum_difference",
            pairs(
                &[&(x.clone() - xs.clone()), &(x.clone() + xs.clone())],
                &[&i.scale(&(two.clone() * x.im.clone())), &e.scale(&(two.clone() * x.re.clone()))],
            ),
        ),
        ("conj_involution", pairs(&[&xs.conj()], &[x])),
        (
            "conj_exchange",
            pairs(&[&(x * &ys), &(&xs * y)], &[&(y * &xs), &(&ys * x)]),
        ),
        (
            "product_reversal",
            pairs(&[&xy, &xy], &[&(&ys * &xs), &yx.conj()]),
        ),
        (
            "square",
            scalars(
                &[sq.im.clone(), sq.re.clone()],
                &[S::zero(), x.re.clone() * x.re.clone() - x.im.clone() * x.im.clone()],
            ),
        ),
    ]
}

/// Seeded exact classification with a fresh generator, convenience for reports.
pub fn classify_chart(sample_count: usize, seed: u64) -> Result<Vec<AlgebraClassification>> {
    CHART.iter().map(|v| classify(v, sample_count, seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn m(re: i64, im: i64) -> QNum {
        QNum::from_ints(re, im)
    }

    #[test]
    fn basis_products() {
        let (e, i) = (QNum::e(), QNum::i());
        assert_eq!(&e * &e, e);
        assert_eq!(&e * &i, i);
        assert_eq!(&i * &e, -i.clone());
        assert_eq!(&i * &i, -e.clone());
    }

    #[test]
    fn zero_annihilates() {
        let y = m(3, -7);
        assert_eq!(&QNum::zero() * &y, QNum::zero());
        assert_eq!(&y * &QNum::zero(), QNum::zero());
    }

    #[test]
    fn square_of_two_e_plus_i() {
        // 4ee + 2ei + 2ie + ii = 4e + 2i - 2i - e
        let x = m(2, 1);
        let expanded = m(4, 0) + m(0, 2) + m(0, -2) + m(-1, 0);
        assert_eq!(&x * &x, expanded);
        assert_eq!(&x * &x, m(3, 0));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(QNum::e().conj(), QNum::e());
        assert_eq!(QNum::i().conj(), -QNum::i());
        assert_eq!(m(3, 4).conj(), m(3, -4));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(QNum::e().invert().unwrap(), QNum::e());
        let x = m(2, 1);
        let inv = x.invert().unwrap();
        assert_eq!(inv, QNum::new(q(2, 3), q(1, 3)));
        assert_eq!(&inv * &x, QNum::e());
        assert_eq!(&x * &inv, QNum::e());
        assert!(matches!(m(1, 1).invert(), Err(Error::NotInvertible(_))));
        assert!(matches!(m(2, -2).invert(), Err(Error::NotInvertible(_))));
        assert!(QNum::zero().invert().is_err());
    }

    #[test]
    fn chart_default_column() {
        let v = SignVariant::M;
        assert_eq!(v.key_string(), "+++");
        assert_eq!(v.table_string(), "ee=e ei=i ie=-i ii=-e");
        assert_eq!(SignVariant::from_key("+-+").unwrap().table_string(), "ee=e ei=i ie=i ii=e");
        assert_eq!(SignVariant::from_key("---").unwrap().table_string(), "ee=-e ei=i ie=-i ii=e");
        assert!(SignVariant::from_key("+/-").is_none());
    }

    #[test]
    fn chart_keys_are_distinct() {
        let mut keys: Vec<_> = CHART.iter().map(|v| v.key_string()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 8);
    }

    #[test]
    fn classify_default_algebra() {
        let c = classify(&SignVariant::M, 50, 1).unwrap();
        assert!(!c.is_commutative());
        assert!(!c.is_associative());
        assert!(!c.has_two_sided_unit());
        assert!(c.has_left_unit());
        assert!(!c.has_right_unit());
        assert_eq!(c.left_unit.witness, Some(Witness::Unit(QNum::e())));
        assert_eq!(c.commutative.witness, Some(Witness::NonCommuting(QNum::e(), QNum::i())));
        match c.associative.witness {
            Some(Witness::NonAssociative(x, y, z)) => {
                assert_ne!(&(&x * &y) * &z, &x * &(&y * &z));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn classify_split_complex_variant() {
        let v = SignVariant::from_key("+-+").unwrap();
        let c = classify(&v, 50, 1).unwrap();
        assert!(c.is_commutative());
        assert!(c.is_associative());
        assert!(c.has_two_sided_unit());
        assert_eq!(c.unit(), Some(&QNum::e()));
        assert!(!c.is_complex_like());
    }

    #[test]
    fn complex_table_would_be_detected() {
        let complex = SignVariant { key: [Y, Y, Y], table: [P::E, P::I, P::I, P::NEG_E] };
        let c = classify(&complex, 20, 3).unwrap();
        assert!(c.is_commutative() && c.is_associative() && c.has_two_sided_unit());
        assert!(c.is_complex_like());
        assert!(CHART.iter().all(|v| v.table != complex.table));
    }

    #[test]
    fn false_flags_carry_witnesses() {
        for c in classify_chart(20, 9).unwrap() {
            for verdict in [&c.commutative, &c.associative, &c.two_sided_unit, &c.left_unit, &c.right_unit] {
                if !verdict.holds {
                    assert!(verdict.witness.is_some(), "{} lacks witness", c.variant.key_string());
                }
            }
        }
    }

    #[test]
    fn classify_rejects_zero_samples() {
        assert!(classify(&SignVariant::M, 0, 0).is_err());
    }

    #[test]
    fn identities_vanish_on_basis() {
        let basis = [QNum::e(), QNum::i()];
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    for (name, r) in identity_residuals(x, y, z, &q(-3, 7)) {
                        assert!(r.is_zero(), "{name} fails at {x}, {y}, {z}");
                    }
                }
            }
        }
    }
}
