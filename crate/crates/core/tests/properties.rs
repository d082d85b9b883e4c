use mrel::lorentz::{build_l, build_m_event, consistency_residual, invert_event, transform, Event4, Velocity};
use mrel::malgebra::{classify, identity_residuals, CHART};
use mrel::mlinalg::{embed_mat, embed_vec};
use mrel::physents::{angmom_consistency, delta_consistency, em_tensor_consistency, em_vector_consistency};
use mrel::physents::{AngMomState, ChargeCurrent, EMField};
use mrel::scalar::{Rational, Scalar};
use mrel::{Error, MMat3, MNum, MVec3};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::from_ratio(n, d))
}

fn mnum() -> impl Strategy<Value = MNum<Rational>> {
    (rational(), rational()).prop_map(|(re, im)| MNum::new(re, im))
}

fn mvec() -> impl Strategy<Value = MVec3<Rational>> {
    prop::array::uniform3(mnum()).prop_map(MVec3)
}

fn mmat() -> impl Strategy<Value = MMat3<Rational>> {
    prop::array::uniform3(prop::array::uniform3(mnum())).prop_map(MMat3)
}

fn triple() -> impl Strategy<Value = [Rational; 3]> {
    prop::array::uniform3(rational())
}

/// Rational unit vectors from the inverse stereographic projection.
fn velocity() -> impl Strategy<Value = Velocity<Rational>> {
    let betas = prop::sample::select(vec![(3, 5), (5, 13), (8, 17), (20, 29)]);
    (-8i64..=8, 1i64..=5, -8i64..=8, 1i64..=5, betas, 0usize..3).prop_map(|(pn, pd, qn, qd, (bn, bd), shift)| {
        let (p, q) = (Rational::from_ratio(pn, pd), Rational::from_ratio(qn, qd));
        let one = Rational::from_i64(1);
        let two = Rational::from_i64(2);
        let n = p.clone() * p.clone() + q.clone() * q.clone();
        let den = n.clone() + one.clone();
        let mut a = [two.clone() * p / den.clone(), two * q / den.clone(), (n - one) / den];
        a.rotate_left(shift);
        let beta = Rational::from_ratio(bn, bd);
        Velocity::new(a.map(|c| c * beta.clone())).unwrap()
    })
}

fn event() -> impl Strategy<Value = Event4<Rational>> {
    (rational(), rational(), rational(), rational()).prop_map(|(x, y, z, t)| Event4::new(x, y, z, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_bilinear(x in mnum(), y in mnum(), z in mnum(), a in rational()) {
        prop_assert_eq!(&(x.clone() + y.clone()) * &z, &x * &z + &y * &z);
        prop_assert_eq!(&z * &(x.clone() + y.clone()), &z * &x + &z * &y);
        prop_assert_eq!(&x.scale(&a) * &y, (&x * &y).scale(&a));
        prop_assert_eq!(&x * &y.scale(&a), (&x * &y).scale(&a));
    }

    #[test]
    fn e_is_a_left_unit(x in mnum()) {
        prop_assert_eq!(&MNum::e() * &x, x.clone());
        prop_assert_eq!(&x * &MNum::e(), x.conj());
    }

    #[test]
    fn elementary_identities_vanish(x in mnum(), y in mnum(), z in mnum(), a in rational()) {
        for (name, r) in identity_residuals(&x, &y, &z, &a) {
            prop_assert!(r.is_zero(), "{} failed", name);
        }
    }

    #[test]
    fn inverse_is_two_sided_and_involutive(x in mnum()) {
        match x.invert() {
            Ok(inv) => {
                prop_assert_eq!(&inv * &x, MNum::e());
                prop_assert_eq!(&x * &inv, MNum::e());
                prop_assert_eq!(inv.invert().unwrap(), x);
            }
            Err(Error::NotInvertible(_)) => prop_assert!(x.re == x.im || x.re == -x.im.clone()),
            Err(other) => prop_assert!(false, "unexpected error {}", other),
        }
    }

    #[test]
    fn dot_is_associative(a in mmat(), b in mmat(), c in mmat(), x in mvec()) {
        prop_assert_eq!(a.dot_mm(&b).dot_mm(&c), a.dot_mm(&b.dot_mm(&c)));
        prop_assert_eq!(a.dot_mm(&b).dot_mv(&x), a.dot_mv(&b.dot_mv(&x)));
    }

    #[test]
    fn dot_is_linear(a in mmat(), x in mvec(), y in mvec(), s in rational()) {
        prop_assert_eq!(a.dot_mv(&(x.clone() + y.clone())), a.dot_mv(&x) + a.dot_mv(&y));
        prop_assert_eq!(a.dot_mv(&x.scale(&s)), a.dot_mv(&x).scale(&s));
    }

    #[test]
    fn embedding_is_a_homomorphism(a in mmat(), b in mmat(), x in mvec()) {
        prop_assert_eq!(embed_mat(&a.dot_mm(&b)), embed_mat(&a).mul(&embed_mat(&b)));
        prop_assert_eq!(embed_vec(&a.dot_mv(&x)), embed_mat(&a).mul_vec(&embed_vec(&x)));
        prop_assert_eq!(embed_mat(&a).unembed(), Some(a));
    }

    #[test]
    fn lorentz_matrix_agrees_with_boost(ev in event(), w in velocity()) {
        prop_assert!(consistency_residual(&ev, &w).is_zero());
    }

    #[test]
    fn inversion_recovers_the_event(ev in event(), w in velocity()) {
        let l = build_l(&w);
        let x = build_m_event(&ev, &w);
        let back = invert_event(&l, &transform(&l, &x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn entities_agree_with_classical_boosts(
        j in triple(), rho in rational(), e in triple(), b in triple(),
        pos in triple(), t in rational(), p in triple(), energy in rational(), w in velocity(),
    ) {
        let cc = ChargeCurrent { j, rho };
        prop_assert!(delta_consistency(&cc, &w).is_zero());
        let f = EMField { e, b };
        prop_assert!(em_vector_consistency(&f, &w).unwrap().is_zero());
        prop_assert!(em_tensor_consistency(&f, &w, false).unwrap().is_zero());
        prop_assert!(em_tensor_consistency(&f, &w, true).unwrap().is_zero());
        let state = AngMomState { pos, t, p, energy };
        prop_assert!(angmom_consistency(&state, &w).is_zero());
    }

    #[test]
    fn failed_verdicts_carry_witnesses(idx in 0usize..8, seed in any::<u64>()) {
        let c = classify(&CHART[idx], 8, seed).unwrap();
        for v in [&c.commutative, &c.associative, &c.two_sided_unit, &c.left_unit, &c.right_unit] {
            prop_assert!(v.holds || v.witness.is_some());
        }
    }
}
