//! The verification suites. Each check draws its inputs from a generator
//! seeded by `(seed, check_id)`, so selecting or reordering suites never
//! changes any individual record.

use mrel::fieldcalc::{
    self, a1_sum, a2_sum, continuity_identity, divergence_check, fd_partial, identity_a1_curl,
    identity_a1_curl_permuted, identity_a2_curl, invariance_check, maxwell_sums, newtonian_check, radial_residual,
    spacetime_of, EmFns, FdConfig, FdOrder, RadialFns, RestrictedPoint, SpacetimeFns, SumKind,
};
use mrel::lorentz::{
    build_l, build_m_event, composition_gap, consistency_residual, invert_event, lorentz_r6_display, transform,
    Event4, Velocity,
};
use mrel::malgebra::identity_residuals;
use mrel::mlinalg::{embed_mat, embed_vec, RMat6};
use mrel::physents::{
    angmom_consistency, classical_angmom_residual, delta_consistency, em_tensor_consistency, em_vector_consistency,
};
use mrel::sampling;
use mrel::scalar::{Rational, Residual};
use mrel::{MNum, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::config::{Mode, Suite, SuiteConfig};
use crate::report::{Check, Record};
use crate::variants;

/// Float tolerance of the algebraic suites, relative to the magnitude scale.
pub const ALGEBRA_FLOAT_TOL: f64 = 1e-12;
/// Float tolerance of the entity consistency checks.
pub const ENTITY_FLOAT_TOL: f64 = 1e-9;
/// Upper bound on the tolerance of the Newtonian-limit check.
pub const NEWTONIAN_TOL: f64 = 1e-6;
/// Lower bound the composition gap of the stored witness must exceed.
pub const COMPOSITION_GAP_MIN: f64 = 0.01;

pub fn check_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let digest = Sha256::new().chain_update(seed.to_le_bytes()).chain_update(id.as_bytes()).finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

fn tolerance<S: Scalar>(float_tol: f64) -> f64 {
    if S::EXACT {
        0.0
    } else {
        float_tol
    }
}

/// Exact mode reports the raw difference, float mode the relative one.
fn measure<S: Scalar>(r: &Residual<S>) -> f64 {
    if S::EXACT {
        r.diff.to_f64()
    } else {
        r.relative()
    }
}

fn flat6<S: Scalar>(m: &RMat6<S>) -> Vec<S> {
    m.0.iter().flatten().cloned().collect()
}

fn beta_label(b: &Rational) -> String {
    b.to_string().replace('/', "_")
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<Record> {
    match (suite, cfg.mode) {
        (Suite::Algebra, Mode::Exact) => algebra::<Rational>(cfg),
        (Suite::Algebra, Mode::Float) => algebra::<f64>(cfg),
        (Suite::Linalg, Mode::Exact) => linalg::<Rational>(cfg),
        (Suite::Linalg, Mode::Float) => linalg::<f64>(cfg),
        (Suite::Lorentz, Mode::Exact) => lorentz::<Rational>(cfg),
        (Suite::Lorentz, Mode::Float) => lorentz::<f64>(cfg),
        (Suite::Entities, Mode::Exact) => entities::<Rational>(cfg),
        (Suite::Entities, Mode::Float) => entities::<f64>(cfg),
        (Suite::Fields, _) => fields(cfg),
        (Suite::Variants, _) => variant_records(cfg),
    }
}

const IDENTITY_ANCHORS: [(&str, &str); 15] = [
    ("real_scaling", "λ(a e + b i) = λa e + λb i"),
    ("left_unit", "e·x = x"),
    ("basis_parts", "e = 1e+0i, i = 0e+1i, 0 = 0e+0i"),
    ("basis_conjugates", "e* = e, i* = -i"),
    ("conj_formula", "x* = Re(x) e - Im(x) i"),
    ("conj_parts", "Re(x*) = Re(x), Im(x*) = -Im(x)"),
    ("product_formula", "xy = (ac - bd) e + (ad - bc) i"),
    ("left_swap", "x(yz) = y(xz)"),
    ("conj_reassociation", "x*(yz) = (xy)z"),
    ("outer_swap", "(xy)z = (zy)x"),
    ("conj_sum_difference", "x - x* = 2 Im(x) i, x + x* = 2 Re(x) e"),
    ("conj_involution", "(x*)* = x"),
    ("conj_exchange", "xy* = yx*, x*y = y*x"),
    ("product_reversal", "xy = y*x* = (yx)*"),
    ("square", "x² = (Re(x)² - Im(x)²) e"),
];

fn algebra<S: Scalar>(cfg: &SuiteConfig) -> Vec<Record> {
    let tol = tolerance::<S>(ALGEBRA_FLOAT_TOL);
    let mut records = Vec::new();

    // All identities share one input stream so every triple feeds every identity.
    let mut rng = check_rng(cfg.seed, "malgebra.identity");
    let mut checks: Vec<Check> =
        IDENTITY_ANCHORS.iter().map(|(name, anchor)| Check::new(format!("malgebra.identity.{name}"), *anchor, tol)).collect();
    let basis = [MNum::<S>::e(), MNum::i()];
    let mut triples = Vec::new();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                triples.push((a.clone(), b.clone(), c.clone(), S::one()));
            }
        }
    }
    for _ in 0..cfg.samples {
        triples.push((sampling::mnum(&mut rng), sampling::mnum(&mut rng), sampling::mnum(&mut rng), sampling::scalar(&mut rng)));
    }
    for t in &triples {
        for (check, (name, r)) in checks.iter_mut().zip(identity_residuals(&t.0, &t.1, &t.2, &t.3)) {
            debug_assert!(check.id().ends_with(name));
            check.input(t);
            check.observe(measure(&r));
        }
    }
    records.extend(checks.into_iter().map(Check::finish));

    let id = "malgebra.inverse.two_sided";
    let mut rng = check_rng(cfg.seed, id);
    let mut check = Check::new(id, "x⁻¹x = xx⁻¹ = e", tol);
    for _ in 0..cfg.samples {
        let x: MNum<S> = sampling::mnum(&mut rng);
        check.input(&x);
        match x.invert() {
            Ok(inv) => {
                let r = (&inv * &x).residual(&MNum::e()).worst((&x * &inv).residual(&MNum::e()));
                check.observe(measure(&r));
            }
            Err(_) if x.re == x.im || x.re == -x.im.clone() => check.observe(0.0),
            Err(e) => check.fail(e.to_string()),
        }
    }
    records.push(check.finish());

    let id = "malgebra.inverse.singular_iff";
    let mut rng = check_rng(cfg.seed, id);
    let mut check = Check::new(id, "x⁻¹ fails iff Re(x) = ±Im(x)", 0.0);
    for k in 0..cfg.samples {
        let mut x: MNum<S> = sampling::mnum(&mut rng);
        match k % 3 {
            0 => x.im = x.re.clone(),
            1 => x.im = -x.re.clone(),
            _ => {}
        }
        check.input(&x);
        let singular = x.re == x.im || x.re == -x.im.clone();
        check.observe(if x.invert().is_err() == singular { 0.0 } else { 1.0 });
    }
    records.push(check.finish());
    records
}

fn linalg<S: Scalar>(cfg: &SuiteConfig) -> Vec<Record> {
    let tol = tolerance::<S>(ALGEBRA_FLOAT_TOL);
    let mut records = Vec::new();

    let id = "mlinalg.dot_mm.associativity";
    let mut rng = check_rng(cfg.seed, id);
    let mut check = Check::new(id, "(A·B)·C = A·(B·C)", tol);
    for _ in 0..cfg.samples {
        let (a, b, c) = (sampling::mmat::<S, _>(&mut rng), sampling::mmat(&mut rng), sampling::mmat(&mut rng));
        check.input(&(&a, &b, &c));
        check.observe(measure(&a.dot_mm(&b).dot_mm(&c).residual(&a.dot_mm(&b.dot_mm(&c)))));
    }
    records.push(check.finish());

    let id = "mlinalg.dot_mv.action_compatibility";
    let mut rng = check_rng(cfg.seed, id);
    let mut check = Check::new(id, "(A·B)·x = A·(B·x)", tol);
    for _ in 0..cfg.samples {
        let (a, b, x) = (sampling::mmat::<S, _>(&mut rng), sampling::mmat(&mut rng), sampling::mvec(&mut rng));
        check.input(&(&a, &b, &x));
        check.observe(measure(&a.dot_mm(&b).dot_mv(&x).residual(&a.dot_mv(&b.dot_mv(&x)))));
    }
    records.push(check.finish());

    let id = "mlinalg.embed.dot_mm_homomorphism";
    let mut rng = check_rng(cfg.seed, id);
    let mut check = Check::new(id, "embed(A·B) = embed(A) embed(B)", tol);
    for _ in 0..cfg.samples {
        let (a, b) = (sampling::mmat::<S, _>(&mut rng), sampling::mmat(&mut rng));
        check.input(&(&a, &b));
        let lhs = flat6(&embed_mat(&a.dot_mm(&b)));
        let rhs = flat6(&embed_mat(&a).mul(&embed_mat(&b)));
        check.observe(measure(&Residual::between(&lhs, &rhs)));
    }
    records.push(check.finish());

    let id = "mlinalg.embed.dot_mv_homomorphism";
    let mut rng = check_rng(cfg.seed, id);
    let mut check = Check::new(id, "embed(A·x) = embed(A) embed(x)", tol);
    for _ in 0..cfg.samples {
        let (a, x) = (sampling::mmat::<S, _>(&mut rng), sampling::mvec(&mut rng));
        check.input(&(&a, &x));
        let lhs = embed_vec(&a.dot_mv(&x)).0;
        let rhs = embed_mat(&a).mul_vec(&embed_vec(&x)).0;
        check.observe(measure(&Residual::between(&lhs, &rhs)));
    }
    records.push(check.finish());

    for beta in &cfg.betas {
        let id = format!("mlinalg.embed.lorentz_display_beta_{}", beta_label(beta));
        let mut check = Check::new(&id, "embed(L) = [[δ+(γ-1)αα, -βγαα], [-βγαα, δ+(γ-1)αα]] blocks", tol);
        // Rational unit directions: two axes and two (2, 3, 6)/7 permutations.
        let directions = [([1, 0, 0], 1), ([0, 1, 0], 1), ([2, 3, 6], 7), ([-6, 2, 3], 7)]
            .map(|(d, n): ([i64; 3], i64)| d.map(|c| Rational::from_ratio(c, n)));
        for dir in directions {
            let v = dir.map(|c| S::from_rational(&(c * beta.clone())));
            check.input(&v);
            match Velocity::new(v) {
                Ok(w) => {
                    let r = Residual::between(&flat6(&build_l(&w).mat.embed()), &flat6(&lorentz_r6_display(&w)));
                    check.observe(measure(&r));
                }
                Err(e) => check.fail(e.to_string()),
            }
        }
        records.push(check.finish());
    }
    records
}

fn lorentz<S: Scalar>(cfg: &SuiteConfig) -> Vec<Record> {
    let tol = tolerance::<S>(ALGEBRA_FLOAT_TOL);
    let mut records = Vec::new();

    let id = "lorentz.consistency.random";
    let mut rng = check_rng(cfg.seed, id);
    let mut check = Check::new(id, "L·x = x' with x' from the classical boost", tol);
    for _ in 0..cfg.samples {
        let (w, ev) = (sampling::velocity::<S, _>(&mut rng), sampling::event::<S, _>(&mut rng));
        check.input(&(w.components(), &ev));
        check.observe(measure(&consistency_residual(&ev, &w)));
    }
    records.push(check.finish());

    for beta in &cfg.betas {
        let id = format!("lorentz.consistency.beta_{}", beta_label(beta));
        let mut rng = check_rng(cfg.seed, &id);
        let mut check = Check::new(&id, "L·x = x' with x' from the classical boost", tol);
        for _ in 0..cfg.samples.min(50) {
            let dir = sampling::rational_direction(&mut rng);
            let v = dir.map(|c| S::from_rational(&(c * beta.clone())));
            let ev = sampling::event::<S, _>(&mut rng);
            check.input(&(&v, &ev));
            match Velocity::new(v) {
                Ok(w) => check.observe(measure(&consistency_residual(&ev, &w))),
                Err(e) => check.fail(e.to_string()),
            }
        }
        records.push(check.finish());
    }

    let id = "lorentz.inversion.random";
    let mut rng = check_rng(cfg.seed, id);
    let mut check = Check::new(id, "conj(L·conj(L·x)) = x", tol);
    for _ in 0..cfg.samples {
        let (w, ev) = (sampling::velocity::<S, _>(&mut rng), sampling::event::<S, _>(&mut rng));
        check.input(&(w.components(), &ev));
        let l = build_l(&w);
        let x = build_m_event(&ev, &w);
        match transform(&l, &x).and_then(|xp| invert_event(&l, &xp)) {
            Ok(back) => check.observe(measure(&back.vec.residual(&x.vec))),
            Err(e) => check.fail(e.to_string()),
        }
    }
    records.push(check.finish());

    // The composed velocity of perpendicular boosts has an irrational γ, so
    // this witness is evaluated in floating point in both modes.
    let id = "lorentz.composition_gap.perpendicular_witness";
    let mut check = Check::above(id, "|L(w_bc)·L(w_ab)·x - x_ac| > 0", COMPOSITION_GAP_MIN);
    let (w_ab, w_bc, ev) = ([0.6, 0.0, 0.0], [0.0, 0.6, 0.0], Event4::new(1.0, 1.0, 0.0, 1.0));
    check.input(&(w_ab, w_bc, &ev));
    check.outcome(Velocity::new(w_ab).and_then(|a| composition_gap(&a, &Velocity::new(w_bc)?, &ev)));
    records.push(check.finish());

    let id = "lorentz.composition_gap.collinear";
    let mut check = Check::new(id, "|L(w_bc)·L(w_ab)·x - x_ac| = 0 for parallel boosts", tol);
    let three_fifths = S::from_ratio(3, 5);
    let v = [three_fifths, S::zero(), S::zero()];
    let ev = Event4::new(S::one(), S::zero(), S::zero(), S::one());
    check.input(&(&v, &ev));
    check.outcome(Velocity::new(v.clone()).and_then(|a| composition_gap(&a, &a, &ev)).map(|g| g.to_f64()));
    records.push(check.finish());
    records
}

fn entities<S: Scalar>(cfg: &SuiteConfig) -> Vec<Record> {
    let tol = tolerance::<S>(ENTITY_FLOAT_TOL);
    let mut records = Vec::new();
    let mut run = |id: &str, anchor: &str, case: &mut dyn FnMut(&mut ChaCha8Rng, &mut Check)| {
        let mut rng = check_rng(cfg.seed, id);
        let mut check = Check::new(id, anchor, tol);
        for _ in 0..cfg.samples {
            case(&mut rng, &mut check);
        }
        records.push(check.finish());
    };

    run("physents.delta.consistency", "L·δ = δ' with (j', ρ') boosted classically", &mut |rng, check| {
        let (cc, w) = (sampling::charge_current::<S, _>(rng), sampling::velocity::<S, _>(rng));
        check.input(&(&cc, w.components()));
        check.observe(measure(&delta_consistency(&cc, &w)));
    });
    run("physents.em_vector.consistency", "L·F⃗ = F⃗' with F' = ΛFΛ⁻¹", &mut |rng, check| {
        let (f, w) = (sampling::em_field::<S, _>(rng), sampling::velocity::<S, _>(rng));
        check.input(&(&f, w.components()));
        check.outcome(em_vector_consistency(&f, &w).map(|r| measure(&r)));
    });
    run("physents.em_tensor.consistency", "L·𝓕·L = 𝓕' with F' = ΛFΛ⁻¹", &mut |rng, check| {
        let (f, w) = (sampling::em_field::<S, _>(rng), sampling::velocity::<S, _>(rng));
        check.input(&(&f, w.components()));
        check.outcome(em_tensor_consistency(&f, &w, false).map(|r| measure(&r)));
    });
    run("physents.em_tensor_dual.consistency", "L·𝓕₁·L = 𝓕₁' with F' = ΛFΛ⁻¹", &mut |rng, check| {
        let (f, w) = (sampling::em_field::<S, _>(rng), sampling::velocity::<S, _>(rng));
        check.input(&(&f, w.components()));
        check.outcome(em_tensor_consistency(&f, &w, true).map(|r| measure(&r)));
    });
    run("physents.angmom.consistency", "L·𝓙·L = 𝓙' with boosted (x, t) and (P, E)", &mut |rng, check| {
        let (s, w) = (sampling::angmom_state::<S, _>(rng), sampling::velocity::<S, _>(rng));
        check.input(&(&s, w.components()));
        check.observe(measure(&angmom_consistency(&s, &w)));
    });
    run("physents.angmom.classical_tensor", "ΛJΛ⁻¹ = J built from boosted (x, t) and (P, E)", &mut |rng, check| {
        let (s, w) = (sampling::angmom_state::<S, _>(rng), sampling::velocity::<S, _>(rng));
        check.input(&(&s, w.components()));
        check.observe(measure(&classical_angmom_residual(&s, &w)));
    });
    records
}

/// Random restricted point for the boost direction of `w`.
fn restricted<R: Rng>(rng: &mut R, w: &Velocity<f64>) -> mrel::Result<RestrictedPoint> {
    RestrictedPoint::new(sampling::base_point(rng), *w.alpha())
}

fn fields(cfg: &SuiteConfig) -> Vec<Record> {
    let fd = match FdConfig::new(cfg.fd_step, FdOrder::Fourth, cfg.tol) {
        Ok(fd) => fd,
        Err(e) => {
            let mut check = Check::new("fieldcalc.config.valid", "h > 0, tolerance > 0", 0.0);
            check.fail(e.to_string());
            return vec![check.finish()];
        }
    };
    let tol = cfg.tol;
    let mut records = Vec::new();
    type Case<'a> = &'a mut dyn FnMut(&mut ChaCha8Rng, &mut Check);
    let mut run = |id: &str, anchor: &str, tol: f64, count: usize, case: Case| {
        let mut rng = check_rng(cfg.seed, id);
        let mut check = Check::new(id, anchor, tol);
        for _ in 0..count {
            case(&mut rng, &mut check);
        }
        records.push(check.finish());
    };
    let n = cfg.samples;
    let gap = |c: mrel::Result<fieldcalc::IdentityCheck>| c.map(|c| c.gap());

    run(
        "fieldcalc.identity_a2_curl.random",
        "(a2) of lifted F⃗ = -[(α_x s-1)A + (α_y s+1)B + (α_z s+1)C], s = α_x-α_y-α_z",
        tol,
        n,
        &mut |rng, check| {
            let (em, w) = (sampling::smooth_em(rng), sampling::float_velocity(rng));
            let p = restricted(rng, &w);
            check.input(&(w.components(), &p));
            check.outcome(p.and_then(|p| gap(identity_a2_curl(&em, &w, &p, &fd))));
        },
    );
    run(
        "fieldcalc.identity_a1_curl.random",
        "(a1) of lifted F⃗ = (α_x+α_z)A' + (α_x+α_y)B' + (α_y-α_z)C'",
        tol,
        n,
        &mut |rng, check| {
            let (em, w) = (sampling::smooth_em(rng), sampling::float_velocity(rng));
            let p = restricted(rng, &w);
            check.input(&(w.components(), &p));
            check.outcome(p.and_then(|p| gap(identity_a1_curl(&em, &w, &p, &fd))));
        },
    );
    run(
        "fieldcalc.identity_a1_curl.permuted_axes",
        "(a1) after x̃=y, ỹ=z, z̃=x equals the (α_y+α_x), (α_y+α_z), (α_z-α_x) combination",
        tol,
        n,
        &mut |rng, check| {
            let (em, w) = (sampling::smooth_em(rng), sampling::float_velocity(rng));
            let p = restricted(rng, &w);
            check.input(&(w.components(), &p));
            check.outcome(p.and_then(|p| gap(identity_a1_curl_permuted(&em, &w, &p, &fd))));
        },
    );
    run("fieldcalc.continuity.random", "(a1) of lifted δ = ∇·j + ∂ρ/∂t", tol, n, &mut |rng, check| {
        let (cc, w) = (sampling::smooth_charge(rng), sampling::float_velocity(rng));
        let p = restricted(rng, &w);
        check.input(&(w.components(), &p));
        check.outcome(p.and_then(|p| gap(continuity_identity(&cc, &w, &p, &fd))));
    });
    for (dual, id, anchor) in [
        (false, "fieldcalc.a3_divergence.field_tensor", "(a3) of lifted 𝓕 = +∇·B"),
        (true, "fieldcalc.a3_divergence.dual_tensor", "(a3) of lifted 𝓕₁ = -∇·E"),
    ] {
        run(id, anchor, tol, n, &mut |rng, check| {
            let (em, w) = (sampling::smooth_em(rng), sampling::float_velocity(rng));
            let p = restricted(rng, &w);
            check.input(&(w.components(), &p));
            check.outcome(p.and_then(|p| gap(divergence_check(&em, &w, &p, dual, &fd))));
        });
    }
    for (dual, id, anchor) in [
        (
            false,
            "fieldcalc.a4_translation.field_tensor",
            "(a4) of lifted 𝓕 = -Σ α_k (∂E_y/∂z - ∂E_z/∂y - ∂B_x/∂t, ...)_k",
        ),
        (
            true,
            "fieldcalc.a4_translation.dual_tensor",
            "(a4) of lifted 𝓕₁ = -Σ α_k (∂B_y/∂z - ∂B_z/∂y + ∂E_x/∂t, ...)_k",
        ),
    ] {
        run(id, anchor, tol, n, &mut |rng, check| {
            let (em, w) = (sampling::smooth_em(rng), sampling::float_velocity(rng));
            let p = restricted(rng, &w);
            check.input(&(w.components(), &p));
            check.outcome(p.and_then(|p| gap(fieldcalc::a4_translation(&em, &w, &p, dual, &fd))));
        });
    }
    run(
        "fieldcalc.radial.random",
        "(a2) of lifted σ = γ_s ∂s/∂t + s ∂γ_s/∂t + ∂γ_s/∂r",
        tol,
        n,
        &mut |rng, check| {
            let s = sampling::radial_profile(rng);
            let alpha = sampling::float_direction(rng);
            let (r, t) = (rng.random_range(0.3..2.0), rng.random_range(1.0..2.0));
            check.input(&(alpha, r, t));
            check.outcome(RestrictedPoint::radial(r, t, alpha).and_then(|p| gap(radial_residual(&s, &p, &fd))));
        },
    );
    run(
        "fieldcalc.radial.characteristics",
        "s = s0(r - s t) solves γ_s ∂s/∂t + s ∂γ_s/∂t + ∂γ_s/∂r = 0",
        tol,
        n.min(20),
        &mut |rng, check| {
            let (base, amp, k) = (rng.random_range(0.2..0.4), rng.random_range(0.0..0.1), rng.random_range(0.5..1.0));
            let s0 = move |x: f64| base + amp * (k * x).sin();
            let s = RadialFns::new(move |r, t| {
                let mut xi = r;
                for _ in 0..200 {
                    xi = r - s0(xi) * t;
                }
                s0(xi)
            });
            let alpha = sampling::float_direction(rng);
            let (r, t) = (rng.random_range(0.3..2.0), rng.random_range(1.0..2.0));
            check.input(&(base, amp, k, alpha, r, t));
            check.outcome(
                RestrictedPoint::radial(r, t, alpha)
                    .and_then(|p| radial_residual(&s, &p, &fd))
                    .map(|c| c.lhs.abs().max(c.rhs.abs())),
            );
        },
    );
    let grid: Vec<(f64, f64)> = [1.0, 2.0, 5.0].iter().flat_map(|&k| [0.5, 1.0, 4.0].map(|r| (k, r))).collect();
    let mut cells = grid.iter();
    run(
        "fieldcalc.newtonian.grid",
        "k/r² + s ∂s/∂r = 0 for s = √(2k/r)",
        tol.min(NEWTONIAN_TOL),
        grid.len(),
        &mut |_, check| {
            let &(k, r) = cells.next().expect("one case per grid cell");
            check.input(&(k, r));
            check.outcome(newtonian_check(k, r, &fd));
        },
    );
    run(
        "fieldcalc.maxwell.plane_wave",
        "a1, a2 of F⃗ and a3, a4 of 𝓕, 𝓕₁ vanish for E=(0,sin(z-t),0), B=(-sin(z-t),0,0)",
        tol,
        n,
        &mut |rng, check| {
            let w = sampling::float_velocity(rng);
            let p = restricted(rng, &w);
            check.input(&(w.components(), &p));
            check.outcome(p.and_then(|p| maxwell_sums(&EmFns::plane_wave(), &w, &p, &fd)).map(|s| {
                s.iter().fold(0.0f64, |m, v| m.max(v.abs()))
            }));
        },
    );
    for (which, id) in [(SumKind::A1, "fieldcalc.invariance.a1"), (SumKind::A2, "fieldcalc.invariance.a2")] {
        let mut flip = false;
        run(id, "sum of the lift equals the sum of the boosted lift at the image point", tol, n, &mut |rng, check| {
            flip = !flip;
            let fns = if flip {
                SpacetimeFns::Em(sampling::smooth_em(rng))
            } else {
                SpacetimeFns::Charge(sampling::smooth_charge(rng))
            };
            let w = sampling::float_velocity(rng);
            // Keep the image time positive: |r| small against t >= 1.
            let mut base = sampling::base_point(rng);
            base[..3].iter_mut().for_each(|x| *x *= 0.25);
            let p = RestrictedPoint::new(base, *w.alpha());
            check.input(&(flip, w.components(), &p));
            check.outcome(p.and_then(|p| gap(invariance_check(&fns, &w, &p, which, &fd))));
        });
    }
    run(
        "fieldcalc.fd.time_derivative",
        "∂t/∂t_{x_i} = α_i at restricted points",
        tol,
        n,
        &mut |rng, check| {
            let w = sampling::float_velocity(rng);
            let p = restricted(rng, &w);
            check.input(&(w.components(), &p));
            check.outcome(p.and_then(|p| {
                (0..3).try_fold(0.0f64, |m, k| {
                    let d = fd_partial(|q: &[f64; 6]| spacetime_of(q)[3], k + 3, &p.six(), &fd)?;
                    Ok(m.max((d - w.alpha()[k]).abs()))
                })
            }));
        },
    );
    run(
        "fieldcalc.fd.convergence_order",
        "halving h divides the error by 2^order",
        0.1,
        3,
        &mut {
            let mut case = 0;
            move |_, check| {
                let (f, df, x): (fn(f64) -> f64, fn(f64) -> f64, f64) = match case {
                    0 => (f64::sin, f64::cos, 0.7),
                    1 => (f64::exp, f64::exp, -0.4),
                    _ => (|x| x.powi(5), |x| 5.0 * x.powi(4), 0.9),
                };
                case += 1;
                check.input(&x);
                let err = |h: f64| -> mrel::Result<f64> {
                    let c = FdConfig::new(h, FdOrder::Fourth, 1.0)?;
                    Ok((fd_partial(|q: &[f64; 1]| f(q[0]), 0, &[x], &c)? - df(x)).abs())
                };
                check.outcome(err(1e-2).and_then(|coarse| Ok((coarse / err(5e-3)? / 16.0 - 1.0).abs())));
            }
        },
    );
    run(
        "fieldcalc.assumption_sums.constant_field",
        "a1 = a2 = 0 for constant fields",
        tol,
        n.min(20),
        &mut |rng, check| {
            let f = sampling::em_field::<f64, _>(rng);
            let w = sampling::float_velocity(rng);
            let p = restricted(rng, &w);
            check.input(&(&f, w.components(), &p));
            let field = fieldcalc::lift_em_vector(&EmFns::constant(f), *w.alpha());
            check.outcome(p.and_then(|p| {
                Ok(a1_sum(&field, &p.six(), &fd)?.abs().max(a2_sum(&field, &p.six(), &fd)?.abs()))
            }));
        },
    );
    records
}

fn variant_records(cfg: &SuiteConfig) -> Vec<Record> {
    let classes = variants::classify_all(cfg.samples, cfg.seed);
    variants::EXPECTED
        .iter()
        .enumerate()
        .map(|(k, expected)| {
            let label: String = expected.key.chars().map(|c| if c == '+' { 'p' } else { 'm' }).collect();
            let mut check = Check::new(format!("malgebra.variant.{label}"), format!("chart column {}", expected.key), 0.0);
            check.input(&(expected.key, cfg.samples, cfg.seed));
            match &classes {
                Ok(all) => {
                    let c = &all[k];
                    check.observe(if variants::matches_expected(c, expected) { 0.0 } else { 1.0 });
                    check.detail(variants::row(c));
                }
                Err(e) => check.fail(e.to_string()),
            }
            check.finish()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rng_streams_depend_on_seed_and_id() {
        let draw = |seed, id| check_rng(seed, id).random::<u64>();
        assert_eq!(draw(1, "a.b.c"), draw(1, "a.b.c"));
        assert_ne!(draw(1, "a.b.c"), draw(2, "a.b.c"));
        assert_ne!(draw(1, "a.b.c"), draw(1, "a.b.d"));
    }

    #[test]
    fn small_runs_pass_in_both_modes() {
        for mode in [Mode::Exact, Mode::Float] {
            let cfg = SuiteConfig { mode, samples: 5, ..Default::default() };
            for suite in Suite::ALL {
                for r in run_suite(suite, &cfg) {
                    assert!(r.pass, "{mode:?} {}: {:?} {:?}", r.check_id, r.residual, r.detail);
                }
            }
        }
    }

    #[test]
    fn irrational_beta_fails_exact_records_without_panicking() {
        let cfg = SuiteConfig { samples: 2, betas: vec![Rational::from_ratio(1, 2)], ..Default::default() };
        let records = run_suite(Suite::Lorentz, &cfg);
        let bad = records.iter().find(|r| r.check_id == "lorentz.consistency.beta_1_2").unwrap();
        assert!(!bad.pass);
        assert!(bad.detail.as_deref().unwrap().contains("not rational"));
    }
}
