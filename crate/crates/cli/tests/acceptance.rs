//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Each criterion is checked twice where feasible: once through the suite
//! runner at the stated sample counts, and once against a formula restated
//! here from scratch.

use mrel::lorentz::{build_l, build_m_event, composition_gap, transform, Event4, Velocity};
use mrel::malgebra::{classify, identity_residuals, Witness, CHART};
use mrel::mlinalg::embed_mat;
use mrel::sampling;
use mrel::{MMat3, MNum, MVec3, Rational, Scalar};
use mrel_cli::suites::check_rng;
use mrel_cli::{run, variants, Mode, Report, Suite, SuiteConfig};
use rand::Rng;
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

const SEED: u64 = 7;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn config(suite: Suite, mode: Mode, samples: usize) -> SuiteConfig {
    SuiteConfig { suites: vec![suite], mode, seed: SEED, samples, ..Default::default() }
}

/// Reports are cached by their JSON config echo so criteria sharing a
/// configuration run the suites once.
fn report(cfg: &SuiteConfig) -> Rc<Report> {
    thread_local! {
        static CACHE: RefCell<HashMap<String, Rc<Report>>> = RefCell::new(HashMap::new());
    }
    let key = format!("{:?}", cfg);
    CACHE.with(|c| {
        c.borrow_mut().entry(key).or_insert_with(|| Rc::new(run(cfg).expect("valid configuration"))).clone()
    })
}

/// Every record whose id starts with one of `prefixes` passed with at least
/// `min_cases` cases, and at least one such record exists.
fn records_pass(report: &Report, prefixes: &[&str], min_cases: usize, notes: &mut Vec<String>) -> bool {
    let mut seen = 0;
    let mut ok = true;
    for r in report.records.iter().filter(|r| prefixes.iter().any(|p| r.check_id.starts_with(p))) {
        seen += 1;
        if !r.pass || r.cases < min_cases {
            ok = false;
            notes.push(format!("{} pass={} cases={} residual={:?} {:?}", r.check_id, r.pass, r.cases, r.residual, r.detail));
        }
    }
    if seen == 0 {
        notes.push(format!("no records for {prefixes:?}"));
    }
    ok && seen > 0
}

/// The default product restated: (a, b)(c, d) = (ac - bd, ad - bc).
fn mul(x: &(Rational, Rational), y: &(Rational, Rational)) -> (Rational, Rational) {
    (x.0.clone() * y.0.clone() - x.1.clone() * y.1.clone(), x.0.clone() * y.1.clone() - x.1.clone() * y.0.clone())
}

fn pair(x: &MNum<Rational>) -> (Rational, Rational) {
    (x.re.clone(), x.im.clone())
}

fn criterion_1(notes: &mut Vec<String>) -> bool {
    let mut ok = records_pass(&report(&config(Suite::Algebra, Mode::Exact, 1000)), &["malgebra.identity."], 1008, notes);
    let basis = [MNum::<Rational>::e(), MNum::i()];
    let mut rng = check_rng(SEED, "acceptance.proposition");
    let mut triples = Vec::new();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                triples.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    for _ in 0..1000 {
        triples.push((sampling::rational_mnum(&mut rng), sampling::rational_mnum(&mut rng), sampling::rational_mnum(&mut rng)));
    }
    for (x, y, z) in &triples {
        let lambda = sampling::rational(&mut rng);
        if let Some((name, _)) = identity_residuals(x, y, z, &lambda).into_iter().find(|(_, r)| !r.is_zero()) {
            notes.push(format!("{name} fails at {x:?} {y:?} {z:?}"));
            ok = false;
        }
        let (px, py, pz) = (pair(x), pair(y), pair(z));
        let conj = |p: &(Rational, Rational)| mul(p, &(q(1, 1), q(0, 1)));
        let restated = [
            (pair(&(x * y)), mul(&px, &py)),
            (mul(&px, &mul(&py, &pz)), mul(&py, &mul(&px, &pz))),
            (mul(&conj(&px), &mul(&py, &pz)), mul(&mul(&px, &py), &pz)),
            (mul(&mul(&px, &py), &pz), mul(&mul(&pz, &py), &px)),
            (mul(&px, &py), mul(&conj(&py), &conj(&px))),
        ];
        if restated.iter().any(|(a, b)| a != b) {
            notes.push(format!("restated identity fails at {x:?} {y:?} {z:?}"));
            ok = false;
        }
    }
    ok
}

fn criterion_2(notes: &mut Vec<String>) -> bool {
    let mut ok = records_pass(&report(&config(Suite::Algebra, Mode::Exact, 1000)), &["malgebra.inverse."], 1000, notes);
    let mut rng = check_rng(SEED, "acceptance.inverse");
    let mut invertible = 0;
    while invertible < 1000 {
        let mut x = sampling::rational_mnum(&mut rng);
        match rng.random_range(0..4) {
            0 => x.im = x.re.clone(),
            1 => x.im = -x.re.clone(),
            _ => {}
        }
        let singular = x.re.clone() * x.re.clone() == x.im.clone() * x.im.clone();
        match x.invert() {
            Ok(inv) => {
                invertible += 1;
                let expected = (x.re.clone() / (x.re.clone() * x.re.clone() - x.im.clone() * x.im.clone()), x.im.clone() / (x.re.clone() * x.re.clone() - x.im.clone() * x.im.clone()));
                if singular || pair(&inv) != expected || &inv * &x != MNum::e() || &x * &inv != MNum::e() {
                    notes.push(format!("inverse law fails at {x:?}"));
                    ok = false;
                }
            }
            Err(mrel::Error::NotInvertible(_)) if singular => {}
            Err(e) => {
                notes.push(format!("unexpected {e} at {x:?}"));
                ok = false;
            }
        }
    }
    ok
}

/// `(A·B)_ij = Σ_k conj(a_ik) b_kj`, restated on pairs.
fn dot(a: &MMat3<Rational>, b: &MMat3<Rational>) -> MMat3<Rational> {
    MMat3::from_fn(|i, j| {
        let (mut re, mut im) = (q(0, 1), q(0, 1));
        for k in 0..3 {
            let c = pair(&a.0[i][k]);
            let p = mul(&(c.0, -c.1), &pair(&b.0[k][j]));
            re = re + p.0;
            im = im + p.1;
        }
        MNum::new(re, im)
    })
}

fn criterion_3(notes: &mut Vec<String>) -> bool {
    let mut ok = records_pass(
        &report(&config(Suite::Linalg, Mode::Exact, 500)),
        &["mlinalg.dot_mm.associativity", "mlinalg.dot_mv.action_compatibility"],
        500,
        notes,
    );
    let mut rng = check_rng(SEED, "acceptance.dot");
    for _ in 0..500 {
        let (a, b, c) = (sampling::mmat::<Rational, _>(&mut rng), sampling::mmat(&mut rng), sampling::mmat(&mut rng));
        let x: MVec3<Rational> = sampling::mvec(&mut rng);
        let as_col = MMat3::from_fn(|i, j| if j == 0 { x.0[i].clone() } else { MNum::zero() });
        if dot(&dot(&a, &b), &c) != dot(&a, &dot(&b, &c)) || dot(&a, &b) != a.dot_mm(&b) {
            notes.push("restated dot_mm is not associative".into());
            ok = false;
        }
        if (0..3).any(|i| dot(&dot(&a, &b), &as_col).0[i][0] != a.dot_mv(&b.dot_mv(&x)).0[i]) {
            notes.push("restated action compatibility fails".into());
            ok = false;
        }
    }
    ok
}

fn criterion_4(notes: &mut Vec<String>) -> bool {
    let cfg = SuiteConfig { betas: vec![q(3, 5), q(5, 13)], ..config(Suite::Linalg, Mode::Exact, 500) };
    let mut ok = records_pass(&report(&cfg), &["mlinalg.embed.dot_mm", "mlinalg.embed.dot_mv"], 500, notes);
    ok &= records_pass(&report(&cfg), &["mlinalg.embed.lorentz_display"], 1, notes);
    // The display restated: block (i, j) is [[d, -bg], [-bg, d]] with
    // d = δ_ij + (γ-1)α_iα_j and bg = βγα_iα_j.
    for (beta, gamma) in [(q(3, 5), q(5, 4)), (q(5, 13), q(13, 12))] {
        for alpha in [[q(1, 1), q(0, 1), q(0, 1)], [q(2, 7), q(3, 7), q(6, 7)], [q(3, 5), q(0, 1), q(-4, 5)]] {
            let w = Velocity::new(alpha.clone().map(|a| a * beta.clone())).expect("subluminal");
            let r6 = embed_mat(&build_l(&w).mat);
            for row in 0..6 {
                for col in 0..6 {
                    let aa = alpha[row / 2].clone() * alpha[col / 2].clone();
                    let expected = if row % 2 == col % 2 {
                        let delta = if row / 2 == col / 2 { q(1, 1) } else { q(0, 1) };
                        delta + (gamma.clone() - q(1, 1)) * aa
                    } else {
                        -(beta.clone() * gamma.clone() * aa)
                    };
                    if r6.0[row][col] != expected {
                        notes.push(format!("display entry ({row}, {col}) differs for beta {beta}"));
                        ok = false;
                    }
                }
            }
        }
    }
    ok
}

/// Restated boost with c = 1: r' = r + (γ-1)(α·r)α - βγtα, t' = γ(t - βα·r).
fn boosted<S: Scalar>(ev: &Event4<S>, w: &Velocity<S>) -> ([S; 3], S) {
    let a = w.alpha();
    let r = ev.spatial();
    let ar = (0..3).fold(S::zero(), |acc, k| acc + a[k].clone() * r[k].clone());
    let (b, g) = (w.beta().clone(), w.gamma().clone());
    let rp = std::array::from_fn(|k| {
        r[k].clone() + (g.clone() - S::one()) * ar.clone() * a[k].clone() - b.clone() * g.clone() * ev.t.clone() * a[k].clone()
    });
    (rp, g * (ev.t.clone() - b * ar))
}

fn restated_lorentz<S: Scalar>(n: usize, tol: f64, id: &str, notes: &mut Vec<String>) -> bool {
    let mut rng = check_rng(SEED, id);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let (w, ev) = (sampling::velocity::<S, _>(&mut rng), sampling::event::<S, _>(&mut rng));
        let xp = transform(&build_l(&w), &build_m_event(&ev, &w)).expect("same direction");
        let (rp, tp) = boosted(&ev, &w);
        let scale = ev.spatial().iter().chain([&ev.t]).fold(1.0f64, |m, v| m.max(v.to_f64().abs()));
        for k in 0..3 {
            let tk = w.alpha()[k].clone() * tp.clone();
            let d = (xp.vec.0[k].re.clone() - rp[k].clone()).to_f64().abs().max((xp.vec.0[k].im.clone() - tk).to_f64().abs());
            worst = worst.max(if S::EXACT { d } else { d / scale });
        }
    }
    if worst > tol {
        notes.push(format!("{id}: restated boost differs by {worst:e}"));
    }
    worst <= tol
}

fn criterion_5(notes: &mut Vec<String>) -> bool {
    let mut ok = records_pass(&report(&config(Suite::Lorentz, Mode::Exact, 500)), &["lorentz.consistency.random"], 500, notes);
    ok &= records_pass(&report(&config(Suite::Lorentz, Mode::Float, 1000)), &["lorentz.consistency.random"], 1000, notes);
    ok &= records_pass(&report(&config(Suite::Lorentz, Mode::Exact, 500)), &["lorentz.consistency.beta_"], 1, notes);
    ok &= restated_lorentz::<Rational>(500, 0.0, "acceptance.lorentz.exact", notes);
    ok & restated_lorentz::<f64>(1000, 1e-12, "acceptance.lorentz.float", notes)
}

fn criterion_6(notes: &mut Vec<String>) -> bool {
    let prefixes = ["physents.delta.", "physents.em_vector.", "physents.em_tensor.", "physents.em_tensor_dual.", "physents.angmom."];
    let exact = report(&config(Suite::Entities, Mode::Exact, 100));
    let float = report(&config(Suite::Entities, Mode::Float, 500));
    let tight = float.records.iter().all(|r| r.tolerance <= 1e-9);
    if !tight {
        notes.push("float entity tolerance looser than 1e-9".into());
    }
    records_pass(&exact, &prefixes, 100, notes) & records_pass(&float, &prefixes, 500, notes) & tight
}

fn criterion_7(notes: &mut Vec<String>) -> bool {
    let mut ok = records_pass(
        &report(&config(Suite::Lorentz, Mode::Exact, 500)),
        &["lorentz.inversion.random", "lorentz.composition_gap."],
        1,
        notes,
    );
    ok &= report(&config(Suite::Lorentz, Mode::Exact, 500))
        .records
        .iter()
        .any(|r| r.check_id == "lorentz.inversion.random" && r.cases == 500);
    let gap = composition_gap(
        &Velocity::new([0.6, 0.0, 0.0]).expect("subluminal"),
        &Velocity::new([0.0, 0.6, 0.0]).expect("subluminal"),
        &Event4::new(1.0, 1.0, 0.0, 1.0),
    )
    .expect("valid witness");
    if gap <= 0.01 {
        notes.push(format!("composition gap {gap} not above 0.01"));
    }
    ok && gap > 0.01
}

fn fields_report() -> Rc<Report> {
    report(&SuiteConfig { tol: 1e-5, fd_step: 1e-4, ..config(Suite::Fields, Mode::Float, 100) })
}

fn criterion_8(fields: &Report, notes: &mut Vec<String>) -> bool {
    records_pass(
        fields,
        &[
            "fieldcalc.identity_a2_curl.",
            "fieldcalc.identity_a1_curl.random",
            "fieldcalc.identity_a1_curl.permuted_axes",
            "fieldcalc.continuity.",
        ],
        100,
        notes,
    ) & records_pass(fields, &["fieldcalc.maxwell.plane_wave"], 100, notes)
}

fn criterion_9(fields: &Report, notes: &mut Vec<String>) -> bool {
    records_pass(fields, &["fieldcalc.a3_divergence.", "fieldcalc.a4_translation."], 100, notes)
}

fn criterion_10(fields: &Report, notes: &mut Vec<String>) -> bool {
    let newtonian = fields.records.iter().find(|r| r.check_id == "fieldcalc.newtonian.grid");
    let grid_ok = newtonian.is_some_and(|r| r.pass && r.cases == 9 && r.tolerance <= 1e-6);
    if !grid_ok {
        notes.push(format!("newtonian grid: {newtonian:?}"));
    }
    records_pass(fields, &["fieldcalc.radial.random"], 100, notes) & records_pass(fields, &["fieldcalc.radial.characteristics"], 1, notes) & grid_ok
}

fn criterion_11(fields: &Report, notes: &mut Vec<String>) -> bool {
    records_pass(fields, &["fieldcalc.invariance."], 100, notes)
}

/// The multiplication chart restated: products ee, ei, ie, ii per column.
const CHART_ROWS: [&str; 8] = [
    "+++ ee=e ei=i ie=-i ii=-e | noncomm nonassoc left-unit e",
    "+-+ ee=e ei=i ie=i ii=e | comm assoc unital",
    "-++ ee=-e ei=-i ie=-i ii=-e | comm assoc unital -e",
    "--+ ee=-e ei=-i ie=i ii=e | noncomm nonassoc left-unit -e",
    "++- ee=e ei=-i ie=i ii=-e | noncomm nonassoc right-unit e",
    "+-- ee=e ei=-i ie=-i ii=e | comm nonassoc no-unit",
    "-+- ee=-e ei=i ie=i ii=-e | comm nonassoc no-unit",
    "--- ee=-e ei=i ie=-i ii=e | noncomm nonassoc right-unit -e",
];

fn criterion_12(notes: &mut Vec<String>) -> bool {
    let mut ok = records_pass(&report(&config(Suite::Variants, Mode::Exact, 100)), &["malgebra.variant."], 1, notes);
    let table = variants::classify_variants_cmd(false).expect("classification succeeds");
    let rows: Vec<&str> = table.lines().collect();
    if rows != CHART_ROWS {
        notes.push(format!("table differs:\n{table}"));
        ok = false;
    }
    let plus = classify(&CHART[0], 200, SEED).expect("classify +++");
    let split = classify(&CHART[1], 200, SEED).expect("classify +-+");
    let plus_ok = !plus.commutative.holds
        && !plus.associative.holds
        && !plus.two_sided_unit.holds
        && plus.left_unit.holds
        && matches!(&plus.left_unit.witness, Some(Witness::Unit(u)) if *u == MNum::e());
    let split_ok = split.commutative.holds && split.associative.holds && split.two_sided_unit.holds;
    if !(plus_ok && split_ok) {
        notes.push("flags of +++ or +-+ differ from the chart".into());
    }
    ok && plus_ok && split_ok
}

fn criterion_13(notes: &mut Vec<String>) -> bool {
    let cfg = SuiteConfig { seed: SEED, samples: 25, mode: Mode::Float, ..Default::default() };
    let fresh = |cfg: &SuiteConfig| run(cfg).expect("valid configuration").to_json();
    let (a, b) = (fresh(&cfg), fresh(&cfg));
    let exact = SuiteConfig { mode: Mode::Exact, ..cfg };
    let (c, d) = (fresh(&exact), fresh(&exact));
    if a != b || c != d {
        notes.push("reports differ between identical runs".into());
    }
    a == b && c == d
}

fn main() {
    let start = std::time::Instant::now();
    let fields = fields_report();
    let criteria: Vec<(&str, Box<dyn Fn(&mut Vec<String>) -> bool + '_>)> = vec![
        ("elementary identities, exact, basis triples and 1000 random triples", Box::new(criterion_1)),
        ("inverse law, exact, 1000 invertible elements", Box::new(criterion_2)),
        ("dot associativity and action compatibility, exact, 500 instances", Box::new(criterion_3)),
        ("R6 embedding homomorphism and Lorentz display for beta 3/5, 5/13", Box::new(criterion_4)),
        ("Lorentz consistency, exact 500 and float 1000 cases", Box::new(criterion_5)),
        ("entity consistency, exact 100 and float 500 cases each", Box::new(criterion_6)),
        ("inversion identity over 500 cases and composition gap above 0.01", Box::new(criterion_7)),
        ("curl and continuity identities, plane-wave forward check", Box::new(|n: &mut Vec<String>| criterion_8(&fields, n))),
        ("divergence sign and a4 translation", Box::new(|n: &mut Vec<String>| criterion_9(&fields, n))),
        ("radial identity and Newtonian limit", Box::new(|n: &mut Vec<String>| criterion_10(&fields, n))),
        ("boost invariance of the a1 and a2 sums", Box::new(|n: &mut Vec<String>| criterion_11(&fields, n))),
        ("sign-variant classification table", Box::new(criterion_12)),
        ("byte-identical reports for identical configs", Box::new(criterion_13)),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let mut notes = Vec::new();
        let pass = check(&mut notes);
        println!("criterion {:>2}: {}  {name}", k + 1, if pass { "PASS" } else { "FAIL" });
        for note in notes.iter().take(10) {
            println!("    {note}");
        }
        failed += usize::from(!pass);
    }
    println!("acceptance: {} of {} criteria passed in {:.1} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
