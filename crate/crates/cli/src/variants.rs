//! Classification table of the eight sign-variant algebras.

use mrel::malgebra::{classify, AlgebraClassification, QNum, Witness, CHART};

/// Expected structure of each chart column, fixed by hand from the tables.
/// Units are given as `(re, im)`.
pub struct ExpectedFlags {
    pub key: &'static str,
    pub commutative: bool,
    pub associative: bool,
    pub left_unit: Option<(i64, i64)>,
    pub right_unit: Option<(i64, i64)>,
}

const fn flags(
    key: &'static str,
    commutative: bool,
    associative: bool,
    left_unit: Option<(i64, i64)>,
    right_unit: Option<(i64, i64)>,
) -> ExpectedFlags {
    ExpectedFlags { key, commutative, associative, left_unit, right_unit }
}

const E: Option<(i64, i64)> = Some((1, 0));
const NEG_E: Option<(i64, i64)> = Some((-1, 0));

pub const EXPECTED: [ExpectedFlags; 8] = [
    flags("+++", false, false, E, None),
    flags("+-+", true, true, E, E),
    flags("-++", true, true, NEG_E, NEG_E),
    flags("--+", false, false, NEG_E, None),
    flags("++-", false, false, None, E),
    flags("+--", true, false, None, None),
    flags("-+-", true, false, None, None),
    flags("---", false, false, None, NEG_E),
];

fn short(x: &QNum) -> String {
    if *x == QNum::e() {
        "e".into()
    } else if *x == -QNum::e() {
        "-e".into()
    } else if *x == QNum::i() {
        "i".into()
    } else if *x == -QNum::i() {
        "-i".into()
    } else {
        x.to_string()
    }
}

fn unit_of(v: &mrel::malgebra::Verdict) -> Option<&QNum> {
    match &v.witness {
        Some(Witness::Unit(u)) if v.holds => Some(u),
        _ => None,
    }
}

/// `unital`, `unital -e`, `left-unit e`, `right-unit -e` or `no-unit`.
pub fn unit_phrase(c: &AlgebraClassification) -> String {
    if let Some(u) = c.unit() {
        return match short(u).as_str() {
            "e" => "unital".into(),
            s => format!("unital {s}"),
        };
    }
    match (unit_of(&c.left_unit), unit_of(&c.right_unit)) {
        (Some(u), _) => format!("left-unit {}", short(u)),
        (_, Some(u)) => format!("right-unit {}", short(u)),
        _ => "no-unit".into(),
    }
}

/// `+++ ee=e ei=i ie=-i ii=-e | noncomm nonassoc left-unit e`.
pub fn row(c: &AlgebraClassification) -> String {
    format!(
        "{} {} | {} {} {}",
        c.variant.key_string(),
        c.variant.table_string(),
        if c.is_commutative() { "comm" } else { "noncomm" },
        if c.is_associative() { "assoc" } else { "nonassoc" },
        unit_phrase(c)
    )
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::NonCommuting(x, y) => format!("xy != yx at x={}, y={}", short(x), short(y)),
        Witness::NonAssociative(x, y, z) => {
            format!("(xy)z != x(yz) at x={}, y={}, z={}", short(x), short(y), short(z))
        }
        Witness::Unit(u) => format!("unit {}", short(u)),
        Witness::NoUnit { candidate: Some(u), element } => {
            format!("only candidate {} fails at {}", short(u), short(element))
        }
        Witness::NoUnit { candidate: None, element } => format!("no u solves u*{0} = {0}", short(element)),
    }
}

/// One line per flag with its witness.
pub fn witness_lines(c: &AlgebraClassification) -> Vec<String> {
    [
        ("commutative", &c.commutative),
        ("associative", &c.associative),
        ("left unit", &c.left_unit),
        ("right unit", &c.right_unit),
    ]
    .into_iter()
    .map(|(name, v)| {
        let answer = if v.holds { "yes" } else { "no" };
        match &v.witness {
            Some(w) => format!("{name}: {answer} ({})", witness_text(w)),
            None => format!("{name}: {answer}"),
        }
    })
    .collect()
}

pub fn matches_expected(c: &AlgebraClassification, e: &ExpectedFlags) -> bool {
    let unit = |u: Option<(i64, i64)>| u.map(|(re, im)| QNum::from_ints(re, im));
    c.variant.key_string() == e.key
        && c.is_commutative() == e.commutative
        && c.is_associative() == e.associative
        && unit_of(&c.left_unit).cloned() == unit(e.left_unit)
        && unit_of(&c.right_unit).cloned() == unit(e.right_unit)
        && c.has_two_sided_unit() == (e.left_unit.is_some() && e.right_unit.is_some())
}

/// Classify every chart column.
pub fn classify_all(samples: usize, seed: u64) -> mrel::Result<Vec<AlgebraClassification>> {
    CHART.iter().map(|v| classify(v, samples, seed)).collect()
}

/// The printable table, optionally with witness lines under each row.
pub fn classify_variants_cmd(witnesses: bool) -> mrel::Result<String> {
    let mut out = String::new();
    for c in classify_all(64, 0)? {
        out.push_str(&row(&c));
        out.push('\n');
        if witnesses {
            for line in witness_lines(&c) {
                out.push_str("    ");
                out.push_str(&line);
                out.push('\n');
            }
        }
    }
    Ok(out)
}
