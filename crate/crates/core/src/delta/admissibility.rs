//! The two hypotheses under which `Δ_{p,q}` is proven increasing and convex:
//!
//! 1. `2 + 1/p + 1/p² ≤ 5/p + 1/q < 3 + 1/p²`
//! 2. `ε(p,q) > 0`
//!
//! Decisions are made in exact rational arithmetic. A binary `f64` is itself
//! an exact rational, so the float entry points convert losslessly; decimal
//! strings can be parsed exactly with [`parse_rational`] so that inputs such
//! as `1.2` are classified as `6/5` rather than its binary neighbour.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Float comparisons closer than this to a boundary are flagged.
pub const BOUNDARY_MARGIN: f64 = 1e-12;

/// `ε(p,q) = 20 − 42/p + 6/q + 21/p² − 2/q² − 20/(pq) + 9/(p²q) − 3/p³ − 1/(p³q)`.
pub fn epsilon(p: f64, q: f64) -> f64 {
    let (x, y) = (1.0 / p, 1.0 / q);
    20.0 - 42.0 * x + 6.0 * y + 21.0 * x * x - 2.0 * y * y - 20.0 * x * y + 9.0 * x * x * y
        - 3.0 * x * x * x
        - x * x * x * y
}

/// Condition (1), decided exactly on the binary values of `p` and `q`.
pub fn condition1(p: f64, q: f64) -> bool {
    match (to_rational(p), to_rational(q)) {
        (Some(p), Some(q)) => condition1_exact(&p, &q),
        _ => false,
    }
}

/// Both conditions, decided exactly on the binary values of `p` and `q`.
pub fn admissible(p: f64, q: f64) -> bool {
    match (to_rational(p), to_rational(q)) {
        (Some(p), Some(q)) => admissible_exact(&p, &q),
        _ => false,
    }
}

fn to_rational(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn epsilon_exact(p: &BigRational, q: &BigRational) -> BigRational {
    let x = p.recip();
    let y = q.recip();
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    int(20) - int(42) * &x + int(6) * &y + int(21) * &x2
        - int(2) * &y * &y
        - int(20) * &x * &y
        + int(9) * &x2 * &y
        - int(3) * &x3
        - &x3 * &y
}

pub fn condition1_exact(p: &BigRational, q: &BigRational) -> bool {
    let x = p.recip();
    let y = q.recip();
    let x2 = &x * &x;
    let mid = int(5) * &x + &y;
    let lower = int(2) + &x + &x2;
    let upper = int(3) + &x2;
    lower <= mid && mid < upper
}

pub fn admissible_exact(p: &BigRational, q: &BigRational) -> bool {
    let one = BigRational::one();
    *p > one && *q > one && condition1_exact(p, q) && epsilon_exact(p, q).is_positive()
}

/// Parses a decimal such as `"1.2"`, `"-3"`, `"2.5e-1"`, or a quotient of two
/// such literals like `"7/4"`, exactly.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let d = parse_decimal(d.trim())?;
        if d.is_zero() {
            return None;
        }
        return Some(parse_decimal(n.trim())? / d);
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let numer: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(if neg { -value } else { value })
}

/// Classification of a parameter pair, with both conditions reported.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Admissibility {
    pub cond1: bool,
    pub epsilon: f64,
    pub admissible: bool,
    /// A float evaluation of one of the defining inequalities lies within
    /// [`BOUNDARY_MARGIN`] of equality.
    pub near_boundary: bool,
}

impl Admissibility {
    pub fn of(p: f64, q: f64) -> Self {
        let (x, y) = (1.0 / p, 1.0 / q);
        let mid = 5.0 * x + y;
        let eps = epsilon(p, q);
        let near_boundary = (mid - (2.0 + x + x * x)).abs() < BOUNDARY_MARGIN
            || (mid - (3.0 + x * x)).abs() < BOUNDARY_MARGIN
            || eps.abs() < BOUNDARY_MARGIN;
        Admissibility {
            cond1: condition1(p, q),
            epsilon: eps,
            admissible: admissible(p, q),
            near_boundary,
        }
    }

    /// Same classification with `p`, `q` given as exact rationals.
    pub fn of_exact(p: &BigRational, q: &BigRational) -> Self {
        let pf = p.to_f64().unwrap_or(f64::NAN);
        let qf = q.to_f64().unwrap_or(f64::NAN);
        let mut out = Admissibility::of(pf, qf);
        out.cond1 = condition1_exact(p, q);
        out.admissible = admissible_exact(p, q);
        out.epsilon = epsilon_exact(p, q).to_f64().unwrap_or(out.epsilon);
        out
    }
}
