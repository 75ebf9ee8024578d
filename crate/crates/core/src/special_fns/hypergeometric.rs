//! Gauss hypergeometric function ₂F₁(a, b; c; z) on `z ∈ [0, 1]`.
//!
//! - `z ≤ Z_SWITCH`: the power series, terms by running ratio.
//! - `Z_SWITCH < z < 1`: linear transformation to `w = 1 − z`. When `c − a − b`
//!   is an integer the logarithmic (degenerate) forms are used; every ₂F₁
//!   consumed by the elliptic and Δ layers has `c − a − b ∈ {−1, 0, 1}`.
//! - `z = 1`: Gauss's summation theorem.

use std::sync::OnceLock;

use super::gamma::{digamma, ln_gamma_signed, rgamma};
use super::{EvalResult, Method};
use crate::error::{domain, Error, Result};

/// Largest `z` evaluated by the direct series.
pub const Z_SWITCH: f64 = 0.9;
/// Default series cap, overridable with `PQELLIPTIC_MAX_TERMS`.
pub const DEFAULT_MAX_TERMS: usize = 20_000;

const SERIES_TOL: f64 = 1e-16;
// |c − a − b − m| below this is treated as the integer m.
const INTEGER_SNAP: f64 = 1e-10;

/// Series cap, read once from `PQELLIPTIC_MAX_TERMS`.
pub fn max_series_terms() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("PQELLIPTIC_MAX_TERMS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_MAX_TERMS)
    })
}

/// Behaviour of the series at the requested argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convergence {
    /// `a` or `b` is a non-positive integer: the series is a polynomial.
    Terminating,
    /// `0 ≤ z < 1`.
    Interior,
    /// `z = 1` and `c − a − b > 0`.
    BoundaryConvergent,
    /// `z = 1` and `c − a − b ≤ 0`.
    BoundaryDivergent,
}

/// Parameters and argument of a ₂F₁ evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

impl HypArgs {
    pub fn new(a: f64, b: f64, c: f64, z: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return domain(format!("non-finite 2F1 parameters ({a}, {b}; {c})"));
        }
        if is_non_positive_integer(c) {
            return domain(format!("2F1 undefined for c = {c}"));
        }
        if !(0.0..=1.0).contains(&z) {
            return domain(format!("2F1 argument must lie in [0, 1], got {z}"));
        }
        Ok(HypArgs { a, b, c, z })
    }

    /// `c − a − b`, snapped to the nearest integer when within rounding of it.
    pub fn excess(&self) -> f64 {
        let s = self.c - self.a - self.b;
        let m = s.round();
        if (s - m).abs() < INTEGER_SNAP * (1.0 + self.c.abs()) {
            m
        } else {
            s
        }
    }

    pub fn convergence(&self) -> Convergence {
        if is_non_positive_integer(self.a) || is_non_positive_integer(self.b) {
            Convergence::Terminating
        } else if self.z < 1.0 {
            Convergence::Interior
        } else if self.excess() > 0.0 {
            Convergence::BoundaryConvergent
        } else {
            Convergence::BoundaryDivergent
        }
    }

    fn shifted(&self) -> Result<HypArgs> {
        HypArgs::new(self.a + 1.0, self.b + 1.0, self.c + 1.0, self.z)
    }
}

/// ₂F₁(a, b; c; z) with an absolute error estimate.
pub fn gauss_2f1(args: HypArgs) -> Result<EvalResult> {
    gauss_2f1_split(args, 1.0 - args.z)
}

/// As [`gauss_2f1`], with `1 − z` supplied by the caller.
///
/// Callers that know `1 − z` more accurately than `z` itself (for example
/// `z = 1 − r^p` with small `r`) pass it here so the near-one branch does not
/// lose digits forming `1 − z`.
pub fn gauss_2f1_split(args: HypArgs, one_minus_z: f64) -> Result<EvalResult> {
    let HypArgs { a, b, c, z } = args;
    if !(0.0..=1.0).contains(&one_minus_z) || (one_minus_z - (1.0 - z)).abs() > 4.0 * f64::EPSILON {
        return domain(format!("1 − z = {one_minus_z} is inconsistent with z = {z}"));
    }
    match args.convergence() {
        Convergence::Terminating => series_2f1(a, b, c, z, max_series_terms()),
        Convergence::BoundaryDivergent => Err(Error::Divergence(format!(
            "2F1({a}, {b}; {c}; 1) diverges since c − a − b = {} ≤ 0",
            c - a - b
        ))),
        Convergence::BoundaryConvergent => {
            let v = gauss_value_at_one(a, b, c)?;
            Ok(EvalResult::new(v, 8.0 * f64::EPSILON * v.abs(), Method::GaussClosedForm))
        }
        Convergence::Interior if z <= Z_SWITCH => series_2f1(a, b, c, z, max_series_terms()),
        Convergence::Interior => transformed_2f1(&args, one_minus_z),
    }
}

/// Direct power series with tail-bound stopping.
///
/// Stops once `|term| < 1e−16·|sum|` with decreasing terms; the error estimate
/// is the first omitted term over `1 − ρ`, where `ρ` bounds the remaining
/// term ratios, plus accumulated rounding.
pub fn series_2f1(a: f64, b: f64, c: f64, z: f64, max_terms: usize) -> Result<EvalResult> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    for n in 0..max_terms {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) * z / ((c + nf) * (nf + 1.0));
        let next = term * ratio;
        if next == 0.0 {
            return Ok(EvalResult::new(
                sum,
                2.0 * f64::EPSILON * abs_sum,
                Method::Series,
            ));
        }
        if next.abs() < SERIES_TOL * sum.abs() && next.abs() <= term.abs() {
            // The ratios approach z; once past the last sign change they are
            // monotone, so max(|ρ_n|, z) bounds every later ratio.
            let rho = ratio.abs().max(z);
            let tail = if rho < 1.0 {
                next.abs() / (1.0 - rho)
            } else {
                next.abs() * (max_terms as f64)
            };
            return Ok(EvalResult::new(
                sum,
                tail + 2.0 * f64::EPSILON * abs_sum,
                Method::Series,
            ));
        }
        term = next;
        sum += term;
        abs_sum += term.abs();
    }
    Err(Error::Convergence(format!(
        "2F1({a}, {b}; {c}; {z}) series did not converge within {max_terms} terms"
    )))
}

/// Γ(n1)Γ(n2)/(Γ(d1)Γ(d2)), zero when a denominator argument is a pole.
fn gamma_ratio(num: [f64; 2], den: [f64; 2]) -> Result<f64> {
    if den.iter().any(|&x| is_non_positive_integer(x)) {
        return Ok(0.0);
    }
    let (l1, s1) = ln_gamma_signed(num[0])?;
    let (l2, s2) = ln_gamma_signed(num[1])?;
    let (l3, s3) = ln_gamma_signed(den[0])?;
    let (l4, s4) = ln_gamma_signed(den[1])?;
    Ok(s1 * s2 * s3 * s4 * (l1 + l2 - l3 - l4).exp())
}

/// Gauss's theorem: ₂F₁(a, b; c; 1) = Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b)).
pub fn gauss_value_at_one(a: f64, b: f64, c: f64) -> Result<f64> {
    let args = HypArgs::new(a, b, c, 1.0)?;
    if is_non_positive_integer(a) || is_non_positive_integer(b) {
        // Chu–Vandermonde still applies when c − a − b ≤ 0 for polynomials,
        // but the series at z = 1 is finite either way.
        return Ok(series_2f1(a, b, c, 1.0, max_series_terms())?.value);
    }
    let excess = args.excess();
    if excess <= 0.0 {
        return Err(Error::Divergence(format!(
            "2F1({a}, {b}; {c}; 1) diverges since c − a − b = {} ≤ 0",
            c - a - b
        )));
    }
    gamma_ratio([c, excess], [c - a, c - b])
}

/// d/dz ₂F₁(a, b; c; z) = (ab/c)·₂F₁(a+1, b+1; c+1; z).
pub fn f21_derivative(args: HypArgs) -> Result<f64> {
    if args.z >= 1.0 {
        return domain("f21_derivative requires z < 1");
    }
    let shifted = gauss_2f1(args.shifted()?)?;
    Ok(args.a * args.b / args.c * shifted.value)
}

/// Residual of the contiguous relation
/// `(σ−ρ)F(α,ρ;σ+1;z) = σF(α,ρ;σ;z) − ρF(α,ρ+1;σ+1;z)`.
pub fn contiguous_residual(sigma: f64, alpha: f64, rho: f64, z: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&z) {
        return domain(format!("contiguous_residual requires z in [0, 1), got {z}"));
    }
    let f = |a, b, c| gauss_2f1(HypArgs::new(a, b, c, z)?).map(|r| r.value);
    let lhs = (sigma - rho) * f(alpha, rho, sigma + 1.0)?;
    let rhs = sigma * f(alpha, rho, sigma)? - rho * f(alpha, rho + 1.0, sigma + 1.0)?;
    Ok(lhs - rhs)
}

/// Sum of `Σ coef_n w^n` with `coef_{n+1}/coef_n = (p+n)(q+n)/((n+1)(r+n))`,
/// i.e. ₂F₁(p, q; r; w) evaluated in the small variable `w`.
fn small_series(p: f64, q: f64, r: f64, w: f64) -> Result<(f64, f64)> {
    let res = series_2f1(p, q, r, w, max_series_terms())?;
    Ok((res.value, res.err_estimate))
}

/// The z → 1 − z connection formulas (Abramowitz & Stegun 15.3.6, 15.3.11,
/// 15.3.12).
fn transformed_2f1(args: &HypArgs, w: f64) -> Result<EvalResult> {
    let HypArgs { a, b, c, .. } = *args;
    let excess = args.excess();
    if excess.fract() != 0.0 {
        let s = c - a - b;
        let g1 = gamma_ratio([c, s], [c - a, c - b])?;
        let g2 = gamma_ratio([c, -s], [a, b])?;
        let (f1, e1) = if g1 != 0.0 {
            small_series(a, b, 1.0 - s, w)?
        } else {
            (0.0, 0.0)
        };
        let (f2, e2) = if g2 != 0.0 {
            small_series(c - a, c - b, 1.0 + s, w)?
        } else {
            (0.0, 0.0)
        };
        let ws = w.powf(s);
        let t1 = g1 * f1;
        let t2 = g2 * ws * f2;
        let err = (g1 * e1).abs()
            + (g2 * ws * e2).abs()
            + 16.0 * f64::EPSILON * (t1.abs() + t2.abs());
        return Ok(EvalResult::new(t1 + t2, err, Method::Transformation));
    }
    let m = excess as i64;
    if m >= 0 {
        degenerate_nonnegative(a, b, m as u32, w)
    } else {
        degenerate_negative(a, b, (-m) as u32, w)
    }
}

/// Pochhammer-ratio finite sum `Σ_{n<k} (p)_n (q)_n / (n! (1−k)_n) w^n`.
fn finite_sum(p: f64, q: f64, k: u32, w: f64) -> (f64, f64) {
    let mut term = 1.0f64;
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    for n in 0..k {
        sum += term;
        abs_sum += term.abs();
        let nf = n as f64;
        term *= (p + nf) * (q + nf) * w / ((nf + 1.0) * (1.0 - k as f64 + nf));
    }
    (sum, abs_sum)
}

/// Logarithmic series
/// `Σ (p)_n (q)_n / (n! (n+k)!) w^n [ln w − ψ(n+1) − ψ(n+k+1) + ψ(p+n) + ψ(q+n)]`.
fn log_series(p: f64, q: f64, k: u32, w: f64) -> Result<(f64, f64)> {
    let ln_w = w.ln();
    let kf = k as f64;
    let mut coef = 1.0 / factorial(k);
    let mut psi_n1 = digamma(1.0)?;
    let mut psi_nk1 = digamma(kf + 1.0)?;
    let mut psi_p = digamma(p)?;
    let mut psi_q = digamma(q)?;
    let mut sum = 0.0f64;
    let mut abs_sum = 0.0f64;
    let cap = max_series_terms();
    for n in 0..cap {
        let nf = n as f64;
        let term = coef * (ln_w - psi_n1 - psi_nk1 + psi_p + psi_q);
        sum += term;
        abs_sum += term.abs();
        let ratio = (p + nf) * (q + nf) * w / ((nf + 1.0) * (nf + kf + 1.0));
        let next_coef = coef * ratio;
        // The bracket grows like 2 ln n, so 1e-17 relative on the coefficient
        // is enough once the coefficients decay geometrically.
        if n > 2 && next_coef.abs() * (ln_w.abs() + 2.0 * (nf + 2.0).ln() + 4.0)
            < 1e-17 * sum.abs().max(f64::MIN_POSITIVE)
            && ratio.abs() < 1.0
        {
            let tail = next_coef.abs() * (ln_w.abs() + 2.0 * (nf + 2.0).ln() + 4.0)
                / (1.0 - ratio.abs().max(w));
            return Ok((sum, tail + 4.0 * f64::EPSILON * abs_sum));
        }
        psi_n1 += 1.0 / (nf + 1.0);
        psi_nk1 += 1.0 / (nf + kf + 1.0);
        psi_p += 1.0 / (p + nf);
        psi_q += 1.0 / (q + nf);
        coef = next_coef;
    }
    Err(Error::Convergence(format!(
        "logarithmic connection series ({p}, {q}, k = {k}, w = {w})"
    )))
}

fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

/// c = a + b + m, m ≥ 0.
fn degenerate_nonnegative(a: f64, b: f64, m: u32, w: f64) -> Result<EvalResult> {
    let c = a + b + m as f64;
    let mf = m as f64;
    let mut value = 0.0;
    let mut scale = 0.0;
    if m > 0 {
        // Γ(m)Γ(c)/(Γ(a+m)Γ(b+m)) Σ_{n<m} (a)_n(b)_n/(n!(1−m)_n) w^n
        let g = gamma_ratio([mf, c], [a + mf, b + mf])?;
        let (s, abs_s) = finite_sum(a, b, m, w);
        value += g * s;
        scale += (g * abs_s).abs();
    }
    // − (−w)^m Γ(c)/(Γ(a)Γ(b)) Σ ...
    let (lc, sc) = ln_gamma_signed(c)?;
    let pref = sc * lc.exp() * rgamma(a) * rgamma(b) * (-w).powi(m as i32);
    let (s, err) = log_series(a + mf, b + mf, m, w)?;
    value -= pref * s;
    scale += (pref * s).abs();
    let err = (pref * err).abs() + 16.0 * f64::EPSILON * scale;
    Ok(EvalResult::new(value, err, Method::Transformation))
}

/// c = a + b − k, k ≥ 1.
fn degenerate_negative(a: f64, b: f64, k: u32, w: f64) -> Result<EvalResult> {
    let c = a + b - k as f64;
    let kf = k as f64;
    // Γ(k)Γ(c)/(Γ(a)Γ(b)) w^{−k} Σ_{n<k} (a−k)_n(b−k)_n/(n!(1−k)_n) w^n
    let g = gamma_ratio([kf, c], [a, b])?;
    let (s, abs_s) = finite_sum(a - kf, b - kf, k, w);
    let wk = w.powi(-(k as i32));
    let first = g * wk * s;
    // − (−1)^k Γ(c)/(Γ(a−k)Γ(b−k)) Σ (a)_n(b)_n/(n!(n+k)!) w^n [...]
    let (lc, sc) = ln_gamma_signed(c)?;
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let pref = sign * sc * lc.exp() * rgamma(a - kf) * rgamma(b - kf);
    let (ls, lerr) = log_series(a, b, k, w)?;
    let second = pref * ls;
    let err = (pref * lerr).abs()
        + 16.0 * f64::EPSILON * ((g * wk * abs_s).abs() + second.abs());
    Ok(EvalResult::new(first - second, err, Method::Transformation))
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn f(a: f64, b: f64, c: f64, z: f64) -> EvalResult {
        gauss_2f1(HypArgs::new(a, b, c, z).unwrap()).unwrap()
    }

    #[test]
    fn zero_argument_is_one() {
        let r = f(0.3, -1.7, 2.2, 0.0);
        assert_eq!(r.value, 1.0);
        assert_eq!(r.method, Method::Series);
    }

    #[test]
    fn logarithm_closed_form() {
        // F(1,1;2;z) = −ln(1−z)/z
        let r = f(1.0, 1.0, 2.0, 0.5);
        assert!((r.value - 2.0 * LN_2).abs() < 1e-15);
        assert!(r.err_estimate < 1e-14);
        for z in [0.91f64, 0.99, 0.999_999] {
            let want = -(-z).ln_1p() / z;
            let got = f(1.0, 1.0, 2.0, z).value;
            assert!(((got - want) / want).abs() < 1e-13, "z = {z}");
        }
    }

    #[test]
    fn reference_values_across_regimes() {
        // mpmath hyp2f1 at 30 digits, exact binary inputs.
        let table = [
            (1.0 / 3.0, 0.5, 5.0 / 6.0, 0.999, 2.579_355_058_657_387_5),
            (0.5, 0.5, 1.0, 0.95, 1.851_504_997_072_928_4),
            (1.0 / 3.0, -0.5, 5.0 / 6.0, 0.97, 0.732_752_005_957_182_7),
            (4.0 / 3.0, 1.5, 3.0 + 1.0 / 3.0 - 0.5, 0.93, 4.234_530_397_401_215),
            (7.0 / 3.0, 2.5, 4.0 + 1.0 / 3.0 - 0.5, 0.91, 25.324_901_860_156_59),
            (0.3, 0.7, 1.45, 0.93, 1.309_014_089_001_039_3),
            (1.2, 0.4, 0.9, 0.98, 11.024_068_942_964_861),
            (0.25, 0.5, 2.75, 0.96, 1.063_026_967_623_376_6),
            (1.5, 1.25, 0.75, 0.92, 231.326_581_694_500_66),
            (0.5, 0.5, 1.0, 1.0 - 1e-8, 6.746_027_205_320_116_5),
            (1.1, 2.3, 3.7, 0.5, 1.551_572_923_391_776_6),
            (0.5, 0.5, 2.0, 0.999_999, 1.273_235_219_503_901_7),
            (-3.0, 0.7, 1.3, 0.95, 0.263_763_719_975_676_55),
        ];
        for (a, b, c, z, want) in table {
            let r = f(a, b, c, z);
            let rel = ((r.value - want) / want).abs();
            assert!(rel < 1e-12, "F({a},{b};{c};{z}) = {} vs {want} (rel {rel:e})", r.value);
            assert!(r.err_estimate < 1e-11 * want.abs(), "loose estimate {:e}", r.err_estimate);
        }
    }

    #[test]
    fn switch_point_is_continuous() {
        for &(a, b, c) in &[(0.5, 0.5, 1.0), (1.0 / 3.0, 0.5, 5.0 / 6.0), (0.3, 0.7, 1.45)] {
            let below = series_2f1(a, b, c, Z_SWITCH + 1e-3, 200_000).unwrap().value;
            let above = f(a, b, c, Z_SWITCH + 1e-3);
            assert_eq!(above.method, Method::Transformation);
            assert!(((below - above.value) / below).abs() < 1e-13);
        }
    }

    #[test]
    fn gauss_theorem_values() {
        assert!((gauss_value_at_one(0.5, 0.5, 2.0).unwrap() - 4.0 / PI).abs() < 1e-15);
        assert_eq!(gauss_value_at_one(0.0, 0.7, 2.3).unwrap(), 1.0);
        assert!(matches!(
            gauss_value_at_one(0.5, 0.5, 1.0),
            Err(Error::Divergence(_))
        ));
        assert!(matches!(
            gauss_2f1(HypArgs::new(0.5, 0.5, 0.9, 1.0).unwrap()),
            Err(Error::Divergence(_))
        ));
        let r = f(0.5, 0.5, 2.0, 1.0);
        assert_eq!(r.method, Method::GaussClosedForm);
    }

    #[test]
    fn args_validation() {
        assert!(HypArgs::new(1.0, 1.0, -2.0, 0.5).is_err());
        assert!(HypArgs::new(1.0, 1.0, 2.0, 1.5).is_err());
        assert!(HypArgs::new(1.0, 1.0, 2.0, -0.1).is_err());
        let args = HypArgs::new(-2.0, 1.0, 0.5, 1.0).unwrap();
        assert_eq!(args.convergence(), Convergence::Terminating);
    }

    #[test]
    fn derivative_at_zero() {
        let args = HypArgs::new(0.7, -0.4, 1.9, 0.0).unwrap();
        assert!((f21_derivative(args).unwrap() - 0.7 * -0.4 / 1.9).abs() < 1e-16);
        assert!(f21_derivative(HypArgs::new(0.5, 0.5, 2.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn contiguous_residual_trivial_at_zero() {
        assert!(contiguous_residual(2.5, 1.3, 0.7, 0.0).unwrap().abs() < 1e-15);
        assert!(contiguous_residual(2.5, 1.3, 0.7, 1.0).is_err());
    }

    #[test]
    fn series_cap_reports_non_convergence() {
        assert!(matches!(
            series_2f1(0.5, 0.5, 1.0, 0.999, 50),
            Err(Error::Convergence(_))
        ));
    }
}
