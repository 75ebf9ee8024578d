//! The difference function
//! `Δ_{p,q}(r) = (E − r'^p K)/r^p − (E' − r^p K')/r'^p`
//! and the auxiliary function `H_{a,b}` it is built from.
//!
//! With `a = 1/q`, `b = 1/p`, the first term of `Δ` is `H_{a,b}(r)` and the
//! second is `H_{a,b}(r')`. The closed form
//! `H_{a,b}(r) = (1−b)π_{1/b,1/a}/(2(1+a−b)) · ₂F₁(a, 1−b; 2+a−b; r^{1/b})`
//! is regular on `[0, 1]`, so `Δ`, `Δ'` and `Δ''` are all evaluated through
//! it. The direct `E`/`K` formula is kept as a cross-check.

mod admissibility;
mod constants;
mod theorems;

pub use admissibility::{
    admissible, admissible_exact, condition1, condition1_exact, epsilon, epsilon_exact,
    parse_rational, Admissibility, BOUNDARY_MARGIN,
};
pub use constants::DeltaConstants;
pub use theorems::{
    lambda, theorem13_bounds, theorem13_bounds_unchecked, theorem14_check,
    theorem14_check_unchecked, Bounds,
};

use crate::elliptic::{e_comp, e_pq, k_comp, k_pq, legendre_e_agm, legendre_k_agm, Modulus};
use crate::error::{domain, Error, Result};
use crate::gen_trig::PQParams;
use crate::special_fns::{gauss_2f1, gauss_2f1_split, EvalResult, HypArgs, Method};

/// Below this value of `r^{1/b}` the defining form of `H` subtracts two
/// nearly equal quantities.
pub const CANCELLATION_THRESHOLD: f64 = 0.05;

fn check_ab(a: f64, b: f64) -> Result<()> {
    if !(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
        return domain(format!("H_(a,b) requires a, b in (0, 1), got a = {a}, b = {b}"));
    }
    Ok(())
}

/// Value of the defining form of `H_{a,b}` and the route used for it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HDef {
    pub value: f64,
    /// `r^{1/b} < 0.05`: the bracket was summed coefficient by coefficient,
    /// since forming it from two ₂F₁ values would lose about
    /// `log10(1/r^{1/b})` digits.
    pub cancellation: bool,
}

/// `[F(a,−b;c;x) − (1−x)F(a,1−b;c;x)] / x` summed termwise for small `x`.
///
/// With `A_n`, `B_n` the coefficients of the two series, the bracket is
/// `Σ_{n≥1} (A_n − B_n + B_{n−1}) xⁿ`; the constant terms cancel exactly.
fn bracket_series(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let (mut coef_a, mut coef_b) = (1.0f64, 1.0f64);
    let mut power = 1.0;
    let mut sum = 0.0;
    for n in 0..500 {
        let nf = n as f64;
        let prev_b = coef_b;
        coef_a *= (a + nf) * (-b + nf) / ((c + nf) * (nf + 1.0));
        coef_b *= (a + nf) * (1.0 - b + nf) / ((c + nf) * (nf + 1.0));
        let term = (coef_a - coef_b + prev_b) * power;
        sum += term;
        if n > 2 && term.abs() <= 1e-17 * sum.abs() {
            return Ok(sum);
        }
        power *= x;
    }
    Err(Error::Convergence(format!("H_def bracket series did not converge at x = {x}")))
}

/// `H_{a,b}(r) = π_{1/b,1/a}/(2r^{1/b}) · [F(a,−b;1+a−b;x) − (1−x)F(a,1−b;1+a−b;x)]`
/// with `x = r^{1/b}`, for `r ∈ (0, 1]`.
pub fn h_def(a: f64, b: f64, r: f64) -> Result<HDef> {
    check_ab(a, b)?;
    if !(r > 0.0 && r <= 1.0) {
        return domain(format!("H_def requires r in (0, 1], got {r}"));
    }
    let pi = PQParams::new(1.0 / b, 1.0 / a)?.pi_pq;
    let x = r.powf(1.0 / b);
    let c = 1.0 + a - b;
    if x < CANCELLATION_THRESHOLD {
        return Ok(HDef {
            value: pi / 2.0 * bracket_series(a, b, c, x)?,
            cancellation: true,
        });
    }
    let first = gauss_2f1(HypArgs::new(a, -b, c, x)?)?.value;
    // At x = 1 the second term is 0·∞ with c − a − (1−b) = 0; its limit is 0.
    let second = if x == 1.0 {
        0.0
    } else {
        (1.0 - x) * gauss_2f1(HypArgs::new(a, 1.0 - b, c, x)?)?.value
    };
    Ok(HDef {
        value: pi / (2.0 * x) * (first - second),
        cancellation: false,
    })
}

/// `H_{a,b}(r) = (1−b)π_{1/b,1/a}/(2(1+a−b)) · ₂F₁(a, 1−b; 2+a−b; r^{1/b})`
/// for `r ∈ [0, 1]`.
pub fn h_closed(a: f64, b: f64, r: f64) -> Result<f64> {
    check_ab(a, b)?;
    if !(0.0..=1.0).contains(&r) {
        return domain(format!("H_closed requires r in [0, 1], got {r}"));
    }
    let x = r.powf(1.0 / b);
    Ok(h_closed_at(a, b, x, 1.0 - x)?.value)
}

/// `H_{a,b}` at `x = r^{1/b}`, with `1 − x` supplied.
fn h_closed_at(a: f64, b: f64, x: f64, one_minus_x: f64) -> Result<EvalResult> {
    let pi = PQParams::new(1.0 / b, 1.0 / a)?.pi_pq;
    let prefactor = (1.0 - b) * pi / (2.0 * (1.0 + a - b));
    Ok(gauss_2f1_split(HypArgs::new(a, 1.0 - b, 2.0 + a - b, x)?, one_minus_x)?
        .scaled(prefactor))
}

/// `Δ_{p,q}(r)` on `[0, 1]`; the endpoints return the analytic limits.
pub fn delta(params: &PQParams, r: f64) -> Result<f64> {
    delta_eval(params, r).map(|e| e.value)
}

/// [`delta`] with an error estimate and method tag (`limit` at the endpoints).
pub fn delta_eval(params: &PQParams, r: f64) -> Result<EvalResult> {
    if !(0.0..=1.0).contains(&r) {
        return domain(format!("delta requires r in [0, 1], got {r}"));
    }
    let consts = DeltaConstants::new(params);
    if r == 0.0 {
        return Ok(EvalResult::new(consts.delta0, 0.0, Method::Limit));
    }
    if r == 1.0 {
        return Ok(EvalResult::new(consts.delta1, 0.0, Method::Limit));
    }
    let m = Modulus::new(params, r)?;
    let (a, b) = (params.inv_q, params.inv_p);
    let h = h_closed_at(a, b, m.pow(), m.comp_pow())?;
    let hc = h_closed_at(a, b, m.comp_pow(), m.pow())?;
    let method = if h.method == Method::Series && hc.method == Method::Series {
        Method::Series
    } else {
        Method::Transformation
    };
    Ok(EvalResult::new(
        h.value - hc.value,
        h.err_estimate + hc.err_estimate + f64::EPSILON * (h.value.abs() + hc.value.abs()),
        method,
    ))
}

/// `Δ_{p,q}(r)` straight from the elliptic integrals, `r ∈ (0, 1)`.
///
/// Both quotients are 0/0 at the ends of the interval; use only away from
/// them (the verification layer keeps to `[0.05, 0.95]`).
pub fn delta_direct(params: &PQParams, r: f64) -> Result<f64> {
    let m = Modulus::new(params, r)?;
    let k = k_pq(params, r)?.value;
    let e = e_pq(params, r)?.value;
    let kc = k_comp(params, r)?.value;
    let ec = e_comp(params, r)?.value;
    Ok((e - m.comp_pow() * k) / m.pow() - (ec - m.pow() * kc) / m.comp_pow())
}

/// Classical `Δ(r)` with `K`, `E` from the AGM, `r ∈ (0, 1)`.
pub fn delta_legendre_agm(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("modulus must lie in (0, 1), got {r}"));
    }
    let r2 = r * r;
    let rc2 = (1.0 - r) * (1.0 + r);
    let rc = rc2.sqrt();
    let (k, e) = (legendre_k_agm(r)?, legendre_e_agm(r)?);
    let (kc, ec) = (legendre_k_agm(rc)?, legendre_e_agm(rc)?);
    Ok((e - rc2 * k) / r2 - (ec - r2 * kc) / rc2)
}

struct DerivativeTerms {
    eta: f64,
    /// `F(1+1/q, 2−1/p; 3+1/q−1/p; ·)` at `r^p` and `r'^p`
    f1: (EvalResult, EvalResult),
}

fn f1_args(params: &PQParams, z: f64) -> Result<HypArgs> {
    let (ip, iq) = (params.inv_p, params.inv_q);
    HypArgs::new(1.0 + iq, 2.0 - ip, 3.0 + iq - ip, z)
}

fn f2_args(params: &PQParams, z: f64) -> Result<HypArgs> {
    let (ip, iq) = (params.inv_p, params.inv_q);
    HypArgs::new(2.0 + iq, 3.0 - ip, 4.0 + iq - ip, z)
}

fn derivative_terms(params: &PQParams, m: &Modulus) -> Result<DerivativeTerms> {
    let eta = DeltaConstants::new(params).eta;
    let f1x = gauss_2f1_split(f1_args(params, m.pow())?, m.comp_pow())?;
    let f1y = gauss_2f1_split(f1_args(params, m.comp_pow())?, m.pow())?;
    Ok(DerivativeTerms { eta, f1: (f1x, f1y) })
}

fn f2_terms(params: &PQParams, m: &Modulus) -> Result<(f64, EvalResult, EvalResult)> {
    let (ip, iq) = (params.inv_p, params.inv_q);
    let ratio = (1.0 + iq) * (2.0 - ip) / (3.0 + iq - ip);
    let f2x = gauss_2f1_split(f2_args(params, m.pow())?, m.comp_pow())?;
    let f2y = gauss_2f1_split(f2_args(params, m.comp_pow())?, m.pow())?;
    Ok((ratio, f2x, f2y))
}

fn combined_method(parts: &[EvalResult]) -> Method {
    if parts.iter().all(|e| e.method == Method::Series) {
        Method::Series
    } else {
        Method::Transformation
    }
}

/// `Δ'_{p,q}(r) = η r^{p−1} [F₁(r^p) + F₁(r'^p)]` with
/// `F₁ = F(1+1/q, 2−1/p; 3+1/q−1/p; ·)`; the limit 0 at `r = 0`.
pub fn delta_prime(params: &PQParams, r: f64) -> Result<f64> {
    delta_prime_eval(params, r).map(|e| e.value)
}

pub fn delta_prime_eval(params: &PQParams, r: f64) -> Result<EvalResult> {
    if r == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, Method::Limit));
    }
    if r == 1.0 {
        return Err(Error::Divergence(
            "Δ' grows without bound as r → 1 (F₁ diverges at 1)".into(),
        ));
    }
    let m = Modulus::new(params, r)?;
    let t = derivative_terms(params, &m)?;
    let scale = t.eta * r.powf(params.p - 1.0);
    let value = scale * (t.f1.0.value + t.f1.1.value);
    let err = scale.abs() * (t.f1.0.err_estimate + t.f1.1.err_estimate)
        + 4.0 * f64::EPSILON * value.abs();
    Ok(EvalResult::new(value, err, combined_method(&[t.f1.0, t.f1.1])))
}

/// `Δ''_{p,q}(r)`, the termwise derivative of [`delta_prime`]:
/// `η{(p−1)r^{p−2}[F₁(x)+F₁(y)] + p r^{2p−2}(a₁b₁/c₁)[F₂(x) − F₂(y)]}` with
/// `x = r^p`, `y = r'^p`, `F₂ = F(2+1/q, 3−1/p; 4+1/q−1/p; ·)`.
pub fn delta_second(params: &PQParams, r: f64) -> Result<f64> {
    delta_second_eval(params, r).map(|e| e.value)
}

pub fn delta_second_eval(params: &PQParams, r: f64) -> Result<EvalResult> {
    let m = Modulus::new(params, r)?;
    let t = derivative_terms(params, &m)?;
    let (ratio, f2x, f2y) = f2_terms(params, &m)?;
    let p = params.p;
    let s1 = t.eta * (p - 1.0) * r.powf(p - 2.0);
    let s2 = t.eta * p * r.powf(2.0 * p - 2.0) * ratio;
    let first = s1 * (t.f1.0.value + t.f1.1.value);
    let second = s2 * (f2x.value - f2y.value);
    let err = s1.abs() * (t.f1.0.err_estimate + t.f1.1.err_estimate)
        + s2.abs() * (f2x.err_estimate + f2y.err_estimate)
        + 4.0 * f64::EPSILON * (first.abs() + s2.abs() * (f2x.value.abs() + f2y.value.abs()));
    Ok(EvalResult::new(
        first + second,
        err,
        combined_method(&[t.f1.0, t.f1.1, f2x, f2y]),
    ))
}

/// The second derivative with the sign pattern
/// `η r^{p−2}{(p−1)[F₁(x) − F₁(y)] + p(a₁b₁/c₁) r^p [F₂(x) + F₂(y)]}`.
///
/// This is not the derivative of [`delta_prime`]; it is kept so reports can
/// show how far it sits from [`delta_second`] and from finite differences.
pub fn delta_second_printed(params: &PQParams, r: f64) -> Result<f64> {
    let m = Modulus::new(params, r)?;
    let t = derivative_terms(params, &m)?;
    let (ratio, f2x, f2y) = f2_terms(params, &m)?;
    let p = params.p;
    Ok(t.eta
        * r.powf(p - 2.0)
        * ((p - 1.0) * (t.f1.0.value - t.f1.1.value)
            + p * ratio * m.pow() * (f2x.value + f2y.value)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn params(p: f64, q: f64) -> PQParams {
        PQParams::new(p, q).unwrap()
    }

    #[test]
    fn h_def_is_first_term_of_delta() {
        let prm = params(2.0, 2.0);
        for r in [0.5f64.sqrt(), 0.5] {
            let m = Modulus::new(&prm, r).unwrap();
            let want = (e_pq(&prm, r).unwrap().value - m.comp_pow() * k_pq(&prm, r).unwrap().value)
                / m.pow();
            let got = h_def(0.5, 0.5, r).unwrap();
            assert!((got.value - want).abs() < 1e-10);
            assert!(!got.cancellation);
        }
        assert!(h_def(0.5, 0.5, 0.1).unwrap().cancellation);
    }

    #[test]
    fn h_def_termwise_bracket_matches_closed_form() {
        // x = r^{1/b} spans 1e-13 .. 0.05 here, where the two-value bracket
        // would have lost most of its digits.
        for (a, b, r) in [(0.3, 0.1, 0.06), (0.8, 0.2, 0.3), (0.5, 0.5, 0.2), (0.15, 0.85, 0.07)] {
            let got = h_def(a, b, r).unwrap();
            let want = h_closed(a, b, r).unwrap();
            assert!(got.cancellation);
            assert!((got.value - want).abs() < 1e-13 * (1.0 + want.abs()), "{a} {b} {r}");
        }
        // Both routes agree on either side of the switch.
        let below = h_def(0.4, 0.5, 0.2236).unwrap();
        let above = h_def(0.4, 0.5, 0.2237).unwrap();
        assert!(below.cancellation && !above.cancellation);
        assert!((above.value - below.value).abs() < 1e-3);
    }

    #[test]
    fn h_def_at_one() {
        let (a, b) = (0.3, 0.6);
        let pi = PQParams::new(1.0 / b, 1.0 / a).unwrap().pi_pq;
        let f = gauss_2f1(HypArgs::new(a, -b, 1.0 + a - b, 1.0).unwrap()).unwrap().value;
        assert!((h_def(a, b, 1.0).unwrap().value - pi / 2.0 * f).abs() < 1e-14);
    }

    #[test]
    fn h_closed_matches_definition() {
        for &(a, b, r) in &[(0.5, 0.5, 0.8), (0.2, 0.7, 0.4), (0.85, 0.15, 0.9), (0.4, 0.3, 1.0)] {
            let d = h_def(a, b, r).unwrap().value;
            let c = h_closed(a, b, r).unwrap();
            assert!((d - c).abs() < 1e-10 * (1.0 + c.abs()), "a={a} b={b} r={r}");
        }
    }

    #[test]
    fn h_closed_endpoints() {
        for &(p, q) in &[(2.0, 2.0), (3.0, 1.5), (1.2, 7.0)] {
            let prm = params(p, q);
            let c = DeltaConstants::new(&prm);
            assert!((h_closed(1.0 / q, 1.0 / p, 0.0).unwrap() - c.h0).abs() < 1e-15);
            assert!((h_closed(1.0 / q, 1.0 / p, 1.0).unwrap() - 1.0).abs() < 1e-12);
        }
        // (π/4)·F(1/2,1/2;2;1) = (π/4)(4/π)
        assert!((h_closed(0.5, 0.5, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!(h_closed(1.0, 0.5, 0.5).is_err());
        assert!(h_def(0.5, 0.5, 0.0).is_err());
    }

    #[test]
    fn delta_classical_values() {
        let prm = params(2.0, 2.0);
        assert!((delta(&prm, 0.0).unwrap() - (PI / 4.0 - 1.0)).abs() < 1e-15);
        assert!((delta(&prm, 1e-9).unwrap() - (PI / 4.0 - 1.0)).abs() < 1e-10);
        assert!(delta(&prm, FRAC_1_SQRT_2).unwrap().abs() < 1e-14);
        let agm = delta_legendre_agm(0.6).unwrap();
        assert!((delta(&prm, 0.6).unwrap() - agm).abs() < 1e-10);
        assert_eq!(delta_eval(&prm, 1.0).unwrap().method, Method::Limit);
    }

    #[test]
    fn delta_fixed_point_and_antisymmetry() {
        for &(p, q) in &[(2.0, 2.0), (3.0, 2.0), (1.5, 4.0)] {
            let prm = params(p, q);
            let fixed = 0.5f64.powf(1.0 / p);
            assert!(delta(&prm, fixed).unwrap().abs() < 1e-13);
            for r in [0.1, 0.4, 0.9] {
                let rc = prm.complement(r);
                assert!((delta(&prm, rc).unwrap() + delta(&prm, r).unwrap()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn delta_direct_agrees() {
        for &(p, q) in &[(2.0, 2.0), (3.0, 2.0), (1.5, 4.0), (4.0, 4.0)] {
            let prm = params(p, q);
            for r in [0.05, 0.3, 0.7, 0.95] {
                let a = delta(&prm, r).unwrap();
                let b = delta_direct(&prm, r).unwrap();
                assert!((a - b).abs() < 1e-9, "p={p} q={q} r={r}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn delta_prime_examples() {
        let prm = params(2.0, 2.0);
        let h = 1e-5;
        let fd = (delta(&prm, 0.5 + h).unwrap() - delta(&prm, 0.5 - h).unwrap()) / (2.0 * h);
        assert!((delta_prime(&prm, 0.5).unwrap() - fd).abs() < 1e-8);

        // symmetric point: η_{2,2}·2^{−1/2}·2·F(3/2,3/2;3;1/2); the reference is
        // mpmath's numerical derivative of the classical Δ at 2^{−1/2}
        let sym = delta_prime(&prm, FRAC_1_SQRT_2).unwrap();
        assert!((sym - 0.451_554_169_641_870_8).abs() < 1e-13);

        assert_eq!(delta_prime(&prm, 0.0).unwrap(), 0.0);
        let tiny = delta_prime(&params(1.5, 2.0), 1e-8).unwrap();
        assert!(tiny > 0.0 && tiny < 1e-3);
        assert!(delta_prime(&prm, 1.0).is_err());
    }

    #[test]
    fn delta_second_examples() {
        let prm = params(2.0, 2.0);
        let h = 1e-4;
        let fd2 = (delta(&prm, 0.5 + h).unwrap() - 2.0 * delta(&prm, 0.5).unwrap()
            + delta(&prm, 0.5 - h).unwrap())
            / (h * h);
        assert!((delta_second(&prm, 0.5).unwrap() - fd2).abs() < 1e-6);

        let h = 1e-6;
        let fd = (delta_prime(&prm, 0.3 + h).unwrap() - delta_prime(&prm, 0.3 - h).unwrap())
            / (2.0 * h);
        assert!((delta_second(&prm, 0.3).unwrap() - fd).abs() < 1e-7);

        // F₂ bracket vanishes at the fixed point
        for &(p, q) in &[(2.0, 2.0), (3.0, 2.0)] {
            let prm = params(p, q);
            let r = 0.5f64.powf(1.0 / p);
            let m = Modulus::new(&prm, r).unwrap();
            let t = derivative_terms(&prm, &m).unwrap();
            let want = t.eta * (p - 1.0) * 2f64.powf((2.0 - p) / p) * 2.0 * t.f1.0.value;
            assert!((delta_second(&prm, r).unwrap() - want).abs() < 1e-12);
        }
    }

    #[test]
    fn printed_second_derivative_differs() {
        let prm = params(2.0, 2.0);
        let a = delta_second(&prm, 0.3).unwrap();
        let b = delta_second_printed(&prm, 0.3).unwrap();
        assert!((a - b).abs() > 1e-3);
    }
}
