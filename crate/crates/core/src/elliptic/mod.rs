//! Complete (p,q)-elliptic integrals.
//!
//! `K_{p,q}(r) = (π_{p,q}/2)·₂F₁(1/q, 1−1/p; 1−1/p+1/q; r^p)` and
//! `E_{p,q}(r) = (π_{p,q}/2)·₂F₁(1/q, −1/p; 1−1/p+1/q; r^p)` are the
//! definitions used throughout. The θ-integral form and the Euler integral are
//! computed by quadrature and kept as independent cross-checks.

mod borwein;
mod legendre;

pub use borwein::{borwein_e, borwein_k, takeuchi_bridge_residual};
pub use legendre::{legendre_e_agm, legendre_k_agm};

use crate::error::{domain, Error, Result};
use crate::gen_trig::{sin_pq, PQParams};
use crate::quadrature::TanhSinh;
use crate::special_fns::{gauss_2f1_split, ln_gamma, EvalResult, HypArgs, Method};

/// Largest modulus at which `K_{p,q}` is evaluated.
pub const K_MAX_MODULUS: f64 = 1.0 - 1e-8;

/// A modulus `r ∈ (0, 1)` paired with its complement `r' = (1 − r^p)^{1/p}`.
///
/// `r^p` and `r'^p = 1 − r^p` are both kept so that either one can be passed
/// to the hypergeometric layer without re-forming a difference from 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    pub r: f64,
    pub r_comp: f64,
    pow: f64,
    comp_pow: f64,
}

impl Modulus {
    pub fn new(params: &PQParams, r: f64) -> Result<Self> {
        if !(r > 0.0 && r < 1.0) {
            return domain(format!("modulus must lie in (0, 1), got {r}"));
        }
        let pow = r.powf(params.p);
        let comp_pow = 1.0 - pow;
        Ok(Modulus {
            r,
            r_comp: params.complement(r),
            pow,
            comp_pow,
        })
    }

    /// The complementary modulus; applying it twice returns `self` exactly.
    pub fn complement(&self) -> Modulus {
        Modulus {
            r: self.r_comp,
            r_comp: self.r,
            pow: self.comp_pow,
            comp_pow: self.pow,
        }
    }

    /// `r^p`.
    pub fn pow(&self) -> f64 {
        self.pow
    }

    /// `r'^p = 1 − r^p`.
    pub fn comp_pow(&self) -> f64 {
        self.comp_pow
    }
}

pub(crate) fn k_args(params: &PQParams, z: f64) -> Result<HypArgs> {
    HypArgs::new(
        params.inv_q,
        1.0 - params.inv_p,
        1.0 - params.inv_p + params.inv_q,
        z,
    )
}

pub(crate) fn e_args(params: &PQParams, z: f64) -> Result<HypArgs> {
    HypArgs::new(
        params.inv_q,
        -params.inv_p,
        1.0 - params.inv_p + params.inv_q,
        z,
    )
}

/// `K_{p,q}` at `z = r^p` given together with `1 − z`.
fn k_at(params: &PQParams, z: f64, w: f64) -> Result<EvalResult> {
    if w <= 0.0 {
        return Err(Error::Divergence(
            "K_pq diverges at r = 1 (c − a − b = 0)".into(),
        ));
    }
    Ok(gauss_2f1_split(k_args(params, z)?, w)?.scaled(0.5 * params.pi_pq))
}

fn e_at(params: &PQParams, z: f64, w: f64) -> Result<EvalResult> {
    Ok(gauss_2f1_split(e_args(params, z)?, w)?.scaled(0.5 * params.pi_pq))
}

/// Complete (p,q)-elliptic integral of the first kind, `r ∈ [0, 1 − 1e−8]`.
pub fn k_pq(params: &PQParams, r: f64) -> Result<EvalResult> {
    if r == 1.0 {
        return Err(Error::Divergence("K_pq diverges at r = 1".into()));
    }
    if !(0.0..1.0).contains(&r) {
        return domain(format!("K_pq requires r in [0, 1), got {r}"));
    }
    if r > K_MAX_MODULUS {
        return Err(Error::Divergence(format!(
            "K_pq is only evaluated up to r = 1 − 1e−8, got {r}"
        )));
    }
    let z = r.powf(params.p);
    k_at(params, z, 1.0 - z)
}

/// Complete (p,q)-elliptic integral of the second kind, `r ∈ [0, 1]`.
pub fn e_pq(params: &PQParams, r: f64) -> Result<EvalResult> {
    if !(0.0..=1.0).contains(&r) {
        return domain(format!("E_pq requires r in [0, 1], got {r}"));
    }
    let z = r.powf(params.p);
    e_at(params, z, 1.0 - z)
}

/// `K'_{p,q}(r) = K_{p,q}(r')`.
pub fn k_comp(params: &PQParams, r: f64) -> Result<EvalResult> {
    let m = Modulus::new(params, r)?;
    if m.r_comp > K_MAX_MODULUS {
        return Err(Error::Divergence(format!(
            "K'_pq at r = {r} needs K_pq beyond r' = 1 − 1e−8"
        )));
    }
    k_at(params, m.comp_pow(), m.pow())
}

/// `E'_{p,q}(r) = E_{p,q}(r')`.
pub fn e_comp(params: &PQParams, r: f64) -> Result<EvalResult> {
    let m = Modulus::new(params, r)?;
    e_at(params, m.comp_pow(), m.pow())
}

/// ₂F₁ through its Euler integral
/// `Γ(c)/(Γ(b)Γ(c−b)) ∫₀¹ t^{b−1}(1−t)^{c−b−1}(1−zt)^{−a} dt`, valid for
/// `c > b > 0`.
pub fn euler_integral_oracle(args: HypArgs) -> Result<EvalResult> {
    let HypArgs { a, b, c, z } = args;
    if !(b > 0.0 && c > b) {
        return domain(format!(
            "Euler integral requires c > b > 0, got b = {b}, c = {c}"
        ));
    }
    let w = 1.0 - z;
    let integral = TanhSinh::default().integrate_split(
        |_, left, right| {
            // 1 − zt = (1 − z) + z(1 − t)
            let base = w + z * right;
            left.powf(b - 1.0) * right.powf(c - b - 1.0) * base.powf(-a)
        },
        0.0,
        1.0,
    )?;
    let prefactor = (ln_gamma(c)? - ln_gamma(b)? - ln_gamma(c - b)?).exp();
    Ok(EvalResult::new(
        prefactor * integral.value,
        prefactor * integral.err_estimate + 4.0 * f64::EPSILON * (prefactor * integral.value).abs(),
        Method::EulerQuadrature,
    ))
}

/// `∫₀^{π_{p,q}/2} (1 − r^q sin_{p,q}^q t)^{1/p−1} dt` by quadrature.
///
/// The substitution `s = sin_{p,q} t` turns this into the Euler integral with
/// argument `r^q`, so the result equals `K_{p,q}(r^{q/p})`; it coincides with
/// `K_{p,q}(r)` only when `p = q`.
pub fn k_theta_integral(params: &PQParams, r: f64) -> Result<EvalResult> {
    if !(0.0..1.0).contains(&r) {
        return domain(format!("K_theta_integral requires r in [0, 1), got {r}"));
    }
    let half = 0.5 * params.pi_pq;
    if r == 0.0 {
        return Ok(EvalResult::new(half, 0.0, Method::Quadrature));
    }
    let rq = r.powf(params.q);
    let exponent = params.inv_p - 1.0;
    let failure = std::cell::Cell::new(None);
    let res = TanhSinh::with_tolerance(1e-11).integrate_split(
        |t, _, _| match sin_pq(params, t.min(half)) {
            Ok(s) => (1.0 - rq * s.powf(params.q)).powf(exponent),
            Err(e) => {
                failure.set(Some(e));
                f64::NAN
            }
        },
        0.0,
        half,
    );
    if let Some(e) = failure.take() {
        return Err(e);
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn params(p: f64, q: f64) -> PQParams {
        PQParams::new(p, q).unwrap()
    }

    #[test]
    fn values_at_zero() {
        let prm = params(2.0, 2.0);
        assert!((k_pq(&prm, 0.0).unwrap().value - FRAC_PI_2).abs() < 4e-15);
        for &(p, q) in &[(3.0, 2.0), (1.5, 4.0), (2.5, 1.2)] {
            let prm = params(p, q);
            assert!((k_pq(&prm, 0.0).unwrap().value - prm.pi_pq / 2.0).abs() < 1e-13);
            assert!((e_pq(&prm, 0.0).unwrap().value - prm.pi_pq / 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn legendre_degeneration() {
        let prm = params(2.0, 2.0);
        for k in 1..=9 {
            let r = k as f64 / 10.0;
            let kv = k_pq(&prm, r).unwrap().value;
            let ev = e_pq(&prm, r).unwrap().value;
            assert!((kv - legendre_k_agm(r).unwrap()).abs() < 1e-12, "K({r})");
            assert!((ev - legendre_e_agm(r).unwrap()).abs() < 1e-12, "E({r})");
        }
    }

    #[test]
    fn e_at_one_is_gauss_value() {
        let e = e_pq(&params(2.0, 2.0), 1.0).unwrap();
        assert!((e.value - 1.0).abs() < 1e-14);
        assert_eq!(e.method, Method::GaussClosedForm);
    }

    #[test]
    fn k_diverges_at_one() {
        let prm = params(2.0, 3.0);
        assert!(matches!(k_pq(&prm, 1.0), Err(Error::Divergence(_))));
        assert!(matches!(k_pq(&prm, 1.0 - 1e-9), Err(Error::Divergence(_))));
        assert!(k_pq(&prm, 1.0 - 1e-8).is_ok());
        assert!(k_pq(&prm, -0.1).is_err());
    }

    #[test]
    fn complements() {
        let prm = params(2.0, 2.0);
        let r = 0.5f64.sqrt();
        let a = k_comp(&prm, r).unwrap().value;
        let b = k_pq(&prm, r).unwrap().value;
        assert!((a - b).abs() < 1e-14);

        let prm = params(3.0, 2.0);
        let a = k_comp(&prm, 0.5).unwrap().value;
        let b = k_pq(&prm, 0.875f64.powf(1.0 / 3.0)).unwrap().value;
        assert!((a - b).abs() < 1e-13);

        // E'(r) → E(1) as r → 0+
        let ec = e_comp(&prm, 1e-6).unwrap().value;
        let e1 = e_pq(&prm, 1.0).unwrap().value;
        assert!((ec - e1).abs() < 1e-12);
    }

    #[test]
    fn modulus_complement_is_exact_involution() {
        let prm = params(3.0, 2.0);
        for r in [0.01, 0.3, 0.77, 0.999] {
            let m = Modulus::new(&prm, r).unwrap();
            assert_eq!(m.complement().complement(), m);
            assert_eq!(m.complement().r, m.r_comp);
        }
        assert!(Modulus::new(&prm, 0.0).is_err());
        assert!(Modulus::new(&prm, 1.0).is_err());
    }

    #[test]
    fn monotone_in_r() {
        for &(p, q) in &[(2.0, 2.0), (1.5, 3.0), (4.0, 1.5)] {
            let prm = params(p, q);
            let mut last_k = 0.0;
            let mut last_e = f64::INFINITY;
            for k in 0..=99 {
                let r = k as f64 / 100.0;
                let kv = k_pq(&prm, r).unwrap().value;
                let ev = e_pq(&prm, r).unwrap().value;
                assert!(kv > last_k && ev < last_e, "p={p} q={q} r={r}");
                last_k = kv;
                last_e = ev;
            }
        }
    }

    #[test]
    fn euler_oracle_examples() {
        let one = euler_integral_oracle(HypArgs::new(0.7, 0.4, 1.9, 0.0).unwrap()).unwrap();
        assert!((one.value - 1.0).abs() < 1e-12);

        let args = HypArgs::new(0.5, 0.5, 1.0, 0.49).unwrap();
        let quad = euler_integral_oracle(args).unwrap();
        let series = crate::special_fns::gauss_2f1(args).unwrap();
        assert!((quad.value - series.value).abs() < 1e-9);

        let prm = params(3.0, 2.0);
        let z = 0.5f64.powf(3.0);
        let quad = euler_integral_oracle(k_args(&prm, z).unwrap()).unwrap();
        let k = k_pq(&prm, 0.5).unwrap().value / (prm.pi_pq / 2.0);
        assert!((quad.value - k).abs() < 1e-9);

        assert!(euler_integral_oracle(HypArgs::new(0.5, 1.0, 1.0, 0.3).unwrap()).is_err());
    }

    #[test]
    fn theta_integral_examples() {
        let prm = params(2.0, 2.0);
        let th = k_theta_integral(&prm, 0.5).unwrap().value;
        assert!((th - k_pq(&prm, 0.5).unwrap().value).abs() < 1e-9);

        let prm = params(3.0, 2.0);
        let th = k_theta_integral(&prm, 0.5).unwrap().value;
        let k = k_pq(&prm, 0.5f64.powf(2.0 / 3.0)).unwrap().value;
        assert!((th - k).abs() < 1e-8, "{th} vs {k}");

        assert_eq!(k_theta_integral(&prm, 0.0).unwrap().value, prm.pi_pq / 2.0);
    }
}
