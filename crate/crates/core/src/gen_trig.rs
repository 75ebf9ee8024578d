//! Generalized trigonometric functions with two parameters.
//!
//! `arcsin_{p,q}(x) = ∫₀^x (1 − t^q)^{−1/p} dt`, `π_{p,q} = 2·arcsin_{p,q}(1)`
//! and `sin_{p,q}` is the inverse of `arcsin_{p,q}` on `[0, π_{p,q}/2]`.
//!
//! The integrand puts `q` on `t` and `1/p` on the outer power; with that
//! placement the substitution `u = t^q` gives
//! `arcsin_{p,q}(x) = (1/q)·B(x^q; 1/q, 1 − 1/p)` and hence
//! `π_{p,q} = (2/q)·B(1 − 1/p, 1/q)`.

use crate::error::{domain, Error, Result};
use crate::special_fns::{beta, inc_beta};

/// Validated exponent pair `p, q > 1` with `π_{p,q}` cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PQParams {
    pub p: f64,
    pub q: f64,
    pub inv_p: f64,
    pub inv_q: f64,
    pub pi_pq: f64,
}

impl PQParams {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        let pi_pq = pi_pq(p, q)?;
        Ok(PQParams {
            p,
            q,
            inv_p: 1.0 / p,
            inv_q: 1.0 / q,
            pi_pq,
        })
    }

    /// `(1 − r^p)^{1/p}`.
    pub fn complement(&self, r: f64) -> f64 {
        (-r.powf(self.p)).ln_1p().mul_add(self.inv_p, 0.0).exp()
    }
}

fn check_pq(p: f64, q: f64) -> Result<()> {
    if !(p > 1.0 && q > 1.0) || !p.is_finite() || !q.is_finite() {
        return domain(format!("p and q must be finite and > 1, got p = {p}, q = {q}"));
    }
    Ok(())
}

/// `π_{p,q} = (2/q)·B(1 − 1/p, 1/q)`.
pub fn pi_pq(p: f64, q: f64) -> Result<f64> {
    check_pq(p, q)?;
    Ok(2.0 / q * beta(1.0 - 1.0 / p, 1.0 / q)?)
}

/// Twice the integral `∫₀¹ (1 − t^p)^{−1/q} dt`, i.e. `(2/p)·B(1/p, 1 − 1/q)`.
///
/// This is the other exponent placement for the generalized arcsine. It
/// agrees with [`pi_pq`] only when `p = q`; reports record both values.
pub fn pi_pq_swapped_integrand(p: f64, q: f64) -> Result<f64> {
    check_pq(p, q)?;
    Ok(2.0 / p * beta(1.0 / p, 1.0 - 1.0 / q)?)
}

/// `arcsin_{p,q}(x)` for `x ∈ [0, 1]`.
pub fn arcsin_pq(params: &PQParams, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return domain(format!("arcsin_pq requires x in [0, 1], got {x}"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(0.5 * params.pi_pq);
    }
    let u = x.powf(params.q);
    Ok(params.inv_q * inc_beta(u, params.inv_q, 1.0 - params.inv_p)?)
}

const ENDPOINT_SNAP: f64 = 1e-15;
const RESIDUAL_TOL: f64 = 1e-14;
const MAX_ITER: usize = 200;
// Bisection only within this distance of x = 1, where arcsin' blows up.
const BISECT_ZONE: f64 = 1e-3;

/// `sin_{p,q}(t)` for `t ∈ [0, π_{p,q}/2]`, by safeguarded Newton iteration
/// on `arcsin_{p,q}(x) = t`.
pub fn sin_pq(params: &PQParams, t: f64) -> Result<f64> {
    let half = 0.5 * params.pi_pq;
    if !(t >= -ENDPOINT_SNAP && t <= half + ENDPOINT_SNAP) {
        return domain(format!("sin_pq requires t in [0, {half}], got {t}"));
    }
    if t <= ENDPOINT_SNAP {
        return Ok(0.0);
    }
    if half - t <= ENDPOINT_SNAP {
        return Ok(1.0);
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    // arcsin_{p,q}(x) ≥ x, so t itself is an upper bound.
    let mut x = (t / half).min(t).clamp(0.0, 1.0);
    if x <= 0.0 || x >= 1.0 {
        x = 0.5;
    }
    for _ in 0..MAX_ITER {
        let f = arcsin_pq(params, x)? - t;
        if f.abs() < RESIDUAL_TOL {
            return Ok(x);
        }
        if f > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        if hi - lo <= f64::EPSILON * hi {
            return Ok(0.5 * (lo + hi));
        }
        let slope_inv = (-x.powf(params.q)).ln_1p().mul_add(params.inv_p, 0.0).exp();
        let newton = x - f * slope_inv;
        x = if hi > 1.0 - BISECT_ZONE || !(newton > lo && newton < hi) {
            0.5 * (lo + hi)
        } else {
            newton
        };
    }
    Err(Error::Convergence(format!(
        "sin_pq inversion at t = {t} (p = {}, q = {})",
        params.p, params.q
    )))
}
