use std::f64::consts::{FRAC_PI_2, PI};

use super::{e_pq, k_pq};
use crate::error::{domain, Result};
use crate::gen_trig::PQParams;
use crate::special_fns::{gauss_2f1, HypArgs};

fn check(s: f64, r: f64) -> Result<()> {
    if !(s.abs() < 0.5) {
        return domain(format!("Borwein integrals need |s| < 1/2, got {s}"));
    }
    if !(0.0..1.0).contains(&r) {
        return domain(format!("modulus must lie in [0, 1), got {r}"));
    }
    Ok(())
}

/// `K_s(r) = ₂F₁(1/2 − s, 1/2 + s; 1; r²)`.
pub fn borwein_k(s: f64, r: f64) -> Result<f64> {
    check(s, r)?;
    Ok(gauss_2f1(HypArgs::new(0.5 - s, 0.5 + s, 1.0, r * r)?)?.value)
}

/// `E_s(r) = ₂F₁(−1/2 − s, 1/2 + s; 1; r²)`.
pub fn borwein_e(s: f64, r: f64) -> Result<f64> {
    check(s, r)?;
    Ok(gauss_2f1(HypArgs::new(-0.5 - s, 0.5 + s, 1.0, r * r)?)?.value)
}

/// Discrepancy in Takeuchi's bridge between Borwein's integrals and the
/// diagonal `p = q` integrals, with `p = 2/(2s + 1)`.
///
/// `K_s`/`E_s` are bare ₂F₁ values while `K_p`/`E_p` carry the factor
/// `π_p/2`; the two sides agree as `(π/2)·K_s(r) = (π/π_p)·K_p(r^{2/p})`, and
/// likewise for `E`. Returns the sum of both absolute differences.
pub fn takeuchi_bridge_residual(s: f64, r: f64) -> Result<f64> {
    check(s, r)?;
    let p = 2.0 / (2.0 * s + 1.0);
    let params = PQParams::new(p, p)?;
    let x = r.powf(2.0 / p);
    let scale = PI / params.pi_pq;
    let dk = FRAC_PI_2 * borwein_k(s, r)? - scale * k_pq(&params, x)?.value;
    let de = FRAC_PI_2 * borwein_e(s, r)? - scale * e_pq(&params, x)?.value;
    Ok(dk.abs() + de.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{legendre_e_agm, legendre_k_agm};

    #[test]
    fn s_zero_is_legendre() {
        for r in [0.1, 0.5, 0.9] {
            let k = legendre_k_agm(r).unwrap() / FRAC_PI_2;
            assert!((borwein_k(0.0, r).unwrap() - k).abs() < 1e-13);
        }
        let e = legendre_e_agm(0.5).unwrap() / FRAC_PI_2;
        assert!((borwein_e(0.0, 0.5).unwrap() - e).abs() < 1e-13);
        assert_eq!(borwein_k(0.3, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn bridge_samples() {
        assert!(takeuchi_bridge_residual(0.0, 0.5).unwrap() < 1e-11);
        assert!(takeuchi_bridge_residual(0.25, 0.3).unwrap() < 1e-10);
        assert!(takeuchi_bridge_residual(-0.2, 0.7).unwrap() < 1e-10);
    }

    #[test]
    fn domain_checks() {
        assert!(borwein_k(0.5, 0.2).is_err());
        assert!(borwein_e(0.1, 1.0).is_err());
        assert!(takeuchi_bridge_residual(-0.6, 0.2).is_err());
    }
}
