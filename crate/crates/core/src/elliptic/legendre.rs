//! Classical complete elliptic integrals by the arithmetic-geometric mean.
//!
//! These routines share nothing with the hypergeometric machinery and serve
//! as the independent anchor for the `p = q = 2` case.

use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Error, Result};

const MAX_ITER: usize = 64;

fn check_modulus(r: f64) -> Result<()> {
    if r == 1.0 {
        return Err(Error::Divergence("K(r) diverges at r = 1".into()));
    }
    if !(0.0..1.0).contains(&r) {
        return domain(format!("modulus must lie in [0, 1), got {r}"));
    }
    Ok(())
}

/// Runs the AGM from (1, r') and returns (M, Σ 2^{n−1} c_n²).
fn agm(r: f64) -> Result<(f64, f64)> {
    let mut a = 1.0f64;
    let mut g = ((1.0 - r) * (1.0 + r)).sqrt();
    let mut sum = 0.5 * r * r;
    let mut weight = 0.5;
    for _ in 0..MAX_ITER {
        if (a - g).abs() <= f64::EPSILON * a {
            return Ok((a, sum));
        }
        let c = 0.5 * (a - g);
        let next_a = 0.5 * (a + g);
        g = (a * g).sqrt();
        a = next_a;
        weight *= 2.0;
        sum += weight * c * c;
    }
    Err(Error::Convergence(format!("AGM did not settle for r = {r}")))
}

/// `K(r) = ∫₀^{π/2} dθ / √(1 − r² sin²θ)`.
pub fn legendre_k_agm(r: f64) -> Result<f64> {
    check_modulus(r)?;
    let (m, _) = agm(r)?;
    Ok(FRAC_PI_2 / m)
}

/// `E(r) = ∫₀^{π/2} √(1 − r² sin²θ) dθ`, via `E = K·(1 − Σ 2^{n−1} c_n²)`.
pub fn legendre_e_agm(r: f64) -> Result<f64> {
    check_modulus(r)?;
    let (m, sum) = agm(r)?;
    Ok(FRAC_PI_2 / m * (1.0 - sum))
}
