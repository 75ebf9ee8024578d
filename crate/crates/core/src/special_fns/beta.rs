use super::gamma::ln_gamma;
use crate::error::{domain, Error, Result};

const CF_MAX_ITER: usize = 1000;
const CF_EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;

/// Complete beta function B(a, b) for a, b > 0.
pub fn beta(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return domain(format!("beta requires a, b > 0, got ({a}, {b})"));
    }
    Ok((ln_gamma(a)? + ln_gamma(b)? - ln_gamma(a + b)?).exp())
}

/// Unregularized incomplete beta `B(z; a, b) = ∫₀^z t^{a−1}(1−t)^{b−1} dt`.
///
/// `b ∈ (0, 1]` admits the integrable singularity at `t = 1`. The continued
/// fraction is evaluated on whichever side of `z = (a+1)/(a+b+2)` converges
/// fastest; the other side is recovered through `B(a,b) − B(1−z; b, a)`.
pub fn inc_beta(z: f64, a: f64, b: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&z) {
        return domain(format!("inc_beta requires z in [0, 1], got {z}"));
    }
    if !(a > 0.0) || !(b > 0.0 && b <= 1.0) {
        return domain(format!(
            "inc_beta requires a > 0 and b in (0, 1], got a = {a}, b = {b}"
        ));
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    let full = beta(a, b)?;
    if z == 1.0 {
        return Ok(full);
    }
    let ln_front = a * z.ln() + b * (-z).ln_1p();
    if z < (a + 1.0) / (a + b + 2.0) {
        Ok(ln_front.exp() * beta_cf(a, b, z)? / a)
    } else {
        Ok(full - ln_front.exp() * beta_cf(b, a, 1.0 - z)? / b)
    }
}

/// Modified Lentz evaluation of the incomplete-beta continued fraction.
fn beta_cf(a: f64, b: f64, x: f64) -> Result<f64> {
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < FPMIN {
        d = FPMIN;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=CF_MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < CF_EPS {
            return Ok(h);
        }
    }
    Err(Error::Convergence(format!(
        "incomplete beta continued fraction (a = {a}, b = {b}, x = {x})"
    )))
}
