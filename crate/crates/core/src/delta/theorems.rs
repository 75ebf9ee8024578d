use serde::Serialize;

use super::{admissible, delta, DeltaConstants};
use crate::error::{domain, Error, Result};
use crate::gen_trig::PQParams;

/// Linear bounds `delta0 + α₁ r < Δ(r) < delta0 + β₁ r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
    /// False when the parameters do not satisfy the hypotheses.
    pub admissible: bool,
}

fn check_unit(name: &str, x: f64) -> Result<()> {
    if !(x > 0.0 && x < 1.0) {
        return domain(format!("{name} must lie in (0, 1), got {x}"));
    }
    Ok(())
}

/// The sharp linear bounds on `Δ_{p,q}(r)`; an error if `(p, q)` is not
/// admissible.
pub fn theorem13_bounds(params: &PQParams, r: f64) -> Result<Bounds> {
    let b = theorem13_bounds_unchecked(params, r)?;
    if !b.admissible {
        return Err(Error::Inadmissible { p: params.p, q: params.q });
    }
    Ok(b)
}

/// As [`theorem13_bounds`] but returns the bounds with `admissible = false`
/// instead of failing.
pub fn theorem13_bounds_unchecked(params: &PQParams, r: f64) -> Result<Bounds> {
    check_unit("r", r)?;
    let c = DeltaConstants::new(params);
    Ok(Bounds {
        lower: c.delta0 + c.alpha1() * r,
        upper: c.delta0 + c.beta1 * r,
        admissible: admissible(params.p, params.q),
    })
}

/// `λ_{p,q}(r, s) = Δ(rs) − Δ(r) − Δ(s)`.
pub fn lambda(params: &PQParams, r: f64, s: f64) -> Result<f64> {
    check_unit("r", r)?;
    check_unit("s", s)?;
    Ok(delta(params, r * s)? - delta(params, r)? - delta(params, s)?)
}

/// `Δ(0+) < λ(r, s) < Δ(1−)`; an error if `(p, q)` is not admissible.
pub fn theorem14_check(params: &PQParams, r: f64, s: f64) -> Result<bool> {
    if !admissible(params.p, params.q) {
        return Err(Error::Inadmissible { p: params.p, q: params.q });
    }
    theorem14_check_unchecked(params, r, s)
}

pub fn theorem14_check_unchecked(params: &PQParams, r: f64, s: f64) -> Result<bool> {
    let c = DeltaConstants::new(params);
    let l = lambda(params, r, s)?;
    Ok(c.delta0 < l && l < c.delta1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn params(p: f64, q: f64) -> PQParams {
        PQParams::new(p, q).unwrap()
    }

    #[test]
    fn classical_slope() {
        let b = theorem13_bounds(&params(2.0, 2.0), 0.5).unwrap();
        assert!((b.upper - b.lower - 0.5 * (2.0 - PI / 2.0)).abs() < 1e-14);
        assert!(b.admissible);
    }

    #[test]
    fn upper_bound_meets_delta_at_one() {
        let prm = params(2.0, 2.0);
        let b = theorem13_bounds(&prm, 1.0 - 1e-12).unwrap();
        assert!((b.upper - (1.0 - PI / 4.0)).abs() < 1e-11);
        let b = theorem13_bounds(&prm, 1e-12).unwrap();
        assert!((b.upper - b.lower).abs() < 1e-11);
    }

    #[test]
    fn bounds_hold_at_two_two() {
        let prm = params(2.0, 2.0);
        for k in 1..20 {
            let r = k as f64 / 20.0;
            let b = theorem13_bounds(&prm, r).unwrap();
            let d = delta(&prm, r).unwrap();
            assert!(b.lower < d && d < b.upper, "r = {r}");
        }
    }

    #[test]
    fn inadmissible_pairs_are_flagged() {
        let prm = params(1.2, 2.0);
        assert!(matches!(theorem13_bounds(&prm, 0.5), Err(Error::Inadmissible { .. })));
        assert!(!theorem13_bounds_unchecked(&prm, 0.5).unwrap().admissible);
        assert!(matches!(theorem14_check(&prm, 0.5, 0.5), Err(Error::Inadmissible { .. })));
        assert!(theorem13_bounds(&params(2.0, 2.0), 1.0).is_err());
    }

    #[test]
    fn lambda_limits() {
        let prm = params(2.0, 2.0);
        let c = DeltaConstants::new(&prm);
        let l = lambda(&prm, 0.4, 1.0 - 1e-12).unwrap();
        assert!((l - c.delta0).abs() < 1e-9);
        let direct = delta(&prm, 0.25).unwrap() - 2.0 * delta(&prm, 0.5).unwrap();
        assert_eq!(lambda(&prm, 0.5, 0.5).unwrap(), direct);
        assert!(theorem14_check(&prm, 0.3, 0.7).unwrap());
        assert!(theorem14_check(&prm, 0.999, 0.999).unwrap());
    }

    #[test]
    fn pair_bounds_grid_at_two_two() {
        let prm = params(2.0, 2.0);
        for i in 1..=20 {
            for j in 1..=20 {
                let (r, s) = (i as f64 / 21.0, j as f64 / 21.0);
                assert!(theorem14_check(&prm, r, s).unwrap(), "r={r} s={s}");
            }
        }
    }
}
