use serde::Serialize;

use crate::gen_trig::PQParams;

/// Constants attached to `Δ_{p,q}` for a fixed parameter pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaConstants {
    /// `1 + 1/q − 1/p`
    pub c1: f64,
    /// `H_{1/q,1/p}(0) = (1 − 1/p)·π_{p,q} / (2·c1)`
    pub h0: f64,
    /// `Δ(0+) = h0 − 1`
    pub delta0: f64,
    /// `Δ(1−) = 1 − h0`
    pub delta1: f64,
    /// `η_{p,q} = (p/q)(1 − 1/p)²·π_{p,q} / (2·c1·(2 + 1/q − 1/p))`
    pub eta: f64,
    /// Best upper slope `β₁ = 2 − (1 − 1/p)·π_{p,q} / c1 = −2·delta0`
    pub beta1: f64,
}

impl DeltaConstants {
    pub fn new(params: &PQParams) -> Self {
        let (ip, iq) = (params.inv_p, params.inv_q);
        let c1 = 1.0 + iq - ip;
        let h0 = (1.0 - ip) * params.pi_pq / (2.0 * c1);
        let eta = params.p / params.q * (1.0 - ip).powi(2) * params.pi_pq
            / (2.0 * c1 * (2.0 + iq - ip));
        DeltaConstants {
            c1,
            h0,
            delta0: h0 - 1.0,
            delta1: 1.0 - h0,
            eta,
            beta1: 2.0 - (1.0 - ip) * params.pi_pq / c1,
        }
    }

    /// Lower slope `α₁` of the linear bounds; always zero.
    pub fn alpha1(&self) -> f64 {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn classical_case() {
        let c = DeltaConstants::new(&PQParams::new(2.0, 2.0).unwrap());
        assert!((c.delta0 - (PI / 4.0 - 1.0)).abs() < 1e-15);
        assert!((c.delta1 - (1.0 - PI / 4.0)).abs() < 1e-15);
        assert!((c.beta1 - (2.0 - PI / 2.0)).abs() < 1e-14);
        assert_eq!(format!("{:.5}", c.beta1), "0.42920");
        assert_eq!(c.alpha1(), 0.0);
    }

    #[test]
    fn sign_and_slope_relations() {
        for &(p, q) in &[(1.1, 1.1), (1.5, 8.0), (3.0, 2.0), (9.0, 1.3)] {
            let c = DeltaConstants::new(&PQParams::new(p, q).unwrap());
            assert!(c.delta0 < 0.0 && c.delta1 > 0.0, "p={p} q={q}");
            assert!((c.beta1 + 2.0 * c.delta0).abs() < 1e-14);
            assert!((c.beta1 - (c.delta1 - c.delta0)).abs() < 1e-14);
        }
    }
}
