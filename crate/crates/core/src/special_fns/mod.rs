//! Real-valued special functions: log-gamma, beta, incomplete beta, digamma
//! and the Gauss hypergeometric function ₂F₁.

mod beta;
mod gamma;
mod hypergeometric;

use serde::Serialize;

pub use beta::{beta, inc_beta};
pub use gamma::{digamma, gamma, ln_gamma, ln_gamma_signed, rgamma};
pub use hypergeometric::{
    contiguous_residual, f21_derivative, gauss_2f1, gauss_2f1_split, gauss_value_at_one, max_series_terms,
    series_2f1, Convergence, HypArgs, DEFAULT_MAX_TERMS, Z_SWITCH,
};

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Direct power series with a geometric tail bound.
    Series,
    /// Linear `z → 1 − z` transformation followed by series in `1 − z`.
    Transformation,
    /// Quadrature of the Euler integral representation.
    EulerQuadrature,
    /// Quadrature of a defining integral other than Euler's.
    Quadrature,
    /// Gauss's summation theorem at `z = 1`.
    GaussClosedForm,
    /// Arithmetic-geometric mean iteration.
    Agm,
    /// Analytic endpoint limit.
    Limit,
    /// Closed form in gamma functions.
    GammaClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Transformation => "transformation",
            Method::EulerQuadrature => "euler_quadrature",
            Method::Quadrature => "quadrature",
            Method::GaussClosedForm => "gauss_closed_form",
            Method::Agm => "agm",
            Method::Limit => "limit",
            Method::GammaClosedForm => "gamma_closed_form",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed value together with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub err_estimate: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: f64, err_estimate: f64, method: Method) -> Self {
        EvalResult {
            value,
            err_estimate: err_estimate.abs(),
            method,
        }
    }

    /// Multiplies value and error estimate by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        EvalResult {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.abs(),
            method: self.method,
        }
    }
}
