//! Generalized complete (p,q)-elliptic integrals and the difference function
//! `Δ_{p,q}(r) = (E − r'^p K)/r^p − (E' − r^p K')/r'^p`.
//!
//! The crate is organised bottom-up:
//!
//! - [`special_fns`]: log-gamma, beta, incomplete beta, digamma and the Gauss
//!   hypergeometric function ₂F₁ with the identities used downstream.
//! - [`quadrature`]: tanh-sinh quadrature used by the independent oracles.
//! - [`gen_trig`]: `π_{p,q}`, `arcsin_{p,q}` and `sin_{p,q}`.
//! - [`elliptic`]: `K_{p,q}`, `E_{p,q}`, complements, the AGM oracle for the
//!   classical integrals, Borwein's `K_s`/`E_s` and the Takeuchi bridge.
//! - [`delta`]: `H_{a,b}`, `Δ_{p,q}` and its derivatives, the admissibility
//!   conditions and the two families of sharp inequalities.
//! - [`verify`]: grids, the claim registry, CSV scans and JSON reports.
//! - [`cli`]: the command-line front end used by the `pqelliptic` binary.
//!
//! ```
//! use pqelliptic::{delta, gen_trig::PQParams};
//!
//! let params = PQParams::new(2.0, 2.0).unwrap();
//! let d = delta::delta(&params, 0.5).unwrap();
//! assert!(d < 0.0);
//! ```

// Domain checks are written `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod delta;
pub mod elliptic;
pub mod error;
pub mod gen_trig;
pub mod quadrature;
pub mod special_fns;
pub mod verify;

pub use error::{Error, Result};
pub use gen_trig::PQParams;
pub use special_fns::{EvalResult, HypArgs, Method};
