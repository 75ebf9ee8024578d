use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use super::grid::{Range1, ScanGrid};
use crate::delta::{self, Admissibility};
use crate::elliptic;
use crate::error::{Error, Result};
use crate::gen_trig::PQParams;
use crate::special_fns::{EvalResult, Method};

/// Quantities available to `eval` and `scan`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    K,
    E,
    Kc,
    Ec,
    Delta,
    DeltaPrime,
    DeltaSecond,
    Pi,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::K,
        Quantity::E,
        Quantity::Kc,
        Quantity::Ec,
        Quantity::Delta,
        Quantity::DeltaPrime,
        Quantity::DeltaSecond,
        Quantity::Pi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::K => "K",
            Quantity::E => "E",
            Quantity::Kc => "Kc",
            Quantity::Ec => "Ec",
            Quantity::Delta => "delta",
            Quantity::DeltaPrime => "delta_prime",
            Quantity::DeltaSecond => "delta_second",
            Quantity::Pi => "pi",
        }
    }

    /// Whether the quantity depends on the modulus.
    pub fn needs_modulus(self) -> bool {
        self != Quantity::Pi
    }

    pub fn evaluate(self, params: &PQParams, r: f64) -> Result<EvalResult> {
        match self {
            Quantity::K => elliptic::k_pq(params, r),
            Quantity::E => elliptic::e_pq(params, r),
            Quantity::Kc => elliptic::k_comp(params, r),
            Quantity::Ec => elliptic::e_comp(params, r),
            Quantity::Delta => delta::delta_eval(params, r),
            Quantity::DeltaPrime => delta::delta_prime_eval(params, r),
            Quantity::DeltaSecond => delta::delta_second_eval(params, r),
            Quantity::Pi => Ok(EvalResult::new(
                params.pi_pq,
                8.0 * f64::EPSILON * params.pi_pq,
                Method::GammaClosedForm,
            )),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Quantity::ALL.iter().map(|q| q.name()).collect();
                Error::Domain(format!("unknown quantity `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

/// Formats a double with 17 significant digits; non-finite values become
/// `nan`, `inf` or `-inf`.
pub fn format_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

/// One row of a scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub value: f64,
    pub err_estimate: f64,
    pub method: Option<Method>,
    /// Empty unless the point failed to evaluate.
    pub note: String,
}

pub const SCAN_HEADER: [&str; 7] = ["p", "q", "r", "value", "err_estimate", "method", "note"];
pub const REGIONS_HEADER: [&str; 5] = ["p", "q", "cond1", "epsilon", "admissible"];

fn scan_point(quantity: Quantity, p: f64, q: f64, r: f64) -> ScanRow {
    let outcome = PQParams::new(p, q).and_then(|params| quantity.evaluate(&params, r));
    match outcome {
        Ok(e) => ScanRow {
            p,
            q,
            r,
            value: e.value,
            err_estimate: e.err_estimate,
            method: Some(e.method),
            note: String::new(),
        },
        Err(err) => ScanRow {
            p,
            q,
            r,
            value: f64::NAN,
            err_estimate: f64::NAN,
            method: None,
            note: err.to_string(),
        },
    }
}

/// Evaluates `quantity` at every `(p, q, r)` of the grid, in lexicographic
/// order. Points that fail keep their row with `nan` and the error text.
pub fn scan_rows(grid: &ScanGrid, quantity: Quantity) -> Vec<ScanRow> {
    let rs = grid.r.points();
    let points: Vec<(f64, f64, f64)> = grid
        .parameter_pairs()
        .into_iter()
        .flat_map(|((p, q), _)| rs.iter().map(move |&r| (p, q, r)))
        .collect();
    points
        .par_iter()
        .map(|&(p, q, r)| scan_point(quantity, p, q, r))
        .collect()
}

/// Writes scan rows as CSV.
pub fn write_scan_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SCAN_HEADER).map_err(csv_error)?;
    for row in rows {
        w.write_record([
            format_f64(row.p),
            format_f64(row.q),
            format_f64(row.r),
            format_f64(row.value),
            format_f64(row.err_estimate),
            row.method.map(|m| m.as_str().to_string()).unwrap_or_default(),
            row.note.clone(),
        ])
        .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

/// One row of an admissibility map.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionRow {
    pub p: f64,
    pub q: f64,
    pub class: Admissibility,
}

/// Classifies every `(p, q)` pair; decimal range end points are classified
/// in exact rational arithmetic.
pub fn region_rows(p: &Range1, q: &Range1) -> Vec<RegionRow> {
    let ps = p.exact_points();
    let qs = q.exact_points();
    let pairs: Vec<_> = ps.iter().flat_map(|a| qs.iter().map(move |b| (a, b))).collect();
    pairs
        .par_iter()
        .map(|(a, b)| {
            let class = Admissibility::of_exact(a, b);
            let pf = num_traits::ToPrimitive::to_f64(*a).unwrap_or(f64::NAN);
            let qf = num_traits::ToPrimitive::to_f64(*b).unwrap_or(f64::NAN);
            RegionRow { p: pf, q: qf, class }
        })
        .collect()
}

pub fn write_regions_csv<W: Write>(rows: &[RegionRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REGIONS_HEADER).map_err(csv_error)?;
    for row in rows {
        w.write_record([
            format_f64(row.p),
            format_f64(row.q),
            row.class.cond1.to_string(),
            format_f64(row.class.epsilon),
            row.class.admissible.to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}
