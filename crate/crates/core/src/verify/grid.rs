use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::delta::parse_rational;
use crate::error::{domain, Result};

/// An inclusive range sampled at `steps` equally spaced points.
///
/// The end points are kept as exact rationals, so a range written as
/// `1.5:4:11` yields the doubles nearest to 1.5, 1.75, ..., 4 and the exact
/// rationals behind them are available for admissibility classification.
#[derive(Debug, Clone, PartialEq)]
pub struct Range1 {
    lo: BigRational,
    hi: BigRational,
    pub steps: usize,
}

#[derive(Serialize)]
struct RangeSummary {
    lo: f64,
    hi: f64,
    steps: usize,
}

impl Serialize for Range1 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RangeSummary { lo: self.lo(), hi: self.hi(), steps: self.steps }.serialize(s)
    }
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn exact(x: f64) -> Result<BigRational> {
    match BigRational::from_float(x) {
        Some(v) => Ok(v),
        None => domain(format!("range end point must be finite, got {x}")),
    }
}

impl Range1 {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Result<Self> {
        Self::from_exact(exact(lo)?, exact(hi)?, steps)
    }

    pub fn from_exact(lo: BigRational, hi: BigRational, steps: usize) -> Result<Self> {
        if steps == 0 {
            return domain("a range needs at least one step");
        }
        if lo > hi {
            return domain(format!("range has lo > hi ({} > {})", to_f64(&lo), to_f64(&hi)));
        }
        Ok(Range1 { lo, hi, steps })
    }

    /// A single-point range.
    pub fn point(x: f64) -> Result<Self> {
        Self::new(x, x, 1)
    }

    /// Parses `lo:hi:n` where `lo` and `hi` are decimal or `a/b` literals.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return domain(format!("range must look like lo:hi:n, got `{text}`"));
        }
        let lo = parse_rational(parts[0])
            .ok_or_else(|| crate::Error::Domain(format!("bad range end point `{}`", parts[0])))?;
        let hi = parse_rational(parts[1])
            .ok_or_else(|| crate::Error::Domain(format!("bad range end point `{}`", parts[1])))?;
        let steps: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| crate::Error::Domain(format!("bad step count `{}`", parts[2])))?;
        Self::from_exact(lo, hi, steps)
    }

    pub fn lo(&self) -> f64 {
        to_f64(&self.lo)
    }

    pub fn hi(&self) -> f64 {
        to_f64(&self.hi)
    }

    /// The sample points as exact rationals, in increasing order.
    pub fn exact_points(&self) -> Vec<BigRational> {
        if self.steps == 1 {
            return vec![self.lo.clone()];
        }
        let width = &self.hi - &self.lo;
        let denom = BigRational::from_integer((self.steps - 1).into());
        (0..self.steps)
            .map(|i| &self.lo + &width * BigRational::from_integer(i.into()) / &denom)
            .collect()
    }

    pub fn points(&self) -> Vec<f64> {
        self.exact_points().iter().map(to_f64).collect()
    }

    fn check_parameter(&self, name: &str) -> Result<()> {
        let one = BigRational::from_integer(1.into());
        if self.lo <= one {
            return domain(format!("{name} range needs lo > 1, got {}", self.lo()));
        }
        Ok(())
    }

    fn check_modulus(&self, name: &str) -> Result<()> {
        let one = BigRational::from_integer(1.into());
        if self.lo <= BigRational::zero() || self.hi >= one {
            return domain(format!(
                "{name} range must satisfy 0 < lo <= hi < 1, got {}:{}",
                self.lo(),
                self.hi()
            ));
        }
        Ok(())
    }
}

/// Parameter ranges for scans and certification.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanGrid {
    pub p: Range1,
    pub q: Range1,
    pub r: Range1,
    /// Second modulus for pair claims; when absent those claims use the
    /// 20 × 20 grid `k/21`, `k = 1..20`, in both variables.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Range1>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Default for ScanGrid {
    /// `p, q ∈ [1.5, 4]` with 11 steps each and 19 values of `r` on
    /// `[0.05, 0.95]`.
    fn default() -> Self {
        ScanGrid {
            p: Range1 { lo: rat(3, 2), hi: rat(4, 1), steps: 11 },
            q: Range1 { lo: rat(3, 2), hi: rat(4, 1), steps: 11 },
            r: Range1 { lo: rat(1, 20), hi: rat(19, 20), steps: 19 },
            s: None,
        }
    }
}

impl ScanGrid {
    /// The default pair grid `k/21`, `k = 1..20`.
    pub fn default_pair_range() -> Range1 {
        Range1 { lo: rat(1, 21), hi: rat(20, 21), steps: 20 }
    }

    /// Parses `p:lo:hi:n,q:lo:hi:n,...`; axes that are not mentioned keep
    /// their default ranges.
    pub fn parse(text: &str) -> Result<Self> {
        let mut grid = ScanGrid::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, rest) = item
                .split_once(':')
                .ok_or_else(|| crate::Error::Domain(format!("grid axis `{item}` lacks a name")))?;
            let range = Range1::parse(rest)?;
            match name.trim() {
                "p" => grid.p = range,
                "q" => grid.q = range,
                "r" => grid.r = range,
                "s" => grid.s = Some(range),
                other => return domain(format!("unknown grid axis `{other}` (expected p, q, r or s)")),
            }
        }
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        self.p.check_parameter("p")?;
        self.q.check_parameter("q")?;
        self.r.check_modulus("r")?;
        if let Some(s) = &self.s {
            s.check_modulus("s")?;
        }
        Ok(())
    }

    /// `(p, q)` pairs in lexicographic order with their exact values.
    pub fn parameter_pairs(&self) -> Vec<((f64, f64), (BigRational, BigRational))> {
        let qs = self.q.exact_points();
        let mut out = Vec::with_capacity(self.p.steps * self.q.steps);
        for p in self.p.exact_points() {
            for q in &qs {
                out.push(((to_f64(&p), to_f64(q)), (p.clone(), q.clone())));
            }
        }
        out
    }

    /// The `(r, s)` sample lists used by pair claims.
    pub fn pair_axes(&self) -> (Vec<f64>, Vec<f64>) {
        match &self.s {
            Some(s) => (self.r.points(), s.points()),
            None => {
                let d = Self::default_pair_range().points();
                (d.clone(), d)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_points() {
        let g = ScanGrid::default();
        let p = g.p.points();
        assert_eq!(p.len(), 11);
        assert_eq!(p[0], 1.5);
        assert_eq!(p[2], 2.0);
        assert_eq!(p[10], 4.0);
        let r = g.r.points();
        assert_eq!(r.len(), 19);
        assert_eq!(r[0], 0.05);
        assert_eq!(r[9], 0.5);
        assert_eq!(r[18], 0.95);
    }

    #[test]
    fn decimal_points_are_nearest_doubles() {
        let r = Range1::parse("0.1:0.9:9").unwrap().points();
        let want = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
        assert_eq!(r, want);
    }

    #[test]
    fn parse_partial_grid() {
        let g = ScanGrid::parse("p:2:2:1,q:2:3:3").unwrap();
        assert_eq!(g.p.points(), vec![2.0]);
        assert_eq!(g.q.points(), vec![2.0, 2.5, 3.0]);
        assert_eq!(g.r, ScanGrid::default().r);
    }

    #[test]
    fn parse_rejects_bad_ranges() {
        assert!(ScanGrid::parse("p:1:2:3").is_err());
        assert!(ScanGrid::parse("r:0:0.5:3").is_err());
        assert!(ScanGrid::parse("r:0.5:1:3").is_err());
        assert!(ScanGrid::parse("p:3:2:3").is_err());
        assert!(ScanGrid::parse("p:2:3:0").is_err());
        assert!(ScanGrid::parse("x:2:3:2").is_err());
        assert!(ScanGrid::parse("p:2:3").is_err());
    }

    #[test]
    fn default_pair_axes() {
        let (r, s) = ScanGrid::default().pair_axes();
        assert_eq!(r.len(), 20);
        assert_eq!(s, r);
        assert!((r[0] - 1.0 / 21.0).abs() < 1e-16);
    }
}
