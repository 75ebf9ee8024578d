//! Grids, claim certification and report/CSV output.

mod claims;
mod grid;
mod report;
mod scan;

pub use claims::{claim_ids, find_claim, run_claim, run_claims, ClaimSpec, CLAIMS};
pub use grid::{Range1, ScanGrid};
pub use report::{
    ClaimReport, Failure, Location, Metric, Status, Tally, VerificationReport, MAX_LISTED_FAILURES,
    REPORT_SCHEMA,
};
pub use scan::{
    format_f64, region_rows, scan_rows, write_regions_csv, write_scan_csv, Quantity, RegionRow,
    ScanRow, REGIONS_HEADER, SCAN_HEADER,
};
