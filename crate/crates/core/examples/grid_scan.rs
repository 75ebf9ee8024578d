//! Scans a quantity over a grid and writes the CSV used by `pqelliptic scan`.
//!
//! cargo run --example grid_scan -- delta "p:2:2.5:3,q:2:2:1,r:0.1:0.9:5"

use pqelliptic::verify::{scan_rows, write_scan_csv, Quantity, ScanGrid};

fn main() -> pqelliptic::Result<()> {
    let mut args = std::env::args().skip(1);
    let quantity: Quantity = args.next().as_deref().unwrap_or("K").parse()?;
    let grid = match args.next() {
        Some(text) => ScanGrid::parse(&text)?,
        None => ScanGrid::parse("p:1.5:3:4,q:2:2:1,r:0.1:0.9:5")?,
    };
    let rows = scan_rows(&grid, quantity);
    write_scan_csv(&rows, std::io::stdout().lock())
}
