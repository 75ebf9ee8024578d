//! Maps the admissibility conditions over a (p, q) box, in exact arithmetic.
//!
//! cargo run --example admissible_region

use pqelliptic::verify::{region_rows, Range1};

fn main() -> pqelliptic::Result<()> {
    let p = Range1::parse("1.2:4:29")?;
    let q = Range1::parse("1.2:4:29")?;
    let rows = region_rows(&p, &q);
    println!("# admissible, + condition (1) only, . neither (p down, q across, 1.2 to 4 step 0.1)");
    for (i, chunk) in rows.chunks(q.steps).enumerate() {
        let line: String = chunk
            .iter()
            .map(|r| match (r.class.admissible, r.class.cond1) {
                (true, _) => '#',
                (false, true) => '+',
                _ => '.',
            })
            .collect();
        println!("p = {:>4.2}  {line}", p.points()[i]);
    }
    let n = rows.iter().filter(|r| r.class.admissible).count();
    println!("{n} of {} pairs admissible", rows.len());
    Ok(())
}
