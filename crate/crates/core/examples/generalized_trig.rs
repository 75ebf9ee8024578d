//! π_{p,q}, arcsin_{p,q} and its inverse sin_{p,q}.
//!
//! cargo run --example generalized_trig

use pqelliptic::gen_trig::{arcsin_pq, pi_pq, pi_pq_swapped_integrand, sin_pq, PQParams};

fn main() -> pqelliptic::Result<()> {
    println!("{:>5} {:>5}  {:>20} {:>20}", "p", "q", "pi_pq", "swapped integrand");
    for (p, q) in [(2.0, 2.0), (2.0, 3.0), (3.0, 2.0), (1.5, 4.0), (4.0, 4.0)] {
        println!(
            "{p:>5} {q:>5}  {:>20.16} {:>20.16}",
            pi_pq(p, q)?,
            pi_pq_swapped_integrand(p, q)?
        );
    }

    let params = PQParams::new(3.0, 1.5)?;
    println!("\nsin_pq on [0, pi_pq/2] for (p, q) = (3, 1.5):");
    let half = 0.5 * params.pi_pq;
    for k in 0..=8 {
        let t = half * k as f64 / 8.0;
        let s = sin_pq(&params, t)?;
        let back = arcsin_pq(&params, s)?;
        println!("  t = {t:.6}  sin = {s:.15}  arcsin(sin) - t = {:+.1e}", back - t);
    }
    Ok(())
}
