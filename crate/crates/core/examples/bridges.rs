//! Cross-checks between normalizations: Borwein's K_s/E_s against K_p/E_p,
//! and the θ-integral form of K against the hypergeometric form.
//!
//! cargo run --example bridges

use pqelliptic::elliptic::{borwein_k, k_pq, k_theta_integral, takeuchi_bridge_residual};
use pqelliptic::PQParams;

fn main() -> pqelliptic::Result<()> {
    println!("Borwein family, p = 2/(2s+1)");
    for s in [-0.2, 0.0, 0.25] {
        for r in [0.3, 0.5, 0.7] {
            println!(
                "  s = {s:>5}  r = {r}  K_s = {:.15}  residual = {:.1e}",
                borwein_k(s, r)?,
                takeuchi_bridge_residual(s, r)?
            );
        }
    }
    println!("\ntheta integral at r against K at r^(q/p)");
    for (p, q) in [(2.0, 3.0), (3.0, 2.0), (2.5, 1.5)] {
        let params = PQParams::new(p, q)?;
        for r in [0.2, 0.5, 0.8] {
            let theta = k_theta_integral(&params, r)?.value;
            let shifted = k_pq(&params, f64::powf(r, q / p))?.value;
            let same_r = k_pq(&params, r)?.value;
            println!(
                "  (p, q) = ({p}, {q})  r = {r}  theta = {theta:.12}  K(r^(q/p)) - theta = {:+.1e}  K(r) - theta = {:+.1e}",
                shifted - theta,
                same_r - theta
            );
        }
    }
    Ok(())
}
