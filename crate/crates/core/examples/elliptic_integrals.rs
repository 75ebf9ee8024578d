//! K_{p,q}, E_{p,q} and their complements; the classical case against the
//! AGM.
//!
//! cargo run --example elliptic_integrals

use pqelliptic::elliptic::{e_comp, e_pq, k_comp, k_pq, legendre_e_agm, legendre_k_agm};
use pqelliptic::PQParams;

fn main() -> pqelliptic::Result<()> {
    let classical = PQParams::new(2.0, 2.0)?;
    println!("p = q = 2 against the arithmetic-geometric mean");
    for k in 1..=9 {
        let r = k as f64 / 10.0;
        let kk = k_pq(&classical, r)?;
        let ee = e_pq(&classical, r)?;
        println!(
            "  r = {r:.1}  K = {:.15}  ({:+.1e})  E = {:.15}  ({:+.1e})",
            kk.value,
            kk.value - legendre_k_agm(r)?,
            ee.value,
            ee.value - legendre_e_agm(r)?
        );
    }

    let params = PQParams::new(3.0, 1.5)?;
    println!("\n(p, q) = (3, 1.5)");
    for r in [0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999999] {
        let kk = k_pq(&params, r)?;
        let ee = e_pq(&params, r)?;
        println!(
            "  r = {r:<9} K = {:.15} [{}]  E = {:.15} [{}]",
            kk.value, kk.method, ee.value, ee.method
        );
    }
    let r = 0.6;
    println!(
        "  K'({r}) = {:.15}  E'({r}) = {:.15}",
        k_comp(&params, r)?.value,
        e_comp(&params, r)?.value
    );
    println!("  E(1) = {:.15}", e_pq(&params, 1.0)?.value);
    match k_pq(&params, 1.0) {
        Ok(_) => println!("  K(1) evaluated unexpectedly"),
        Err(e) => println!("  K(1): {e}"),
    }
    Ok(())
}
