//! The difference function Δ_{p,q}, its derivatives and its constants.
//!
//! cargo run --example delta_function -- 2.5 1.75

use pqelliptic::delta::{
    admissible, delta_eval, delta_prime, delta_second, theorem13_bounds_unchecked, DeltaConstants,
};
use pqelliptic::PQParams;

fn main() -> pqelliptic::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, q) = match args[..] {
        [p, q, ..] => (p, q),
        _ => (2.0, 2.0),
    };
    let params = PQParams::new(p, q)?;
    let c = DeltaConstants::new(&params);
    println!("(p, q) = ({p}, {q}), admissible: {}", admissible(p, q));
    println!("  delta0 = {:.16}", c.delta0);
    println!("  delta1 = {:.16}", c.delta1);
    println!("  beta1  = {:.16}", c.beta1);
    println!("  eta    = {:.16}", c.eta);
    println!();
    println!("{:>5} {:>20} {:>20} {:>20} {:>20}", "r", "delta", "delta'", "delta''", "upper bound");
    for k in 0..=20 {
        let r = k as f64 / 20.0;
        let d = delta_eval(&params, r)?;
        let d1 = if r < 1.0 { delta_prime(&params, r)? } else { f64::INFINITY };
        let d2 = if r > 0.0 && r < 1.0 { delta_second(&params, r)? } else { f64::NAN };
        let upper = if r > 0.0 && r < 1.0 {
            theorem13_bounds_unchecked(&params, r)?.upper
        } else {
            f64::NAN
        };
        println!("{r:>5.2} {:>20.15} {d1:>20.15} {d2:>20.15} {upper:>20.15}", d.value);
    }
    Ok(())
}
