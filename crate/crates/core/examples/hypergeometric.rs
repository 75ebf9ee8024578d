//! Gauss hypergeometric function: series, the z → 1 − z route, Gauss's
//! value at z = 1 and the contiguous relation.
//!
//! cargo run --example hypergeometric

use pqelliptic::special_fns::{
    contiguous_residual, f21_derivative, gauss_2f1, gauss_value_at_one, HypArgs,
};

fn main() -> pqelliptic::Result<()> {
    println!("{:>6} {:>6} {:>6} {:>8}  {:>22} {:>10}  method", "a", "b", "c", "z", "value", "err");
    let cases = [
        (0.5, 0.5, 1.0, 0.3),
        (0.5, 0.5, 1.0, 0.95),
        (0.5, 0.5, 1.0, 1.0 - 1e-12),
        (1.5, 1.5, 3.0, 0.5),
        (1.0 / 3.0, -0.5, 4.0 / 3.0, 0.99),
        (-3.0, 2.0, 1.5, 0.7),
    ];
    for (a, b, c, z) in cases {
        let res = gauss_2f1(HypArgs::new(a, b, c, z)?)?;
        println!(
            "{a:>6.3} {b:>6.3} {c:>6.3} {z:>8.6}  {:>22.16e} {:>10.2e}  {}",
            res.value, res.err_estimate, res.method
        );
    }

    println!();
    let (a, b, c) = (0.25, 0.5, 2.0);
    println!("Gauss: F({a}, {b}; {c}; 1) = {}", gauss_value_at_one(a, b, c)?);
    for z in [0.9, 0.999, 0.999999] {
        println!("        F({a}, {b}; {c}; {z}) = {}", gauss_2f1(HypArgs::new(a, b, c, z)?)?.value);
    }

    println!();
    let args = HypArgs::new(0.5, 0.5, 1.0, 0.4)?;
    println!("d/dz F(1/2, 1/2; 1; 0.4) = {}", f21_derivative(args)?);

    let (p, q, r) = (2.5f64, 1.75f64, 0.6f64);
    let sigma = 3.0 + 1.0 / q - 1.0 / p;
    let residual = contiguous_residual(sigma, 1.0 + 1.0 / q, 2.0 - 1.0 / p, 1.0 - r.powf(p))?;
    println!("contiguous relation residual at (p, q, r) = ({p}, {q}, {r}): {residual:e}");
    Ok(())
}
