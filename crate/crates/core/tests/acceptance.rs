//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use pqelliptic::delta::{
    admissible, admissible_exact, delta, epsilon_exact, h_closed, h_def, parse_rational,
    DeltaConstants,
};
use pqelliptic::elliptic::{
    e_pq, k_pq, k_theta_integral, legendre_e_agm, legendre_k_agm, takeuchi_bridge_residual,
};
use pqelliptic::special_fns::contiguous_residual;
use pqelliptic::verify::{run_claims, ScanGrid, Status};
use pqelliptic::PQParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: String) -> Outcome {
    Outcome { ok, detail }
}

fn timed<F: FnOnce() -> Outcome>(limit: Duration, f: F) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    o.detail = format!("{}; {:.3} s (limit {} s)", o.detail, elapsed.as_secs_f64(), limit.as_secs_f64());
    o.ok &= elapsed < limit;
    o
}

fn params(p: f64, q: f64) -> PQParams {
    PQParams::new(p, q).unwrap()
}

fn legendre_anchor() -> Outcome {
    timed(Duration::from_secs(1), || {
        let prm = params(2.0, 2.0);
        let mut worst = 0.0f64;
        for k in 1..=9 {
            let r = k as f64 / 10.0;
            worst = worst.max((k_pq(&prm, r).unwrap().value - legendre_k_agm(r).unwrap()).abs());
            worst = worst.max((e_pq(&prm, r).unwrap().value - legendre_e_agm(r).unwrap()).abs());
        }
        outcome(worst < 1e-12, format!("max |K - K_agm|, |E - E_agm| = {worst:.2e} (< 1e-12)"))
    })
}

fn classical_degeneration() -> Outcome {
    let prm = params(2.0, 2.0);
    let d0 = PI / 4.0 - 1.0;
    let c = DeltaConstants::new(&prm);
    let errs = [
        (delta(&prm, 0.0).unwrap() - d0).abs(),
        (delta(&prm, 1.0).unwrap() + d0).abs(),
        (delta(&prm, 1e-9).unwrap() - d0).abs(),
        (delta(&prm, 1.0 - 1e-13).unwrap() + d0).abs(),
    ];
    let worst = errs.iter().cloned().fold(0.0, f64::max);
    let beta_err = (c.beta1 - (2.0 - PI / 2.0)).abs();
    let five = format!("{:.5}", c.beta1);
    outcome(
        worst < 1e-10 && beta_err < 1e-14 && five == "0.42920",
        format!("endpoint error {worst:.2e} (< 1e-10), beta1 = {:.10} -> {five}", c.beta1),
    )
}

fn h_forms() -> Outcome {
    timed(Duration::from_secs(5), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2101);
        let mut worst = 0.0f64;
        for _ in 0..200 {
            let a = rng.gen_range(0.1..0.9);
            let b = rng.gen_range(0.1..0.9);
            let r = rng.gen_range(0.05..1.0);
            let closed = h_closed(a, b, r).unwrap();
            let def = h_def(a, b, r).unwrap().value;
            worst = worst.max((def - closed).abs() / (1.0 + closed.abs()));
        }
        outcome(worst < 1e-9, format!("200 samples, max relative gap {worst:.2e} (< 1e-9)"))
    })
}

fn h_at_one() -> Outcome {
    let vals = [1.5, 2.0, 2.5, 3.0, 4.0];
    let mut worst = 0.0f64;
    for p in vals {
        for q in vals {
            worst = worst.max((h_closed(1.0 / q, 1.0 / p, 1.0).unwrap() - 1.0).abs());
        }
    }
    outcome(worst < 1e-12, format!("25 pairs, max |H(1) - 1| = {worst:.2e} (< 1e-12)"))
}

fn contiguous() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2103);
    let mut worst_random = 0.0f64;
    for _ in 0..100 {
        let sigma = rng.gen_range(1.0..=5.0);
        let alpha = rng.gen_range(0.0..=3.0);
        let rho = rng.gen_range(0.0..=3.0);
        let z = rng.gen_range(0.0..=0.9);
        worst_random = worst_random.max(contiguous_residual(sigma, alpha, rho, z).unwrap().abs());
    }
    let mut worst_proof = 0.0f64;
    let vals = [1.5, 2.0, 2.5, 3.0, 4.0];
    for p in vals {
        for q in vals {
            for k in 1..20 {
                let r = k as f64 / 20.0;
                let z = 1.0 - f64::powf(r, p);
                let res = contiguous_residual(3.0 + 1.0 / q - 1.0 / p, 1.0 + 1.0 / q, 2.0 - 1.0 / p, z);
                worst_proof = worst_proof.max(res.unwrap().abs());
            }
        }
    }
    outcome(
        worst_random < 1e-10 && worst_proof < 1e-10,
        format!("random sweep {worst_random:.2e}, instantiation {worst_proof:.2e} (< 1e-10)"),
    )
}

fn claims_pass(ids: &[&str], min_evaluated: usize) -> Outcome {
    let report = run_claims(ids, &ScanGrid::default(), None).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for c in &report.claims {
        ok &= c.status == Status::Pass && c.failed == 0 && c.evaluated >= min_evaluated;
        parts.push(format!(
            "{}: {} evaluated, {} failed, worst {:.2e}",
            c.id,
            c.evaluated,
            c.failed,
            c.worst_residual.unwrap_or(f64::NAN)
        ));
    }
    outcome(ok, parts.join("; "))
}

fn single_variable_bounds() -> Outcome {
    claims_pass(&["thm1.3.monotone", "thm1.3.convex", "thm1.3.bounds"], 25 * 18)
}

fn pair_bounds() -> Outcome {
    claims_pass(&["thm1.4.bounds"], 25 * 400)
}

fn derivatives() -> Outcome {
    claims_pass(&["delta.prime", "delta.second"], 25 * 19)
}

fn bridges() -> Outcome {
    let mut takeuchi = 0.0f64;
    for s in [-0.2, 0.0, 0.25] {
        for r in [0.3, 0.5, 0.7] {
            takeuchi = takeuchi.max(takeuchi_bridge_residual(s, r).unwrap());
        }
    }
    let mut theta = 0.0f64;
    for (p, q) in [(2.0, 3.0), (3.0, 2.0), (2.5, 1.5)] {
        let prm = params(p, q);
        for r in [0.2, 0.5, 0.8] {
            let t = k_theta_integral(&prm, r).unwrap().value;
            let k = k_pq(&prm, f64::powf(r, q / p)).unwrap().value;
            theta = theta.max((t - k).abs());
        }
    }
    outcome(
        takeuchi < 1e-10 && theta < 1e-7,
        format!("Takeuchi {takeuchi:.2e} (< 1e-10), theta {theta:.2e} (< 1e-7)"),
    )
}

fn epsilon_arithmetic() -> Outcome {
    let two = parse_rational("2").unwrap();
    let eps = epsilon_exact(&two, &two);
    let ok = eps == parse_rational("39/16").unwrap()
        && admissible_exact(&two, &two)
        && !admissible_exact(&parse_rational("1.2").unwrap(), &two)
        && admissible(2.0, 2.0)
        && !admissible(1.2, 2.0);
    outcome(ok, format!("epsilon(2,2) = {eps}, admissible(2,2), not admissible(1.2,2)"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("Legendre anchor", legendre_anchor),
        ("classical degeneration", classical_degeneration),
        ("H defining vs closed form", h_forms),
        ("H(1) = 1 via Gauss summation", h_at_one),
        ("contiguous relation", contiguous),
        ("monotone, convex, linear bounds", single_variable_bounds),
        ("two-variable bounds", pair_bounds),
        ("derivative oracles", derivatives),
        ("bridge identities", bridges),
        ("epsilon and condition arithmetic", epsilon_arithmetic),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.ok);
        println!("{} [{:>2}] {name}: {}", if o.ok { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    let total = start.elapsed().as_secs_f64();
    println!("acceptance: {} of {} criteria passed in {total:.2} s", criteria.len() - failed, criteria.len());
    if failed > 0 || total > 60.0 {
        std::process::exit(1);
    }
}
