//! Reproduces the shape of the exact-vs-approximation timing table: median
//! time and perimeter for `exact-fixed` and `approx` over n = 10..25 and
//! k = 4..8, three seeds per cell.
//!
//! ```text
//! cargo run --release --example benchmark_table
//! ```

use colored_tsp::bench::{median_elapsed, run_bench, BenchConfig};
use colored_tsp::Algorithm;

fn main() -> colored_tsp::Result<()> {
    let config = BenchConfig::default();
    let rows = run_bench(&config, |_| {})?;

    println!(
        "{:>4} {:>3} {:>14} {:>14} {:>10}",
        "n", "k", "exact-fixed s", "approx s", "apx/fixed"
    );
    for &n in &config.ns {
        for &k in &config.ks {
            let exact = median_elapsed(&rows, n, k, Algorithm::ExactFixed);
            let approx = median_elapsed(&rows, n, k, Algorithm::Approx);
            if let (Some(e), Some(a)) = (exact, approx) {
                println!("{n:>4} {k:>3} {e:>14.3e} {a:>14.3e} {:>10.3}", a / e);
            }
        }
    }

    println!();
    println!(
        "{:>4} {:>3} {:>5} {:>12} {:>10} {:>8}",
        "n", "k", "seed", "algorithm", "perimeter", "vs opt"
    );
    for r in rows.iter().filter(|r| r.n == 25) {
        if let (Some(p), Some(ratio)) = (r.perimeter, r.ratio_to_exact) {
            println!(
                "{:>4} {:>3} {:>5} {:>12} {p:>10.4} {ratio:>8.4}",
                r.n,
                r.k,
                r.seed,
                r.algorithm.as_str()
            );
        }
    }
    Ok(())
}
