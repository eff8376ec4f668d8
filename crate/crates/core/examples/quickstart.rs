//! Generate an instance, solve it with every algorithm, compare perimeters.
//!
//! ```text
//! cargo run --release --example quickstart -- 20 5 7
//! ```

use colored_tsp::{generate, Algorithm, Limits};

fn main() -> colored_tsp::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(20) as usize;
    let k = args.next().unwrap_or(5) as usize;
    let seed = args.next().unwrap_or(7);

    let instance = generate(n, k, seed, 100.0, 100.0)?;
    let limits = Limits::from_env();
    println!("n={n} k={k} seed={seed}");
    for algorithm in Algorithm::ALL {
        match algorithm.solve(&instance, &limits) {
            Ok(r) => println!(
                "{:<12} perimeter {:>10.4}  {:>9.3} ms  tour {:?}",
                algorithm.as_str(),
                r.perimeter(),
                r.elapsed * 1e3,
                r.tour.order
            ),
            Err(e) if e.is_cap_refusal() => println!("{:<12} skipped: {e}", algorithm.as_str()),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
