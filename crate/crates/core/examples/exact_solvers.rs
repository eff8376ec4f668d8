//! The fixed color order (1, 2, ..., k) is not always optimal: the exact
//! solvers that also search over cyclic orders find shorter tours.
//!
//! ```text
//! cargo run --release --example exact_solvers
//! ```

use colored_tsp::solvers::{exact_bf_permutations, exact_dp, exact_fixed_order, Limits};
use colored_tsp::{generate, ColoredPoint, Instance};

fn main() -> colored_tsp::Result<()> {
    let limits = Limits::default();

    // A 10 x 1 rectangle colored so that 1 -> 2 -> 3 -> 4 crosses itself.
    let crossing = Instance::new(
        vec![
            ColoredPoint::new(0.0, 0.0, 1),
            ColoredPoint::new(10.0, 0.0, 2),
            ColoredPoint::new(0.0, 1.0, 3),
            ColoredPoint::new(10.0, 1.0, 4),
        ],
        4,
    )?;
    let fixed = exact_fixed_order(&crossing, &limits)?;
    let best = exact_bf_permutations(&crossing, &limits)?;
    println!(
        "rectangle: fixed order {:.4}, best order {:.4} via {:?}",
        fixed.perimeter(),
        best.perimeter(),
        best.tour.order
    );

    println!(
        "\n{:>5} {:>12} {:>12} {:>12} {:>8}",
        "seed", "fixed", "brute", "dp", "gap %"
    );
    for seed in 0..10 {
        let inst = generate(12, 5, seed, 100.0, 100.0)?;
        let f = exact_fixed_order(&inst, &limits)?;
        let b = exact_bf_permutations(&inst, &limits)?;
        let d = exact_dp(&inst, &limits)?;
        println!(
            "{seed:>5} {:>12.4} {:>12.4} {:>12.4} {:>8.2}",
            f.perimeter(),
            b.perimeter(),
            d.perimeter(),
            100.0 * (f.perimeter() / d.perimeter() - 1.0)
        );
    }
    Ok(())
}
