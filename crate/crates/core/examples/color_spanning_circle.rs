//! Minimum color-spanning circle and the one-point-per-color set inside it.
//!
//! ```text
//! cargo run --release --example color_spanning_circle
//! ```

use colored_tsp::{build_msp, generate, min_color_spanning_circle};

fn main() -> colored_tsp::Result<()> {
    for (n, k) in [(30, 3), (70, 7), (200, 10), (1000, 20)] {
        let inst = generate(n, k, 42, 100.0, 100.0)?;
        let circle = min_color_spanning_circle(&inst)?;
        let msp = build_msp(&inst, &circle)?;
        let inside = inst
            .positions()
            .iter()
            .filter(|&&p| circle.contains(p))
            .count();
        println!(
            "n={n:<5} k={k:<3} center ({:.3}, {:.3}) r={:.4}  {inside} points inside, kept {:?}",
            circle.center.x, circle.center.y, circle.radius, msp
        );
    }
    Ok(())
}
