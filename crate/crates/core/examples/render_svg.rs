//! Solve a 1000-point, 20-color instance with the onion heuristic and write
//! the picture: points, spanning circle and tour.
//!
//! ```text
//! cargo run --release --example render_svg -- tour.svg
//! ```

use std::time::Instant;

use colored_tsp::generate;
use colored_tsp::render::write_svg;
use colored_tsp::solvers::approx_onion;

fn main() -> colored_tsp::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "tour.svg".into());
    let inst = generate(1000, 20, 1, 100.0, 100.0)?;
    let start = Instant::now();
    let report = approx_onion(&inst)?;
    println!(
        "approx: perimeter {:.3} over {} points in {:.1} ms",
        report.perimeter(),
        report.tour.len(),
        start.elapsed().as_secs_f64() * 1e3
    );
    write_svg(&out, &inst, Some(&report.tour.order), report.mcsc.as_ref())?;
    println!("wrote {out}");
    Ok(())
}
