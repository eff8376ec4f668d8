//! Convex layers (onion peeling), each listed clockwise from its leftmost
//! point, and the tour formed by walking them outermost first.
//!
//! ```text
//! cargo run --release --example onion_layers
//! ```

use colored_tsp::geometry::{onion_layers, perimeter};
use colored_tsp::solvers::onion_tour;
use colored_tsp::{generate, Point2};

fn main() -> colored_tsp::Result<()> {
    let inst = generate(40, 1, 3, 100.0, 100.0)?;
    let pts = inst.positions();
    for (depth, layer) in onion_layers(pts).iter().enumerate() {
        let ring: Vec<Point2> = layer.indices.iter().map(|&i| pts[i]).collect();
        println!(
            "layer {depth}: {:>2} points, perimeter {:>8.3}, {:?}",
            layer.len(),
            perimeter(&ring, true)?,
            layer.indices
        );
    }

    let inst = generate(120, 12, 3, 100.0, 100.0)?;
    let run = onion_tour(&inst)?;
    let bound = 2.0 * std::f64::consts::PI * run.circle.radius;
    println!(
        "\nn=120 k=12: circle r={:.3}, 2 pi r = {bound:.3}",
        run.circle.radius
    );
    for (depth, layer) in run.layers.iter().enumerate() {
        let ring: Vec<Point2> = layer.iter().map(|&i| inst.positions()[i]).collect();
        println!(
            "layer {depth}: {:?} perimeter {:.3}",
            layer,
            perimeter(&ring, true)?
        );
    }
    println!("tour {:?} length {:.3}", run.tour.order, run.tour.perimeter);
    Ok(())
}
