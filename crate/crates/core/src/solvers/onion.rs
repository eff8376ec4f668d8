use super::{timed, Algorithm, SolveReport, Tour};
use crate::color_spanning::{build_msp, min_color_spanning_circle, Circle};
use crate::error::Result;
use crate::geometry::{onion_layers, Point2};
use crate::instance::Instance;

/// Intermediate products of the onion-peeling heuristic.
#[derive(Debug, Clone, PartialEq)]
pub struct OnionRun {
    pub circle: Circle,
    /// One point per color inside `circle`, in color order.
    pub msp: Vec<usize>,
    /// Convex layers of `msp`, outermost first, as instance indices. Each
    /// layer runs clockwise from its leftmost point.
    pub layers: Vec<Vec<usize>>,
    pub tour: Tour,
}

/// Minimum color-spanning circle, then one point per color inside it, then
/// convex layers of those points concatenated outermost first. The cycle
/// closes from the last point of the innermost layer back to the first point
/// of the outermost one.
pub fn onion_tour(instance: &Instance) -> Result<OnionRun> {
    let circle = min_color_spanning_circle(instance)?;
    let msp = build_msp(instance, &circle)?;
    let positions: Vec<Point2> = msp.iter().map(|&i| instance.positions()[i]).collect();
    let layers: Vec<Vec<usize>> = onion_layers(&positions)
        .into_iter()
        .map(|layer| layer.indices.into_iter().map(|j| msp[j]).collect())
        .collect();
    let order: Vec<usize> = layers.iter().flatten().copied().collect();
    let tour = Tour::new(instance, order)?;
    Ok(OnionRun {
        circle,
        msp,
        layers,
        tour,
    })
}

pub fn approx_onion(instance: &Instance) -> Result<SolveReport> {
    let (run, elapsed) = timed(|| onion_tour(instance))?;
    Ok(SolveReport {
        algorithm: Algorithm::Approx,
        tour: run.tour,
        elapsed,
        mcsc: Some(run.circle),
        node_count: None,
        warnings: Vec::new(),
    })
}
