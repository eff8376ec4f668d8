use rayon::prelude::*;

use super::{timed, Best, Limits, SolveReport, Tour, PARALLEL_MIN_WORK};
use crate::color_spanning::ColorSet;
use crate::error::Result;
use crate::geometry::cycle_length;
use crate::instance::Instance;
use crate::solvers::Algorithm;

/// Exhaustive search over transversals with the color order fixed to
/// `1, 2, ..., k`: every choice `(i_1, ..., i_k)` from the color classes is
/// closed into the cycle `i_1 -> i_2 -> ... -> i_k -> i_1` and the shortest
/// wins. Runs in `O(x_1 * ... * x_k * k)`.
///
/// There is no early exit on non-improving candidates: the cycle length is
/// not monotone in the innermost index, so cutting a loop short can skip the
/// optimum. For `k >= 4` the fixed order itself may be suboptimal; see
/// [`super::exact_dp`] for the true optimum.
pub fn exact_fixed_order(instance: &Instance, limits: &Limits) -> Result<SolveReport> {
    let classes = ColorSet::new(instance);
    let work = classes.transversal_count();
    limits.check_enumeration(work)?;

    let (best, elapsed) = timed(|| {
        let first = classes.class(1);
        let best = if work >= PARALLEL_MIN_WORK && first.len() > 1 {
            first
                .par_iter()
                .map(|&s| enumerate_from(instance, &classes, s))
                .reduce(Best::empty, Best::merge)
        } else {
            first
                .iter()
                .map(|&s| enumerate_from(instance, &classes, s))
                .fold(Best::empty(), Best::merge)
        };
        Ok(best)
    })?;

    Ok(SolveReport {
        algorithm: Algorithm::ExactFixed,
        tour: Tour {
            order: best.order,
            perimeter: best.length,
        },
        elapsed,
        mcsc: None,
        node_count: Some(work as u64),
        warnings: Vec::new(),
    })
}

/// All transversals whose color-1 point is `start`, innermost color varying
/// fastest.
fn enumerate_from(instance: &Instance, classes: &ColorSet, start: usize) -> Best {
    let pts = instance.positions();
    let buckets = classes.buckets();
    let k = buckets.len();
    let mut pos = vec![0usize; k];
    let mut order: Vec<usize> = buckets.iter().map(|b| b[0]).collect();
    order[0] = start;
    let mut best = Best::empty();
    loop {
        best.offer(cycle_length(pts, &order), &order);

        let mut c = k - 1;
        loop {
            if c == 0 {
                return best;
            }
            pos[c] += 1;
            if pos[c] < buckets[c].len() {
                order[c] = buckets[c][pos[c]];
                break;
            }
            pos[c] = 0;
            order[c] = buckets[c][0];
            c -= 1;
        }
    }
}
