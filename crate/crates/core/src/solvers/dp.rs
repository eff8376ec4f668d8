use super::{timed, Algorithm, Best, Limits, SolveReport, Tour};
use crate::color_spanning::ColorSet;
use crate::error::{Error, Result};
use crate::geometry::{cycle_length, distance};
use crate::instance::Instance;

/// Exact optimum by dynamic programming over (set of visited colors, last
/// point), Held-Karp style.
///
/// Tours are started from each point of color 1 in turn. For a fixed start
/// `s`, `cost[mask][j]` is the shortest path from `s` through one point of
/// every color in `mask` ending at `j`. The table has `2^(k-1) * (n - x_1)`
/// entries and each start costs `O(2^(k-1) * (n - x_1)^2)`.
pub fn exact_dp(instance: &Instance, limits: &Limits) -> Result<SolveReport> {
    let k = instance.k();
    let classes = ColorSet::new(instance);
    let others = instance.n() - classes.class(1).len();
    let states = (1u128 << (k - 1).min(127)).saturating_mul(others.max(1) as u128);
    if k > 64 || states > limits.dp_state_cap as u128 {
        return Err(Error::DpStateSpaceTooLarge {
            states,
            cap: limits.dp_state_cap,
        });
    }

    let (order, elapsed) = timed(|| Ok(solve(instance, &classes)))?;
    let tour = Tour::new(instance, order)?;
    Ok(SolveReport {
        algorithm: Algorithm::ExactDp,
        tour,
        elapsed,
        mcsc: None,
        node_count: None,
        warnings: Vec::new(),
    })
}

fn solve(instance: &Instance, classes: &ColorSet) -> Vec<usize> {
    let pts = instance.positions();
    let starts = classes.class(1);
    if classes.k() == 1 {
        return vec![starts[0]];
    }

    // Points of colors 2..=k renumbered 0..m, grouped by color.
    let groups: Vec<Vec<usize>> = {
        let mut next = 0;
        classes.buckets()[1..]
            .iter()
            .map(|b| {
                let g: Vec<usize> = (next..next + b.len()).collect();
                next += b.len();
                g
            })
            .collect()
    };
    let global: Vec<usize> = classes.buckets()[1..].iter().flatten().copied().collect();
    let bit_of: Vec<usize> = groups
        .iter()
        .enumerate()
        .flat_map(|(c, g)| std::iter::repeat_n(c, g.len()))
        .collect();
    let m = global.len();
    let dist: Vec<f64> = (0..m * m)
        .map(|ij| distance(pts[global[ij / m]], pts[global[ij % m]]))
        .collect();
    let colors = groups.len();
    let full = (1usize << colors) - 1;
    let mut cost = vec![f64::INFINITY; (full + 1) * m];

    let mut best = Best::empty();
    let mut path = Vec::with_capacity(classes.k());
    for &s in starts {
        let from_start: Vec<f64> = global.iter().map(|&g| distance(pts[s], pts[g])).collect();
        cost.fill(f64::INFINITY);
        for j in 0..m {
            cost[(1 << bit_of[j]) * m + j] = from_start[j];
        }
        for mask in 1..full {
            for c in (0..colors).filter(|c| mask & (1 << c) != 0) {
                for &j in &groups[c] {
                    let here = cost[mask * m + j];
                    if here == f64::INFINITY {
                        continue;
                    }
                    for c2 in (0..colors).filter(|c2| mask & (1 << c2) == 0) {
                        let next = mask | (1 << c2);
                        for &j2 in &groups[c2] {
                            let cand = here + dist[j * m + j2];
                            let slot = &mut cost[next * m + j2];
                            if cand < *slot {
                                *slot = cand;
                            }
                        }
                    }
                }
            }
        }

        let mut last = 0;
        let mut total = f64::INFINITY;
        for j in 0..m {
            let t = cost[full * m + j] + from_start[j];
            if t < total {
                total = t;
                last = j;
            }
        }

        // Walk predecessors back from the final state; every stored cost
        // equals one recomputable sum exactly.
        path.clear();
        path.push(last);
        let mut mask = full;
        let mut cur = last;
        while mask.count_ones() > 1 {
            let prev_mask = mask ^ (1 << bit_of[cur]);
            let target = cost[mask * m + cur];
            cur = (0..colors)
                .filter(|c| prev_mask & (1 << c) != 0)
                .flat_map(|c| groups[c].iter().copied())
                .find(|&i| cost[prev_mask * m + i] + dist[i * m + cur] == target)
                .expect("predecessor exists for a finite state");
            mask = prev_mask;
            path.push(cur);
        }
        let order: Vec<usize> = std::iter::once(s)
            .chain(path.iter().rev().map(|&j| global[j]))
            .collect();
        best.offer(cycle_length(pts, &order), &order);
    }
    best.order
}
