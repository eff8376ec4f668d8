use rayon::prelude::*;

use super::{timed, Algorithm, Best, Limits, SolveReport, Tour, PARALLEL_MIN_WORK};
use crate::color_spanning::ColorSet;
use crate::error::{Error, Result};
use crate::geometry::cycle_length;
use crate::instance::Instance;

/// True optimum by brute force: every transversal combined with every
/// cyclic color order. Color 1 is pinned to the first position and orders
/// that are reversals of each other are evaluated once, leaving
/// `(k - 1)! / 2` orders for `k >= 3`.
pub fn exact_bf_permutations(instance: &Instance, limits: &Limits) -> Result<SolveReport> {
    let k = instance.k();
    let classes = ColorSet::new(instance);
    let orders = cyclic_color_orders(k);
    let work = classes
        .transversal_count()
        .saturating_mul(orders.len() as u128);
    if k > limits.bf_max_colors {
        return Err(Error::TooLargeForEnumeration {
            work,
            cap: limits.enumeration_cap,
        });
    }
    limits.check_enumeration(work)?;

    let (best, elapsed) = timed(|| {
        let first = classes.class(1);
        let search = |&s: &usize| enumerate_from(instance, &classes, &orders, s);
        let best = if work >= PARALLEL_MIN_WORK && first.len() > 1 {
            first
                .par_iter()
                .map(search)
                .reduce(Best::empty, Best::merge)
        } else {
            first.iter().map(search).fold(Best::empty(), Best::merge)
        };
        Ok(best)
    })?;

    Ok(SolveReport {
        algorithm: Algorithm::ExactBf,
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

/// Color visiting orders as 0-based color indices, each starting with 0.
/// One representative per reversal pair: the second color is smaller than
/// the last.
pub(crate) fn cyclic_color_orders(k: usize) -> Vec<Vec<usize>> {
    if k <= 3 {
        return vec![(0..k).collect()];
    }
    let mut rest: Vec<usize> = (1..k).collect();
    let mut out = Vec::new();
    loop {
        if rest[0] < rest[rest.len() - 1] {
            let mut order = Vec::with_capacity(k);
            order.push(0);
            order.extend_from_slice(&rest);
            out.push(order);
        }
        if !next_permutation(&mut rest) {
            return out;
        }
    }
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn enumerate_from(
    instance: &Instance,
    classes: &ColorSet,
    orders: &[Vec<usize>],
    start: usize,
) -> Best {
    let pts = instance.positions();
    let buckets = classes.buckets();
    let k = buckets.len();
    let mut pos = vec![0usize; k];
    let mut pick: Vec<usize> = buckets.iter().map(|b| b[0]).collect();
    pick[0] = start;
    let mut cycle = vec![0usize; k];
    let mut best = Best::empty();
    loop {
        for colors in orders {
            for (slot, &c) in cycle.iter_mut().zip(colors) {
                *slot = pick[c];
            }
            best.offer(cycle_length(pts, &cycle), &cycle);
        }

        let mut c = k - 1;
        loop {
            if c == 0 {
                return best;
            }
            pos[c] += 1;
            if pos[c] < buckets[c].len() {
                pick[c] = buckets[c][pos[c]];
                break;
            }
            pos[c] = 0;
            pick[c] = buckets[c][0];
            c -= 1;
        }
    }
}
