//! Tour construction.
//!
//! | algorithm | function | result |
//! |-----------|----------|--------|
//! | `exact-fixed` | [`exact_fixed_order`] | best transversal in the fixed color order 1, 2, ..., k |
//! | `exact-bf` | [`exact_bf_permutations`] | true optimum by enumerating transversals and cyclic color orders |
//! | `exact-dp` | [`exact_dp`] | true optimum by dynamic programming over color subsets |
//! | `approx` | [`approx_onion`] | onion-peeling heuristic inside the minimum color-spanning circle |
//!
//! Every tour is stored as a cycle of point indices without repeating the
//! first index; the closing edge back to `order[0]` is implied.

mod dp;
mod fixed_order;
mod onion;
mod permutations;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::color_spanning::Circle;
use crate::error::{Error, Result};
use crate::geometry::cycle_length;
use crate::instance::Instance;

pub use dp::exact_dp;
pub use fixed_order::exact_fixed_order;
pub use onion::{approx_onion, onion_tour, OnionRun};
pub use permutations::exact_bf_permutations;

/// Environment variable overriding [`Limits::enumeration_cap`].
pub const CAP_ENV: &str = "COLORED_TSP_CAP";

/// Work above which enumeration is split across the rayon pool.
pub(crate) const PARALLEL_MIN_WORK: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "exact-fixed")]
    ExactFixed,
    #[serde(rename = "exact-bf")]
    ExactBf,
    #[serde(rename = "exact-dp")]
    ExactDp,
    #[serde(rename = "approx")]
    Approx,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::ExactFixed,
        Algorithm::ExactBf,
        Algorithm::ExactDp,
        Algorithm::Approx,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::ExactFixed => "exact-fixed",
            Algorithm::ExactBf => "exact-bf",
            Algorithm::ExactDp => "exact-dp",
            Algorithm::Approx => "approx",
        }
    }

    /// True for solvers that return the optimum over all cyclic orders.
    pub fn is_optimal(&self) -> bool {
        matches!(self, Algorithm::ExactBf | Algorithm::ExactDp)
    }

    pub fn solve(&self, instance: &Instance, limits: &Limits) -> Result<SolveReport> {
        match self {
            Algorithm::ExactFixed => exact_fixed_order(instance, limits),
            Algorithm::ExactBf => exact_bf_permutations(instance, limits),
            Algorithm::ExactDp => exact_dp(instance, limits),
            Algorithm::Approx => approx_onion(instance),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| {
                format!(
                    "unknown algorithm `{s}` (expected exact-fixed, exact-bf, exact-dp or approx)"
                )
            })
    }
}

/// Size caps for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of evaluated candidates for `exact-fixed` and `exact-bf`.
    pub enumeration_cap: u64,
    /// Largest `k` accepted by `exact-bf`.
    pub bf_max_colors: usize,
    /// Maximum DP table size, `2^(k-1) * (n - x_1)` entries.
    pub dp_state_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enumeration_cap: 100_000_000,
            bf_max_colors: 10,
            dp_state_cap: 1 << 25,
        }
    }
}

impl Limits {
    /// Defaults, with the enumeration cap taken from `COLORED_TSP_CAP` when
    /// set to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(cap) = std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.enumeration_cap = cap;
        }
        limits
    }

    pub(crate) fn check_enumeration(&self, work: u128) -> Result<()> {
        if work > self.enumeration_cap as u128 {
            return Err(Error::TooLargeForEnumeration {
                work,
                cap: self.enumeration_cap,
            });
        }
        Ok(())
    }
}

/// A closed tour: one point per color, in visiting order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tour {
    pub order: Vec<usize>,
    pub perimeter: f64,
}

impl Tour {
    /// Validates `order` against `instance` and computes its perimeter.
    pub fn new(instance: &Instance, order: Vec<usize>) -> Result<Self> {
        validate_order(instance, &order)?;
        let perimeter = cycle_length(instance.positions(), &order);
        Ok(Self { order, perimeter })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Checks that `order` names valid indices and visits every color once.
pub fn validate_order(instance: &Instance, order: &[usize]) -> Result<()> {
    if order.len() != instance.k() {
        return Err(Error::InvalidTour(format!(
            "tour has {} points but the instance has {} colors",
            order.len(),
            instance.k()
        )));
    }
    let mut seen = vec![false; instance.k()];
    for &i in order {
        if i >= instance.n() {
            return Err(Error::InvalidTour(format!(
                "point index {i} out of range for {} points",
                instance.n()
            )));
        }
        let c = instance.color(i);
        if std::mem::replace(&mut seen[c - 1], true) {
            return Err(Error::InvalidTour(format!("color {c} visited twice")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub algorithm: Algorithm,
    pub tour: Tour,
    /// Wall-clock seconds spent in the solver.
    pub elapsed: f64,
    pub mcsc: Option<Circle>,
    /// Candidates evaluated by the enumerating solvers.
    pub node_count: Option<u64>,
    /// Consistency problems found when the report was read back.
    pub warnings: Vec<String>,
}

impl SolveReport {
    pub fn perimeter(&self) -> f64 {
        self.tour.perimeter
    }

    /// Equality ignoring the measured time.
    pub fn same_result(&self, other: &SolveReport) -> bool {
        self.algorithm == other.algorithm
            && self.tour.order == other.tour.order
            && self.tour.perimeter.to_bits() == other.tour.perimeter.to_bits()
            && self.mcsc == other.mcsc
            && self.node_count == other.node_count
    }
}

pub(crate) fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let start = Instant::now();
    let value = f()?;
    Ok((value, start.elapsed().as_secs_f64()))
}

/// Running minimum over `(length, order)` pairs: shorter wins, then the
/// lexicographically smaller index sequence.
#[derive(Debug, Clone)]
pub(crate) struct Best {
    pub length: f64,
    pub order: Vec<usize>,
}

impl Best {
    pub fn empty() -> Self {
        Self {
            length: f64::INFINITY,
            order: Vec::new(),
        }
    }

    pub fn offer(&mut self, length: f64, order: &[usize]) {
        if length < self.length || (length == self.length && order < self.order.as_slice()) {
            self.length = length;
            self.order.clear();
            self.order.extend_from_slice(order);
        }
    }

    pub fn merge(mut self, other: Best) -> Best {
        self.offer(other.length, &other.order);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::ColoredPoint;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.as_str().parse::<Algorithm>().unwrap(), a);
            let json = serde_json::to_string(&a).unwrap();
            assert_eq!(json, format!("\"{a}\""));
        }
        assert!("held-karp".parse::<Algorithm>().is_err());
    }

    #[test]
    fn tour_validation() {
        let inst = Instance::new(
            vec![
                ColoredPoint::new(0.0, 0.0, 1),
                ColoredPoint::new(3.0, 0.0, 2),
                ColoredPoint::new(0.0, 4.0, 2),
            ],
            2,
        )
        .unwrap();
        assert_eq!(Tour::new(&inst, vec![0, 1]).unwrap().perimeter, 6.0);
        assert!(Tour::new(&inst, vec![1, 2]).is_err());
        assert!(Tour::new(&inst, vec![0, 7]).is_err());
        assert!(Tour::new(&inst, vec![0]).is_err());
    }

    #[test]
    fn best_prefers_shorter_then_lexicographic() {
        let mut b = Best::empty();
        b.offer(2.0, &[3, 1]);
        b.offer(2.0, &[1, 3]);
        b.offer(2.0, &[2, 0]);
        assert_eq!(b.order, vec![1, 3]);
        b.offer(1.5, &[9, 9]);
        assert_eq!(b.order, vec![9, 9]);
    }
}
