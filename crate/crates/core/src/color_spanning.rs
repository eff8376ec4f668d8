//! Minimum color-spanning circle and the one-point-per-color set inside it.
//!
//! The smallest circle holding at least one point of every color is the
//! smallest enclosing circle of some transversal (one point per color), so
//! it is either the diametral circle of two differently colored points or
//! the circumcircle of three pairwise differently colored points forming a
//! non-obtuse triangle. Those
//! candidates are enumerated exactly, restricted to the radius window
//! `[lower, upper]` described on [`Search`], and the spanning one with the
//! smallest `(radius, x, y)` key is returned.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{cross, Point2, EPS, EPS_ORIENT};
use crate::instance::Instance;

/// Anchor count above which candidate generation runs on the rayon pool.
const PARALLEL_MIN_POINTS: usize = 200;

/// Relative margin on the squared-radius screen for triples, far above the
/// rounding error of either radius formula.
const SCREEN_SLACK: f64 = 1.0 + 1e-6;

/// Triangles only count as obtuse when clearly so; near-right ones are kept.
const OBTUSE_SLACK: f64 = 1.0 + 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Self {
        Self { center, radius }
    }

    /// Closed containment with the shared absolute tolerance.
    pub fn contains(&self, p: Point2) -> bool {
        let r = self.radius + EPS;
        dist2(self.center, p) <= r * r
    }

    /// Diametral circle of `a` and `b`.
    pub fn diametral(a: Point2, b: Point2) -> Self {
        let center = Point2::new(0.5 * (a.x + b.x), 0.5 * (a.y + b.y));
        let radius = dist2(center, a).max(dist2(center, b)).sqrt();
        Self { center, radius }
    }

    /// Circumcircle of `a`, `b`, `c`, or `None` when they are collinear
    /// within [`EPS_ORIENT`].
    pub fn circumcircle(a: Point2, b: Point2, c: Point2) -> Option<Self> {
        let z = cross(a, b, c);
        if z.abs() <= EPS_ORIENT {
            return None;
        }
        let (bx, by) = (b.x - a.x, b.y - a.y);
        let (cx, cy) = (c.x - a.x, c.y - a.y);
        let b2 = bx * bx + by * by;
        let c2 = cx * cx + cy * cy;
        let d = 2.0 * (bx * cy - by * cx);
        let ux = (cy * b2 - by * c2) / d;
        let uy = (bx * c2 - cx * b2) / d;
        let center = Point2::new(a.x + ux, a.y + uy);
        let radius = dist2(center, a)
            .max(dist2(center, b))
            .max(dist2(center, c))
            .sqrt();
        Some(Self { center, radius })
    }

    /// Ordering used to pick among equally small circles.
    fn key_cmp(&self, other: &Circle) -> std::cmp::Ordering {
        self.radius
            .total_cmp(&other.radius)
            .then(self.center.x.total_cmp(&other.center.x))
            .then(self.center.y.total_cmp(&other.center.y))
    }
}

/// Point indices grouped by color. `buckets[c - 1]` holds the indices of
/// color `c` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSet {
    k: usize,
    buckets: Vec<Vec<usize>>,
}

impl ColorSet {
    pub fn new(instance: &Instance) -> Self {
        let k = instance.k();
        let mut buckets = vec![Vec::new(); k];
        for (i, p) in instance.points().iter().enumerate() {
            buckets[p.color - 1].push(i);
        }
        Self { k, buckets }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Indices of color `color` (1-based).
    pub fn class(&self, color: usize) -> &[usize] {
        &self.buckets[color - 1]
    }

    pub fn buckets(&self) -> &[Vec<usize>] {
        &self.buckets
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.buckets.iter().map(Vec::len).collect()
    }

    /// Number of transversals, `x_1 * x_2 * ... * x_k`, saturating.
    pub fn transversal_count(&self) -> u128 {
        self.buckets
            .iter()
            .fold(1u128, |acc, b| acc.saturating_mul(b.len() as u128))
    }
}

/// Smallest circle enclosing all of `points` (closed, with [`EPS`] slack),
/// by Welzl's incremental construction in input order.
pub fn smallest_enclosing_circle(points: &[Point2]) -> Result<Circle> {
    let Some(&first) = points.first() else {
        return Err(Error::EmptyPointSet);
    };
    let mut c = Circle::new(first, 0.0);
    for i in 1..points.len() {
        if c.contains(points[i]) {
            continue;
        }
        c = Circle::new(points[i], 0.0);
        for j in 0..i {
            if c.contains(points[j]) {
                continue;
            }
            c = Circle::diametral(points[i], points[j]);
            for l in 0..j {
                if c.contains(points[l]) {
                    continue;
                }
                c = Circle::circumcircle(points[i], points[j], points[l]).unwrap_or_else(|| {
                    let (a, b, p) = (points[i], points[j], points[l]);
                    [(a, b), (a, p), (b, p)]
                        .into_iter()
                        .map(|(u, v)| Circle::diametral(u, v))
                        .max_by(|x, y| x.radius.total_cmp(&y.radius))
                        .expect("three pairs")
                });
            }
        }
    }
    Ok(c)
}

/// Exact minimum color-spanning circle.
///
/// Ties on radius are broken by the smaller center x, then y. With a single
/// color the answer is the zero circle at point 0.
pub fn min_color_spanning_circle(instance: &Instance) -> Result<Circle> {
    let k = instance.k();
    let pts = instance.positions();
    let colors: Vec<usize> = instance.points().iter().map(|p| p.color - 1).collect();
    // Points laid out by color: class c is grouped[start[c]..start[c + 1]].
    let mut start = vec![0usize; k + 1];
    for &c in &colors {
        start[c + 1] += 1;
    }
    if let Some(c) = start[1..].iter().position(|&m| m == 0) {
        return Err(Error::ColorClassEmpty { color: c + 1 });
    }
    for c in 0..k {
        start[c + 1] += start[c];
    }
    if k == 1 {
        return Ok(Circle::new(pts[0], 0.0));
    }
    let n = pts.len();
    let parallel = n >= PARALLEL_MIN_POINTS;

    let mut grouped = vec![Point2::new(0.0, 0.0); n];
    let mut fill_at = start.clone();
    for (q, &c) in colors.iter().enumerate() {
        grouped[fill_at[c]] = pts[q];
        fill_at[c] += 1;
    }

    let classes = || start.windows(2).map(|w| &grouped[w[0]..w[1]]);
    // Distance from p to the farthest color, each color taken at its
    // nearest point.
    let reach_at = |p: usize| {
        let here = pts[p];
        let mut far: f64 = 0.0;
        for class in classes() {
            let mut near = f64::INFINITY;
            for &q in class {
                near = near.min(dist2(here, q));
            }
            far = far.max(near);
        }
        far.sqrt()
    };
    let reach_of: Vec<f64> = if parallel {
        (0..n).into_par_iter().map(reach_at).collect()
    } else {
        (0..n).map(reach_at).collect()
    };
    let reach = reach_of.iter().copied().fold(f64::INFINITY, f64::min);

    // The transversal of p (its nearest point of each color) contains p and
    // a point reach_of[p] away, so its enclosing radius is at least
    // reach_of[p] / 2. Starting from the point of least reach usually makes
    // that skip most of the others.
    let mut transversal = Vec::with_capacity(k);
    let mut sec_at = |p: usize, bound: f64| {
        let here = pts[p];
        transversal.clear();
        transversal.extend(classes().map(|class| {
            class
                .iter()
                .copied()
                .fold((f64::INFINITY, here), |best, q| {
                    let d = dist2(here, q);
                    if d < best.0 {
                        (d, q)
                    } else {
                        best
                    }
                })
                .1
        }));
        // Half the diameter is a cheap lower bound on the enclosing radius.
        let diameter2 = transversal
            .iter()
            .enumerate()
            .flat_map(|(a, &u)| transversal[a + 1..].iter().map(move |&v| dist2(u, v)))
            .fold(0.0, f64::max);
        if 0.25 * diameter2 >= bound * bound {
            return Ok(bound);
        }
        smallest_enclosing_circle(&transversal).map(|c| c.radius)
    };
    let first = (0..n).fold(0, |b, p| if reach_of[p] < reach_of[b] { p } else { b });
    let mut upper = sec_at(first, f64::INFINITY)?;
    for (p, &reach) in reach_of.iter().enumerate() {
        if 0.5 * reach < upper {
            upper = upper.min(sec_at(p, upper)?);
        }
    }

    let groups: Vec<&[Point2]> = classes().collect();
    let search = Search {
        pts,
        colors: &colors,
        groups: &groups,
        reach: &reach_of,
        lower: 0.5 * reach - EPS,
        upper: upper + EPS,
    };

    let best = if parallel {
        (0..n)
            .into_par_iter()
            .fold(Tracker::default, |mut t, i| {
                search.scan_anchor(i, &mut t);
                t
            })
            .map(|t| t.best)
            .reduce(|| None, min_circle)
    } else {
        let mut t = Tracker::default();
        for i in 0..n {
            search.scan_anchor(i, &mut t);
        }
        t.best
    };
    best.ok_or_else(|| Error::InvalidInstance("no color-spanning candidate found".into()))
}

fn min_circle(a: Option<Circle>, b: Option<Circle>) -> Option<Circle> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.key_cmp(&x).is_lt() { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

pub(crate) fn dist2(a: Point2, b: Point2) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    dx * dx + dy * dy
}

/// Smallest spanning circle seen so far, plus the color that most recently
/// ruled a candidate out (checked first next time).
#[derive(Default)]
struct Tracker {
    best: Option<Circle>,
    hint: usize,
    partners: Vec<Partner>,
}

/// A point that can share a candidate circle with the current anchor.
struct Partner {
    at: Point2,
    color: usize,
    /// Squared distance to the anchor.
    d2: f64,
    floor: f64,
}

/// Candidate filter for the enumeration. `upper` is the smallest enclosing
/// circle radius over nearest-per-color transversals, an attained radius.
/// `lower` is half of `min_p max_c dist(p, color c)`: every point inside the
/// optimal circle reaches every color within `2 r*`. The same argument gives
/// each candidate its own floor from the reach of its defining points.
struct Search<'a> {
    pts: &'a [Point2],
    colors: &'a [usize],
    groups: &'a [&'a [Point2]],
    reach: &'a [f64],
    lower: f64,
    upper: f64,
}

impl Search<'_> {
    /// Offers every pair circle, and every circumcircle of a non-obtuse
    /// triple, whose lowest-index defining point is `i`.
    fn scan_anchor(&self, i: usize, t: &mut Tracker) {
        let pts = self.pts;
        let colors = self.colors;
        let floor = |p: usize| 0.5 * self.reach[p] - EPS;
        if floor(i) > self.upper {
            return;
        }
        let pi = pts[i];
        let reach2 = 4.0 * self.upper * self.upper;
        let mut partners = std::mem::take(&mut t.partners);
        partners.clear();
        for j in i + 1..pts.len() {
            if colors[j] == colors[i] || floor(j) > self.upper {
                continue;
            }
            let d = dist2(pi, pts[j]);
            if d <= reach2 {
                partners.push(Partner {
                    at: pts[j],
                    color: colors[j],
                    d2: d,
                    floor: floor(j),
                });
            }
        }

        for (a, pj) in partners.iter().enumerate() {
            let fij = floor(i).max(pj.floor);
            self.offer(Circle::diametral(pi, pj.at), fij, t);
            for pl in &partners[a + 1..] {
                if pl.color == pj.color {
                    continue;
                }
                let djl = dist2(pj.at, pl.at);
                if djl > reach2 {
                    continue;
                }
                // An obtuse triangle's enclosing circle is the diametral
                // circle of its longest side, offered as a pair.
                let (x, y, z) = (pj.d2, pl.d2, djl);
                let longest = x.max(y).max(z);
                if 2.0 * longest > (x + y + z) * OBTUSE_SLACK {
                    continue;
                }
                // Circumradius from the side lengths, R^2 = a^2 b^2 c^2 / (4 z^2),
                // screens out triples clearly larger than anything acceptable
                // before the center is built.
                let bound = t.best.map_or(self.upper, |b| b.radius.min(self.upper));
                let w = cross(pi, pj.at, pl.at);
                if x * y * z > 4.0 * w * w * bound * bound * SCREEN_SLACK {
                    continue;
                }
                if let Some(c) = Circle::circumcircle(pi, pj.at, pl.at) {
                    self.offer(c, fij.max(pl.floor), t);
                }
            }
        }
        t.partners = partners;
    }

    fn offer(&self, c: Circle, floor: f64, t: &mut Tracker) {
        if c.radius > self.upper || c.radius < self.lower.max(floor) {
            return;
        }
        if let Some(best) = &t.best {
            if !c.key_cmp(best).is_lt() {
                return;
            }
        }
        if self.spans(&c, &mut t.hint) {
            t.best = Some(c);
        }
    }

    fn spans(&self, c: &Circle, hint: &mut usize) -> bool {
        let k = self.groups.len();
        for step in 0..k {
            let color = (*hint + step) % k;
            if !self.groups[color].iter().any(|&p| c.contains(p)) {
                *hint = color;
                return false;
            }
        }
        true
    }
}

/// The in-circle point set reduced to one point per color: for each color,
/// the contained point nearest the center (lowest index on ties). Returned
/// in color order.
pub fn build_msp(instance: &Instance, circle: &Circle) -> Result<Vec<usize>> {
    let mut best: Vec<Option<(f64, usize)>> = vec![None; instance.k()];
    for (i, p) in instance.points().iter().enumerate() {
        if !circle.contains(p.position()) {
            continue;
        }
        let d = dist2(circle.center, p.position());
        let slot = &mut best[p.color - 1];
        match slot {
            Some((bd, _)) if *bd <= d => {}
            _ => *slot = Some((d, i)),
        }
    }
    best.into_iter()
        .enumerate()
        .map(|(c, slot)| {
            slot.map(|(_, i)| i)
                .ok_or(Error::CircleNotSpanning { color: c + 1 })
        })
        .collect()
}
