//! Planar primitives: distance, orientation, convex hull boundary, onion
//! peeling and polygon perimeter.
//!
//! All predicates work in plain `f64`. Cross products whose magnitude is at
//! most [`EPS_ORIENT`] are treated as collinear.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Collinearity threshold on cross products, in squared input units.
pub const EPS_ORIENT: f64 = 1e-9;

/// Absolute tolerance used when comparing radii and perimeters.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic (x, y) comparison using the IEEE total order.
    pub fn cmp_xy(&self, other: &Point2) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Self { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

/// One convex-hull boundary: indices into the point slice the hull was
/// computed from, clockwise from the leftmost (then lowest) point.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Layer {
    pub indices: Vec<usize>,
}

impl Layer {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

pub fn distance(a: Point2, b: Point2) -> f64 {
    (a.x - b.x).hypot(a.y - b.y)
}

/// `(b - a) x (c - a)`; positive when `a, b, c` turn counterclockwise.
pub fn cross(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

pub fn orientation(a: Point2, b: Point2, c: Point2) -> Orientation {
    let z = cross(a, b, c);
    if z.abs() <= EPS_ORIENT {
        Orientation::Collinear
    } else if z > 0.0 {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// Sum of consecutive edge lengths, accumulated left to right, plus the
/// closing edge when `closed`. A closed two-point tour counts the segment
/// twice.
pub fn perimeter(tour: &[Point2], closed: bool) -> Result<f64> {
    if tour.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut total = 0.0;
    for pair in tour.windows(2) {
        total += distance(pair[0], pair[1]);
    }
    if closed && tour.len() > 1 {
        total += distance(tour[tour.len() - 1], tour[0]);
    }
    Ok(total)
}

/// Closed perimeter of the cycle visiting `points[order[0]], points[order[1]], ...`.
///
/// Same accumulation order as [`perimeter`], so the two agree bit for bit.
pub fn cycle_length(points: &[Point2], order: &[usize]) -> f64 {
    let mut total = 0.0;
    for pair in order.windows(2) {
        total += distance(points[pair[0]], points[pair[1]]);
    }
    if order.len() > 1 {
        total += distance(points[order[order.len() - 1]], points[order[0]]);
    }
    total
}

/// All points on the boundary of the convex hull, including collinear edge
/// points and exact duplicates, clockwise from the leftmost point (ties on x
/// go to the lowest y).
///
/// With fewer than three affinely independent points the hull is a segment
/// or a single point and every input point is returned, ordered along the
/// segment from its leftmost end.
pub fn convex_hull_boundary(points: &[Point2]) -> Result<Layer> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut sorted: Vec<usize> = (0..points.len()).collect();
    sorted.sort_by(|&a, &b| points[a].cmp_xy(&points[b]).then(a.cmp(&b)));

    let ccw = strict_hull_ccw(points, &sorted);
    if ccw.len() <= 2 {
        let a = points[sorted[0]];
        let b = points[sorted[sorted.len() - 1]];
        let mut keyed: Vec<(f64, usize)> = sorted
            .iter()
            .map(|&i| (segment_param(a, b, points[i]), i))
            .collect();
        keyed.sort_by(|l, r| l.0.total_cmp(&r.0).then(l.1.cmp(&r.1)));
        return Ok(Layer {
            indices: keyed.into_iter().map(|(_, i)| i).collect(),
        });
    }

    // ccw[0] is the leftmost-lowest point; walk the other way for clockwise.
    let mut cw = Vec::with_capacity(ccw.len());
    cw.push(ccw[0]);
    cw.extend(ccw[1..].iter().rev());
    let verts: Vec<Point2> = cw.iter().map(|&i| points[i]).collect();
    let m = verts.len();

    let mut keyed: Vec<(usize, f64, usize)> = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        for e in 0..m {
            let a = verts[e];
            let b = verts[(e + 1) % m];
            if cross(a, b, p).abs() > EPS_ORIENT {
                continue;
            }
            let t = segment_param(a, b, p);
            if (-1e-12..=1.0 + 1e-12).contains(&t) {
                keyed.push((e, t, i));
                break;
            }
        }
    }
    keyed.sort_by(|l, r| l.0.cmp(&r.0).then(l.1.total_cmp(&r.1)).then(l.2.cmp(&r.2)));
    Ok(Layer {
        indices: keyed.into_iter().map(|(_, _, i)| i).collect(),
    })
}

/// Andrew's monotone chain over pre-sorted indices, dropping collinear and
/// duplicate points. Counterclockwise, starting at `sorted[0]`.
fn strict_hull_ccw(points: &[Point2], sorted: &[usize]) -> Vec<usize> {
    let n = sorted.len();
    if n < 3 {
        let mut out = vec![sorted[0]];
        if n == 2 && points[sorted[0]] != points[sorted[1]] {
            out.push(sorted[1]);
        }
        return out;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * n);
    let turns_left = |hull: &[usize], p: usize| {
        let len = hull.len();
        cross(points[hull[len - 2]], points[hull[len - 1]], points[p]) > EPS_ORIENT
    };
    for &p in sorted {
        while hull.len() >= 2 && !turns_left(&hull, p) {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in sorted.iter().rev().skip(1) {
        while hull.len() >= lower_len && !turns_left(&hull, p) {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() == 2 && points[hull[0]] == points[hull[1]] {
        hull.pop();
    }
    hull
}

/// Projection parameter of `p` onto `a -> b`; 0 when the segment is a point.
fn segment_param(a: Point2, b: Point2, p: Point2) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        0.0
    } else {
        ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2
    }
}

/// Repeatedly strips the convex hull boundary until no points remain.
/// Layer indices refer to `points`.
pub fn onion_layers(points: &[Point2]) -> Vec<Layer> {
    let mut remaining: Vec<usize> = (0..points.len()).collect();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let subset: Vec<Point2> = remaining.iter().map(|&i| points[i]).collect();
        let hull = convex_hull_boundary(&subset).expect("remaining set is non-empty");
        let indices: Vec<usize> = hull.indices.iter().map(|&j| remaining[j]).collect();
        let mut on_hull = vec![false; subset.len()];
        for &j in &hull.indices {
            on_hull[j] = true;
        }
        remaining = remaining
            .iter()
            .zip(on_hull)
            .filter(|(_, taken)| !taken)
            .map(|(&i, _)| i)
            .collect();
        layers.push(Layer { indices });
    }
    layers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(f64, f64)]) -> Vec<Point2> {
        raw.iter().copied().map(Point2::from).collect()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(Point2::new(0.0, 0.0), Point2::new(3.0, 4.0)), 5.0);
        assert_eq!(distance(Point2::new(1.0, 1.0), Point2::new(1.0, 1.0)), 0.0);
        let d = distance(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0));
        assert!((d - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn orientation_examples() {
        let o = Point2::new(0.0, 0.0);
        assert_eq!(
            orientation(o, Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orientation(o, Point2::new(1.0, 0.0), Point2::new(2.0, 0.0)),
            Orientation::Collinear
        );
        assert_eq!(
            orientation(o, Point2::new(0.0, 1.0), Point2::new(1.0, 1.0)),
            Orientation::Clockwise
        );
    }

    #[test]
    fn hull_of_square_is_clockwise_from_leftmost() {
        let p = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let hull = convex_hull_boundary(&p).unwrap();
        assert_eq!(hull.indices, vec![0, 3, 2, 1]);
    }

    #[test]
    fn hull_keeps_collinear_points() {
        let p = pts(&[(2.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let hull = convex_hull_boundary(&p).unwrap();
        assert_eq!(hull.indices, vec![1, 2, 0]);

        let p = pts(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 2.0),
            (0.0, 2.0),
            (1.0, 2.0),
            (0.0, 1.0),
        ]);
        let hull = convex_hull_boundary(&p).unwrap();
        assert_eq!(hull.indices, vec![0, 5, 3, 4, 2, 1]);
    }

    #[test]
    fn hull_drops_interior_point() {
        let p = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5)]);
        let hull = convex_hull_boundary(&p).unwrap();
        assert_eq!(hull.indices, vec![0, 3, 2, 1]);
    }

    #[test]
    fn hull_reports_all_duplicates() {
        let p = pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 0.0), (0.2, 0.2)]);
        let hull = convex_hull_boundary(&p).unwrap();
        let mut got = hull.indices.clone();
        got.sort();
        assert_eq!(got, vec![0, 1, 2, 3]);
        assert_eq!(hull.indices[0], 0);

        let same = pts(&[(3.0, 3.0); 4]);
        assert_eq!(
            convex_hull_boundary(&same).unwrap().indices,
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn hull_of_empty_set_is_an_error() {
        assert!(matches!(
            convex_hull_boundary(&[]),
            Err(Error::EmptyPointSet)
        ));
    }

    #[test]
    fn leftmost_tie_starts_at_lowest_y() {
        let p = pts(&[(0.0, 2.0), (0.0, -1.0), (3.0, 0.5)]);
        let hull = convex_hull_boundary(&p).unwrap();
        assert_eq!(hull.indices, vec![1, 0, 2]);
    }

    #[test]
    fn onion_square_with_center() {
        let p = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5)]);
        let layers = onion_layers(&p);
        assert_eq!(layers.len(), 2);
        assert_eq!(layers[0].indices, vec![0, 3, 2, 1]);
        assert_eq!(layers[1].indices, vec![4]);
    }

    #[test]
    fn onion_convex_position_is_one_layer() {
        let p: Vec<Point2> = (0..12)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / 12.0;
                Point2::new(5.0 * a.cos(), 5.0 * a.sin())
            })
            .collect();
        assert_eq!(onion_layers(&p).len(), 1);
        assert!(onion_layers(&[]).is_empty());
    }

    #[test]
    fn perimeter_examples() {
        let sq = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert_eq!(perimeter(&sq, true).unwrap(), 4.0);
        assert_eq!(perimeter(&sq, false).unwrap(), 3.0);
        assert_eq!(
            perimeter(&pts(&[(0.0, 0.0), (3.0, 4.0)]), true).unwrap(),
            10.0
        );
        let tri = pts(&[(0.0, 0.0), (3.0, 0.0), (0.0, 4.0)]);
        assert_eq!(perimeter(&tri, true).unwrap(), 12.0);
        assert_eq!(perimeter(&pts(&[(7.0, 7.0)]), true).unwrap(), 0.0);
        assert!(perimeter(&[], true).is_err());
    }

    #[test]
    fn cycle_length_matches_perimeter_bitwise() {
        let p = pts(&[(0.1, 0.7), (3.3, 0.2), (1.9, 4.4), (0.3, 2.2)]);
        let order = [2, 0, 3, 1];
        let gathered: Vec<Point2> = order.iter().map(|&i| p[i]).collect();
        assert_eq!(
            cycle_length(&p, &order).to_bits(),
            perimeter(&gathered, true).unwrap().to_bits()
        );
    }
}
