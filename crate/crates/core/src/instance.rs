//! Problem instances and the seeded instance generator.
//!
//! # Generator
//!
//! [`generate`] draws from xoshiro256** (Blackman and Vigna), seeded by
//! expanding the 64-bit `seed` through SplitMix64 into the 256-bit state.
//! The state update, with `s` the four 64-bit words, is
//!
//! ```text
//! result = rotl(s1 * 5, 7) * 9
//! t  = s1 << 17
//! s2 ^= s0;  s3 ^= s1;  s1 ^= s2;  s0 ^= s3
//! s2 ^= t;   s3 = rotl(s3, 45)
//! ```
//!
//! and SplitMix64 is `z = (x += 0x9e3779b97f4a7c15); z = (z ^ z>>30) *
//! 0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb; z ^ z>>31`.
//!
//! Values are taken from raw 64-bit outputs `u` in a fixed order: for point
//! `i`, first `x = (u >> 11) * 2^-53 * width`, then `y` likewise with
//! `height`, then (only for `i >= k`) the color `1 + floor(u * k / 2^64)`.
//! Points `0..k` get colors `1..=k` so every class is non-empty.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ColoredPoint {
    pub x: f64,
    pub y: f64,
    /// 1-based color label.
    pub color: usize,
}

impl ColoredPoint {
    pub const fn new(x: f64, y: f64, color: usize) -> Self {
        Self { x, y, color }
    }

    pub fn position(&self) -> Point2 {
        Point2::new(self.x, self.y)
    }
}

/// Where a generated instance came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InstanceMeta {
    pub seed: u64,
    pub width: f64,
    pub height: f64,
}

/// A validated instance: `n >= k >= 1`, finite coordinates, and every color
/// in `1..=k` used at least once.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    points: Vec<ColoredPoint>,
    positions: Vec<Point2>,
    k: usize,
    meta: Option<InstanceMeta>,
}

impl Instance {
    pub fn new(points: Vec<ColoredPoint>, k: usize) -> Result<Self> {
        Self::with_meta(points, k, None)
    }

    pub fn with_meta(
        points: Vec<ColoredPoint>,
        k: usize,
        meta: Option<InstanceMeta>,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if k == 0 {
            return Err(Error::InvalidInstance("k must be at least 1".into()));
        }
        let mut seen = vec![false; k];
        for (i, p) in points.iter().enumerate() {
            if !(p.x.is_finite() && p.y.is_finite()) {
                return Err(Error::InvalidInstance(format!(
                    "point {i} has a non-finite coordinate"
                )));
            }
            if p.color == 0 || p.color > k {
                return Err(Error::ColorOutOfRange { color: p.color, k });
            }
            seen[p.color - 1] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::ColorClassEmpty { color: missing + 1 });
        }
        let positions = points.iter().map(ColoredPoint::position).collect();
        Ok(Self {
            points,
            positions,
            k,
            meta,
        })
    }

    /// Builds an instance from `(x, y)` pairs where point `i` has color `i + 1`,
    /// i.e. a classical TSP instance.
    pub fn one_color_per_point(coords: &[(f64, f64)]) -> Result<Self> {
        let points = coords
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| ColoredPoint::new(x, y, i + 1))
            .collect();
        Self::new(points, coords.len())
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn positions(&self) -> &[Point2] {
        &self.positions
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn meta(&self) -> Option<&InstanceMeta> {
        self.meta.as_ref()
    }

    pub fn color(&self, index: usize) -> usize {
        self.points[index].color
    }
}

/// `n` uniform points in `[0, width] x [0, height]` with `k` colors; see the
/// module docs for the exact draw sequence.
pub fn generate(n: usize, k: usize, seed: u64, width: f64, height: f64) -> Result<Instance> {
    if k == 0 {
        return Err(Error::InvalidInstance("k must be at least 1".into()));
    }
    if n < k {
        return Err(Error::InvalidInstance(format!(
            "n = {n} is smaller than k = {k}"
        )));
    }
    if !(width.is_finite() && height.is_finite() && width >= 0.0 && height >= 0.0) {
        return Err(Error::InvalidInstance(
            "width and height must be finite and non-negative".into(),
        ));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let x = unit_f64(rng.next_u64()) * width;
        let y = unit_f64(rng.next_u64()) * height;
        let color = if i < k {
            i + 1
        } else {
            1 + ((rng.next_u64() as u128 * k as u128) >> 64) as usize
        };
        points.push(ColoredPoint::new(x, y, color));
    }
    Instance::with_meta(
        points,
        k,
        Some(InstanceMeta {
            seed,
            width,
            height,
        }),
    )
}

fn unit_f64(u: u64) -> f64 {
    (u >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_missing_and_out_of_range_colors() {
        let pts = vec![
            ColoredPoint::new(0.0, 0.0, 1),
            ColoredPoint::new(1.0, 0.0, 3),
        ];
        assert!(matches!(
            Instance::new(pts.clone(), 3),
            Err(Error::ColorClassEmpty { color: 2 })
        ));
        assert!(matches!(
            Instance::new(pts, 2),
            Err(Error::ColorOutOfRange { color: 3, k: 2 })
        ));
        let bad = vec![ColoredPoint::new(f64::NAN, 0.0, 1)];
        assert!(Instance::new(bad, 1).is_err());
    }

    #[test]
    fn generate_covers_every_color_once_when_n_equals_k() {
        let inst = generate(7, 7, 99, 100.0, 100.0).unwrap();
        let mut colors: Vec<usize> = inst.points().iter().map(|p| p.color).collect();
        colors.sort();
        assert_eq!(colors, (1..=7).collect::<Vec<_>>());
    }

    #[test]
    fn generate_is_deterministic_and_in_bounds() {
        let a = generate(70, 7, 42, 100.0, 50.0).unwrap();
        let b = generate(70, 7, 42, 100.0, 50.0).unwrap();
        assert_eq!(a, b);
        assert!(a
            .points()
            .iter()
            .all(|p| (0.0..=100.0).contains(&p.x) && (0.0..=50.0).contains(&p.y)));
        assert_ne!(a, generate(70, 7, 43, 100.0, 50.0).unwrap());
    }

    #[test]
    fn generate_rejects_n_below_k() {
        assert!(generate(5, 9, 1, 1.0, 1.0).is_err());
    }

    /// Reference xoshiro256** + SplitMix64 written from the documented
    /// update equations.
    fn reference_stream(seed: u64, count: usize) -> Vec<u64> {
        let mut x = seed;
        let mut splitmix = || {
            x = x.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = x;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        let mut s = [splitmix(), splitmix(), splitmix(), splitmix()];
        (0..count)
            .map(|_| {
                let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
                let t = s[1] << 17;
                s[2] ^= s[0];
                s[3] ^= s[1];
                s[1] ^= s[2];
                s[0] ^= s[3];
                s[2] ^= t;
                s[3] = s[3].rotate_left(45);
                result
            })
            .collect()
    }

    #[test]
    fn generator_follows_documented_stream() {
        let stream = reference_stream(42, 9);
        let inst = generate(4, 2, 42, 10.0, 20.0).unwrap();
        let p = inst.points();
        assert_eq!(p[0].x, unit_f64(stream[0]) * 10.0);
        assert_eq!(p[0].y, unit_f64(stream[1]) * 20.0);
        assert_eq!((p[0].color, p[1].color), (1, 2));
        assert_eq!(p[2].x, unit_f64(stream[4]) * 10.0);
        assert_eq!(p[2].y, unit_f64(stream[5]) * 20.0);
        let expected_color = 1 + ((stream[6] as u128 * 2) >> 64) as usize;
        assert_eq!(p[2].color, expected_color);
        assert_eq!(p[3].x, unit_f64(stream[7]) * 10.0);
    }
}
