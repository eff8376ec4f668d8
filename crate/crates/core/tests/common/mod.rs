//! Reference implementations used as oracles by the integration tests.
//! They share nothing with the library beyond the `Instance` accessors.
#![allow(dead_code)]

use colored_tsp::Instance;

pub fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

pub fn coords(instance: &Instance) -> Vec<(f64, f64)> {
    instance.points().iter().map(|p| (p.x, p.y)).collect()
}

/// Classical Held-Karp over all points of `pts`, starting at point 0.
pub fn held_karp(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len();
    if n <= 1 {
        return 0.0;
    }
    let full = 1usize << n;
    let mut dp = vec![f64::INFINITY; full * n];
    dp[n] = 0.0; // mask {0}, ending at 0
    for mask in 1..full {
        if mask & 1 == 0 {
            continue;
        }
        for last in 0..n {
            let cur = dp[mask * n + last];
            if mask & (1 << last) == 0 || !cur.is_finite() {
                continue;
            }
            for next in 1..n {
                if mask & (1 << next) != 0 {
                    continue;
                }
                let m2 = mask | (1 << next);
                let cand = cur + dist(pts[last], pts[next]);
                if cand < dp[m2 * n + next] {
                    dp[m2 * n + next] = cand;
                }
            }
        }
    }
    (1..n)
        .map(|last| dp[(full - 1) * n + last] + dist(pts[last], pts[0]))
        .fold(f64::INFINITY, f64::min)
}

/// Smallest enclosing circle radius by trying every pair and triple.
pub fn sec_radius_brute(pts: &[(f64, f64)]) -> f64 {
    if pts.len() <= 1 {
        return 0.0;
    }
    let covers =
        |c: (f64, f64), r: f64| pts.iter().all(|&p| dist(c, p) <= r * (1.0 + 1e-12) + 1e-12);
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (a, b) = (pts[i], pts[j]);
            let c = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
            let r = dist(a, b) / 2.0;
            if r < best && covers(c, r) {
                best = r;
            }
            for &p in &pts[j + 1..] {
                if let Some((c, r)) = circumcircle(a, b, p) {
                    if r < best && covers(c, r) {
                        best = r;
                    }
                }
            }
        }
    }
    best
}

fn circumcircle(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Option<((f64, f64), f64)> {
    let d = 2.0 * (a.0 * (b.1 - c.1) + b.0 * (c.1 - a.1) + c.0 * (a.1 - b.1));
    if d.abs() < 1e-12 {
        return None;
    }
    let a2 = a.0 * a.0 + a.1 * a.1;
    let b2 = b.0 * b.0 + b.1 * b.1;
    let c2 = c.0 * c.0 + c.1 * c.1;
    let ux = (a2 * (b.1 - c.1) + b2 * (c.1 - a.1) + c2 * (a.1 - b.1)) / d;
    let uy = (a2 * (c.0 - b.0) + b2 * (a.0 - c.0) + c2 * (b.0 - a.0)) / d;
    let center = (ux, uy);
    Some((
        center,
        dist(center, a).max(dist(center, b)).max(dist(center, c)),
    ))
}

/// Minimum over all transversals of the transversal's enclosing radius.
pub fn mcsc_radius_oracle(instance: &Instance) -> f64 {
    let pts = coords(instance);
    let mut classes = vec![Vec::new(); instance.k()];
    for (i, p) in instance.points().iter().enumerate() {
        classes[p.color - 1].push(pts[i]);
    }
    let mut best = f64::INFINITY;
    let mut pick = vec![0usize; classes.len()];
    loop {
        let t: Vec<_> = pick.iter().zip(&classes).map(|(&i, c)| c[i]).collect();
        best = best.min(sec_radius_brute(&t));
        let mut d = 0;
        loop {
            if d == pick.len() {
                return best;
            }
            pick[d] += 1;
            if pick[d] < classes[d].len() {
                break;
            }
            pick[d] = 0;
            d += 1;
        }
    }
}

/// Checks that `order` visits every color exactly once with valid indices,
/// and returns its closed length.
pub fn check_tour(instance: &Instance, order: &[usize]) -> Result<f64, String> {
    let k = instance.k();
    if order.len() != k {
        return Err(format!("tour has {} points, expected {k}", order.len()));
    }
    let mut seen = vec![false; k];
    for &i in order {
        let p = instance
            .points()
            .get(i)
            .ok_or_else(|| format!("index {i} out of range"))?;
        if std::mem::replace(&mut seen[p.color - 1], true) {
            return Err(format!("color {} visited twice", p.color));
        }
    }
    let pts = coords(instance);
    Ok((0..order.len())
        .map(|a| dist(pts[order[a]], pts[order[(a + 1) % order.len()]]))
        .sum())
}

/// Number of vertices in the `points` attribute of the `class="tour"` polygon.
pub fn svg_tour_vertices(svg: &str) -> Option<usize> {
    let start = svg.find("class=\"tour\"")?;
    let tag_start = svg[..start].rfind('<')?;
    let tag_end = start + svg[start..].find('>')?;
    let tag = &svg[tag_start..tag_end];
    let attr = tag.find("points=\"")? + "points=\"".len();
    let end = tag[attr..].find('"')?;
    Some(tag[attr..attr + end].split_whitespace().count())
}
