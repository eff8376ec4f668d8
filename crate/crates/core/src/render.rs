//! SVG rendering of instances and tours.
//!
//! The output has one `<circle class="point">` per input point filled by
//! color, an optional `<polygon class="tour">` whose `points` attribute lists
//! the tour vertices once each (the closing edge is implicit), and an
//! optional `<circle class="mcsc">` outline.

use std::path::Path;

use svg::node::element::{Circle as SvgCircle, Group, Polygon, Rectangle, Title};
use svg::Document;

use crate::color_spanning::Circle;
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::instance::Instance;

/// Tableau-20 palette; color `c` uses entry `(c - 1) % 20`.
pub const PALETTE: [&str; 20] = [
    "#1f77b4", "#aec7e8", "#ff7f0e", "#ffbb78", "#2ca02c", "#98df8a", "#d62728", "#ff9896",
    "#9467bd", "#c5b0d5", "#8c564b", "#c49c94", "#e377c2", "#f7b6d2", "#7f7f7f", "#c7c7c7",
    "#bcbd22", "#dbdb8d", "#17becf", "#9edae5",
];

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 20.0;

pub fn color_fill(color: usize) -> &'static str {
    PALETTE[(color.max(1) - 1) % PALETTE.len()]
}

/// Maps instance coordinates onto the canvas with y pointing up.
struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn fit(points: &[Point2], circle: Option<&Circle>) -> Self {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut grow = |p: Point2, r: f64| {
            lo.x = lo.x.min(p.x - r);
            lo.y = lo.y.min(p.y - r);
            hi.x = hi.x.max(p.x + r);
            hi.y = hi.y.max(p.y + r);
        };
        for &p in points {
            grow(p, 0.0);
        }
        if let Some(c) = circle {
            grow(c.center, c.radius);
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y);
        let scale = if span > 0.0 { CANVAS / span } else { 1.0 };
        Self {
            min_x: lo.x,
            max_y: hi.y,
            scale,
            width: (hi.x - lo.x) * scale + 2.0 * MARGIN,
            height: (hi.y - lo.y) * scale + 2.0 * MARGIN,
        }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        (
            MARGIN + (p.x - self.min_x) * self.scale,
            MARGIN + (self.max_y - p.y) * self.scale,
        )
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.3}")
}

pub fn render_svg(instance: &Instance, tour: Option<&[usize]>, circle: Option<&Circle>) -> String {
    let positions = instance.positions();
    let frame = Frame::fit(positions, circle);
    let dot = (frame.width.max(frame.height) / 250.0).clamp(1.5, 5.0);

    let mut doc = Document::new()
        .set("viewBox", (0.0, 0.0, frame.width, frame.height))
        .set("width", fmt(frame.width))
        .set("height", fmt(frame.height))
        .add(Title::new(format!("n={} k={}", instance.n(), instance.k())))
        .add(
            Rectangle::new()
                .set("width", "100%")
                .set("height", "100%")
                .set("fill", "white"),
        );

    if let Some(c) = circle {
        let (cx, cy) = frame.map(c.center);
        doc = doc.add(
            SvgCircle::new()
                .set("class", "mcsc")
                .set("cx", fmt(cx))
                .set("cy", fmt(cy))
                .set("r", fmt(c.radius * frame.scale))
                .set("fill", "none")
                .set("stroke", "#555555")
                .set("stroke-dasharray", "6 4"),
        );
    }

    if let Some(order) = tour {
        let points = order
            .iter()
            .map(|&i| {
                let (x, y) = frame.map(positions[i]);
                format!("{},{}", fmt(x), fmt(y))
            })
            .collect::<Vec<_>>()
            .join(" ");
        doc = doc.add(
            Polygon::new()
                .set("class", "tour")
                .set("points", points)
                .set("fill", "none")
                .set("stroke", "black")
                .set("stroke-width", 1.5),
        );
    }

    let mut dots = Group::new().set("class", "points");
    for p in instance.points() {
        let (x, y) = frame.map(p.position());
        dots = dots.add(
            SvgCircle::new()
                .set("class", "point")
                .set("data-color", p.color)
                .set("cx", fmt(x))
                .set("cy", fmt(y))
                .set("r", fmt(dot))
                .set("fill", color_fill(p.color)),
        );
    }
    doc = doc.add(dots);
    doc.to_string()
}

pub fn write_svg(
    path: impl AsRef<Path>,
    instance: &Instance,
    tour: Option<&[usize]>,
    circle: Option<&Circle>,
) -> Result<()> {
    let path = path.as_ref();
    let mut text = render_svg(instance, tour, circle);
    text.push('\n');
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}
