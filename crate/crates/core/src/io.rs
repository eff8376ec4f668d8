//! Instance and report files.
//!
//! Instances are JSON, `{"k": 3, "points": [{"x": 1.5, "y": 2.5, "color": 3}, ...]}`
//! with an optional `"meta": {"seed", "width", "height"}`, or CSV with one
//! `x,y,color` row per point (an `x,y,color` header line is optional). For
//! CSV, `k` is the largest color present. Files whose name ends in `.csv`
//! are read and written as CSV, everything else as JSON.
//!
//! Reports are JSON:
//! `{"algorithm", "order", "perimeter", "elapsed_s", "mcsc": {"cx", "cy", "r"}?, "node_count"?}`.
//!
//! Floats are written in shortest round-trip form, so reading a written
//! file reproduces every coordinate bit for bit.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::color_spanning::Circle;
use crate::error::{Error, Result};
use crate::geometry::{cycle_length, Point2};
use crate::instance::{ColoredPoint, Instance, InstanceMeta};
use crate::solvers::{validate_order, Algorithm, SolveReport, Tour};

/// Recomputed perimeters further than this from the stored value are
/// flagged when a report is read.
pub const PERIMETER_CHECK_TOL: f64 = 1e-6;

#[derive(Serialize, Deserialize)]
struct InstanceFile {
    k: usize,
    points: Vec<ColoredPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<InstanceMeta>,
}

fn is_csv(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    if is_csv(path) {
        instance_from_csv(&text, path)
    } else {
        instance_from_json(&text, path)
    }
}

pub fn write_instance(instance: &Instance, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = if is_csv(path) {
        instance_to_csv(instance)
    } else {
        instance_to_json(instance)
    };
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn instance_to_json(instance: &Instance) -> String {
    let file = InstanceFile {
        k: instance.k(),
        points: instance.points().to_vec(),
        meta: instance.meta().copied(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("instance serializes");
    text.push('\n');
    text
}

pub fn instance_from_json(text: &str, path: &Path) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    Instance::with_meta(file.points, file.k, file.meta)
}

pub fn instance_to_csv(instance: &Instance) -> String {
    let mut text = String::from("x,y,color\n");
    for p in instance.points() {
        text.push_str(&format!("{},{},{}\n", p.x, p.y, p.color));
    }
    text
}

pub fn instance_from_csv(text: &str, path: &Path) -> Result<Instance> {
    let parse_err = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record?;
        let line = record.position().map_or(row + 1, |p| p.line() as usize);
        if row == 0 && record.iter().eq(["x", "y", "color"]) {
            continue;
        }
        if record.len() != 3 {
            return Err(parse_err(
                line,
                format!("expected 3 fields x,y,color, found {}", record.len()),
            ));
        }
        let coord = |i: usize, name: &str| -> Result<f64> {
            record[i]
                .parse::<f64>()
                .map_err(|e| parse_err(line, format!("field `{name}`: {e}")))
        };
        let x = coord(0, "x")?;
        let y = coord(1, "y")?;
        let color = record[2]
            .parse::<usize>()
            .map_err(|e| parse_err(line, format!("field `color`: {e}")))?;
        if color == 0 {
            return Err(parse_err(line, "field `color`: colors start at 1".into()));
        }
        points.push(ColoredPoint::new(x, y, color));
    }
    let k = points.iter().map(|p| p.color).max().unwrap_or(0);
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    Instance::new(points, k)
}

#[derive(Serialize, Deserialize)]
struct CircleFile {
    cx: f64,
    cy: f64,
    r: f64,
}

#[derive(Serialize, Deserialize)]
struct ReportFile {
    algorithm: Algorithm,
    order: Vec<usize>,
    perimeter: f64,
    elapsed_s: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mcsc: Option<CircleFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    node_count: Option<u64>,
}

pub fn report_to_json(report: &SolveReport) -> String {
    let file = ReportFile {
        algorithm: report.algorithm,
        order: report.tour.order.clone(),
        perimeter: report.tour.perimeter,
        elapsed_s: report.elapsed,
        mcsc: report.mcsc.map(|c| CircleFile {
            cx: c.center.x,
            cy: c.center.y,
            r: c.radius,
        }),
        node_count: report.node_count,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("report serializes");
    text.push('\n');
    text
}

pub fn write_report(report: &SolveReport, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, report_to_json(report)).map_err(|e| Error::io(path, e))
}

/// Reads a report and checks it against the instance it was solved on.
///
/// Invalid tours are errors. A stored perimeter that disagrees with the
/// recomputed one by more than [`PERIMETER_CHECK_TOL`] is kept as written
/// and noted in [`SolveReport::warnings`].
pub fn read_report(path: impl AsRef<Path>, instance: &Instance) -> Result<SolveReport> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    report_from_json(&text, path, instance)
}

pub fn report_from_json(text: &str, path: &Path, instance: &Instance) -> Result<SolveReport> {
    let file: ReportFile = serde_json::from_str(text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    validate_order(instance, &file.order)?;
    let mut warnings = Vec::new();
    let recomputed = cycle_length(instance.positions(), &file.order);
    if (recomputed - file.perimeter).abs() > PERIMETER_CHECK_TOL {
        warnings.push(format!(
            "stored perimeter {} differs from recomputed {}",
            file.perimeter, recomputed
        ));
    }
    Ok(SolveReport {
        algorithm: file.algorithm,
        tour: Tour {
            order: file.order,
            perimeter: file.perimeter,
        },
        elapsed: file.elapsed_s,
        mcsc: file.mcsc.map(|c| Circle::new(Point2::new(c.cx, c.cy), c.r)),
        node_count: file.node_count,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::generate;
    use crate::solvers::{approx_onion, exact_dp, Limits};

    #[test]
    fn csv_row_parses() {
        let inst = instance_from_csv("1.5,2.5,3\n0,0,1\n1,1,2\n", Path::new("a.csv")).unwrap();
        assert_eq!(inst.points()[0], ColoredPoint::new(1.5, 2.5, 3));
        assert_eq!(inst.k(), 3);
    }

    #[test]
    fn csv_header_is_optional() {
        let inst = instance_from_csv("x,y,color\n0,0,1\n", Path::new("a.csv")).unwrap();
        assert_eq!(inst.n(), 1);
    }

    #[test]
    fn csv_errors_name_line_and_field() {
        let err = instance_from_csv("0,0,1\n1,oops,2\n", Path::new("a.csv")).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains(":2:") && msg.contains("`y`"), "{msg}");
        let err = instance_from_csv("0,0\n", Path::new("a.csv")).unwrap_err();
        assert!(err.to_string().contains(":1:"));
        assert!(instance_from_csv("0,0,0\n", Path::new("a.csv")).is_err());
    }

    #[test]
    fn json_missing_color_names_the_field() {
        let text = r#"{"k": 1, "points": [{"x": 1.0, "y": 2.0}]}"#;
        let err = instance_from_json(text, Path::new("a.json")).unwrap_err();
        assert!(err.to_string().contains("color"), "{err}");
    }

    #[test]
    fn json_color_out_of_range() {
        let text = r#"{"k": 1, "points": [{"x": 1.0, "y": 2.0, "color": 2}]}"#;
        assert!(matches!(
            instance_from_json(text, Path::new("a.json")),
            Err(Error::ColorOutOfRange { color: 2, k: 1 })
        ));
    }

    #[test]
    fn files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let inst = generate(7, 7, 5, 100.0, 100.0).unwrap();
        for name in ["a.json", "a.csv"] {
            let path = dir.path().join(name);
            write_instance(&inst, &path).unwrap();
            let back = read_instance(&path).unwrap();
            assert_eq!(back.points(), inst.points());
            assert_eq!(back.k(), inst.k());
        }
        let back = read_instance(dir.path().join("a.json")).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn report_round_trip_and_checks() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        let inst = generate(20, 4, 9, 100.0, 100.0).unwrap();
        for report in [
            approx_onion(&inst).unwrap(),
            exact_dp(&inst, &Limits::default()).unwrap(),
        ] {
            write_report(&report, &path).unwrap();
            let back = read_report(&path, &inst).unwrap();
            assert_eq!(back, report);
        }

        let bad_index =
            r#"{"algorithm":"approx","order":[0,1,2,99],"perimeter":1.0,"elapsed_s":0.0}"#;
        assert!(report_from_json(bad_index, &path, &inst).is_err());

        let report = exact_dp(&inst, &Limits::default()).unwrap();
        let order = serde_json::to_string(&report.tour.order).unwrap();
        let skewed = format!(
            r#"{{"algorithm":"exact-dp","order":{order},"perimeter":{},"elapsed_s":0.5}}"#,
            report.tour.perimeter + 1.0
        );
        let back = report_from_json(&skewed, &path, &inst).unwrap();
        assert_eq!(back.warnings.len(), 1);
    }
}
