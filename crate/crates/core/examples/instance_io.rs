//! Instance and report files: JSON and CSV round trips, and a report read
//! back against its instance.
//!
//! ```text
//! cargo run --release --example instance_io
//! ```

use colored_tsp::generate;
use colored_tsp::io::{instance_to_csv, read_instance, read_report, write_instance, write_report};
use colored_tsp::solvers::{exact_dp, Limits};

fn main() -> colored_tsp::Result<()> {
    let dir = std::env::temp_dir().join("colored-tsp-example");
    std::fs::create_dir_all(&dir).map_err(|e| colored_tsp::Error::Io {
        path: dir.clone(),
        source: e,
    })?;

    let inst = generate(8, 3, 5, 10.0, 10.0)?;
    let json = dir.join("inst.json");
    let csv = dir.join("inst.csv");
    write_instance(&inst, &json)?;
    write_instance(&inst, &csv)?;
    assert_eq!(read_instance(&json)?.points(), inst.points());
    assert_eq!(read_instance(&csv)?.points(), inst.points());
    print!("{}", instance_to_csv(&inst));

    let report = exact_dp(&inst, &Limits::default())?;
    let path = dir.join("report.json");
    write_report(&report, &path)?;
    let back = read_report(&path, &inst)?;
    assert!(back.same_result(&report));
    println!(
        "\n{}",
        std::fs::read_to_string(&path).map_err(|e| colored_tsp::Error::Io { path, source: e })?
    );
    Ok(())
}
