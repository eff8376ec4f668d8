//! Benchmark grid: time and perimeter of each algorithm over seeded
//! instances for every `(n, k, seed)` cell.
//!
//! Cells run one after another on the calling thread so that timings do not
//! compete. A cell's time is the median of three repetitions; when a single
//! call takes less than a second each repetition loops the solver until at
//! least [`BenchConfig::min_batch`] has elapsed and reports the per-call
//! mean, which keeps microsecond-scale cells above timer noise. Within a
//! cell the algorithms take turns, one repetition each per round, so slow
//! stretches on a shared machine hit all of them alike.

use std::hint::black_box;
use std::path::Path;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::instance::generate;
use crate::solvers::{exact_dp, Algorithm, Limits, SolveReport};

pub const CSV_HEADER: [&str; 7] = [
    "n",
    "k",
    "seed",
    "algorithm",
    "elapsed_s",
    "perimeter",
    "ratio_to_exact",
];

const REPETITIONS: usize = 3;
const SINGLE_SHOT: Duration = Duration::from_secs(1);

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub ns: Vec<usize>,
    pub ks: Vec<usize>,
    pub seeds: Vec<u64>,
    pub algorithms: Vec<Algorithm>,
    pub width: f64,
    pub height: f64,
    pub limits: Limits,
    pub min_batch: Duration,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            ns: vec![10, 15, 20, 25],
            ks: vec![4, 5, 6, 7, 8],
            seeds: vec![1, 2, 3],
            algorithms: vec![Algorithm::ExactFixed, Algorithm::Approx],
            width: 100.0,
            height: 100.0,
            limits: Limits::default(),
            min_batch: Duration::from_millis(5),
        }
    }
}

/// One `(n, k, seed, algorithm)` cell. `elapsed_s` and `perimeter` are
/// `None` when the cell was skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub elapsed_s: Option<f64>,
    pub perimeter: Option<f64>,
    /// Perimeter over the true optimum from `exact-dp`, when that fits its cap.
    pub ratio_to_exact: Option<f64>,
    pub order: Vec<usize>,
}

impl BenchRow {
    pub fn skipped(&self) -> bool {
        self.elapsed_s.is_none()
    }
}

/// Runs each solver and returns its report with the median per-call time.
/// Repetitions are interleaved across solvers; a solver whose first call
/// fails is not timed further.
pub fn measure<F>(solvers: &[F], min_batch: Duration) -> Vec<Result<(SolveReport, f64)>>
where
    F: Fn() -> Result<SolveReport>,
{
    struct Slot {
        report: SolveReport,
        first: Duration,
        iters: u32,
        samples: Vec<f64>,
    }
    let mut slots: Vec<Result<Slot>> = solvers
        .iter()
        .map(|solve| {
            let start = Instant::now();
            let report = solve()?;
            let first = start.elapsed();
            let per_call = first.as_secs_f64().max(1e-9);
            let iters = (min_batch.as_secs_f64() / per_call).ceil().clamp(1.0, 1e7) as u32;
            Ok(Slot {
                report,
                first,
                iters,
                samples: Vec::with_capacity(REPETITIONS),
            })
        })
        .collect();
    for _ in 0..REPETITIONS {
        for (solve, entry) in solvers.iter().zip(&mut slots) {
            let Ok(slot) = entry else { continue };
            if slot.first >= SINGLE_SHOT {
                continue;
            }
            let start = Instant::now();
            let batch: Result<()> =
                (0..slot.iters).try_for_each(|_| solve().map(|r| drop(black_box(r))));
            slot.samples
                .push(start.elapsed().as_secs_f64() / slot.iters as f64);
            if let Err(e) = batch {
                *entry = Err(e);
            }
        }
    }
    slots
        .into_iter()
        .map(|slot| {
            let mut slot = slot?;
            let time = if slot.samples.is_empty() {
                slot.first.as_secs_f64()
            } else {
                median(&mut slot.samples)
            };
            Ok((slot.report, time))
        })
        .collect()
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    }
}

/// Runs every cell of the grid. `on_row` sees each row as it completes;
/// the returned rows are sorted by `(n, k, seed, algorithm)`.
pub fn run_bench(config: &BenchConfig, mut on_row: impl FnMut(&BenchRow)) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in &config.ns {
        for &k in &config.ks {
            for &seed in &config.seeds {
                let skip = |algorithm| BenchRow {
                    n,
                    k,
                    seed,
                    algorithm,
                    elapsed_s: None,
                    perimeter: None,
                    ratio_to_exact: None,
                    order: Vec::new(),
                };
                if n < k || k == 0 {
                    for &a in &config.algorithms {
                        let row = skip(a);
                        on_row(&row);
                        rows.push(row);
                    }
                    continue;
                }
                let instance = generate(n, k, seed, config.width, config.height)?;
                let optimum = exact_dp(&instance, &config.limits)
                    .ok()
                    .map(|r| r.tour.perimeter);
                let instance = &instance;
                let solvers: Vec<_> = config
                    .algorithms
                    .iter()
                    .map(|&algorithm| move || algorithm.solve(instance, &config.limits))
                    .collect();
                let measured = measure(&solvers, config.min_batch);
                for (&algorithm, measured) in config.algorithms.iter().zip(measured) {
                    let row = match measured {
                        Ok((report, elapsed)) => {
                            let perimeter = report.tour.perimeter;
                            BenchRow {
                                n,
                                k,
                                seed,
                                algorithm,
                                elapsed_s: Some(elapsed),
                                perimeter: Some(perimeter),
                                ratio_to_exact: optimum
                                    .filter(|&opt| opt > 0.0)
                                    .map(|opt| perimeter / opt),
                                order: report.tour.order,
                            }
                        }
                        Err(e) if e.is_cap_refusal() => skip(algorithm),
                        Err(e) => return Err(e),
                    };
                    on_row(&row);
                    rows.push(row);
                }
            }
        }
    }
    rows.sort_by_key(|r| (r.n, r.k, r.seed, r.algorithm));
    Ok(rows)
}

/// Median time over seeds for one `(n, k, algorithm)` cell, ignoring skips.
pub fn median_elapsed(rows: &[BenchRow], n: usize, k: usize, algorithm: Algorithm) -> Option<f64> {
    let mut times: Vec<f64> = rows
        .iter()
        .filter(|r| r.n == n && r.k == k && r.algorithm == algorithm)
        .filter_map(|r| r.elapsed_s)
        .collect();
    (!times.is_empty()).then(|| median(&mut times))
}

pub fn write_bench_csv(rows: &[BenchRow], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_bench(rows, file)?;
    Ok(())
}

pub fn write_bench<W: std::io::Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        w.write_record([
            r.n.to_string(),
            r.k.to_string(),
            r.seed.to_string(),
            r.algorithm.to_string(),
            r.elapsed_s
                .map_or_else(|| "skipped".to_string(), |t| t.to_string()),
            opt(r.perimeter),
            opt(r.ratio_to_exact),
        ])?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> BenchConfig {
        BenchConfig {
            ns: vec![8, 10],
            ks: vec![3, 4],
            seeds: vec![1, 2],
            algorithms: vec![Algorithm::ExactFixed, Algorithm::Approx],
            min_batch: Duration::from_micros(200),
            ..BenchConfig::default()
        }
    }

    #[test]
    fn rows_are_sorted_and_complete() {
        let rows = run_bench(&small_config(), |_| {}).unwrap();
        assert_eq!(rows.len(), 2 * 2 * 2 * 2);
        let keys: Vec<_> = rows
            .iter()
            .map(|r| (r.n, r.k, r.seed, r.algorithm))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for r in &rows {
            assert!(r.ratio_to_exact.unwrap() >= 1.0 - 1e-9);
        }
    }

    #[test]
    fn capped_cells_are_skipped() {
        let config = BenchConfig {
            ns: vec![12],
            ks: vec![4, 20],
            seeds: vec![1],
            limits: Limits {
                enumeration_cap: 1,
                ..Limits::default()
            },
            ..small_config()
        };
        let rows = run_bench(&config, |_| {}).unwrap();
        let fixed: Vec<_> = rows
            .iter()
            .filter(|r| r.algorithm == Algorithm::ExactFixed)
            .collect();
        assert!(fixed.iter().all(|r| r.skipped()));
        // n < k cell
        assert!(rows.iter().filter(|r| r.k == 20).all(BenchRow::skipped));
        let mut out = Vec::new();
        write_bench(&rows, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("n,k,seed,algorithm,elapsed_s,perimeter,ratio_to_exact\n"));
        assert!(text.contains(",exact-fixed,skipped,,"));
    }

    #[test]
    fn median_of_odd_and_even() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
