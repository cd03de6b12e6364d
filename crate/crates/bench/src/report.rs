//! CSV and text reports.

use std::fmt::Write as _;
use std::fs::File;
use std::path::Path;

use serde::Serialize;

use crate::error::BenchError;
use crate::trial::TrialRecord;

/// Mean and sample standard deviation of one (method, basis, power) cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub method: String,
    pub basis: String,
    pub noise_power_db: f64,
    pub trials: usize,
    pub psnr_noisy_mean: f64,
    pub psnr_denoised_mean: f64,
    pub psnr_denoised_std: f64,
    pub mse_denoised_mean: f64,
    pub mse_denoised_std: f64,
    pub c_mean: f64,
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Groups consecutive records sharing (method, basis, power). Expects the
/// order produced by [`crate::trial::sort_records`].
pub fn summarize(records: &[TrialRecord]) -> Vec<SummaryRow> {
    let same_cell = |a: &TrialRecord, b: &TrialRecord| {
        a.method == b.method && a.basis == b.basis && a.noise_power_db == b.noise_power_db
    };
    records
        .chunk_by(same_cell)
        .map(|cell| {
            let col = |f: fn(&TrialRecord) -> f64| cell.iter().map(f).collect::<Vec<_>>();
            let (psnr_denoised_mean, psnr_denoised_std) = mean_std(&col(|r| r.psnr_denoised_db));
            let (mse_denoised_mean, mse_denoised_std) = mean_std(&col(|r| r.mse_denoised));
            SummaryRow {
                method: cell[0].method.clone(),
                basis: cell[0].basis.clone(),
                noise_power_db: cell[0].noise_power_db,
                trials: cell.len(),
                psnr_noisy_mean: mean_std(&col(|r| r.psnr_noisy_db)).0,
                psnr_denoised_mean,
                psnr_denoised_std,
                mse_denoised_mean,
                mse_denoised_std,
                c_mean: mean_std(&col(|r| r.c_used)).0,
            }
        })
        .collect()
}

pub fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<(), BenchError> {
    let csv_err = |source| BenchError::Csv {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(BenchError::io("cannot create", path))?;
    let mut w = csv::Writer::from_writer(file);
    for row in rows {
        w.serialize(row).map_err(csv_err)?;
    }
    w.flush().map_err(BenchError::io("cannot write", path))
}

/// Aligned text tables, one per (method, basis), rows by noise power.
pub fn summary_text(rows: &[SummaryRow]) -> String {
    let mut out = String::new();
    for table in rows.chunk_by(|a, b| a.method == b.method && a.basis == b.basis) {
        let head = &table[0];
        let _ = writeln!(
            out,
            "{} / {} ({} trials per row)",
            head.method, head.basis, head.trials
        );
        let _ = writeln!(
            out,
            "{:>9}  {:>10}  {:>18}  {:>20}  {:>6}",
            "noise_dB", "PSNR_noisy", "PSNR_denoised", "MSE_denoised", "c"
        );
        for r in table {
            let _ = writeln!(
                out,
                "{:>9.1}  {:>10.2}  {:>9.2} ± {:<6.2}  {:>9.4} ± {:<8.4}  {:>6.2}",
                r.noise_power_db,
                r.psnr_noisy_mean,
                r.psnr_denoised_mean,
                r.psnr_denoised_std,
                r.mse_denoised_mean,
                r.mse_denoised_std,
                r.c_mean
            );
        }
        out.push('\n');
    }
    out
}

/// Writes `trials.csv`, `summary.csv` and `summary.txt` into `dir`.
pub fn write_bench_reports(
    dir: &Path,
    records: &[TrialRecord],
) -> Result<Vec<SummaryRow>, BenchError> {
    write_csv(&dir.join("trials.csv"), records)?;
    let summary = summarize(records);
    write_csv(&dir.join("summary.csv"), &summary)?;
    let txt = dir.join("summary.txt");
    std::fs::write(&txt, summary_text(&summary)).map_err(BenchError::io("cannot write", &txt))?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(basis: &str, power: f64, seed: u64, psnr: f64) -> TrialRecord {
        TrialRecord {
            method: "mute_per_level".into(),
            basis: basis.into(),
            thresholding: "soft".into(),
            levels: 4,
            noise_power_db: power,
            seed,
            c_used: 0.5,
            psnr_noisy_db: 40.0,
            psnr_denoised_db: psnr,
            mse_denoised: 1.0,
            nmse_denoised: 0.001,
            elapsed_ms: 0,
        }
    }

    #[test]
    fn cells_and_statistics() {
        let records = vec![
            rec("db5", 0.0, 1, 40.0),
            rec("db5", 0.0, 2, 44.0),
            rec("db5", 3.0, 1, 38.0),
            rec("sym4", 0.0, 1, 41.0),
        ];
        let rows = summarize(&records);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].trials, 2);
        assert_eq!(rows[0].psnr_denoised_mean, 42.0);
        assert!((rows[0].psnr_denoised_std - 8f64.sqrt()).abs() < 1e-12);
        assert_eq!(rows[1].psnr_denoised_std, 0.0);
        let text = summary_text(&rows);
        assert_eq!(text.matches("PSNR_noisy").count(), 2);
        assert!(text.contains("42.00 ± 2.83"));
    }

    #[test]
    fn files_are_written() {
        let dir = tempfile::tempdir().unwrap();
        write_bench_reports(dir.path(), &[rec("db5", 0.0, 1, 40.0)]).unwrap();
        let trials = std::fs::read_to_string(dir.path().join("trials.csv")).unwrap();
        assert!(trials.starts_with(crate::trial::CSV_HEADER));
        let summary = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
        assert!(summary.starts_with("method,basis,noise_power_db,trials,psnr_noisy_mean"));
        assert!(dir.path().join("summary.txt").exists());
    }
}
