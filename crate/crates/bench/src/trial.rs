use std::time::Instant;

use aquawave::denoise::{denoise, CMode};
use aquawave::image::{crop, pad_symmetric, Image};
use aquawave::metrics::{mse, nmse, psnr, psnr_from_mse};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Method, RunConfig};
use crate::error::{BenchError, StageExt};

/// One row of the long-form report. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub method: String,
    pub basis: String,
    pub thresholding: String,
    pub levels: usize,
    pub noise_power_db: f64,
    pub seed: u64,
    pub c_used: f64,
    pub psnr_noisy_db: f64,
    pub psnr_denoised_db: f64,
    pub mse_denoised: f64,
    pub nmse_denoised: f64,
    pub elapsed_ms: u64,
}

pub const CSV_HEADER: &str = "method,basis,thresholding,levels,noise_power_db,seed,c_used,psnr_noisy_db,psnr_denoised_db,mse_denoised,nmse_denoised,elapsed_ms";

/// One cell of the experiment grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialJob {
    pub method: Method,
    pub basis: String,
    pub noise_power_db: f64,
    pub seed: u64,
}

pub struct TrialOutput {
    pub record: TrialRecord,
    pub noisy: Image,
    pub denoised: Image,
}

/// Corrupts `clean` at its own size, pads to a multiple of `2^levels`,
/// denoises (the padded clean image is the sweep reference), crops back and
/// measures against `clean`.
pub fn run_trial(
    clean: &Image,
    job: &TrialJob,
    cfg: &RunConfig,
) -> Result<TrialOutput, BenchError> {
    let start = Instant::now();
    let dcfg = cfg.denoise_config(&job.basis, job.method)?;
    let spec = cfg.noise_spec(job.noise_power_db, job.seed);
    let (noisy, noise) = aquawave::noise::corrupt_image(clean, &spec).stage("corrupt")?;

    let multiple = 1usize
        .checked_shl(dcfg.levels as u32)
        .filter(|m| *m <= 1 << 16)
        .ok_or_else(|| BenchError::Usage(format!("levels {} is too deep", dcfg.levels)))?;
    let (noisy_padded, dims) = pad_symmetric(&noisy, multiple).stage("pad")?;
    let (clean_padded, _) = pad_symmetric(clean, multiple).stage("pad")?;
    let reference = matches!(dcfg.c_mode, CMode::Sweep { .. }).then_some(&clean_padded);
    let calibration = matches!(job.method, Method::Prewhiten).then_some(noise.as_slice());
    let (denoised_padded, report) =
        denoise(&noisy_padded, &dcfg, reference, calibration).stage("denoise")?;
    let denoised = crop(&denoised_padded, dims).stage("crop")?;

    let mse_denoised = mse(clean, &denoised).stage("metrics")?;
    let record = TrialRecord {
        method: job.method.name().to_string(),
        basis: job.basis.clone(),
        thresholding: dcfg.thresholding.as_str().to_string(),
        levels: dcfg.levels,
        noise_power_db: job.noise_power_db,
        seed: job.seed,
        c_used: report.c,
        psnr_noisy_db: psnr(clean, &noisy).stage("metrics")?,
        psnr_denoised_db: psnr_from_mse(mse_denoised),
        mse_denoised,
        nmse_denoised: nmse(clean, &denoised).stage("metrics")?,
        elapsed_ms: if cfg.record_timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    };
    Ok(TrialOutput {
        record,
        noisy,
        denoised,
    })
}

/// Every (method, basis, power, trial) combination; trial `i` uses seed
/// `seed_base + i`.
pub fn jobs(cfg: &RunConfig, seed_base: u64) -> Vec<TrialJob> {
    let mut out = Vec::new();
    for &method in &cfg.methods {
        for basis in &cfg.bases {
            for &noise_power_db in &cfg.noise_powers {
                for i in 0..cfg.trials as u64 {
                    out.push(TrialJob {
                        method,
                        basis: basis.clone(),
                        noise_power_db,
                        seed: seed_base.wrapping_add(i),
                    });
                }
            }
        }
    }
    out
}

pub fn sort_records(records: &mut [TrialRecord]) {
    records.sort_by(|a, b| {
        a.method
            .cmp(&b.method)
            .then_with(|| a.basis.cmp(&b.basis))
            .then_with(|| a.noise_power_db.total_cmp(&b.noise_power_db))
            .then_with(|| a.seed.cmp(&b.seed))
    });
}

/// Runs `jobs` in parallel. Returns the sorted records of the trials that
/// succeeded and the first failure, if any.
pub fn run_all(
    clean: &Image,
    jobs: &[TrialJob],
    cfg: &RunConfig,
) -> (Vec<TrialRecord>, Option<BenchError>) {
    let results: Vec<Result<TrialRecord, BenchError>> = jobs
        .par_iter()
        .map(|job| run_trial(clean, job, cfg).map(|o| o.record))
        .collect();
    let mut records = Vec::with_capacity(results.len());
    let mut first_error = None;
    for r in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(e) if first_error.is_none() => first_error = Some(e),
            Err(_) => {}
        }
    }
    sort_records(&mut records);
    (records, first_error)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_scene() -> Image {
        Image::from_fn(40, 36, |x, y| if x < 20 { 60.0 } else { 170.0 } + y as f64).unwrap()
    }

    #[test]
    fn trial_pads_and_crops() {
        let cfg = RunConfig::default();
        let job = TrialJob {
            method: Method::MutePerLevel,
            basis: "sym4".into(),
            noise_power_db: 10.0,
            seed: 3,
        };
        let out = run_trial(&small_scene(), &job, &cfg).unwrap();
        assert_eq!(out.denoised.dims(), small_scene().dims());
        let r = &out.record;
        assert_eq!(
            (r.levels, r.elapsed_ms, r.thresholding.as_str()),
            (4, 0, "soft")
        );
        assert!((r.psnr_noisy_db - 10.0 * (255.0f64.powi(2) / 10.0).log10()).abs() < 1e-9);
        assert!(r.c_used > 0.0 && r.c_used <= 1.0);
    }

    #[test]
    fn every_method_runs() {
        let mut cfg = RunConfig::default();
        cfg.denoise.c = "0.7".into();
        for method in [Method::MutePerLevel, Method::Global, Method::Prewhiten] {
            let job = TrialJob {
                method,
                basis: "db2".into(),
                noise_power_db: 5.0,
                seed: 1,
            };
            let out = run_trial(&small_scene(), &job, &cfg).unwrap();
            assert_eq!(out.record.method, method.name());
            assert_eq!(out.record.c_used, 0.7);
        }
    }

    #[test]
    fn grid_and_ordering() {
        let mut cfg = RunConfig {
            trials: 2,
            ..RunConfig::default()
        };
        let grid = jobs(&cfg, 100);
        assert_eq!(grid.len(), 3 * 5 * 2);
        assert_eq!(grid[1].seed, 101);

        cfg.bases = vec!["haar".into(), "nope".into()];
        cfg.noise_powers = vec![5.0];
        cfg.trials = 1;
        let (records, err) = run_all(&small_scene(), &jobs(&cfg, 0), &cfg);
        assert_eq!(records.len(), 1);
        assert!(err.unwrap().to_string().contains("unknown basis"));
    }

    #[test]
    fn header_matches_fields() {
        let mut w = csv::Writer::from_writer(Vec::new());
        let rec = TrialRecord {
            method: "m".into(),
            basis: "b".into(),
            thresholding: "soft".into(),
            levels: 1,
            noise_power_db: 0.0,
            seed: 0,
            c_used: 1.0,
            psnr_noisy_db: 0.0,
            psnr_denoised_db: f64::INFINITY,
            mse_denoised: 0.0,
            nmse_denoised: 0.0,
            elapsed_ms: 0,
        };
        w.serialize(&rec).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER);
        assert!(text.lines().nth(1).unwrap().contains(",inf,"));
    }
}
