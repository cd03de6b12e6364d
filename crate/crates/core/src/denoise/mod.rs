//! Wavelet-shrinkage denoising.
//!
//! The main pipeline ([`denoise_image`]) transforms the noisy image,
//! estimates the noise level separately in every detail block with the
//! MAD estimator, shrinks each block with its own modified universal
//! threshold `λ = c·σ·√(2 ln N)` and inverts the transform. Because
//! colored noise is not flat across scales, the per-block estimates track
//! it where a single estimate cannot.
//!
//! Two comparators share the same machinery:
//! [`denoise_baseline_global`] uses one σ (from the finest diagonal block)
//! for every block, and [`denoise_baseline_prewhiten`] whitens the raster
//! with a fitted AR filter before global denoising.
//!
//! The factor `c` is either fixed (blind denoising) or swept over
//! `step, 2·step, …, 1` against a clean reference, keeping the best PSNR.

mod threshold;
pub mod whiten;

pub use threshold::{
    apply_threshold, compute_thresholds, estimate_sigma, hard_threshold, mad_sigma, soft_threshold,
    universal_factor, SigmaScope, SubbandThreshold, ThresholdSet, Thresholding, MAD_SCALE,
};
pub use whiten::{fit_ar, levinson_durbin, unwhiten, whiten, ArModel};

use crate::error::{Error, Result};
use crate::image::Image;
use crate::metrics::psnr;
use crate::wavelet::{dwt2d, get_filter_bank, idwt2d, Orientation, WaveletPyramid};

/// How the threshold factor `c` is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CMode {
    Fixed(f64),
    /// Try `step, 2·step, …, 1.0` and keep the best PSNR against a reference.
    Sweep {
        step: f64,
    },
}

impl Default for CMode {
    fn default() -> Self {
        CMode::Sweep { step: 0.1 }
    }
}

/// Denoising method selected by [`denoise`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Baseline {
    /// Level-dependent thresholds.
    #[default]
    None,
    /// One σ from the finest HH block applied everywhere.
    GlobalSingleLevel,
    /// AR whitening of the raster, then global denoising, then un-whitening.
    Prewhiten { order: usize },
}

impl Baseline {
    pub fn method_name(&self) -> &'static str {
        match self {
            Baseline::None => "mute_per_level",
            Baseline::GlobalSingleLevel => "global",
            Baseline::Prewhiten { .. } => "prewhiten",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenoiseConfig {
    pub basis: String,
    pub levels: usize,
    pub thresholding: Thresholding,
    pub c_mode: CMode,
    pub sigma_scope: SigmaScope,
    pub baseline: Baseline,
}

impl DenoiseConfig {
    /// Four levels, soft thresholding, `c` swept in steps of 0.1,
    /// per-subband estimates.
    pub fn new(basis: impl Into<String>) -> Self {
        Self {
            basis: basis.into(),
            levels: 4,
            thresholding: Thresholding::Soft,
            c_mode: CMode::default(),
            sigma_scope: SigmaScope::PerSubband,
            baseline: Baseline::None,
        }
    }

    pub fn with_levels(mut self, levels: usize) -> Self {
        self.levels = levels;
        self
    }

    pub fn with_c(mut self, c_mode: CMode) -> Self {
        self.c_mode = c_mode;
        self
    }

    pub fn with_thresholding(mut self, thresholding: Thresholding) -> Self {
        self.thresholding = thresholding;
        self
    }

    pub fn with_scope(mut self, scope: SigmaScope) -> Self {
        self.sigma_scope = scope;
        self
    }

    pub fn with_baseline(mut self, baseline: Baseline) -> Self {
        self.baseline = baseline;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.levels == 0 {
            return Err(Error::InvalidArgument("levels must be at least 1".into()));
        }
        match self.c_mode {
            CMode::Fixed(c) => threshold::check_c(c)?,
            CMode::Sweep { step } if !(step > 0.0 && step < 1.0) => {
                return Err(Error::InvalidArgument(format!(
                    "sweep step must be in (0, 1) (got {step})"
                )));
            }
            _ => {}
        }
        if let Baseline::Prewhiten { order: 0 } = self.baseline {
            return Err(Error::InvalidArgument(
                "whitening order must be at least 1".into(),
            ));
        }
        get_filter_bank(&self.basis).map(|_| ())
    }
}

/// Candidate factors `step, 2·step, …` up to and including 1.0.
pub fn sweep_candidates(step: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut i = 1u32;
    loop {
        let c = i as f64 * step;
        if c >= 1.0 - 1e-9 {
            out.push(1.0);
            return out;
        }
        out.push(c);
        i += 1;
    }
}

/// PSNR of one sweep candidate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub c: f64,
    pub psnr_db: f64,
}

/// What a denoising run chose and measured.
#[derive(Debug, Clone, PartialEq)]
pub struct DenoiseReport {
    pub method: &'static str,
    /// Factor used for the returned image.
    pub c: f64,
    pub thresholds: ThresholdSet,
    /// Every candidate tried, in increasing `c` (empty for fixed `c`).
    pub sweep: Vec<SweepPoint>,
    /// Noisy input against the reference, when one was given.
    pub psnr_noisy_db: Option<f64>,
    pub psnr_denoised_db: Option<f64>,
    /// Fitted whitening model (pre-whitening baseline only).
    pub whitening: Option<ArModel>,
    pub notes: Vec<String>,
}

/// Runs `reconstruct` for the configured `c` (or every sweep candidate)
/// and assembles the report.
fn select_c(
    cfg: &DenoiseConfig,
    noisy: &Image,
    clean: Option<&Image>,
    method: &'static str,
    mut reconstruct: impl FnMut(f64) -> Result<(Image, ThresholdSet)>,
) -> Result<(Image, DenoiseReport)> {
    cfg.validate()?;
    let psnr_noisy_db = clean.map(|c| psnr(c, noisy)).transpose()?;
    let (image, thresholds, c, sweep) = match cfg.c_mode {
        CMode::Fixed(c) => {
            let (image, thr) = reconstruct(c)?;
            (image, thr, c, Vec::new())
        }
        CMode::Sweep { step } => {
            let clean = clean.ok_or(Error::SweepWithoutReference)?;
            let mut best: Option<(Image, ThresholdSet, f64, f64)> = None;
            let mut sweep = Vec::new();
            for c in sweep_candidates(step) {
                let (image, thr) = reconstruct(c)?;
                let score = psnr(clean, &image)?;
                sweep.push(SweepPoint { c, psnr_db: score });
                // Strict improvement only, so ties keep the smaller c.
                if best.as_ref().is_none_or(|b| score > b.3) {
                    best = Some((image, thr, c, score));
                }
            }
            let (image, thr, c, _) = best.expect("sweep has at least one candidate");
            (image, thr, c, sweep)
        }
    };
    let psnr_denoised_db = clean.map(|c| psnr(c, &image)).transpose()?;
    Ok((
        image,
        DenoiseReport {
            method,
            c,
            thresholds,
            sweep,
            psnr_noisy_db,
            psnr_denoised_db,
            whitening: None,
            notes: Vec::new(),
        },
    ))
}

fn shrink_and_invert(
    pyr: &WaveletPyramid,
    base: &ThresholdSet,
    c: f64,
    mode: Thresholding,
) -> Result<(Image, ThresholdSet)> {
    let thr = base.with_c(c);
    let image = idwt2d(&apply_threshold(pyr, &thr, mode)?)?;
    Ok((image, thr))
}

/// Sigmas for the single-level comparator: the finest HH estimate, copied
/// to every detail block.
fn global_sigmas(pyr: &WaveletPyramid) -> Result<Vec<(usize, Orientation, f64)>> {
    let sigma = estimate_sigma(pyr.detail(1, Orientation::HH))?;
    Ok((1..=pyr.levels())
        .flat_map(|l| Orientation::ALL.map(|o| (l, o, sigma)))
        .collect())
}

/// Level-dependent wavelet-shrinkage denoising.
///
/// `noisy` must have sides divisible by `2^levels`. A clean reference is
/// required when `c` is swept and optional otherwise (it only adds PSNR
/// figures to the report).
pub fn denoise_image(
    noisy: &Image,
    cfg: &DenoiseConfig,
    clean_ref: Option<&Image>,
) -> Result<(Image, DenoiseReport)> {
    cfg.validate()?;
    let bank = get_filter_bank(&cfg.basis)?;
    let pyr = dwt2d(noisy, &bank, cfg.levels)?;
    let base = ThresholdSet::from_sigmas(
        1.0,
        noisy.len(),
        threshold::level_sigmas(&pyr, cfg.sigma_scope)?,
    );
    select_c(cfg, noisy, clean_ref, Baseline::None.method_name(), |c| {
        shrink_and_invert(&pyr, &base, c, cfg.thresholding)
    })
}

/// Single-level comparator: one σ from the finest HH block, one λ for all
/// detail blocks.
pub fn denoise_baseline_global(
    noisy: &Image,
    cfg: &DenoiseConfig,
    clean_ref: Option<&Image>,
) -> Result<(Image, DenoiseReport)> {
    cfg.validate()?;
    let bank = get_filter_bank(&cfg.basis)?;
    let pyr = dwt2d(noisy, &bank, cfg.levels)?;
    let base = ThresholdSet::from_sigmas(1.0, noisy.len(), global_sigmas(&pyr)?);
    select_c(
        cfg,
        noisy,
        clean_ref,
        Baseline::GlobalSingleLevel.method_name(),
        |c| shrink_and_invert(&pyr, &base, c, cfg.thresholding),
    )
}

/// Pre-whitening comparator.
///
/// Fits an AR model (order from `cfg.baseline`, default 10) to the
/// noise-only sequence `noise_cal`, whitens the raster-scanned noisy image
/// with `A(z)`, denoises the whitened raster with the single-level rule,
/// and restores it with `1/A(z)`. Fitting on a separate noise-only sequence
/// is an idealization: a blind system would have to estimate it.
pub fn denoise_baseline_prewhiten(
    noisy: &Image,
    noise_cal: &[f64],
    cfg: &DenoiseConfig,
    clean_ref: Option<&Image>,
) -> Result<(Image, DenoiseReport)> {
    cfg.validate()?;
    let order = match cfg.baseline {
        Baseline::Prewhiten { order } => order,
        _ => whiten::DEFAULT_ORDER,
    };
    let model = fit_ar(noise_cal, order)?;
    let whitened = Image::new(
        noisy.width(),
        noisy.height(),
        whiten::whiten(noisy.samples(), &model),
    )?;
    let bank = get_filter_bank(&cfg.basis)?;
    let pyr = dwt2d(&whitened, &bank, cfg.levels)?;
    let base = ThresholdSet::from_sigmas(1.0, noisy.len(), global_sigmas(&pyr)?);
    let (image, mut report) = select_c(
        cfg,
        noisy,
        clean_ref,
        Baseline::Prewhiten { order }.method_name(),
        |c| {
            let (shrunk, thr) = shrink_and_invert(&pyr, &base, c, cfg.thresholding)?;
            let restored = unwhiten(shrunk.samples(), &model);
            Ok((Image::new(noisy.width(), noisy.height(), restored)?, thr))
        },
    )?;
    report.notes.push(format!(
        "AR({order}) whitening filter fitted on a {}-sample noise-only calibration sequence",
        noise_cal.len()
    ));
    report.whitening = Some(model);
    Ok((image, report))
}

/// Dispatches on `cfg.baseline`. `noise_cal` is required for pre-whitening.
pub fn denoise(
    noisy: &Image,
    cfg: &DenoiseConfig,
    clean_ref: Option<&Image>,
    noise_cal: Option<&[f64]>,
) -> Result<(Image, DenoiseReport)> {
    match cfg.baseline {
        Baseline::None => denoise_image(noisy, cfg, clean_ref),
        Baseline::GlobalSingleLevel => denoise_baseline_global(noisy, cfg, clean_ref),
        Baseline::Prewhiten { .. } => {
            let cal = noise_cal.ok_or_else(|| {
                Error::InvalidArgument("pre-whitening needs a noise calibration sequence".into())
            })?;
            denoise_baseline_prewhiten(noisy, cal, cfg, clean_ref)
        }
    }
}
