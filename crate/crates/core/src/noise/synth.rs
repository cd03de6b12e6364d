use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use super::ambient::{total_psd, AmbientParams, PsdSum};
use crate::error::{Error, Result};
use crate::image::Image;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;

/// Spectral shape of the generated noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseModel {
    /// Total ambient spectrum (linear power sum of the four sources).
    Ambient(AmbientParams),
    /// `S(f) = 1 / f^beta`, `beta > 0`.
    PowerLaw {
        beta: f64,
    },
    White,
}

/// A noise model, its power, and the RNG seed.
///
/// `power_db` is the noise variance in dB relative to one squared
/// intensity unit: variance `10^(power_db/10)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub model: NoiseModel,
    pub power_db: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn white(power_db: f64, seed: u64) -> Self {
        Self {
            model: NoiseModel::White,
            power_db,
            seed,
        }
    }

    pub fn power_law(beta: f64, power_db: f64, seed: u64) -> Self {
        Self {
            model: NoiseModel::PowerLaw { beta },
            power_db,
            seed,
        }
    }

    pub fn ambient(params: AmbientParams, power_db: f64, seed: u64) -> Self {
        Self {
            model: NoiseModel::Ambient(params),
            power_db,
            seed,
        }
    }

    pub fn variance(&self) -> f64 {
        10f64.powf(self.power_db / 10.0)
    }

    pub fn validate(&self) -> Result<()> {
        match self.model {
            NoiseModel::Ambient(p) => p.validate()?,
            NoiseModel::PowerLaw { beta } if !(beta > 0.0 && beta.is_finite()) => {
                return Err(Error::InvalidArgument(format!(
                    "power-law exponent must be > 0 (got {beta})"
                )));
            }
            _ => {}
        }
        let variance = self.variance();
        if !(variance.is_finite() && variance > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "noise power {} dB gives no finite variance",
                self.power_db
            )));
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_power(mut self, power_db: f64) -> Self {
        self.power_db = power_db;
        self
    }
}

/// Amplitude gain per bin for `n`-point shaping, indexed by folded
/// frequency `m = min(k, n-k)`, `m = 0..=n/2`. The DC gain copies bin 1.
fn shaping_gains(model: &NoiseModel, n: usize) -> Result<Vec<f64>> {
    let half = n / 2;
    let mut gains = vec![0.0; half + 1];
    match *model {
        NoiseModel::White => gains.fill(1.0),
        NoiseModel::PowerLaw { beta } => {
            for (m, g) in gains.iter_mut().enumerate().skip(1) {
                *g = (m as f64 / n as f64).powf(-beta / 2.0);
            }
        }
        NoiseModel::Ambient(params) => {
            let mut levels = vec![0.0; half + 1];
            for (m, level) in levels.iter_mut().enumerate().skip(1) {
                let f_khz = m as f64 * params.sample_rate / n as f64 / 1000.0;
                *level = total_psd(f_khz, &params, PsdSum::Linear)?;
            }
            // Relative to the loudest bin; the overall scale is normalized away.
            let peak = levels[1..]
                .iter()
                .copied()
                .fold(f64::NEG_INFINITY, f64::max);
            for (g, level) in gains.iter_mut().zip(&levels).skip(1) {
                *g = 10f64.powf((level - peak) / 20.0);
            }
        }
    }
    gains[0] = gains[1];
    Ok(gains)
}

/// Generates `n` samples of zero-mean Gaussian noise with the spectrum of
/// `spec.model` and variance exactly `10^(power_db/10)`.
///
/// White Gaussian samples come from ChaCha20 seeded with `spec.seed`. For
/// colored models the spectrum of the draw is multiplied by `√S(f)` bin by
/// bin (keeping Hermitian symmetry) and transformed back. The result is
/// centered and rescaled so its population variance is exact.
pub fn generate_colored_noise(spec: &NoiseSpec, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "noise sequence needs at least 2 samples (got {n})"
        )));
    }
    spec.validate()?;
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    let mut samples: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();

    if !matches!(spec.model, NoiseModel::White) {
        let gains = shaping_gains(&spec.model, n)?;
        let mut planner = FftPlanner::<f64>::new();
        let mut buf: Vec<Complex<f64>> = samples.iter().map(|&x| Complex::new(x, 0.0)).collect();
        planner.plan_fft_forward(n).process(&mut buf);
        for (k, c) in buf.iter_mut().enumerate() {
            *c *= gains[k.min(n - k)];
        }
        planner.plan_fft_inverse(n).process(&mut buf);
        samples = buf.iter().map(|c| c.re).collect();
    }

    let mean = samples.iter().sum::<f64>() / n as f64;
    samples.iter_mut().for_each(|x| *x -= mean);
    let variance = samples.iter().map(|x| x * x).sum::<f64>() / n as f64;
    if variance == 0.0 {
        return Err(Error::InvalidArgument(
            "noise realization has zero variance".into(),
        ));
    }
    let scale = spec.variance().sqrt() / variance.sqrt();
    samples.iter_mut().for_each(|x| *x *= scale);
    Ok(samples)
}

/// Adds one raster-scanned noise sequence to `img` (no clamping).
///
/// Returns the noisy image and the noise itself, row-major.
pub fn corrupt_image(img: &Image, spec: &NoiseSpec) -> Result<(Image, Vec<f64>)> {
    let noise = generate_colored_noise(spec, img.len())?;
    let noisy: Vec<f64> = img
        .samples()
        .iter()
        .zip(&noise)
        .map(|(s, v)| s + v)
        .collect();
    Ok((Image::new(img.width(), img.height(), noisy)?, noise))
}
