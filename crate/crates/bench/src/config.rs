//! Experiment configuration: a JSON manifest, overridden field by field
//! from the command line.

use std::path::{Path, PathBuf};

use aquawave::denoise::{Baseline, CMode, DenoiseConfig, SigmaScope, Thresholding};
use aquawave::noise::{AmbientParams, NoiseModel, NoiseSpec, DEFAULT_SEED};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::BenchError;

/// Environment variable that supplies the seed base when neither the flag
/// nor the config file does.
pub const SEED_ENV: &str = "AQUA_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Method {
    MutePerLevel,
    Global,
    Prewhiten,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::MutePerLevel => "mute_per_level",
            Method::Global => "global",
            Method::Prewhiten => "prewhiten",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdingArg {
    Soft,
    Hard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum ScopeArg {
    PerSubband,
    PerLevelPooled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum NoiseKind {
    Ambient,
    White,
    Powerlaw,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DenoiseSettings {
    pub levels: usize,
    pub thresholding: ThresholdingArg,
    /// `"sweep"` or a fixed factor such as `"0.6"`.
    pub c: String,
    pub step: f64,
    pub sigma_scope: ScopeArg,
    pub whiten_order: usize,
}

impl Default for DenoiseSettings {
    fn default() -> Self {
        Self {
            levels: 4,
            thresholding: ThresholdingArg::Soft,
            c: "sweep".into(),
            step: 0.1,
            sigma_scope: ScopeArg::PerSubband,
            whiten_order: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NoiseSettings {
    pub model: NoiseKind,
    pub shipping: f64,
    /// m/s.
    pub wind: f64,
    /// Hz.
    pub sample_rate: f64,
    pub beta: f64,
}

impl Default for NoiseSettings {
    fn default() -> Self {
        let ambient = AmbientParams::default();
        Self {
            model: NoiseKind::Ambient,
            shipping: ambient.shipping,
            wind: ambient.wind_speed,
            sample_rate: ambient.sample_rate,
            beta: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Clean input image; the bundled scene when absent.
    pub image: Option<PathBuf>,
    pub bases: Vec<String>,
    pub noise_powers: Vec<f64>,
    pub trials: usize,
    /// Seed of trial 0; trial `i` uses `seed + i`.
    pub seed: Option<u64>,
    pub methods: Vec<Method>,
    pub denoise: DenoiseSettings,
    pub noise: NoiseSettings,
    pub out_dir: PathBuf,
    /// Measure wall time per trial. Off by default so reports are reproducible.
    pub record_timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            image: None,
            bases: vec!["db5".into(), "sym4".into(), "bior1.3".into()],
            noise_powers: vec![0.0, 3.0, 5.0, 10.0, 15.0],
            trials: 20,
            seed: None,
            methods: vec![Method::MutePerLevel],
            denoise: DenoiseSettings::default(),
            noise: NoiseSettings::default(),
            out_dir: PathBuf::from("bench-results"),
            record_timing: false,
        }
    }
}

impl RunConfig {
    pub fn from_json_file(path: &Path) -> Result<Self, BenchError> {
        let text =
            std::fs::read_to_string(path).map_err(BenchError::io("cannot read config", path))?;
        serde_json::from_str(&text).map_err(|source| BenchError::Config {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let usage = |m: &str| Err(BenchError::Usage(m.into()));
        if self.trials == 0 {
            return usage("trials must be at least 1");
        }
        if self.bases.is_empty() || self.noise_powers.is_empty() || self.methods.is_empty() {
            return usage("bases, noise powers and methods must be non-empty");
        }
        if self.noise_powers.iter().any(|p| !p.is_finite()) {
            return usage("noise powers must be finite");
        }
        self.c_mode()?;
        Ok(())
    }

    pub fn c_mode(&self) -> Result<CMode, BenchError> {
        let d = &self.denoise;
        if d.c.eq_ignore_ascii_case("sweep") {
            return Ok(CMode::Sweep { step: d.step });
        }
        d.c.parse::<f64>().map(CMode::Fixed).map_err(|_| {
            BenchError::Usage(format!("--c expects \"sweep\" or a number, got {:?}", d.c))
        })
    }

    pub fn denoise_config(&self, basis: &str, method: Method) -> Result<DenoiseConfig, BenchError> {
        let d = &self.denoise;
        let baseline = match method {
            Method::MutePerLevel => Baseline::None,
            Method::Global => Baseline::GlobalSingleLevel,
            Method::Prewhiten => Baseline::Prewhiten {
                order: d.whiten_order,
            },
        };
        Ok(DenoiseConfig::new(basis)
            .with_levels(d.levels)
            .with_thresholding(match d.thresholding {
                ThresholdingArg::Soft => Thresholding::Soft,
                ThresholdingArg::Hard => Thresholding::Hard,
            })
            .with_scope(match d.sigma_scope {
                ScopeArg::PerSubband => SigmaScope::PerSubband,
                ScopeArg::PerLevelPooled => SigmaScope::PerLevelPooled,
            })
            .with_c(self.c_mode()?)
            .with_baseline(baseline))
    }

    pub fn noise_model(&self) -> NoiseModel {
        let n = &self.noise;
        match n.model {
            NoiseKind::Ambient => NoiseModel::Ambient(AmbientParams {
                shipping: n.shipping,
                wind_speed: n.wind,
                sample_rate: n.sample_rate,
            }),
            NoiseKind::White => NoiseModel::White,
            NoiseKind::Powerlaw => NoiseModel::PowerLaw { beta: n.beta },
        }
    }

    pub fn noise_spec(&self, power_db: f64, seed: u64) -> NoiseSpec {
        NoiseSpec {
            model: self.noise_model(),
            power_db,
            seed,
        }
    }
}

/// Seed base by precedence: flag, then config file, then `AQUA_SEED`,
/// then 42.
pub fn resolve_seed(
    flag: Option<u64>,
    file: Option<u64>,
    env: Option<&str>,
) -> Result<u64, BenchError> {
    if let Some(seed) = flag.or(file) {
        return Ok(seed);
    }
    match env {
        Some(text) => text.trim().parse().map_err(|_| {
            BenchError::Usage(format!(
                "{SEED_ENV} must be an unsigned integer, got {text:?}"
            ))
        }),
        None => Ok(DEFAULT_SEED),
    }
}
