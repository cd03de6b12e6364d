//! Wavelet-shrinkage denoising of grayscale images corrupted by colored
//! underwater ambient noise.
//!
//! The crate is organised around the processing chain:
//!
//! * [`image`] – real-valued rasters, PGM/PNG I/O, symmetric padding.
//! * [`wavelet`] – filter banks and the periodic multi-level 2D DWT.
//! * [`noise`] – the ambient-noise spectral model and colored-noise synthesis.
//! * [`denoise`] – level-dependent MAD noise estimates, modified universal
//!   thresholds and soft/hard shrinkage, plus single-level and pre-whitening
//!   baselines.
//! * [`metrics`] – MSE, PSNR, NMSE and MAE.
//!
//! ```
//! use aquawave::prelude::*;
//!
//! let disk = |x: usize, y: usize| (x as f64 - 120.0).hypot(y as f64 - 136.0) < 72.0;
//! let clean = Image::from_fn(256, 256, |x, y| if disk(x, y) { 170.0 } else { 80.0 })?;
//! let spec = NoiseSpec::white(20.0, 7);
//! let (noisy, _noise) = corrupt_image(&clean, &spec)?;
//!
//! let cfg = DenoiseConfig::new("sym4").with_levels(4).with_c(CMode::Sweep { step: 0.1 });
//! let (denoised, report) = denoise_image(&noisy, &cfg, Some(&clean))?;
//! assert!(psnr(&clean, &denoised)? > psnr(&clean, &noisy)?);
//! assert!(report.c > 0.0 && report.c <= 1.0);
//! # Ok::<(), aquawave::Error>(())
//! ```

pub mod denoise;
mod error;
pub mod image;
pub mod metrics;
pub mod noise;
pub mod wavelet;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::denoise::{
        compute_thresholds, denoise, denoise_baseline_global, denoise_baseline_prewhiten,
        denoise_image, estimate_sigma, Baseline, CMode, DenoiseConfig, DenoiseReport, SigmaScope,
        ThresholdSet, Thresholding,
    };
    pub use crate::image::{crop, load_image, pad_symmetric, save_image, Dims, Image};
    pub use crate::metrics::{mae, mse, nmse, psnr, QualityBand, QualityScore};
    pub use crate::noise::{
        corrupt_image, generate_colored_noise, AmbientParams, NoiseModel, NoiseSpec,
    };
    pub use crate::wavelet::{
        dwt2d, get_filter_bank, idwt2d, Orientation, WaveletFilterBank, WaveletPyramid,
    };
    pub use crate::Error;
}

// Compiles every code block in the guide as a doctest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/images.md")]
    mod images {}
    #[doc = include_str!("../../../book/src/wavelets.md")]
    mod wavelets {}
    #[doc = include_str!("../../../book/src/noise.md")]
    mod noise {}
    #[doc = include_str!("../../../book/src/thresholds.md")]
    mod thresholds {}
    #[doc = include_str!("../../../book/src/baselines.md")]
    mod baselines {}
    #[doc = include_str!("../../../book/src/metrics.md")]
    mod metrics {}
}
