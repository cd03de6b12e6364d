//! Ambient-noise spectral model, colored-noise synthesis and the additive
//! corruption `x = s + v`.

mod ambient;
pub mod spectrum;
mod synth;

pub use ambient::{
    component_psd, dominant_component, psd_curve, total_psd, AmbientParams, Component, PsdCurve,
    PsdSum,
};
pub use synth::{corrupt_image, generate_colored_noise, NoiseModel, NoiseSpec, DEFAULT_SEED};
