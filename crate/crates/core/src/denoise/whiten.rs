//! Autoregressive noise model fitted by Levinson–Durbin, and the matching
//! whitening / un-whitening filters.
//!
//! Coefficients follow the prediction-error convention
//! `A(z) = 1 + a₁z⁻¹ + … + a_p z⁻ᵖ`: whitening computes
//! `e[n] = Σ aᵢ x[n−i]`, and `1/A(z)` undoes it.

use crate::error::{Error, Result};
use crate::noise::spectrum::autocorrelation;

/// Default whitening filter order.
pub const DEFAULT_ORDER: usize = 10;

/// Result of an AR fit.
#[derive(Debug, Clone, PartialEq)]
pub struct ArModel {
    /// `[1, a₁, …, a_p]`.
    pub coefficients: Vec<f64>,
    pub reflection: Vec<f64>,
    /// Final prediction-error power.
    pub error_power: f64,
}

impl ArModel {
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// Solves the Yule–Walker equations for autocorrelation `r[0..=order]`.
///
/// Fails with [`Error::UnstableWhitening`] if any reflection coefficient
/// reaches magnitude 1, since `1/A(z)` would then be unstable.
pub fn levinson_durbin(r: &[f64], order: usize) -> Result<ArModel> {
    if r.len() <= order {
        return Err(Error::InvalidArgument(format!(
            "need {} autocorrelation lags for order {order}, got {}",
            order + 1,
            r.len()
        )));
    }
    if r[0].is_nan() || r[0] <= 0.0 {
        return Err(Error::InvalidArgument(
            "autocorrelation at lag 0 must be positive".into(),
        ));
    }
    let mut a = vec![0.0; order + 1];
    a[0] = 1.0;
    let mut reflection = Vec::with_capacity(order);
    let mut err = r[0];
    for m in 1..=order {
        let acc: f64 = (0..m).map(|i| a[i] * r[m - i]).sum();
        let k = -acc / err;
        if k.is_nan() || k.abs() >= 1.0 {
            return Err(Error::UnstableWhitening {
                stage: m,
                reflection: k,
            });
        }
        let prev = a.clone();
        for i in 1..m {
            a[i] = prev[i] + k * prev[m - i];
        }
        a[m] = k;
        err *= 1.0 - k * k;
        reflection.push(k);
    }
    Ok(ArModel {
        coefficients: a,
        reflection,
        error_power: err,
    })
}

/// Fits an AR(`order`) model to a noise-only calibration sequence with the
/// autocorrelation method. The sequence must hold at least `10 × order` samples.
pub fn fit_ar(calibration: &[f64], order: usize) -> Result<ArModel> {
    if order == 0 {
        return Err(Error::InvalidArgument(
            "whitening order must be at least 1".into(),
        ));
    }
    if calibration.len() < 10 * order {
        return Err(Error::InvalidArgument(format!(
            "calibration sequence of {} samples is shorter than 10x order ({})",
            calibration.len(),
            10 * order
        )));
    }
    levinson_durbin(&autocorrelation(calibration, order), order)
}

/// FIR whitening `e[n] = Σ aᵢ x[n−i]` with zero initial state.
pub fn whiten(x: &[f64], model: &ArModel) -> Vec<f64> {
    let a = &model.coefficients;
    (0..x.len())
        .map(|n| {
            a.iter()
                .enumerate()
                .take(n + 1)
                .map(|(i, ai)| ai * x[n - i])
                .sum()
        })
        .collect()
}

/// All-pole inverse of [`whiten`]: `y[n] = e[n] − Σ_{i≥1} aᵢ y[n−i]`.
pub fn unwhiten(e: &[f64], model: &ArModel) -> Vec<f64> {
    let a = &model.coefficients;
    let mut y = vec![0.0; e.len()];
    for n in 0..e.len() {
        let feedback: f64 = a
            .iter()
            .enumerate()
            .skip(1)
            .take(n)
            .map(|(i, ai)| ai * y[n - i])
            .sum();
        y[n] = e[n] - feedback;
    }
    y
}
