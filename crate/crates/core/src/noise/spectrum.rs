//! Spectral and correlation estimates for checking generated noise.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

/// Segment taper for [`welch_psd`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    Rectangular,
    Hann,
}

impl Window {
    fn weights(&self, len: usize) -> Vec<f64> {
        match self {
            Window::Rectangular => vec![1.0; len],
            // Periodic Hann.
            Window::Hann => (0..len)
                .map(|i| 0.5 - 0.5 * (2.0 * std::f64::consts::PI * i as f64 / len as f64).cos())
                .collect(),
        }
    }
}

/// Welch PSD estimate: `segment_len` segments with 50% overlap, each
/// tapered by `window`, averaged. Returns `segment_len/2 + 1` one-sided
/// bins; bin `k` sits at normalized frequency `k / segment_len`.
///
/// The scale is `|X_k|² / Σw²`, so white noise of variance σ² averages σ².
/// A single segment spanning the whole input gives the periodogram.
pub fn welch_psd(x: &[f64], segment_len: usize, window: Window) -> Vec<f64> {
    assert!(
        segment_len >= 2 && segment_len <= x.len(),
        "segment length must be in 2..=len"
    );
    let weights = window.weights(segment_len);
    let norm: f64 = weights.iter().map(|w| w * w).sum();
    let step = (segment_len / 2).max(1);
    let fft = FftPlanner::<f64>::new().plan_fft_forward(segment_len);

    let bins = segment_len / 2 + 1;
    let mut psd = vec![0.0; bins];
    let mut segments = 0usize;
    let mut buf = vec![Complex::new(0.0, 0.0); segment_len];
    let mut start = 0;
    while start + segment_len <= x.len() {
        for ((b, &v), &w) in buf
            .iter_mut()
            .zip(&x[start..start + segment_len])
            .zip(&weights)
        {
            *b = Complex::new(v * w, 0.0);
        }
        fft.process(&mut buf);
        for (p, c) in psd.iter_mut().zip(&buf) {
            *p += c.norm_sqr();
        }
        segments += 1;
        start += step;
    }
    psd.iter_mut().for_each(|p| *p /= norm * segments as f64);
    psd
}

/// Biased autocorrelation `r[k] = (1/n) Σ x[i]·x[i+k]` for `k = 0..=max_lag`.
pub fn autocorrelation(x: &[f64], max_lag: usize) -> Vec<f64> {
    let n = x.len();
    (0..=max_lag)
        .map(|k| {
            if k >= n {
                0.0
            } else {
                x[..n - k]
                    .iter()
                    .zip(&x[k..])
                    .map(|(a, b)| a * b)
                    .sum::<f64>()
                    / n as f64
            }
        })
        .collect()
}

/// Autocorrelation of the mean-removed sequence normalized so lag 0 is 1.
pub fn autocorrelation_coefficients(x: &[f64], max_lag: usize) -> Vec<f64> {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    let centered: Vec<f64> = x.iter().map(|v| v - mean).collect();
    let r = autocorrelation(&centered, max_lag);
    r.iter().map(|v| v / r[0]).collect()
}
