//! Single-level periodic 1D transform.
//!
//! Convention: with `h~` the analysis filter in correlation order (the
//! stored convolution-order filter reversed),
//!
//! ```text
//! approx[k] = Σ_j h~_lo[j] · x[(2k + j) mod n]
//! detail[k] = Σ_j h~_hi[j] · x[(2k + j) mod n]
//! ```
//!
//! i.e. circular correlation keeping the even-indexed outputs. Synthesis
//! upsamples and scatters through the synthesis filters:
//! `x[(2k + j) mod n] += g_lo[j]·approx[k] + g_hi[j]·detail[k]`.

use super::WaveletFilterBank;
use crate::error::{Error, Result};

/// One analysis step. `signal.len()` must be even; outputs are half length.
pub(crate) fn analyze(
    signal: &[f64],
    bank: &WaveletFilterBank,
    approx: &mut [f64],
    detail: &mut [f64],
) {
    let n = signal.len();
    let half = n / 2;
    let (lo, hi) = (&bank.corr_lo, &bank.corr_hi);
    let taps = lo.len();
    for k in 0..half {
        let start = 2 * k;
        let (mut a, mut d) = (0.0, 0.0);
        if start + taps <= n {
            let window = &signal[start..start + taps];
            for j in 0..taps {
                a += lo[j] * window[j];
                d += hi[j] * window[j];
            }
        } else {
            for j in 0..taps {
                let x = signal[(start + j) % n];
                a += lo[j] * x;
                d += hi[j] * x;
            }
        }
        approx[k] = a;
        detail[k] = d;
    }
}

/// One synthesis step; `out.len()` is twice the band length. Overwrites `out`.
pub(crate) fn synthesize(
    approx: &[f64],
    detail: &[f64],
    bank: &WaveletFilterBank,
    out: &mut [f64],
) {
    let n = out.len();
    let (lo, hi) = (bank.synthesis_lo(), bank.synthesis_hi());
    let taps = lo.len();
    out.fill(0.0);
    for (k, (&a, &d)) in approx.iter().zip(detail).enumerate() {
        let start = 2 * k;
        if start + taps <= n {
            for ((o, &l), &h) in out[start..start + taps].iter_mut().zip(lo).zip(hi) {
                *o += l * a + h * d;
            }
        } else {
            for j in 0..taps {
                out[(start + j) % n] += lo[j] * a + hi[j] * d;
            }
        }
    }
}

/// Single-level periodic DWT of an even-length signal.
pub fn dwt1d(signal: &[f64], bank: &WaveletFilterBank) -> Result<(Vec<f64>, Vec<f64>)> {
    if signal.is_empty() || signal.len() % 2 != 0 {
        return Err(Error::Dimensions(format!(
            "dwt1d needs a non-empty even-length signal (got length {})",
            signal.len()
        )));
    }
    let half = signal.len() / 2;
    let mut approx = vec![0.0; half];
    let mut detail = vec![0.0; half];
    analyze(signal, bank, &mut approx, &mut detail);
    Ok((approx, detail))
}

/// Inverse of [`dwt1d`].
pub fn idwt1d(approx: &[f64], detail: &[f64], bank: &WaveletFilterBank) -> Result<Vec<f64>> {
    if approx.len() != detail.len() {
        return Err(Error::Dimensions(format!(
            "approximation and detail lengths differ ({} vs {})",
            approx.len(),
            detail.len()
        )));
    }
    if approx.is_empty() {
        return Err(Error::Dimensions("idwt1d needs non-empty bands".into()));
    }
    let mut out = vec![0.0; 2 * approx.len()];
    synthesize(approx, detail, bank, &mut out);
    Ok(out)
}
