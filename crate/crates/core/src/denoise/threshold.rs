use crate::error::{Error, Result};
use crate::wavelet::{Block, Orientation, WaveletPyramid};

/// Gaussian consistency constant of the MAD estimator.
pub const MAD_SCALE: f64 = 0.6745;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Thresholding {
    #[default]
    Soft,
    Hard,
}

impl Thresholding {
    pub fn as_str(&self) -> &'static str {
        match self {
            Thresholding::Soft => "soft",
            Thresholding::Hard => "hard",
        }
    }
}

/// Which coefficients feed each noise estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SigmaScope {
    /// One estimate per (level, orientation) block.
    #[default]
    PerSubband,
    /// One estimate per level from its three detail blocks together.
    PerLevelPooled,
}

/// `sgn(x)·(|x| − λ)` when `|x| > λ`, else 0.
pub fn soft_threshold(x: f64, lambda: f64) -> f64 {
    if x.abs() > lambda {
        x.signum() * (x.abs() - lambda)
    } else {
        0.0
    }
}

/// `x` when `|x| > λ`, else 0.
pub fn hard_threshold(x: f64, lambda: f64) -> f64 {
    if x.abs() > lambda {
        x
    } else {
        0.0
    }
}

/// Median of `|v|`; the mean of the two central values for even counts.
pub(crate) fn median_abs(values: &[f64]) -> f64 {
    let mut mags: Vec<f64> = values.iter().map(|v| v.abs()).collect();
    let n = mags.len();
    let mid = n / 2;
    let (left, upper, _) = mags.select_nth_unstable_by(mid, f64::total_cmp);
    let upper = *upper;
    if n % 2 == 1 {
        upper
    } else {
        let lower = left.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        0.5 * (lower + upper)
    }
}

/// MAD noise estimate `median(|x|) / 0.6745` over a flat list.
pub fn mad_sigma(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::InvalidArgument(
            "cannot estimate noise from an empty block".into(),
        ));
    }
    Ok(median_abs(values) / MAD_SCALE)
}

/// MAD noise estimate over one coefficient block.
pub fn estimate_sigma(coeffs: &Block) -> Result<f64> {
    mad_sigma(coeffs.samples())
}

/// `√(2 ln N)`.
pub fn universal_factor(pixel_count: usize) -> f64 {
    (2.0 * (pixel_count as f64).ln()).sqrt()
}

/// Noise estimate and threshold of one detail block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubbandThreshold {
    pub level: usize,
    pub orientation: Orientation,
    pub sigma: f64,
    pub lambda: f64,
}

/// Thresholds `λ = c·σ·√(2 ln N)` for the detail blocks of a pyramid,
/// `N` being the pixel count of the transformed image.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdSet {
    pub c: f64,
    pub pixel_count: usize,
    pub entries: Vec<SubbandThreshold>,
}

impl ThresholdSet {
    /// Builds thresholds from per-block sigmas given as `(level, orientation, σ)`.
    pub fn from_sigmas(
        c: f64,
        pixel_count: usize,
        sigmas: impl IntoIterator<Item = (usize, Orientation, f64)>,
    ) -> Self {
        let factor = universal_factor(pixel_count);
        let entries = sigmas
            .into_iter()
            .map(|(level, orientation, sigma)| SubbandThreshold {
                level,
                orientation,
                sigma,
                lambda: c * sigma * factor,
            })
            .collect();
        Self {
            c,
            pixel_count,
            entries,
        }
    }

    /// Same sigmas, new factor `c`.
    pub fn with_c(&self, c: f64) -> Self {
        Self::from_sigmas(
            c,
            self.pixel_count,
            self.entries
                .iter()
                .map(|e| (e.level, e.orientation, e.sigma)),
        )
    }

    pub fn get(&self, level: usize, orientation: Orientation) -> Option<&SubbandThreshold> {
        self.entries
            .iter()
            .find(|e| e.level == level && e.orientation == orientation)
    }

    pub fn lambda(&self, level: usize, orientation: Orientation) -> Result<f64> {
        self.get(level, orientation)
            .map(|e| e.lambda)
            .ok_or(Error::MissingThreshold {
                level,
                orientation: orientation.as_str(),
            })
    }
}

pub(crate) fn check_c(c: f64) -> Result<()> {
    if c > 0.0 && c <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "threshold factor c must be in (0, 1] (got {c})"
        )))
    }
}

/// Per-block sigmas of a pyramid's detail coefficients.
pub(crate) fn level_sigmas(
    pyr: &WaveletPyramid,
    scope: SigmaScope,
) -> Result<Vec<(usize, Orientation, f64)>> {
    let mut out = Vec::with_capacity(3 * pyr.levels());
    for (i, level) in pyr.details.iter().enumerate() {
        match scope {
            SigmaScope::PerSubband => {
                for o in Orientation::ALL {
                    out.push((i + 1, o, estimate_sigma(level.get(o))?));
                }
            }
            SigmaScope::PerLevelPooled => {
                let pooled: Vec<f64> = Orientation::ALL
                    .iter()
                    .flat_map(|&o| level.get(o).samples().iter().copied())
                    .collect();
                let sigma = mad_sigma(&pooled)?;
                out.extend(Orientation::ALL.map(|o| (i + 1, o, sigma)));
            }
        }
    }
    Ok(out)
}

/// Level-dependent thresholds for every detail block of `pyr`.
/// The approximation block never receives a threshold.
pub fn compute_thresholds(pyr: &WaveletPyramid, c: f64, scope: SigmaScope) -> Result<ThresholdSet> {
    check_c(c)?;
    Ok(ThresholdSet::from_sigmas(
        c,
        pyr.original_dims.area(),
        level_sigmas(pyr, scope)?,
    ))
}

/// Shrinks every detail coefficient with its block's threshold. The
/// approximation passes through; `pyr` is left untouched.
pub fn apply_threshold(
    pyr: &WaveletPyramid,
    thr: &ThresholdSet,
    mode: Thresholding,
) -> Result<WaveletPyramid> {
    let shrink = match mode {
        Thresholding::Soft => soft_threshold,
        Thresholding::Hard => hard_threshold,
    };
    let mut out = pyr.clone();
    for (i, level) in out.details.iter_mut().enumerate() {
        for o in Orientation::ALL {
            let lambda = thr.lambda(i + 1, o)?;
            level
                .get_mut(o)
                .samples_mut()
                .iter_mut()
                .for_each(|x| *x = shrink(*x, lambda));
        }
    }
    Ok(out)
}
