//! Image fidelity measures for 8-bit-convention rasters.
//!
//! All metrics work on the raw real-valued samples; nothing is clamped or
//! rounded, so they measure the algorithm rather than the quantizer.

use crate::error::{Error, Result};
use crate::image::Image;

/// Peak intensity of the 8-bit convention.
pub const PEAK: f64 = 255.0;

fn check_dims(reference: &Image, test: &Image) -> Result<()> {
    if reference.dims() != test.dims() {
        return Err(Error::Dimensions(format!(
            "cannot compare {} image with {} image",
            reference.dims(),
            test.dims()
        )));
    }
    Ok(())
}

fn squared_error(reference: &Image, test: &Image) -> f64 {
    reference
        .samples()
        .iter()
        .zip(test.samples())
        .map(|(a, b)| (a - b) * (a - b))
        .sum()
}

/// Mean squared error over all pixels.
pub fn mse(reference: &Image, test: &Image) -> Result<f64> {
    check_dims(reference, test)?;
    Ok(squared_error(reference, test) / reference.len() as f64)
}

/// `10·log10(255² / mse)`; `f64::INFINITY` when `mse` is zero.
pub fn psnr_from_mse(mse: f64) -> f64 {
    if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (PEAK * PEAK / mse).log10()
    }
}

/// Peak signal-to-noise ratio in dB. Identical images give `+inf`.
pub fn psnr(reference: &Image, test: &Image) -> Result<f64> {
    mse(reference, test).map(psnr_from_mse)
}

/// Normalized MSE `Σ(x−x̂)² / Σx²`.
pub fn nmse(reference: &Image, test: &Image) -> Result<f64> {
    check_dims(reference, test)?;
    let energy: f64 = reference.samples().iter().map(|v| v * v).sum();
    if energy == 0.0 {
        return Err(Error::NmseUndefined);
    }
    Ok(squared_error(reference, test) / energy)
}

/// Mean absolute error.
pub fn mae(reference: &Image, test: &Image) -> Result<f64> {
    check_dims(reference, test)?;
    let sum: f64 = reference
        .samples()
        .iter()
        .zip(test.samples())
        .map(|(a, b)| (a - b).abs())
        .sum();
    Ok(sum / reference.len() as f64)
}

/// Coarse quality label for a PSNR value.
///
/// Bands: above 40 dB excellent, 30–40 dB good, 20–30 dB poor, below
/// 20 dB unacceptable. A value on a boundary belongs to the lower band,
/// except 30 dB and 20 dB which open their bands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QualityBand {
    Excellent,
    Good,
    Poor,
    Unacceptable,
}

impl QualityBand {
    pub fn from_psnr(psnr_db: f64) -> Self {
        if psnr_db > 40.0 {
            Self::Excellent
        } else if psnr_db >= 30.0 {
            Self::Good
        } else if psnr_db >= 20.0 {
            Self::Poor
        } else {
            Self::Unacceptable
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::Excellent => "excellent",
            Self::Good => "good",
            Self::Poor => "poor",
            Self::Unacceptable => "unacceptable",
        }
    }
}

/// MSE, PSNR, NMSE and MAE of one comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QualityScore {
    pub mse: f64,
    pub psnr_db: f64,
    pub nmse: f64,
    pub mae: f64,
}

impl QualityScore {
    /// Scores `test` against `reference`. NMSE is NaN for an all-zero reference.
    pub fn compare(reference: &Image, test: &Image) -> Result<Self> {
        let mse = mse(reference, test)?;
        Ok(Self {
            mse,
            psnr_db: psnr_from_mse(mse),
            nmse: nmse(reference, test).unwrap_or(f64::NAN),
            mae: mae(reference, test)?,
        })
    }

    pub fn band(&self) -> QualityBand {
        QualityBand::from_psnr(self.psnr_db)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img(samples: &[f64]) -> Image {
        Image::new(samples.len(), 1, samples.to_vec()).unwrap()
    }

    #[test]
    fn mse_cases() {
        let a = img(&[0.0, 0.0]);
        assert_eq!(mse(&a, &a).unwrap(), 0.0);
        assert_eq!(mse(&a, &img(&[3.0, 4.0])).unwrap(), 12.5);
        let zero = Image::filled(4, 4, 0.0).unwrap();
        let full = Image::filled(4, 4, 255.0).unwrap();
        assert_eq!(mse(&zero, &full).unwrap(), 65025.0);
        assert_eq!(psnr(&zero, &full).unwrap(), 0.0);
    }

    #[test]
    fn psnr_identity_is_infinite() {
        let a = img(&[1.0, 2.0, 3.0]);
        assert_eq!(psnr(&a, &a).unwrap(), f64::INFINITY);
        assert_eq!(format!("{}", f64::INFINITY), "inf");
    }

    #[test]
    fn psnr_table_row() {
        // MSE 0.0756 at noise power 0 dB.
        assert!((psnr_from_mse(0.0756) - 59.35).abs() < 0.01);
    }

    #[test]
    fn nmse_cases() {
        let a = img(&[1.0, -2.0, 5.0]);
        assert_eq!(nmse(&a, &a).unwrap(), 0.0);
        assert_eq!(nmse(&a, &img(&[0.0, 0.0, 0.0])).unwrap(), 1.0);
        assert_eq!(nmse(&a, &a.map(|v| 2.0 * v).unwrap()).unwrap(), 1.0);
        assert!(matches!(
            nmse(&img(&[0.0, 0.0]), &a.clone()),
            Err(Error::Dimensions(_))
        ));
        assert!(matches!(
            nmse(&img(&[0.0, 0.0]), &img(&[1.0, 1.0])),
            Err(Error::NmseUndefined)
        ));
    }

    #[test]
    fn symmetric_and_dims_checked() {
        let a = img(&[1.0, 9.0, 4.0]);
        let b = img(&[2.0, 3.0, 8.0]);
        assert_eq!(mse(&a, &b).unwrap(), mse(&b, &a).unwrap());
        assert_eq!(mae(&a, &b).unwrap(), 11.0 / 3.0);
        let big = Image::filled(32, 32, 0.0).unwrap();
        let small = Image::filled(16, 16, 0.0).unwrap();
        assert!(psnr(&big, &small).is_err());
    }

    #[test]
    fn band_edges() {
        assert_eq!(
            QualityBand::from_psnr(f64::INFINITY),
            QualityBand::Excellent
        );
        assert_eq!(QualityBand::from_psnr(40.0001), QualityBand::Excellent);
        assert_eq!(QualityBand::from_psnr(40.0), QualityBand::Good);
        assert_eq!(QualityBand::from_psnr(30.0), QualityBand::Good);
        assert_eq!(QualityBand::from_psnr(29.999), QualityBand::Poor);
        assert_eq!(QualityBand::from_psnr(20.0), QualityBand::Poor);
        assert_eq!(QualityBand::from_psnr(19.999), QualityBand::Unacceptable);
        assert_eq!(QualityBand::from_psnr(-5.0).label(), "unacceptable");
    }

    #[test]
    fn score_ties_psnr_to_mse() {
        let a = Image::from_fn(8, 8, |x, y| (x * y) as f64).unwrap();
        let b = a.map(|v| v + 0.5).unwrap();
        let s = QualityScore::compare(&a, &b).unwrap();
        assert_eq!(s.mse, 0.25);
        assert_eq!(s.psnr_db, 10.0 * (65025.0f64 / 0.25).log10());
        assert_eq!(s.band(), QualityBand::Excellent);
    }
}
