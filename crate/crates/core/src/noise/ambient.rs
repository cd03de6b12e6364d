//! Empirical underwater ambient-noise spectrum.
//!
//! Four sources, each a dB level (re 1 µPa²/Hz) as a function of frequency
//! in kHz, with `log` read as `log10`:
//!
//! ```text
//! turbulence  17 − 30 log f
//! shipping    40 + 20 (s − 5) + 26 log f − 60 log(f + 0.03)
//! wind        50 + 7.5 √w + 20 log f − 40 log(f + 0.4)
//! thermal     −15 + 20 log f
//! ```
//!
//! `s` is the shipping-activity factor and `w` the wind speed in m/s.

use std::io::Write;

use crate::error::{Error, Result};

/// Parameters of the ambient model plus the sample rate used to map
/// sequence frequencies onto the physical spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmbientParams {
    /// Shipping-activity factor, 0..=9 (5 is neutral).
    pub shipping: f64,
    /// Wind speed in m/s.
    pub wind_speed: f64,
    /// Sample rate in Hz.
    pub sample_rate: f64,
}

impl Default for AmbientParams {
    fn default() -> Self {
        Self {
            shipping: 5.0,
            wind_speed: 5.0,
            sample_rate: 200_000.0,
        }
    }
}

impl AmbientParams {
    pub fn new(shipping: f64, wind_speed: f64, sample_rate: f64) -> Result<Self> {
        let params = Self {
            shipping,
            wind_speed,
            sample_rate,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=9.0).contains(&self.shipping) {
            return Err(Error::InvalidArgument(format!(
                "shipping factor must be in 0..=9 (got {})",
                self.shipping
            )));
        }
        if !(self.wind_speed >= 0.0 && self.wind_speed.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "wind speed must be >= 0 (got {})",
                self.wind_speed
            )));
        }
        if !(self.sample_rate > 0.0 && self.sample_rate.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "sample rate must be > 0 (got {})",
                self.sample_rate
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Turbulence,
    Shipping,
    Wind,
    Thermal,
}

impl Component {
    pub const ALL: [Component; 4] = [
        Component::Turbulence,
        Component::Shipping,
        Component::Wind,
        Component::Thermal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Component::Turbulence => "turbulence",
            Component::Shipping => "shipping",
            Component::Wind => "wind",
            Component::Thermal => "thermal",
        }
    }
}

/// How the component levels combine into the total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PsdSum {
    /// `10·log10(Σ 10^(Nᵢ/10))`: powers add.
    #[default]
    Linear,
    /// `Σ Nᵢ`: the dB levels themselves are summed.
    Decibel,
}

fn check_frequency(f_khz: f64) -> Result<()> {
    if f_khz > 0.0 && f_khz.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveFrequency(f_khz))
    }
}

/// Level in dB of one noise source at `f_khz`.
pub fn component_psd(component: Component, f_khz: f64, params: &AmbientParams) -> Result<f64> {
    check_frequency(f_khz)?;
    let lf = f_khz.log10();
    Ok(match component {
        Component::Turbulence => 17.0 - 30.0 * lf,
        Component::Shipping => {
            40.0 + 20.0 * (params.shipping - 5.0) + 26.0 * lf - 60.0 * (f_khz + 0.03).log10()
        }
        Component::Wind => {
            50.0 + 7.5 * params.wind_speed.sqrt() + 20.0 * lf - 40.0 * (f_khz + 0.4).log10()
        }
        Component::Thermal => -15.0 + 20.0 * lf,
    })
}

/// Total ambient level in dB at `f_khz`.
pub fn total_psd(f_khz: f64, params: &AmbientParams, mode: PsdSum) -> Result<f64> {
    let mut levels = [0.0; 4];
    for (level, c) in levels.iter_mut().zip(Component::ALL) {
        *level = component_psd(c, f_khz, params)?;
    }
    Ok(match mode {
        PsdSum::Decibel => levels.iter().sum(),
        PsdSum::Linear => {
            // Factor out the largest term so 10^(N/10) cannot overflow.
            let peak = levels.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            peak + 10.0
                * levels
                    .iter()
                    .map(|l| 10f64.powf((l - peak) / 10.0))
                    .sum::<f64>()
                    .log10()
        }
    })
}

/// Component with the highest level at `f_khz`.
pub fn dominant_component(f_khz: f64, params: &AmbientParams) -> Result<Component> {
    let mut best = (Component::Turbulence, f64::NEG_INFINITY);
    for c in Component::ALL {
        let level = component_psd(c, f_khz, params)?;
        if level > best.1 {
            best = (c, level);
        }
    }
    Ok(best.0)
}

/// Total PSD sampled on a frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PsdCurve {
    pub frequencies_hz: Vec<f64>,
    pub levels_db: Vec<f64>,
    pub params: AmbientParams,
    pub mode: PsdSum,
}

impl PsdCurve {
    pub fn len(&self) -> usize {
        self.frequencies_hz.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies_hz.is_empty()
    }

    /// Writes `frequency_hz,level_db` rows, optionally followed by one
    /// column per source.
    pub fn write_csv<W: Write>(&self, mut out: W, with_components: bool) -> std::io::Result<()> {
        write!(out, "frequency_hz,level_db")?;
        if with_components {
            for c in Component::ALL {
                write!(out, ",{}_db", c.name())?;
            }
        }
        writeln!(out)?;
        for (&f, &level) in self.frequencies_hz.iter().zip(&self.levels_db) {
            write!(out, "{f},{level}")?;
            if with_components {
                for c in Component::ALL {
                    let v = component_psd(c, f / 1000.0, &self.params)
                        .expect("grid frequencies are positive");
                    write!(out, ",{v}")?;
                }
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

/// Evaluates [`total_psd`] on `n_points` log-spaced frequencies from
/// `f_lo_hz` to `f_hi_hz` inclusive.
pub fn psd_curve(
    params: &AmbientParams,
    mode: PsdSum,
    n_points: usize,
    f_lo_hz: f64,
    f_hi_hz: f64,
) -> Result<PsdCurve> {
    params.validate()?;
    if n_points < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 points (got {n_points})"
        )));
    }
    let nyquist = params.sample_rate / 2.0;
    if !(f_lo_hz > 0.0 && f_lo_hz < f_hi_hz && f_hi_hz <= nyquist) {
        return Err(Error::InvalidArgument(format!(
            "frequency range must satisfy 0 < f_lo < f_hi <= {nyquist} Hz (got {f_lo_hz}..{f_hi_hz})"
        )));
    }
    let (lo, hi) = (f_lo_hz.ln(), f_hi_hz.ln());
    let step = (hi - lo) / (n_points - 1) as f64;
    let mut frequencies_hz: Vec<f64> = (0..n_points)
        .map(|i| (lo + step * i as f64).exp())
        .collect();
    frequencies_hz[0] = f_lo_hz;
    frequencies_hz[n_points - 1] = f_hi_hz;
    let levels_db = frequencies_hz
        .iter()
        .map(|&f| total_psd(f / 1000.0, params, mode))
        .collect::<Result<_>>()?;
    Ok(PsdCurve {
        frequencies_hz,
        levels_db,
        params: *params,
        mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neutral() -> AmbientParams {
        AmbientParams {
            shipping: 5.0,
            wind_speed: 0.0,
            sample_rate: 200_000.0,
        }
    }

    #[test]
    fn component_levels_at_one_khz() {
        let p = neutral();
        assert_eq!(component_psd(Component::Turbulence, 1.0, &p).unwrap(), 17.0);
        assert_eq!(component_psd(Component::Thermal, 1.0, &p).unwrap(), -15.0);
        // 40 − 60·log10(1.03) and 50 − 40·log10(1.4), evaluated independently.
        assert!(
            (component_psd(Component::Shipping, 1.0, &p).unwrap() - 39.22976651768967).abs()
                < 1e-12
        );
        assert!(
            (component_psd(Component::Wind, 1.0, &p).unwrap() - 44.15487857287048).abs() < 1e-12
        );
    }

    #[test]
    fn totals_at_one_khz() {
        let p = neutral();
        assert!((total_psd(1.0, &p, PsdSum::Decibel).unwrap() - 85.38464509056016).abs() < 1e-10);
        assert!((total_psd(1.0, &p, PsdSum::Linear).unwrap() - 45.372625068378255).abs() < 1e-10);
    }

    #[test]
    fn non_positive_frequency() {
        let p = neutral();
        for f in [0.0, -1.0] {
            let err = component_psd(Component::Wind, f, &p).unwrap_err();
            assert!(err.to_string().contains("frequency must be positive"));
            assert!(total_psd(f, &p, PsdSum::Linear).is_err());
        }
    }

    #[test]
    fn linear_sum_bounds() {
        let p = AmbientParams::default();
        for i in 0..200 {
            let f = 1e-4 * 10f64.powf(i as f64 * 0.035);
            let total = total_psd(f, &p, PsdSum::Linear).unwrap();
            let max = Component::ALL
                .iter()
                .map(|&c| component_psd(c, f, &p).unwrap())
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(total >= max - 1e-12 && total <= max + 6.03, "f={f}");
        }
    }

    #[test]
    fn wind_dominates_its_band() {
        let p = AmbientParams::default();
        let curve = psd_curve(&p, PsdSum::Linear, 200, 200.0, 100_000.0).unwrap();
        let wind = curve
            .frequencies_hz
            .iter()
            .filter(|&&f| dominant_component(f / 1000.0, &p).unwrap() == Component::Wind)
            .count();
        assert!(wind as f64 > 0.9 * curve.len() as f64, "{wind}");
        // Turbulence at the lowest frequencies, thermal far above 100 kHz.
        assert_eq!(
            dominant_component(0.001, &p).unwrap(),
            Component::Turbulence
        );
        assert_eq!(dominant_component(1000.0, &p).unwrap(), Component::Thermal);
    }

    #[test]
    fn curve_grid() {
        let p = AmbientParams::default();
        let c = psd_curve(&p, PsdSum::Linear, 2, 200.0, 100_000.0).unwrap();
        assert_eq!(c.frequencies_hz, vec![200.0, 100_000.0]);
        assert_eq!(
            c.levels_db[1],
            total_psd(100.0, &p, PsdSum::Linear).unwrap()
        );
        let c = psd_curve(&p, PsdSum::Decibel, 77, 10.0, 5000.0).unwrap();
        assert!(c.frequencies_hz.windows(2).all(|w| w[1] > w[0]));
        assert!(psd_curve(&p, PsdSum::Linear, 10, 500.0, 500.0).is_err());
        assert!(psd_curve(&p, PsdSum::Linear, 10, 10.0, 150_000.0).is_err());
        assert!(psd_curve(&p, PsdSum::Linear, 1, 10.0, 100.0).is_err());
    }

    #[test]
    fn csv_layout() {
        let p = neutral();
        let c = psd_curve(&p, PsdSum::Linear, 3, 1000.0, 4000.0).unwrap();
        let mut buf = Vec::new();
        c.write_csv(&mut buf, true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "frequency_hz,level_db,turbulence_db,shipping_db,wind_db,thermal_db"
        );
        let first: Vec<f64> = lines
            .next()
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        assert_eq!(first[0], 1000.0);
        assert_eq!(first[2], 17.0);
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn params_validated() {
        assert!(AmbientParams::new(5.0, 5.0, 200e3).is_ok());
        assert!(AmbientParams::new(9.5, 5.0, 200e3).is_err());
        assert!(AmbientParams::new(5.0, -1.0, 200e3).is_err());
        assert!(AmbientParams::new(5.0, 1.0, 0.0).is_err());
    }
}
