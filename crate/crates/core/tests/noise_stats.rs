use aquawave::noise::spectrum::{autocorrelation_coefficients, welch_psd, Window};
use aquawave::noise::{generate_colored_noise, total_psd, AmbientParams, NoiseSpec, PsdSum};

fn averaged_periodogram(spec: &NoiseSpec, n: usize, realizations: u64) -> Vec<f64> {
    let mut acc = vec![0.0; n / 2 + 1];
    for seed in 0..realizations {
        let x = generate_colored_noise(&spec.with_seed(seed), n).unwrap();
        for (a, p) in acc.iter_mut().zip(welch_psd(&x, n, Window::Rectangular)) {
            *a += p;
        }
    }
    acc.iter_mut().for_each(|a| *a /= realizations as f64);
    acc
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

#[test]
fn white_noise_is_uncorrelated() {
    let n = 1 << 17;
    let x = generate_colored_noise(&NoiseSpec::white(0.0, 42), n).unwrap();
    let r = autocorrelation_coefficients(&x, 10);
    let bound = 4.0 / (n as f64).sqrt();
    for (k, v) in r.iter().enumerate().skip(1) {
        assert!(v.abs() < bound, "lag {k}: {v}");
    }
}

#[test]
fn white_noise_is_gaussian() {
    let n = 1_000_000;
    let x = generate_colored_noise(&NoiseSpec::white(0.0, 42), n).unwrap();
    // Mean 0 and variance 1 exactly after normalization.
    let m3 = x.iter().map(|v| v.powi(3)).sum::<f64>() / n as f64;
    let m4 = x.iter().map(|v| v.powi(4)).sum::<f64>() / n as f64;
    assert!(m3.abs() < 0.01, "skewness {m3}");
    assert!((m4 - 3.0).abs() < 0.03, "excess kurtosis {}", m4 - 3.0);
}

#[test]
fn power_law_slope() {
    let n = 1 << 16;
    let psd = averaged_periodogram(&NoiseSpec::power_law(2.0, 0.0, 0), n, 100);
    // Middle two decades of the 1..n/2 bin range, in log frequency.
    let centre = 0.5 * ((n / 2) as f64).log10();
    let (lo, hi) = (10f64.powf(centre - 1.0), 10f64.powf(centre + 1.0));
    let bins: Vec<usize> = (1..=n / 2)
        .filter(|&k| (k as f64) >= lo && (k as f64) <= hi)
        .collect();
    let xs: Vec<f64> = bins.iter().map(|&k| (k as f64).log10()).collect();
    let ys: Vec<f64> = bins.iter().map(|&k| psd[k].log10()).collect();
    let slope = least_squares_slope(&xs, &ys);
    assert!((slope + 2.0).abs() < 0.15, "slope {slope}");
}

#[test]
fn colored_noise_is_correlated() {
    let x = generate_colored_noise(&NoiseSpec::power_law(2.0, 0.0, 42), 1 << 16).unwrap();
    let r1 = autocorrelation_coefficients(&x, 1)[1];
    assert!(r1 > 0.1, "lag-1 {r1}");

    let ambient = generate_colored_noise(
        &NoiseSpec::ambient(AmbientParams::default(), 10.0, 42),
        65536,
    )
    .unwrap();
    assert!(autocorrelation_coefficients(&ambient, 1)[1] > 0.1);
}

#[test]
fn ambient_spectrum_matches_model() {
    let params = AmbientParams::default();
    let n = 1 << 14;
    let psd = averaged_periodogram(&NoiseSpec::ambient(params, 10.0, 0), n, 100);
    let bin_hz = params.sample_rate / n as f64;

    // Third-octave bands over [200 Hz, 50 kHz], mean power per band.
    let mut errors = Vec::new();
    let mut lo = 200.0;
    while lo < 50_000.0 {
        let hi = (lo * 2f64.powf(1.0 / 3.0)).min(50_000.0);
        let bins: Vec<usize> = (1..=n / 2)
            .filter(|&k| (k as f64 * bin_hz) >= lo && (k as f64 * bin_hz) < hi)
            .collect();
        if !bins.is_empty() {
            let measured = bins.iter().map(|&k| psd[k]).sum::<f64>() / bins.len() as f64;
            let model = bins
                .iter()
                .map(|&k| {
                    10f64.powf(
                        total_psd(k as f64 * bin_hz / 1000.0, &params, PsdSum::Linear).unwrap()
                            / 10.0,
                    )
                })
                .sum::<f64>()
                / bins.len() as f64;
            errors.push(10.0 * measured.log10() - 10.0 * model.log10());
        }
        lo = hi;
    }
    // The overall gain is set by the power calibration, so compare shape only.
    let offset = errors.iter().sum::<f64>() / errors.len() as f64;
    let worst = errors
        .iter()
        .map(|e| (e - offset).abs())
        .fold(0.0, f64::max);
    assert!(errors.len() > 20);
    assert!(worst < 1.5, "worst band error {worst} dB");
}

#[test]
fn generation_is_deterministic() {
    let spec = NoiseSpec::ambient(AmbientParams::default(), 5.0, 1234);
    let a = generate_colored_noise(&spec, 4097).unwrap();
    let b = generate_colored_noise(&spec, 4097).unwrap();
    assert_eq!(a, b);
    assert_ne!(
        a,
        generate_colored_noise(&spec.with_seed(1235), 4097).unwrap()
    );
}
