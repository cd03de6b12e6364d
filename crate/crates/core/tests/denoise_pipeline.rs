use aquawave::denoise::{
    apply_threshold, compute_thresholds, denoise_baseline_global, denoise_image, estimate_sigma,
    fit_ar, hard_threshold, soft_threshold, universal_factor, whiten, CMode, DenoiseConfig,
    SigmaScope, Thresholding,
};
use aquawave::image::Image;
use aquawave::metrics::psnr;
use aquawave::noise::spectrum::autocorrelation_coefficients;
use aquawave::noise::{corrupt_image, generate_colored_noise, AmbientParams, NoiseSpec};
use aquawave::wavelet::{dwt2d, get_filter_bank, Orientation, WaveletPyramid, SUPPORTED_BASES};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

fn scene(n: usize) -> Image {
    let s = n as f64;
    Image::from_fn(n, n, |x, y| {
        let (x, y) = (x as f64, y as f64);
        let disk = (x - 0.4 * s).hypot(y - 0.55 * s) < 0.25 * s;
        let bar = (0.7 * s..0.85 * s).contains(&x) && y > 0.2 * s;
        60.0 + 50.0 * (y / s) + if disk { 100.0 } else { 0.0 } + if bar { -40.0 } else { 0.0 }
    })
    .unwrap()
}

fn noise_image(spec: &NoiseSpec, n: usize) -> Image {
    Image::new(n, n, generate_colored_noise(spec, n * n).unwrap()).unwrap()
}

fn pooled_level_sigmas(pyr: &WaveletPyramid) -> Vec<f64> {
    let thr = compute_thresholds(pyr, 1.0, SigmaScope::PerLevelPooled).unwrap();
    (1..=pyr.levels())
        .map(|l| thr.get(l, Orientation::HH).unwrap().sigma)
        .collect()
}

#[test]
fn mad_recovers_white_sigma() {
    let bank = get_filter_bank("db5").unwrap();
    let mut total = 0.0;
    for seed in 0..50 {
        let img = noise_image(&NoiseSpec::white(20.0, seed), 256);
        let pyr = dwt2d(&img, &bank, 1).unwrap();
        total += estimate_sigma(pyr.detail(1, Orientation::HH)).unwrap();
    }
    let mean = total / 50.0;
    assert!((9.5..=10.5).contains(&mean), "mean sigma {mean}");
}

#[test]
fn sweep_agrees_with_brute_force() {
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    for _ in 0..10 {
        let basis = SUPPORTED_BASES[rng.random_range(0..SUPPORTED_BASES.len())];
        let levels = rng.random_range(1..=4);
        let power = rng.random_range(0.0..15.0);
        let mode = if rng.random_bool(0.5) {
            Thresholding::Soft
        } else {
            Thresholding::Hard
        };
        let clean = scene(64);
        let spec = if rng.random_bool(0.5) {
            NoiseSpec::white(power, rng.random())
        } else {
            NoiseSpec::ambient(AmbientParams::default(), power, rng.random())
        };
        let (noisy, _) = corrupt_image(&clean, &spec).unwrap();
        let cfg = DenoiseConfig::new(basis)
            .with_levels(levels)
            .with_thresholding(mode);

        let (_, report) = denoise_image(&noisy, &cfg, Some(&clean)).unwrap();

        let mut best = (f64::NEG_INFINITY, 0.0);
        for i in 1..=10 {
            let c = i as f64 / 10.0;
            let fixed = cfg.clone().with_c(CMode::Fixed(c));
            let (out, _) = denoise_image(&noisy, &fixed, None).unwrap();
            let score = psnr(&clean, &out).unwrap();
            if score > best.0 + 1e-9 {
                best = (score, c);
            }
        }
        assert!(
            (report.c - best.1).abs() < 1e-9,
            "{basis} L{levels}: sweep {} vs brute force {}",
            report.c,
            best.1
        );
    }
}

#[test]
fn stored_lambdas_follow_the_formula() {
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for _ in 0..20 {
        let side = 1 << rng.random_range(4..=7);
        let c = rng.random_range(0.01..=1.0);
        let scope = if rng.random_bool(0.5) {
            SigmaScope::PerSubband
        } else {
            SigmaScope::PerLevelPooled
        };
        let img = Image::from_fn(side, side, |_, _| rng.random_range(-50.0..50.0)).unwrap();
        let pyr = dwt2d(&img, &get_filter_bank("sym5").unwrap(), 3).unwrap();
        let thr = compute_thresholds(&pyr, c, scope).unwrap();
        let factor = (2.0 * ((side * side) as f64).ln()).sqrt();
        assert_eq!(thr.entries.len(), 9);
        for e in &thr.entries {
            let want = c * e.sigma * factor;
            assert!((e.lambda - want).abs() <= 1e-12 * want, "{e:?}");
        }
        assert_eq!(universal_factor(side * side), factor);
    }
}

proptest! {
    #[test]
    fn soft_contracts_and_keeps_sign(x in -1e3f64..1e3, lambda in 0.0f64..100.0) {
        let y = soft_threshold(x, lambda);
        prop_assert_eq!(y.abs(), (x.abs() - lambda).max(0.0));
        prop_assert!(y == 0.0 || y.signum() == x.signum());
    }

    #[test]
    fn hard_is_idempotent(seed in any::<u64>(), c in 0.05f64..=1.0) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let img = Image::from_fn(32, 32, |_, _| rng.random_range(0.0..255.0)).unwrap();
        let pyr = dwt2d(&img, &get_filter_bank("db3").unwrap(), 2).unwrap();
        let thr = compute_thresholds(&pyr, c, SigmaScope::PerSubband).unwrap();
        let once = apply_threshold(&pyr, &thr, Thresholding::Hard).unwrap();
        let twice = apply_threshold(&once, &thr, Thresholding::Hard).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn raising_lambda_never_adds_survivors(seed in any::<u64>(), c1 in 0.05f64..=1.0, c2 in 0.05f64..=1.0) {
        let (lo, hi) = if c1 <= c2 { (c1, c2) } else { (c2, c1) };
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let img = Image::from_fn(32, 32, |_, _| rng.random_range(0.0..255.0)).unwrap();
        let pyr = dwt2d(&img, &get_filter_bank("bior2.2").unwrap(), 2).unwrap();
        let base = compute_thresholds(&pyr, 1.0, SigmaScope::PerSubband).unwrap();
        for mode in [Thresholding::Soft, Thresholding::Hard] {
            let a = apply_threshold(&pyr, &base.with_c(lo), mode).unwrap();
            let b = apply_threshold(&pyr, &base.with_c(hi), mode).unwrap();
            for level in 1..=2 {
                for o in Orientation::ALL {
                    let count = |p: &WaveletPyramid| p.detail(level, o).samples().iter().filter(|v| **v != 0.0).count();
                    prop_assert!(count(&b) <= count(&a));
                }
            }
        }
    }
}

#[test]
fn shrinkage_grid() {
    for lambda in [0.0, 1.0, 2.5] {
        for i in -1000..=1000 {
            let x = i as f64 * 0.01;
            let s = soft_threshold(x, lambda);
            let h = hard_threshold(x, lambda);
            if x.abs() > lambda {
                assert_eq!(h, x);
                assert_eq!(s, x.signum() * (x.abs() - lambda));
            } else {
                assert_eq!((s, h), (0.0, 0.0));
            }
        }
    }
}

#[test]
fn white_noise_is_flat_across_levels() {
    let bank = get_filter_bank("sym4").unwrap();
    let img = noise_image(&NoiseSpec::white(10.0, 3), 256);
    let sigmas = pooled_level_sigmas(&dwt2d(&img, &bank, 4).unwrap());
    let global = sigmas[0];
    for (l, s) in sigmas.iter().enumerate() {
        assert!(
            (s / global - 1.0).abs() < 0.15,
            "level {}: {s} vs {global}",
            l + 1
        );
    }
}

#[test]
fn ambient_noise_is_not_flat_across_levels() {
    let bank = get_filter_bank("sym4").unwrap();
    let img = noise_image(&NoiseSpec::ambient(AmbientParams::default(), 10.0, 3), 256);
    let sigmas = pooled_level_sigmas(&dwt2d(&img, &bank, 4).unwrap());
    assert!((sigmas[3] / sigmas[0] - 1.0).abs() > 0.25, "{sigmas:?}");
}

#[test]
fn flat_image_gives_identical_methods() {
    // Haar details of a constant are exactly zero, not rounding residue.
    let img = Image::filled(64, 64, 77.0).unwrap();
    let cfg = DenoiseConfig::new("haar")
        .with_levels(3)
        .with_c(CMode::Fixed(0.5));
    let (a, _) = denoise_image(&img, &cfg, None).unwrap();
    let (b, _) = denoise_baseline_global(&img, &cfg, None).unwrap();
    assert_eq!(a, b);
}

#[test]
fn ar_fit_on_white_noise_is_trivial() {
    let x = generate_colored_noise(&NoiseSpec::white(0.0, 11), 1_000_000).unwrap();
    let model = fit_ar(&x, 10).unwrap();
    assert_eq!(model.coefficients[0], 1.0);
    assert!(
        model.coefficients[1..].iter().all(|a| a.abs() < 0.05),
        "{:?}",
        model.coefficients
    );
}

#[test]
fn whitening_decorrelates_ambient_noise() {
    let spec = NoiseSpec::ambient(AmbientParams::default(), 10.0, 17);
    let x = generate_colored_noise(&spec, 65536).unwrap();
    assert!(autocorrelation_coefficients(&x, 1)[1] > 0.1);
    let model = fit_ar(&x, 10).unwrap();
    let e = whiten(&x, &model);
    let r1 = autocorrelation_coefficients(&e, 1)[1];
    assert!(r1.abs() < 0.05, "whitened lag-1 {r1}");
}

#[test]
fn ar1_coefficient_is_recovered() {
    let mut rng = ChaCha20Rng::seed_from_u64(9);
    let mut prev = 0.0;
    let x: Vec<f64> = (0..200_000)
        .map(|_| {
            let e: f64 = StandardNormal.sample(&mut rng);
            prev = 0.9 * prev + e;
            prev
        })
        .collect();
    let model = fit_ar(&x, 10).unwrap();
    assert!(
        (model.coefficients[1] + 0.9).abs() < 0.02,
        "{:?}",
        model.coefficients
    );
}

#[test]
fn pipeline_is_deterministic() {
    let clean = scene(128);
    let spec = NoiseSpec::ambient(AmbientParams::default(), 10.0, 8);
    let (noisy, _) = corrupt_image(&clean, &spec).unwrap();
    let cfg = DenoiseConfig::new("sym4");
    let (a, ra) = denoise_image(&noisy, &cfg, Some(&clean)).unwrap();
    let (b, rb) =
        denoise_image(&corrupt_image(&clean, &spec).unwrap().0, &cfg, Some(&clean)).unwrap();
    assert_eq!(a, b);
    assert_eq!(ra, rb);
}
