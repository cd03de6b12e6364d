//! Command-line front end. [`main_with_args`] returns the process exit
//! code: 0 on success, 1 on a runtime failure, 2 on a usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use aquawave::image::{load_image, save_image, Image};
use aquawave::metrics::{psnr, QualityScore};
use aquawave::noise::{generate_colored_noise, psd_curve, AmbientParams, PsdSum};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{
    resolve_seed, Method, NoiseKind, RunConfig, ScopeArg, ThresholdingArg, SEED_ENV,
};
use crate::error::{BenchError, StageExt};
use crate::report::{write_bench_reports, write_csv};
use crate::scene::bundled_scene;
use crate::trial::{jobs, run_all, run_trial, TrialJob};

#[derive(Debug, Parser)]
#[command(
    name = "aquawave",
    version,
    about = "Wavelet denoising of images under colored underwater noise"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Corrupt, denoise and measure one image.
    Run(RunArgs),
    /// Sweep bases × noise powers × trials and write report tables.
    Bench(BenchArgs),
    /// Write the ambient-noise spectrum as CSV.
    Psd(PsdArgs),
    /// Compare two images.
    Metrics(MetricsArgs),
    /// Dump a generated noise sequence as CSV.
    Noisegen(NoisegenArgs),
}

#[derive(Debug, Args)]
struct DenoiseFlags {
    /// Decomposition levels.
    #[arg(long)]
    levels: Option<usize>,
    #[arg(long, value_enum)]
    thresholding: Option<ThresholdingArg>,
    /// Threshold factor: "sweep" or a number in (0, 1].
    #[arg(long)]
    c: Option<String>,
    /// Sweep increment.
    #[arg(long)]
    step: Option<f64>,
    #[arg(long, value_enum)]
    sigma_scope: Option<ScopeArg>,
    /// AR order of the pre-whitening baseline.
    #[arg(long)]
    whiten_order: Option<usize>,
}

#[derive(Debug, Args)]
struct NoiseFlags {
    #[arg(long, value_enum)]
    noise_model: Option<NoiseKind>,
    /// Shipping activity factor, 0 to 9.
    #[arg(long)]
    shipping: Option<f64>,
    /// Wind speed in m/s.
    #[arg(long)]
    wind: Option<f64>,
    /// Sample rate in Hz.
    #[arg(long)]
    fs: Option<f64>,
    /// Power-law exponent.
    #[arg(long)]
    beta: Option<f64>,
}

#[derive(Debug, Args)]
struct CommonFlags {
    /// JSON run configuration; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Record wall time per trial in elapsed_ms (otherwise 0).
    #[arg(long)]
    record_timing: bool,
    #[command(flatten)]
    denoise: DenoiseFlags,
    #[command(flatten)]
    noise: NoiseFlags,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    image: Option<PathBuf>,
    #[arg(long)]
    basis: Option<String>,
    /// Noise power in dB (variance 10^(P/10)).
    #[arg(long, allow_hyphen_values = true)]
    noise_power: Option<f64>,
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Also write the record to trial.csv in the output directory.
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    common: CommonFlags,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Clean image; the bundled scene when omitted.
    #[arg(long)]
    image: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    bases: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    noise_powers: Option<Vec<f64>>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, value_enum, value_delimiter = ',')]
    methods: Option<Vec<Method>>,
    #[command(flatten)]
    common: CommonFlags,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PsdMode {
    Linear,
    Db,
}

#[derive(Debug, Args)]
struct PsdArgs {
    #[arg(long, default_value_t = 5.0)]
    wind: f64,
    #[arg(long, default_value_t = 5.0)]
    shipping: f64,
    #[arg(long, default_value_t = 200_000.0)]
    fs: f64,
    /// Lowest frequency in Hz.
    #[arg(long, default_value_t = 200.0)]
    flo: f64,
    /// Highest frequency in Hz.
    #[arg(long, default_value_t = 100_000.0)]
    fhi: f64,
    #[arg(long, default_value_t = 512)]
    points: usize,
    #[arg(long, value_enum, default_value_t = PsdMode::Linear)]
    mode: PsdMode,
    /// Add one column per noise source.
    #[arg(long)]
    components: bool,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MetricsArgs {
    reference: PathBuf,
    test: PathBuf,
}

#[derive(Debug, Args)]
struct NoisegenArgs {
    #[arg(long, value_enum, default_value_t = NoiseKind::Ambient)]
    model: NoiseKind,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    power: f64,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of samples.
    #[arg(long, default_value_t = 4096)]
    n: usize,
    #[arg(long, default_value_t = 5.0)]
    wind: f64,
    #[arg(long, default_value_t = 5.0)]
    shipping: f64,
    #[arg(long, default_value_t = 200_000.0)]
    fs: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Psd(a) => cmd_psd(a),
        Command::Metrics(a) => cmd_metrics(a),
        Command::Noisegen(a) => cmd_noisegen(a),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Config file (or defaults), then every flag that was given.
fn merged_config(common: CommonFlags) -> Result<RunConfig, BenchError> {
    let mut cfg = match &common.config {
        Some(path) => RunConfig::from_json_file(path)?,
        None => RunConfig::default(),
    };
    let env = std::env::var(SEED_ENV).ok();
    cfg.seed = Some(resolve_seed(common.seed, cfg.seed, env.as_deref())?);
    if let Some(dir) = common.out_dir {
        cfg.out_dir = dir;
    }
    cfg.record_timing |= common.record_timing;

    let d = common.denoise;
    let s = &mut cfg.denoise;
    if let Some(v) = d.levels {
        s.levels = v;
    }
    if let Some(v) = d.thresholding {
        s.thresholding = v;
    }
    if let Some(v) = d.c {
        s.c = v;
    }
    if let Some(v) = d.step {
        s.step = v;
    }
    if let Some(v) = d.sigma_scope {
        s.sigma_scope = v;
    }
    if let Some(v) = d.whiten_order {
        s.whiten_order = v;
    }

    let n = common.noise;
    let s = &mut cfg.noise;
    if let Some(v) = n.noise_model {
        s.model = v;
    }
    if let Some(v) = n.shipping {
        s.shipping = v;
    }
    if let Some(v) = n.wind {
        s.wind = v;
    }
    if let Some(v) = n.fs {
        s.sample_rate = v;
    }
    if let Some(v) = n.beta {
        s.beta = v;
    }
    Ok(cfg)
}

fn create_out_dir(dir: &Path) -> Result<(), BenchError> {
    std::fs::create_dir_all(dir).map_err(BenchError::io("cannot create output directory", dir))
}

fn cmd_run(args: RunArgs) -> Result<(), BenchError> {
    let mut cfg = merged_config(args.common)?;
    if let Some(image) = args.image {
        cfg.image = Some(image);
    }
    if let Some(basis) = args.basis {
        cfg.bases = vec![basis];
    }
    if let Some(p) = args.noise_power {
        cfg.noise_powers = vec![p];
    }
    if let Some(m) = args.method {
        cfg.methods = vec![m];
    }
    cfg.trials = 1;
    cfg.validate()?;
    let path = cfg
        .image
        .clone()
        .ok_or_else(|| BenchError::Usage("run requires --image".into()))?;
    let clean = load_image(&path).stage("load image")?;

    let job = TrialJob {
        method: cfg.methods[0],
        basis: cfg.bases[0].clone(),
        noise_power_db: cfg.noise_powers[0],
        seed: cfg.seed.unwrap_or_default(),
    };
    let out = run_trial(&clean, &job, &cfg)?;
    create_out_dir(&cfg.out_dir)?;
    let noisy_path = cfg.out_dir.join("noisy.pgm");
    let denoised_path = cfg.out_dir.join("denoised.pgm");
    save_image(&out.noisy, &noisy_path).stage("save image")?;
    save_image(&out.denoised, &denoised_path).stage("save image")?;
    if args.csv {
        write_csv(
            &cfg.out_dir.join("trial.csv"),
            std::slice::from_ref(&out.record),
        )?;
    }

    let r = &out.record;
    println!(
        "{:<15} {:<8} {:<5} {:>6} {:>8} {:>6} {:>10} {:>10} {:>12}",
        "method", "basis", "thr", "levels", "noise_dB", "c", "PSNR_in", "PSNR_out", "MSE_out"
    );
    println!(
        "{:<15} {:<8} {:<5} {:>6} {:>8.2} {:>6.2} {:>10.3} {:>10.3} {:>12.5}",
        r.method,
        r.basis,
        r.thresholding,
        r.levels,
        r.noise_power_db,
        r.c_used,
        r.psnr_noisy_db,
        r.psnr_denoised_db,
        r.mse_denoised
    );
    // What the 8-bit files actually deliver after clamping and rounding.
    let saved = load_image(&denoised_path).stage("load image")?;
    println!(
        "saved {}: PSNR {:.3} dB",
        denoised_path.display(),
        psnr(&clean, &saved).stage("metrics")?
    );
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), BenchError> {
    let mut cfg = merged_config(args.common)?;
    if let Some(image) = args.image {
        cfg.image = Some(image);
    }
    if let Some(v) = args.bases {
        cfg.bases = v;
    }
    if let Some(v) = args.noise_powers {
        cfg.noise_powers = v;
    }
    if let Some(v) = args.trials {
        cfg.trials = v;
    }
    if let Some(v) = args.methods {
        cfg.methods = v;
    }
    cfg.validate()?;
    let clean = load_clean(&cfg)?;

    let grid = jobs(&cfg, cfg.seed.unwrap_or_default());
    let (records, failure) = run_all(&clean, &grid, &cfg);
    create_out_dir(&cfg.out_dir)?;
    // Partial results are written even when a trial failed.
    let summary = write_bench_reports(&cfg.out_dir, &records)?;
    if let Some(e) = failure {
        eprintln!(
            "{} of {} trials completed before the failure",
            records.len(),
            grid.len()
        );
        return Err(e);
    }
    print!("{}", crate::report::summary_text(&summary));
    println!(
        "{} trials written to {}",
        records.len(),
        cfg.out_dir.display()
    );
    Ok(())
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, BenchError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(BenchError::io("cannot create", p))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_psd(args: PsdArgs) -> Result<(), BenchError> {
    if !(args.flo > 0.0 && args.flo < args.fhi) {
        return Err(BenchError::Usage(format!(
            "need 0 < --flo < --fhi (got {} and {})",
            args.flo, args.fhi
        )));
    }
    if args.fhi > args.fs / 2.0 {
        return Err(BenchError::Usage(format!(
            "--fhi {} exceeds the Nyquist frequency {}",
            args.fhi,
            args.fs / 2.0
        )));
    }
    if args.points < 2 {
        return Err(BenchError::Usage("--points must be at least 2".into()));
    }
    let params = AmbientParams::new(args.shipping, args.wind, args.fs)
        .map_err(|e| BenchError::Usage(e.to_string()))?;
    let mode = match args.mode {
        PsdMode::Linear => PsdSum::Linear,
        PsdMode::Db => PsdSum::Decibel,
    };
    let curve = psd_curve(&params, mode, args.points, args.flo, args.fhi).stage("psd")?;
    let target = args
        .out
        .as_deref()
        .map_or_else(|| PathBuf::from("stdout"), Path::to_path_buf);
    let mut out = output(args.out.as_deref())?;
    curve
        .write_csv(&mut out, args.components)
        .and_then(|_| out.flush())
        .map_err(BenchError::io("cannot write", target))
}

fn cmd_metrics(args: MetricsArgs) -> Result<(), BenchError> {
    let reference = load_image(&args.reference).stage("load reference")?;
    let test = load_image(&args.test).stage("load test image")?;
    let score = QualityScore::compare(&reference, &test).stage("metrics")?;
    println!("mse: {}", score.mse);
    println!("psnr: {}", score.psnr_db);
    if score.nmse.is_nan() {
        println!("nmse: undefined");
    } else {
        println!("nmse: {}", score.nmse);
    }
    println!("mae: {}", score.mae);
    println!("band: {}", score.band().label());
    Ok(())
}

fn cmd_noisegen(args: NoisegenArgs) -> Result<(), BenchError> {
    let env = std::env::var(SEED_ENV).ok();
    let seed = resolve_seed(args.seed, None, env.as_deref())?;
    let mut cfg = RunConfig::default();
    cfg.noise.model = args.model;
    cfg.noise.wind = args.wind;
    cfg.noise.shipping = args.shipping;
    cfg.noise.sample_rate = args.fs;
    cfg.noise.beta = args.beta;
    let spec = cfg.noise_spec(args.power, seed);
    let samples =
        generate_colored_noise(&spec, args.n).map_err(|e| BenchError::Usage(e.to_string()))?;

    let target = args
        .out
        .as_deref()
        .map_or_else(|| PathBuf::from("stdout"), Path::to_path_buf);
    let mut out = output(args.out.as_deref())?;
    let mut write = || -> io::Result<()> {
        writeln!(out, "index,value")?;
        for (i, v) in samples.iter().enumerate() {
            writeln!(out, "{i},{v}")?;
        }
        out.flush()
    };
    write().map_err(BenchError::io("cannot write", target))
}

/// Loads the image named in a run configuration, or the bundled scene.
pub fn load_clean(cfg: &RunConfig) -> Result<Image, BenchError> {
    match &cfg.image {
        Some(path) => load_image(path).stage("load image"),
        None => Ok(bundled_scene()),
    }
}
