use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Parser;
use grand_edge::sim::{parse_value_list, run_sweep_with, write_csv, write_series};
use grand_edge::{Decoder, DecoderParams, SweepConfig};

/// Monte-Carlo BLER sweeps for GRAND-family decoders over a jammed BPSK channel.
///
/// SNR is Es/σ² in dB with unit-energy symbols, i.e. the noise variance is
/// 10^(-snr/10). Value lists take either `a,b,c` or an inclusive range
/// `start:step:stop`.
#[derive(Parser, Debug)]
#[command(name = "grand-edge", version)]
struct Args {
    /// Code length.
    #[arg(long, default_value_t = 128)]
    n: usize,

    /// Code dimension.
    #[arg(long, default_value_t = 105)]
    k: usize,

    /// Seed of the random linear code.
    #[arg(long, default_value_t = 1)]
    code_seed: u64,

    /// Master seed for messages and channel realizations.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Comma-separated decoders: grand, orbgrand, grand-edge, orbgrand-edge, osd.
    #[arg(long, value_delimiter = ',', default_value = "grand,grand-edge")]
    decoders: Vec<Decoder>,

    /// SNR points in dB (Es/σ²).
    #[arg(long, default_value = "8,9,10", allow_hyphen_values = true)]
    snr: String,

    /// Per-bit jamming probabilities.
    #[arg(long, default_value = "0.02")]
    epsilon: String,

    /// Maximum trials per point.
    #[arg(long, default_value_t = 1000)]
    trials: u64,

    /// Stop a point after this many block errors; 0 disables early stopping.
    #[arg(long, default_value_t = 100)]
    min_block_errors: u64,

    /// Hamming-weight abandonment threshold for GRAND and GRAND-EDGE.
    #[arg(long, default_value_t = 3)]
    max_weight: usize,

    /// Logistic-weight abandonment threshold for ORBGRAND and ORBGRAND-EDGE.
    #[arg(long, default_value_t = 104)]
    lw_max: usize,

    /// Flip order for OSD.
    #[arg(long, default_value_t = 2)]
    osd_order: usize,

    /// Jammer SNR in dB; the jammer variance is 10^(-jammer_snr/10).
    #[arg(long, default_value_t = -100.0, allow_hyphen_values = true)]
    jammer_snr: f64,

    /// Erasure threshold as a multiple of the noise standard deviation.
    #[arg(long, default_value_t = 3.0)]
    sigma_mult: f64,

    /// CSV output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Also write two-column `snr value` series per curve into this directory.
    #[arg(long)]
    series_dir: Option<PathBuf>,

    /// Write zero in the wall_time column so reruns produce identical files.
    #[arg(long)]
    no_wall_time: bool,

    /// Suppress per-point progress on stderr.
    #[arg(long, short)]
    quiet: bool,
}

impl Args {
    fn config(&self) -> Result<SweepConfig> {
        Ok(SweepConfig {
            n: self.n,
            k: self.k,
            code_seed: self.code_seed,
            decoders: self.decoders.clone(),
            snr_db: parse_value_list(&self.snr).context("--snr")?,
            epsilon: parse_value_list(&self.epsilon).context("--epsilon")?,
            trials: self.trials,
            master_seed: self.seed,
            decoder_params: DecoderParams {
                max_weight: self.max_weight,
                lw_max: self.lw_max,
                osd_order: self.osd_order,
            },
            jammer_snr_db: self.jammer_snr,
            sigma_multiplier: self.sigma_mult,
            min_block_errors: (self.min_block_errors > 0).then_some(self.min_block_errors),
            record_wall_time: !self.no_wall_time,
        })
    }
}

fn main() -> Result<()> {
    let args = Args::parse();
    let config = args.config()?;
    config.validate()?;

    let quiet = args.quiet;
    let records = run_sweep_with(&config, |r| {
        if !quiet {
            eprintln!(
                "{:>14} snr={:<6} eps={:<6} trials={:<7} bler={:.3e} queries={:.1}",
                r.decoder, r.snr_db, r.epsilon, r.trials, r.bler, r.avg_queries
            );
        }
    })?;

    match &args.out {
        Some(path) => {
            let file = std::fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            write_csv(&config, &records, std::io::BufWriter::new(file))?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_csv(&config, &records, &mut lock)?;
            lock.flush()?;
        }
    }
    if let Some(dir) = &args.series_dir {
        write_series(&records, dir).with_context(|| format!("cannot write series to {}", dir.display()))?;
    }
    Ok(())
}
