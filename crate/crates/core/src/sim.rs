//! Seeded Monte-Carlo BLER sweeps.
//!
//! Every trial draws its message and channel realization from its own
//! ChaCha stream, keyed on `(master_seed, snr, epsilon, trial)`. The decoder
//! is deliberately not part of the key: all decoders at a point see the
//! same frames, and results do not depend on the number of worker threads.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::channel::{demodulate, detect_erasures, modulate_bpsk, transmit, ChannelParams, ReceivedFrame};
use crate::code::{LinearCode, Message};
use crate::decoders::{DecodeStatus, Decoder, DecoderParams};
use crate::error::{Error, Result};
use crate::gf2::BitVec;

pub const DEFAULT_MIN_BLOCK_ERRORS: u64 = 100;

/// Trials evaluated in parallel before the early-stop rule is checked.
const BATCH: usize = 64;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n: usize,
    pub k: usize,
    pub code_seed: u64,
    pub decoders: Vec<Decoder>,
    pub snr_db: Vec<f64>,
    pub epsilon: Vec<f64>,
    /// Maximum trials per point.
    pub trials: u64,
    pub master_seed: u64,
    pub decoder_params: DecoderParams,
    pub jammer_snr_db: f64,
    pub sigma_multiplier: f64,
    /// Stop a point once this many block errors have been seen.
    pub min_block_errors: Option<u64>,
    /// Record elapsed seconds per point; when false the column is written as zero.
    pub record_wall_time: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n: 128,
            k: 105,
            code_seed: 1,
            decoders: vec![Decoder::Grand, Decoder::GrandEdge],
            snr_db: vec![8.0, 9.0, 10.0],
            epsilon: vec![0.02],
            trials: 1000,
            master_seed: 0,
            decoder_params: DecoderParams::default(),
            jammer_snr_db: crate::channel::DEFAULT_JAMMER_SNR_DB,
            sigma_multiplier: crate::channel::DEFAULT_SIGMA_MULTIPLIER,
            min_block_errors: Some(DEFAULT_MIN_BLOCK_ERRORS),
            record_wall_time: true,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be positive".into()));
        }
        if self.decoders.is_empty() {
            return Err(Error::InvalidConfig("no decoders selected".into()));
        }
        if self.snr_db.is_empty() || self.epsilon.is_empty() {
            return Err(Error::InvalidConfig("SNR and epsilon lists must be nonempty".into()));
        }
        if self.k == 0 || self.k >= self.n {
            return Err(Error::InvalidCode { n: self.n, k: self.k });
        }
        for &eps in &self.epsilon {
            self.channel(0.0, eps).validate()?;
        }
        if self.snr_db.iter().any(|s| s.is_nan()) {
            return Err(Error::InvalidConfig("SNR is NaN".into()));
        }
        Ok(())
    }

    pub fn channel(&self, snr_db: f64, epsilon: f64) -> ChannelParams {
        ChannelParams {
            snr_db,
            epsilon,
            jammer_snr_db: self.jammer_snr_db,
            sigma_multiplier: self.sigma_multiplier,
        }
    }

    pub fn code(&self) -> Result<LinearCode> {
        LinearCode::random(self.n, self.k, self.code_seed)
    }
}

/// One row of sweep output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub decoder: String,
    pub snr_db: f64,
    pub epsilon: f64,
    pub trials: u64,
    pub block_errors: u64,
    pub bler: f64,
    /// Mean membership checks over the trials that reached the guessing stage.
    pub avg_queries: f64,
    pub avg_erasures: f64,
    pub overflow_count: u64,
    pub abandon_count: u64,
    pub rank_deficient_count: u64,
    pub wall_time: f64,
}

pub const CSV_COLUMNS: [&str; 12] = [
    "decoder",
    "snr_db",
    "epsilon",
    "trials",
    "block_errors",
    "bler",
    "avg_queries",
    "avg_erasures",
    "overflow_count",
    "abandon_count",
    "rank_deficient_count",
    "wall_time",
];

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the channel substream for one trial.
pub fn trial_seed(master_seed: u64, snr_db: f64, epsilon: f64, trial: u64) -> u64 {
    [snr_db.to_bits(), epsilon.to_bits(), trial]
        .into_iter()
        .fold(splitmix64(master_seed), |acc, x| splitmix64(acc ^ x))
}

/// Draws a uniform message and passes its codeword through the channel and
/// receiver front end.
///
/// The erasure detector is only armed when `epsilon > 0`; without a jammer
/// the receiver has nothing to flag.
pub fn simulate_frame<R: Rng + ?Sized>(
    code: &LinearCode,
    channel: &ChannelParams,
    rng: &mut R,
) -> Result<(Message, ReceivedFrame)> {
    let message = BitVec::from_bools(&(0..code.k()).map(|_| rng.random::<bool>()).collect::<Vec<_>>());
    let x = modulate_bpsk(&code.encode(&message)?);
    let y = transmit(&x, channel, rng)?;
    let sigma = channel.noise_sigma();
    let erasures = if channel.epsilon > 0.0 {
        detect_erasures(&y, sigma, channel.sigma_multiplier)?
    } else {
        Vec::new()
    };
    let (hard, llr) = demodulate(&y, sigma)?;
    Ok((
        message,
        ReceivedFrame {
            y,
            hard,
            llr,
            erasures,
            sigma,
        },
    ))
}

#[derive(Clone, Copy, Debug)]
struct TrialOutcome {
    block_error: bool,
    status: DecodeStatus,
    queries: u64,
    erasures: usize,
}

fn run_trial(
    code: &LinearCode,
    decoder: Decoder,
    params: &DecoderParams,
    channel: &ChannelParams,
    seed: u64,
) -> Result<TrialOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (message, frame) = simulate_frame(code, channel, &mut rng)?;
    let result = decoder.decode(&frame, code, params)?;
    let block_error = result.status != DecodeStatus::Success || result.message.as_ref() != Some(&message);
    Ok(TrialOutcome {
        block_error,
        status: result.status,
        queries: result.queries,
        erasures: frame.erasures.len(),
    })
}

/// Simulates one (decoder, SNR, ε) point.
pub fn run_point(
    config: &SweepConfig,
    code: &LinearCode,
    decoder: Decoder,
    snr_db: f64,
    epsilon: f64,
) -> Result<SweepRecord> {
    let started = Instant::now();
    let channel = config.channel(snr_db, epsilon);
    channel.validate()?;

    let mut trials = 0u64;
    let mut block_errors = 0u64;
    let mut guessed = 0u64;
    let mut total_queries = 0u64;
    let mut total_erasures = 0u64;
    let (mut overflow, mut abandoned, mut deficient) = (0u64, 0u64, 0u64);

    'outer: while trials < config.trials {
        let end = (trials + BATCH as u64).min(config.trials);
        let outcomes: Vec<Result<TrialOutcome>> = (trials..end)
            .into_par_iter()
            .map(|t| {
                let seed = trial_seed(config.master_seed, snr_db, epsilon, t);
                run_trial(code, decoder, &config.decoder_params, &channel, seed)
            })
            .collect();
        // Aggregate in trial order so early stopping is deterministic.
        for outcome in outcomes {
            let o = outcome?;
            trials += 1;
            total_erasures += o.erasures as u64;
            match o.status {
                DecodeStatus::ErasureOverflow => overflow += 1,
                DecodeStatus::RankDeficient => deficient += 1,
                DecodeStatus::Abandoned => abandoned += 1,
                DecodeStatus::Success => {}
            }
            if !matches!(o.status, DecodeStatus::ErasureOverflow | DecodeStatus::RankDeficient) {
                guessed += 1;
                total_queries += o.queries;
            }
            if o.block_error {
                block_errors += 1;
                if config.min_block_errors.is_some_and(|m| block_errors >= m) {
                    break 'outer;
                }
            }
        }
    }

    let ratio = |num: u64, den: u64| if den == 0 { 0.0 } else { num as f64 / den as f64 };
    Ok(SweepRecord {
        decoder: decoder.name().to_owned(),
        snr_db,
        epsilon,
        trials,
        block_errors,
        bler: ratio(block_errors, trials),
        avg_queries: ratio(total_queries, guessed),
        avg_erasures: ratio(total_erasures, trials),
        overflow_count: overflow,
        abandon_count: abandoned,
        rank_deficient_count: deficient,
        wall_time: if config.record_wall_time {
            started.elapsed().as_secs_f64()
        } else {
            0.0
        },
    })
}

/// Every decoder × SNR × ε point, decoder-major.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>> {
    run_sweep_with(config, |_| {})
}

/// [`run_sweep`] with a callback after each finished point.
pub fn run_sweep_with(config: &SweepConfig, mut on_record: impl FnMut(&SweepRecord)) -> Result<Vec<SweepRecord>> {
    config.validate()?;
    let code = config.code()?;
    let mut records = Vec::new();
    for &decoder in &config.decoders {
        for &snr in &config.snr_db {
            for &eps in &config.epsilon {
                let record = run_point(config, &code, decoder, snr, eps)?;
                on_record(&record);
                records.push(record);
            }
        }
    }
    Ok(records)
}

/// Writes the records as CSV, preceded by a `#` comment line carrying the
/// code parameters and master seed.
pub fn write_csv<W: Write>(config: &SweepConfig, records: &[SweepRecord], mut out: W) -> Result<()> {
    writeln!(
        out,
        "# n={} k={} code_seed={} seed={}",
        config.n, config.k, config.code_seed, config.master_seed
    )?;
    let mut writer = csv::Writer::from_writer(out);
    if records.is_empty() {
        writer.write_record(CSV_COLUMNS)?;
    }
    for r in records {
        writer.serialize(r)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_csv_file(config: &SweepConfig, records: &[SweepRecord], path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_csv(config, records, std::io::BufWriter::new(file))
}

/// Writes one whitespace-separated `snr_db value` series per (decoder, ε)
/// curve into `dir`, for BLER and for average queries.
pub fn write_series(records: &[SweepRecord], dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut keys: Vec<(String, u64)> = Vec::new();
    for r in records {
        let key = (r.decoder.clone(), r.epsilon.to_bits());
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    let mut written = Vec::new();
    for (decoder, eps_bits) in keys {
        let eps = f64::from_bits(eps_bits);
        let curve: Vec<&SweepRecord> = records
            .iter()
            .filter(|r| r.decoder == decoder && r.epsilon.to_bits() == eps_bits)
            .collect();
        for (suffix, value) in [
            ("bler", (|r: &SweepRecord| r.bler) as fn(&SweepRecord) -> f64),
            ("queries", |r: &SweepRecord| r.avg_queries),
        ] {
            let path = dir.join(format!("{decoder}_eps{eps}_{suffix}.dat"));
            let mut f = std::io::BufWriter::new(std::fs::File::create(&path)?);
            writeln!(f, "# snr_db {suffix}")?;
            for r in &curve {
                writeln!(f, "{} {}", r.snr_db, value(r))?;
            }
            f.flush()?;
            written.push(path);
        }
    }
    Ok(written)
}

/// Parses `a,b,c` or an inclusive range `start:step:stop`.
pub fn parse_value_list(text: &str) -> Result<Vec<f64>> {
    let bad = || Error::InvalidConfig(format!("cannot parse value list `{text}`"));
    let text = text.trim();
    if text.contains(':') {
        let parts: Vec<f64> = text
            .split(':')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let [start, step, stop] = parts[..] else {
            return Err(bad());
        };
        if !(step > 0.0) || stop < start {
            return Err(bad());
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        // Round away float drift from repeated steps.
        Ok((0..count)
            .map(|i| ((start + i as f64 * step) * 1e9).round() / 1e9)
            .collect())
    } else {
        text.split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
            .collect()
    }
}
