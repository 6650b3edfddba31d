//! BPSK over AWGN with a Bernoulli-gated Gaussian jammer, plus the receiver
//! front end: erasure flagging and demodulation.
//!
//! SNR convention: `snr_db = 10·log10(Es/σ²)` with unit symbol energy, so the
//! channel noise variance is `σ² = 10^(-snr_db/10)`. The jammer uses the same
//! convention with `jammer_snr_db`.

use rand::Rng;
use rand_distr::{Bernoulli, Distribution, Normal};

use crate::error::{Error, Result};
use crate::gf2::BitVec;

pub const DEFAULT_JAMMER_SNR_DB: f64 = -100.0;
pub const DEFAULT_SIGMA_MULTIPLIER: f64 = 3.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelParams {
    pub snr_db: f64,
    /// Per-bit jamming probability.
    pub epsilon: f64,
    pub jammer_snr_db: f64,
    /// Erasure threshold, in channel-noise standard deviations.
    pub sigma_multiplier: f64,
}

impl ChannelParams {
    pub fn new(snr_db: f64, epsilon: f64) -> Self {
        Self {
            snr_db,
            epsilon,
            jammer_snr_db: DEFAULT_JAMMER_SNR_DB,
            sigma_multiplier: DEFAULT_SIGMA_MULTIPLIER,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.epsilon) {
            return Err(Error::InvalidChannel(format!(
                "epsilon {} outside [0, 1]",
                self.epsilon
            )));
        }
        if !(self.sigma_multiplier > 0.0) {
            return Err(Error::InvalidChannel(format!(
                "sigma multiplier {} must be positive",
                self.sigma_multiplier
            )));
        }
        if self.snr_db.is_nan() || self.jammer_snr_db.is_nan() {
            return Err(Error::InvalidChannel("SNR is NaN".into()));
        }
        Ok(())
    }

    pub fn noise_variance(&self) -> f64 {
        db_to_variance(self.snr_db)
    }

    pub fn noise_sigma(&self) -> f64 {
        self.noise_variance().sqrt()
    }

    pub fn jammer_variance(&self) -> f64 {
        db_to_variance(self.jammer_snr_db)
    }
}

fn db_to_variance(snr_db: f64) -> f64 {
    10f64.powf(-snr_db / 10.0)
}

/// Demodulated channel output for one block.
#[derive(Clone, Debug)]
pub struct ReceivedFrame {
    pub y: Vec<f64>,
    pub hard: BitVec,
    /// Positive values favour bit 0.
    pub llr: Vec<f64>,
    /// Erased positions, strictly increasing.
    pub erasures: Vec<usize>,
    pub sigma: f64,
}

impl ReceivedFrame {
    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    /// Runs the receiver front end on raw samples.
    pub fn from_samples(y: Vec<f64>, sigma: f64, erasures: Vec<usize>) -> Result<Self> {
        let (hard, llr) = demodulate(&y, sigma)?;
        Ok(Self {
            y,
            hard,
            llr,
            erasures,
            sigma,
        })
    }

    /// Same frame with the erasure set replaced.
    pub fn with_erasures(mut self, erasures: Vec<usize>) -> Self {
        self.erasures = erasures;
        self
    }
}

/// Bit 0 → +1, bit 1 → −1.
pub fn modulate_bpsk(codeword: &BitVec) -> Vec<f64> {
    codeword.iter().map(|b| if b { -1.0 } else { 1.0 }).collect()
}

/// Adds channel noise to every sample and, independently per sample with
/// probability `epsilon`, a jammer sample.
pub fn transmit<R: Rng + ?Sized>(x: &[f64], params: &ChannelParams, rng: &mut R) -> Result<Vec<f64>> {
    params.validate()?;
    let noise = normal(params.noise_sigma())?;
    let jam = normal(params.jammer_variance().sqrt())?;
    let gate = Bernoulli::new(params.epsilon).map_err(|e| Error::InvalidChannel(e.to_string()))?;
    Ok(x.iter()
        .map(|&s| {
            let mut y = s + noise.sample(rng);
            if gate.sample(rng) {
                y += jam.sample(rng);
            }
            y
        })
        .collect())
}

fn normal(sigma: f64) -> Result<Normal<f64>> {
    Normal::new(0.0, sigma).map_err(|e| Error::InvalidChannel(format!("noise std {sigma}: {e}")))
}

/// Flags samples farther than `multiplier·sigma` from both constellation
/// points. A distance of exactly `multiplier·sigma` is not flagged.
pub fn detect_erasures(y: &[f64], sigma: f64, multiplier: f64) -> Result<Vec<usize>> {
    if !(sigma > 0.0) {
        return Err(Error::InvalidChannel(format!("sigma {sigma} must be positive")));
    }
    let threshold = multiplier * sigma;
    Ok(y.iter()
        .enumerate()
        .filter(|(_, &v)| (v - 1.0).abs().min((v + 1.0).abs()) > threshold)
        .map(|(i, _)| i)
        .collect())
}

/// Hard decisions (`y < 0` ⇒ 1) and LLRs `2y/σ²`.
pub fn demodulate(y: &[f64], sigma: f64) -> Result<(BitVec, Vec<f64>)> {
    if !(sigma > 0.0) {
        return Err(Error::InvalidChannel(format!("sigma {sigma} must be positive")));
    }
    let scale = 2.0 / (sigma * sigma);
    let hard = BitVec::from_bools(&y.iter().map(|&v| v < 0.0).collect::<Vec<_>>());
    let llr = y.iter().map(|&v| scale * v).collect();
    Ok((hard, llr))
}
