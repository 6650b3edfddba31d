//! Fixtures shared by the decoder benchmarks.

use grand_edge::channel::ChannelParams;
use grand_edge::sim::{simulate_frame, trial_seed};
use grand_edge::{LinearCode, ReceivedFrame};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Frames for the (128,105) code used throughout the benchmarks.
pub fn frames(code: &LinearCode, snr_db: f64, epsilon: f64, count: u64) -> Vec<ReceivedFrame> {
    let channel = ChannelParams::new(snr_db, epsilon);
    (0..count)
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(42, snr_db, epsilon, t));
            simulate_frame(code, &channel, &mut rng).expect("valid channel").1
        })
        .collect()
}

pub fn code() -> LinearCode {
    LinearCode::random(128, 105, 1).expect("valid dimensions")
}
