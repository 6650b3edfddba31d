use crate::channel::ReceivedFrame;
use crate::code::{Codeword, LinearCode};
use crate::error::{check_len, Error, Result};
use crate::gf2::{xor_words, BitVec};

/// Largest dimension accepted by the exhaustive search.
pub const ML_MAX_K: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MlMetric {
    /// Distance to the hard decisions.
    Hamming,
    /// Squared distance between `y` and the BPSK image of the codeword.
    Euclidean,
}

/// Exhaustive maximum-likelihood decoding over all `2^k` codewords. Ties go
/// to the lexicographically smallest codeword.
pub fn ml_decode(frame: &ReceivedFrame, code: &LinearCode, metric: MlMetric) -> Result<Codeword> {
    let (n, k) = (code.n(), code.k());
    if k > ML_MAX_K {
        return Err(Error::MlTooLarge { k, limit: ML_MAX_K });
    }
    check_len("ml_decode", n, frame.hard.len())?;
    check_len("ml_decode", n, frame.y.len())?;

    let rows: Vec<BitVec> = (0..k).map(|r| code.generator().row(r)).collect();
    let score = |c: &BitVec| -> f64 {
        match metric {
            MlMetric::Hamming => c.hamming_distance(&frame.hard) as f64,
            MlMetric::Euclidean => c
                .iter()
                .zip(&frame.y)
                .map(|(b, y)| {
                    let x = if b { -1.0 } else { 1.0 };
                    (y - x) * (y - x)
                })
                .sum(),
        }
    };

    // Gray-code walk: consecutive messages differ in one bit.
    let mut current = BitVec::zeros(n);
    let mut best = current.clone();
    let mut best_score = score(&current);
    for i in 1u64..1 << k {
        let bit = i.trailing_zeros() as usize;
        let mut words = current.words().to_vec();
        xor_words(&mut words, rows[bit].words());
        current = BitVec::from_words(n, words);
        let s = score(&current);
        if s < best_score || (s == best_score && current < best) {
            best_score = s;
            best = current.clone();
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::modulate_bpsk;

    #[test]
    fn noiseless_frame_is_its_own_ml_decision() {
        let code = LinearCode::random(16, 10, 2).unwrap();
        let c = code.encode(&BitVec::from_u8s(&[1, 0, 1, 1, 0, 0, 1, 0, 1, 1])).unwrap();
        let frame = ReceivedFrame::from_samples(modulate_bpsk(&c), 0.5, vec![]).unwrap();
        assert_eq!(ml_decode(&frame, &code, MlMetric::Hamming).unwrap(), c);
        assert_eq!(ml_decode(&frame, &code, MlMetric::Euclidean).unwrap(), c);
    }

    #[test]
    fn refuses_large_dimension() {
        let code = LinearCode::random(32, 21, 2).unwrap();
        let frame = ReceivedFrame::from_samples(vec![1.0; 32], 0.5, vec![]).unwrap();
        assert!(matches!(
            ml_decode(&frame, &code, MlMetric::Hamming),
            Err(Error::MlTooLarge { .. })
        ));
    }

    #[test]
    fn hamming_ties_break_to_smallest_word() {
        // Repetition-like code {000..., 111...} at even length: the all-halves word ties.
        let code = LinearCode::random(4, 1, 0).unwrap();
        let ones = code.generator().row(0);
        let mut r = BitVec::zeros(4);
        for i in ones.ones().take(ones.count_ones() / 2) {
            r.set(i, true);
        }
        let frame = ReceivedFrame::from_samples(modulate_bpsk(&r), 1.0, vec![]).unwrap();
        let got = ml_decode(&frame, &code, MlMetric::Hamming).unwrap();
        if ones.count_ones().is_multiple_of(2) {
            assert!(got.is_zero());
        }
    }
}
