use crate::channel::ReceivedFrame;
use crate::code::LinearCode;
use crate::error::{check_len, Result};
use crate::gf2::{xor_words, BitMatrix, BitVec};
use crate::patterns::{binomial, HardSchedule, PatternStream};

use super::DecodeResult;

pub const DEFAULT_OSD_ORDER: usize = 2;

/// Number of re-encodings performed by order-`order` OSD on a dimension-`k` code.
pub fn osd_candidate_count(k: usize, order: usize) -> u64 {
    (0..=order.min(k)).map(|w| binomial(k as u64, w as u64)).sum()
}

/// Ordered statistics decoding.
///
/// Positions are sorted by `|llr|` descending and the generator is
/// row-reduced onto the first `k` independent ones (the most reliable
/// basis). Hard decisions on the basis are re-encoded together with every
/// flip of weight at most `order`; the candidate with the largest
/// correlation `Σ y[i]·(1 - 2c[i])` wins.
pub fn osd_decode(frame: &ReceivedFrame, code: &LinearCode, order: usize) -> Result<DecodeResult> {
    let n = code.n();
    let k = code.k();
    check_len("osd_decode", n, frame.hard.len())?;
    check_len("osd_decode", n, frame.llr.len())?;
    check_len("osd_decode", n, frame.y.len())?;

    let mut by_reliability: Vec<usize> = (0..n).collect();
    by_reliability.sort_by(|&a, &b| frame.llr[b].abs().total_cmp(&frame.llr[a].abs()));

    let (g, basis) = systematic_on(code.generator(), &by_reliability);
    debug_assert_eq!(basis.len(), k);

    let rows: Vec<BitVec> = (0..k).map(|r| g.row(r)).collect();
    let mut base = vec![0u64; rows[0].words().len()];
    for (r, &pos) in basis.iter().enumerate() {
        if frame.hard.get(pos) {
            xor_words(&mut base, rows[r].words());
        }
    }

    // Maximizing the correlation is minimizing Σ_{c_i = 1} y_i.
    let cost = |words: &[u64]| -> f64 {
        let mut acc = 0.0;
        for (wi, &w) in words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                acc += frame.y[wi * 64 + w.trailing_zeros() as usize];
                w &= w - 1;
            }
        }
        acc
    };

    let mut best = base.clone();
    let mut best_cost = f64::INFINITY;
    let mut queries = 0u64;
    let mut candidate = base.clone();
    let mut patterns = HardSchedule::new(k, order).patterns();
    while let Some(flips) = patterns.advance() {
        queries += 1;
        candidate.copy_from_slice(&base);
        for &f in flips {
            xor_words(&mut candidate, rows[f].words());
        }
        let c = cost(&candidate);
        if c < best_cost {
            best_cost = c;
            best.copy_from_slice(&candidate);
        }
    }

    Ok(DecodeResult::success(code, BitVec::from_words(n, best), queries))
}

/// Row-reduces `g` so that it is the identity on the first linearly
/// independent columns met in `order`. Returns the reduced matrix and those
/// basis positions, one per row.
fn systematic_on(g: &BitMatrix, order: &[usize]) -> (BitMatrix, Vec<usize>) {
    let mut g = g.clone();
    let rows = g.rows();
    let mut basis = Vec::with_capacity(rows);
    for &col in order {
        let pivot = basis.len();
        if pivot == rows {
            break;
        }
        // Dependent columns have no one below the current pivot row.
        let Some(found) = (pivot..rows).find(|&r| g.get(r, col)) else {
            continue;
        };
        g.swap_rows(found, pivot);
        for r in 0..rows {
            if r != pivot && g.get(r, col) {
                g.add_row(pivot, r);
            }
        }
        basis.push(col);
    }
    (g, basis)
}
