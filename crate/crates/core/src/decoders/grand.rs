use crate::channel::ReceivedFrame;
use crate::code::LinearCode;
use crate::error::{check_len, Error, Result};
use crate::gf2::{words_for, BitVec, PackedColumns};
use crate::patterns::{HardSchedule, OrbSchedule, PatternStream};

use super::edge::{edge_init, EdgeContext};
use super::{DecodeResult, DecodeStatus};

struct Hit {
    flips: Vec<usize>,
    syndrome: Vec<u64>,
}

/// Walks `stream`, testing `base ⊕ Σ columns[flips]` against `mask` until
/// the masked syndrome vanishes.
///
/// Partial syndromes are kept per prefix depth, so consecutive patterns
/// sharing a prefix only pay for the differing tail. The stream order and
/// the query count are unaffected.
fn guess<S: PatternStream>(mut stream: S, columns: &PackedColumns, base: &[u64], mask: &[u64]) -> (Option<Hit>, u64) {
    let w = columns.stride();
    debug_assert_eq!(base.len(), w);
    let mut stack = base.to_vec();
    let mut prev: Vec<usize> = Vec::new();
    let mut queries = 0u64;

    while let Some(flips) = stream.advance() {
        queries += 1;
        let depth = flips.len();
        let common = prev.iter().zip(flips).take_while(|(a, b)| a == b).count();
        if stack.len() < (depth + 1) * w {
            stack.resize((depth + 1) * w, 0);
        }
        for d in common..depth {
            let (lo, hi) = stack.split_at_mut((d + 1) * w);
            let col = columns.column(flips[d]);
            for ((dst, src), c) in hi[..w].iter_mut().zip(&lo[d * w..]).zip(col) {
                *dst = src ^ c;
            }
        }
        let syndrome = &stack[depth * w..(depth + 1) * w];
        if syndrome.iter().zip(mask).all(|(s, m)| s & m == 0) {
            return (
                Some(Hit {
                    flips: flips.to_vec(),
                    syndrome: syndrome.to_vec(),
                }),
                queries,
            );
        }
        prev.clear();
        prev.extend_from_slice(flips);
    }
    (None, queries)
}

fn full_mask(height: usize) -> Vec<u64> {
    let mut mask = vec![u64::MAX; words_for(height)];
    if !height.is_multiple_of(64) {
        if let Some(last) = mask.last_mut() {
            *last = (1u64 << (height % 64)) - 1;
        }
    }
    mask
}

fn apply_flips(word: &BitVec, flips: &[usize]) -> BitVec {
    let mut out = word.clone();
    for &f in flips {
        out.flip(f);
    }
    out
}

fn plain<S: PatternStream>(hard: &BitVec, code: &LinearCode, stream: S) -> DecodeResult {
    let columns = code.check_columns();
    let base = columns.syndrome(hard);
    match guess(stream, columns, base.words(), &full_mask(code.redundancy())) {
        (Some(hit), queries) => DecodeResult::success(code, apply_flips(hard, &hit.flips), queries),
        (None, queries) => DecodeResult::failure(DecodeStatus::Abandoned, queries),
    }
}

/// Hard-decision GRAND: flips in nondecreasing Hamming weight up to `max_weight`.
pub fn grand_decode(hard: &BitVec, code: &LinearCode, max_weight: usize) -> Result<DecodeResult> {
    check_len("grand_decode", code.n(), hard.len())?;
    Ok(plain(hard, code, HardSchedule::new(code.n(), max_weight).patterns()))
}

/// ORBGRAND over all `n` positions, ranked by `|llr|`. Erasure flags are ignored.
pub fn orbgrand_decode(frame: &ReceivedFrame, code: &LinearCode, lw_max: usize) -> Result<DecodeResult> {
    check_len("orbgrand_decode", code.n(), frame.hard.len())?;
    check_len("orbgrand_decode", code.n(), frame.llr.len())?;
    let schedule = OrbSchedule::from_reliabilities(&frame.llr, lw_max);
    Ok(plain(&frame.hard, code, schedule.patterns()))
}

fn edge_context(frame: &ReceivedFrame, code: &LinearCode) -> Result<std::result::Result<EdgeContext, DecodeResult>> {
    match edge_init(&frame.hard, code.parity_check(), &frame.erasures) {
        Ok(ctx) => Ok(Ok(ctx)),
        Err(Error::ErasureOverflow { .. }) => Ok(Err(DecodeResult::failure(DecodeStatus::ErasureOverflow, 0))),
        Err(Error::RankDeficient { .. }) => Ok(Err(DecodeResult::failure(DecodeStatus::RankDeficient, 0))),
        Err(e) => Err(e),
    }
}

fn with_edge<S: PatternStream>(ctx: &EdgeContext, code: &LinearCode, stream: S) -> DecodeResult {
    let columns = ctx.reduced_columns();
    let base = columns.syndrome(&ctx.r_c);
    match guess(stream, columns, base.words(), ctx.consistency_mask()) {
        (Some(hit), queries) => {
            let r_c = apply_flips(&ctx.r_c, &hit.flips);
            let s_star = BitVec::from_words(ctx.redundancy(), hit.syndrome);
            DecodeResult::success(code, ctx.reassemble(&r_c, &s_star), queries)
        }
        (None, queries) => DecodeResult::failure(DecodeStatus::Abandoned, queries),
    }
}

/// GRAND with erasure recovery: guesses only over non-erased positions and
/// fills erased bits from the reduced parity equations.
pub fn grand_edge_decode(frame: &ReceivedFrame, code: &LinearCode, max_weight: usize) -> Result<DecodeResult> {
    check_len("grand_edge_decode", code.n(), frame.hard.len())?;
    let ctx = match edge_context(frame, code)? {
        Ok(ctx) => ctx,
        Err(result) => return Ok(result),
    };
    let schedule = HardSchedule::new(ctx.r_c.len(), max_weight);
    Ok(with_edge(&ctx, code, schedule.patterns()))
}

/// ORBGRAND with erasure recovery. Reliability ranks are assigned over the
/// non-erased positions only.
pub fn orbgrand_edge_decode(frame: &ReceivedFrame, code: &LinearCode, lw_max: usize) -> Result<DecodeResult> {
    check_len("orbgrand_edge_decode", code.n(), frame.hard.len())?;
    check_len("orbgrand_edge_decode", code.n(), frame.llr.len())?;
    let ctx = match edge_context(frame, code)? {
        Ok(ctx) => ctx,
        Err(result) => return Ok(result),
    };
    let reliabilities: Vec<f64> = ctx.kept_positions().iter().map(|&i| frame.llr[i]).collect();
    let schedule = OrbSchedule::from_reliabilities(&reliabilities, lw_max);
    Ok(with_edge(&ctx, code, schedule.patterns()))
}
