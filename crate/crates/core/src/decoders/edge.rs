//! Erasure recovery inside the membership check.
//!
//! With erased positions `q`, the parity equations split as
//! `H_e·r_eᵀ ⊕ H_c·r_cᵀ = 0`. Row-reducing `H_e` once per frame gives an
//! elimination matrix `E` with `E·H_e = [I | 0]ᵀ`; for any guess of the
//! non-erased bits, `E·H_c·r_cᵀ` then holds the erased bits in its first
//! `e` entries and must vanish in the remaining `n-k-e`.

use crate::error::{check_len, Error, Result};
use crate::gf2::{apply_elimination, matvec, rref_with_elimination, words_for, BitMatrix, BitVec, PackedColumns};

/// Per-frame state for erasure-aware membership checks.
#[derive(Clone, Debug)]
pub struct EdgeContext {
    n: usize,
    /// Non-erased hard bits, in ascending position order.
    pub r_c: BitVec,
    /// Hard bits at the erased positions (ignored by the checks).
    pub r_e: BitVec,
    /// Columns of `H` at non-erased positions.
    pub h_c: BitMatrix,
    /// `E`, square `(n-k) × (n-k)`.
    pub elimination: BitMatrix,
    erasures: Vec<usize>,
    kept: Vec<usize>,
    reduced: PackedColumns,
    consistency_mask: Vec<u64>,
}

/// Splits a frame around its erasures and row-reduces the erased columns.
///
/// Fails with [`Error::ErasureOverflow`] when there are more erasures than
/// parity equations and with [`Error::RankDeficient`] when the erased
/// columns of `H` are linearly dependent (no unique fill-in exists).
pub fn edge_init(r: &BitVec, h: &BitMatrix, erasures: &[usize]) -> Result<EdgeContext> {
    let n = h.cols();
    let redundancy = h.rows();
    check_len("edge_init", n, r.len())?;
    validate_index_set(erasures, n)?;

    let e = erasures.len();
    if e > redundancy {
        return Err(Error::ErasureOverflow {
            erasures: e,
            redundancy,
        });
    }

    let kept = complement(erasures, n);
    let h_c = h.select_columns(&kept);
    let elimination = if e == 0 {
        BitMatrix::identity(redundancy)
    } else {
        let reduced = rref_with_elimination(&h.select_columns(erasures));
        if !reduced.is_full_column_rank() {
            return Err(Error::RankDeficient {
                rank: reduced.rank,
                erasures: e,
            });
        }
        reduced.elimination
    };
    let reduced = PackedColumns::from_matrix(&elimination.mul(&h_c)?);

    let mut consistency_mask = vec![0u64; words_for(redundancy)];
    for bit in e..redundancy {
        consistency_mask[bit / 64] |= 1u64 << (bit % 64);
    }

    Ok(EdgeContext {
        n,
        r_c: r.select(&kept),
        r_e: r.select(erasures),
        h_c,
        elimination,
        erasures: erasures.to_vec(),
        kept,
        reduced,
        consistency_mask,
    })
}

fn validate_index_set(q: &[usize], n: usize) -> Result<()> {
    if q.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidIndexSet("erasures must be strictly increasing".into()));
    }
    if let Some(&last) = q.last() {
        if last >= n {
            return Err(Error::InvalidIndexSet(format!(
                "erasure index {last} out of range for n={n}"
            )));
        }
    }
    Ok(())
}

fn complement(sorted: &[usize], n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n - sorted.len());
    let mut it = sorted.iter().peekable();
    for i in 0..n {
        if it.peek() == Some(&&i) {
            it.next();
        } else {
            out.push(i);
        }
    }
    out
}

impl EdgeContext {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn erasure_count(&self) -> usize {
        self.erasures.len()
    }

    pub fn erasures(&self) -> &[usize] {
        &self.erasures
    }

    /// Non-erased positions, ascending.
    pub fn kept_positions(&self) -> &[usize] {
        &self.kept
    }

    pub fn redundancy(&self) -> usize {
        self.elimination.rows()
    }

    /// Columns of `E·H_c`; XOR-accumulating them gives `s_e*` directly.
    pub(crate) fn reduced_columns(&self) -> &PackedColumns {
        &self.reduced
    }

    /// Selects entries `e..n-k` of `s_e*`, which vanish iff the guess is consistent.
    pub(crate) fn consistency_mask(&self) -> &[u64] {
        &self.consistency_mask
    }

    /// Interleaves the non-erased bits with the first `e` entries of `s_e*`.
    pub(crate) fn reassemble(&self, r_c: &BitVec, s_star: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.n);
        for (i, &pos) in self.kept.iter().enumerate() {
            if r_c.get(i) {
                out.set(pos, true);
            }
        }
        for (j, &pos) in self.erasures.iter().enumerate() {
            if s_star.get(j) {
                out.set(pos, true);
            }
        }
        out
    }
}

/// Membership check with erasure fill-in for one guess of the non-erased bits.
///
/// Returns the full word with erased bits restored when the guess is
/// consistent with some codeword, `None` otherwise.
pub fn edge_check(ctx: &EdgeContext, r_c_trial: &BitVec) -> Result<Option<BitVec>> {
    check_len("edge_check", ctx.kept.len(), r_c_trial.len())?;
    let s_e = matvec(&ctx.h_c, r_c_trial)?;
    let s_star = apply_elimination(&ctx.elimination, &s_e)?;
    let e = ctx.erasure_count();
    if (e..s_star.len()).any(|i| s_star.get(i)) {
        return Ok(None);
    }
    Ok(Some(ctx.reassemble(r_c_trial, &s_star)))
}
