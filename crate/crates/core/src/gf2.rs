//! Dense GF(2) vectors and matrices.
//!
//! Bits are packed little-endian into `u64` words, rows are stored
//! contiguously. Unused high bits of the last word of a vector or row are
//! always zero, so word-wise equality and zero tests are exact.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_len, Result};

const WORD_BITS: usize = u64::BITS as usize;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
fn tail_mask(bits: usize) -> u64 {
    match bits % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from `0`/`1` bytes; any nonzero byte is a one.
    pub fn from_u8s(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    /// Unit vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(len);
        }
        Self { len, words }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// `self ^= other`. Panics if the lengths differ.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        xor_words(&mut self.words, &other.words);
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn hamming_distance(&self, other: &BitVec) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Parity of the bitwise AND, i.e. the GF(2) inner product.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        dot_words(&self.words, &other.words)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + tz)
            })
        })
    }

    pub fn to_u8s(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    /// Sub-vector at the given positions, in the order given.
    pub fn select(&self, positions: &[usize]) -> BitVec {
        let mut out = BitVec::zeros(positions.len());
        for (dst, &src) in positions.iter().enumerate() {
            if self.get(src) {
                out.set(dst, true);
            }
        }
        out
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Lexicographic order on the bit sequence, index 0 first, `0 < 1`.
impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[{}]({self})", self.len)
    }
}

#[inline]
pub(crate) fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

#[inline]
fn dot_words(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones()) & 1 == 1
}

/// A dense, row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of `0`/`1` bytes. All rows must have equal length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(
            rows.iter().all(|r| r.as_ref().len() == cols),
            "ragged rows in BitMatrix::from_rows"
        );
        Self::from_fn(rows.len(), cols, |r, c| rows[r].as_ref()[c] != 0)
    }

    pub fn from_row_vecs(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            assert_eq!(v.len(), cols);
            m.row_words_mut(r).copy_from_slice(v.words());
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let idx = r * self.stride + c / WORD_BITS;
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            self.data[idx] |= mask;
        } else {
            self.data[idx] &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// Row `dst` += row `src`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst, "adding a row to itself clears it");
        let (s, d) = (src * self.stride, dst * self.stride);
        for w in 0..self.stride {
            let v = self.data[s + w];
            self.data[d + w] ^= v;
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        check_len("BitMatrix::mul", self.cols, other.rows)?;
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let (o, src) = (r * out.stride, k * other.stride);
                    for w in 0..out.stride {
                        out.data[o + w] ^= other.data[src + w];
                    }
                }
            }
        }
        Ok(out)
    }

    /// New matrix made of the given columns, in the order given.
    pub fn select_columns(&self, columns: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, columns.len());
        for (dst, &src) in columns.iter().enumerate() {
            for r in 0..self.rows {
                if self.get(r, src) {
                    out.set(r, dst, true);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn rank(&self) -> usize {
        rref_with_elimination(self).rank
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// `M · vᵀ` over GF(2).
pub fn matvec(m: &BitMatrix, v: &BitVec) -> Result<BitVec> {
    check_len("matvec", m.cols, v.len())?;
    let mut out = BitVec::zeros(m.rows);
    for r in 0..m.rows {
        if dot_words(m.row_words(r), v.words()) {
            out.set(r, true);
        }
    }
    Ok(out)
}

/// `v · M` over GF(2): XOR of the rows of `M` selected by `v`.
pub fn vecmat(v: &BitVec, m: &BitMatrix) -> Result<BitVec> {
    check_len("vecmat", m.rows, v.len())?;
    let mut words = vec![0u64; m.stride];
    for r in v.ones() {
        xor_words(&mut words, m.row_words(r));
    }
    Ok(BitVec::from_words(m.cols, words))
}

/// Reduced row-echelon form together with the row operations that produced it.
#[derive(Clone, Debug)]
pub struct RrefResult {
    pub rref: BitMatrix,
    /// Square `rows × rows`; `elimination · input = rref`.
    pub elimination: BitMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl RrefResult {
    pub fn is_full_column_rank(&self) -> bool {
        self.rank == self.rref.cols()
    }
}

/// Gauss-Jordan elimination using only row swaps and row additions.
///
/// Columns are scanned left to right; the pivot is the topmost row at or
/// below the current pivot row holding a one. Every operation is mirrored
/// onto an identity matrix, which ends up as the elimination matrix.
pub fn rref_with_elimination(m: &BitMatrix) -> RrefResult {
    let mut a = m.clone();
    let mut e = BitMatrix::identity(m.rows);
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;

    for col in 0..m.cols {
        if pivot_row == m.rows {
            break;
        }
        let Some(found) = (pivot_row..m.rows).find(|&r| a.get(r, col)) else {
            continue;
        };
        a.swap_rows(found, pivot_row);
        e.swap_rows(found, pivot_row);
        for r in 0..m.rows {
            if r != pivot_row && a.get(r, col) {
                a.add_row(pivot_row, r);
                e.add_row(pivot_row, r);
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }

    RrefResult {
        rref: a,
        elimination: e,
        rank: pivot_cols.len(),
        pivot_cols,
    }
}

/// Replays stored elimination operations on a syndrome: `E · sᵀ`.
pub fn apply_elimination(elimination: &BitMatrix, s: &BitVec) -> Result<BitVec> {
    check_len("apply_elimination", elimination.cols, s.len())?;
    matvec(elimination, s)
}

/// Column-major packing of a matrix, for XOR-accumulating syndromes
/// column by column in the guessing loops.
#[derive(Clone, Debug)]
pub struct PackedColumns {
    height: usize,
    stride: usize,
    data: Vec<u64>,
}

impl PackedColumns {
    pub fn from_matrix(m: &BitMatrix) -> Self {
        let stride = words_for(m.rows);
        let mut data = vec![0u64; m.cols * stride];
        for c in 0..m.cols {
            for r in 0..m.rows {
                if m.get(r, c) {
                    data[c * stride + r / WORD_BITS] |= 1u64 << (r % WORD_BITS);
                }
            }
        }
        Self {
            height: m.rows,
            stride,
            data,
        }
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.stride).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn column(&self, c: usize) -> &[u64] {
        &self.data[c * self.stride..(c + 1) * self.stride]
    }

    /// Syndrome of `v`: XOR of the columns selected by its set bits.
    pub fn syndrome(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.len());
        let mut words = vec![0u64; self.stride];
        for c in v.ones() {
            xor_words(&mut words, self.column(c));
        }
        BitVec::from_words(self.height, words)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    fn naive_matvec(m: &BitMatrix, v: &BitVec) -> BitVec {
        let mut out = vec![0u8; m.rows()];
        for (r, o) in out.iter_mut().enumerate() {
            for c in 0..m.cols() {
                *o ^= u8::from(m.get(r, c) & v.get(c));
            }
        }
        BitVec::from_u8s(&out)
    }

    fn is_rref(m: &BitMatrix, pivots: &[usize]) -> bool {
        // pivots strictly increasing, each pivot the only one in its column,
        // leading entry of each nonzero row is its pivot, zero rows at the bottom.
        if pivots.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        for (r, &p) in pivots.iter().enumerate() {
            if (0..m.rows()).any(|rr| m.get(rr, p) != (rr == r)) {
                return false;
            }
            if (0..p).any(|c| m.get(r, c)) {
                return false;
            }
        }
        (pivots.len()..m.rows()).all(|r| m.row(r).is_zero())
    }

    fn random_matrix(rng: &mut impl rand::Rng, rows: usize, cols: usize) -> BitMatrix {
        BitMatrix::from_fn(rows, cols, |_, _| rng.random())
    }

    #[test]
    fn matvec_identity_and_parity() {
        let v = BitVec::from_u8s(&[1, 0, 1]);
        assert_eq!(matvec(&BitMatrix::identity(3), &v).unwrap(), v);
        let m = BitMatrix::from_rows(&[[1, 1]]);
        let out = matvec(&m, &BitVec::from_u8s(&[1, 1])).unwrap();
        assert_eq!(out.to_u8s(), vec![0]);
    }

    #[test]
    fn matvec_matches_naive_loop() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let m = random_matrix(&mut rng, 8, 16);
            let v = BitVec::from_bools(&(0..16).map(|_| rng.random()).collect::<Vec<_>>());
            assert_eq!(matvec(&m, &v).unwrap(), naive_matvec(&m, &v));
        }
    }

    #[test]
    fn matvec_rejects_bad_length() {
        let m = BitMatrix::zeros(2, 3);
        assert!(matvec(&m, &BitVec::zeros(4)).is_err());
        assert!(apply_elimination(&BitMatrix::identity(3), &BitVec::zeros(2)).is_err());
    }

    #[test]
    fn rref_tall_example() {
        let m = BitMatrix::from_rows(&[[1, 0], [1, 1], [0, 1], [1, 1]]);
        let res = rref_with_elimination(&m);
        assert_eq!(res.rref, BitMatrix::from_rows(&[[1, 0], [0, 1], [0, 0], [0, 0]]));
        assert_eq!(res.rank, 2);
        assert_eq!(res.pivot_cols, vec![0, 1]);
        for c in 0..2 {
            let col = m.column(c);
            assert_eq!(naive_matvec(&res.elimination, &col), res.rref.column(c));
            assert_eq!(apply_elimination(&res.elimination, &col).unwrap(), res.rref.column(c));
        }
    }

    #[test]
    fn rref_of_identity() {
        let i = BitMatrix::identity(5);
        let res = rref_with_elimination(&i);
        assert_eq!(res.rref, i);
        assert_eq!(res.elimination, i);
        assert_eq!(res.rank, 5);
    }

    #[test]
    fn zero_column_is_not_a_pivot() {
        let m = BitMatrix::from_rows(&[[1, 0, 1], [0, 0, 1], [1, 0, 0]]);
        let res = rref_with_elimination(&m);
        assert!(res.rank < 3);
        assert!(!res.pivot_cols.contains(&1));
        assert!(!res.is_full_column_rank());
    }

    #[test]
    fn full_column_rank_gives_identity_over_zero() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut seen = 0;
        while seen < 50 {
            let m = random_matrix(&mut rng, 8, 5);
            let res = rref_with_elimination(&m);
            if res.rank != 5 {
                continue;
            }
            seen += 1;
            let expected = BitMatrix::from_fn(8, 5, |r, c| r == c);
            assert_eq!(res.rref, expected);
        }
    }

    /// Eliminates on the augmented system `[M | s]` directly, the way one
    /// would by hand, and returns the transformed `s`.
    fn replay_on_augmented(m: &BitMatrix, s: &BitVec) -> BitVec {
        let rows = m.rows();
        let mut a: Vec<Vec<u8>> = (0..rows)
            .map(|r| {
                let mut row: Vec<u8> = (0..m.cols()).map(|c| u8::from(m.get(r, c))).collect();
                row.push(u8::from(s.get(r)));
                row
            })
            .collect();
        let mut pr = 0;
        for c in 0..m.cols() {
            if pr == rows {
                break;
            }
            let Some(f) = (pr..rows).find(|&r| a[r][c] == 1) else {
                continue;
            };
            a.swap(f, pr);
            for r in 0..rows {
                if r != pr && a[r][c] == 1 {
                    let src = a[pr].clone();
                    for (x, y) in a[r].iter_mut().zip(src) {
                        *x ^= y;
                    }
                }
            }
            pr += 1;
        }
        BitVec::from_u8s(&a.iter().map(|row| row[m.cols()]).collect::<Vec<_>>())
    }

    #[test]
    fn elimination_matches_operation_replay() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 100 {
            let m = random_matrix(&mut rng, 6, 6);
            let res = rref_with_elimination(&m);
            if res.rank != 6 {
                continue;
            }
            checked += 1;
            let s = BitVec::from_bools(&(0..6).map(|_| rng.random()).collect::<Vec<_>>());
            assert_eq!(
                apply_elimination(&res.elimination, &s).unwrap(),
                replay_on_augmented(&m, &s)
            );
        }
    }

    #[test]
    fn exhaustive_small_matrices() {
        for rows in 1..=4 {
            for cols in 1..=4 {
                for bits in 0u32..(1 << (rows * cols)) {
                    let m = BitMatrix::from_fn(rows, cols, |r, c| (bits >> (r * cols + c)) & 1 == 1);
                    let res = rref_with_elimination(&m);
                    assert_eq!(res.elimination.mul(&m).unwrap(), res.rref);
                    assert!(is_rref(&res.rref, &res.pivot_cols), "{m:?}");
                    assert_eq!(res.elimination.rank(), rows);
                    let again = rref_with_elimination(&res.rref);
                    assert_eq!(again.rref, res.rref);
                    assert_eq!(again.rank, res.rank);
                }
            }
        }
    }

    #[test]
    fn packed_columns_syndrome_agrees_with_matvec() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&mut rng, 70, 130);
        let cols = PackedColumns::from_matrix(&m);
        assert_eq!(cols.len(), 130);
        for _ in 0..20 {
            let v = BitVec::from_bools(&(0..130).map(|_| rng.random()).collect::<Vec<_>>());
            assert_eq!(cols.syndrome(&v), matvec(&m, &v).unwrap());
        }
    }

    #[test]
    fn ones_and_ordering() {
        let v = BitVec::from_u8s(&[0, 1, 0, 0, 1]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![1, 4]);
        assert!(BitVec::from_u8s(&[0, 1, 1]) < BitVec::from_u8s(&[1, 0, 0]));
        assert_eq!(v.to_string(), "01001");
    }

    fn arb_matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
            proptest::collection::vec(any::<bool>(), r * c)
                .prop_map(move |bits| BitMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
        })
    }

    proptest! {
        #[test]
        fn elimination_times_input_is_rref(m in arb_matrix(24, 40)) {
            let res = rref_with_elimination(&m);
            prop_assert_eq!(res.elimination.mul(&m).unwrap(), res.rref.clone());
            prop_assert!(is_rref(&res.rref, &res.pivot_cols));
            prop_assert_eq!(res.elimination.rank(), m.rows());
        }

        #[test]
        fn rank_invariant_under_row_permutation(m in arb_matrix(12, 12), seed in any::<u64>()) {
            use rand::{SeedableRng, seq::SliceRandom};
            let mut order: Vec<usize> = (0..m.rows()).collect();
            order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let permuted = BitMatrix::from_fn(m.rows(), m.cols(), |r, c| m.get(order[r], c));
            prop_assert_eq!(permuted.rank(), m.rank());
            prop_assert_eq!(rref_with_elimination(&permuted).rref, rref_with_elimination(&m).rref);
        }

        #[test]
        fn matvec_is_linear(m in arb_matrix(16, 70), a in any::<u128>(), b in any::<u128>()) {
            let bits = |x: u128| BitVec::from_bools(&(0..m.cols()).map(|i| (x >> i) & 1 == 1).collect::<Vec<_>>());
            let (u, v) = (bits(a), bits(b));
            let lhs = matvec(&m, &u.xor(&v)).unwrap();
            let rhs = matvec(&m, &u).unwrap().xor(&matvec(&m, &v).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
