//! Systematic random linear codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_len, Error, Result};
use crate::gf2::{vecmat, BitMatrix, BitVec, PackedColumns};

pub type Message = BitVec;
pub type Codeword = BitVec;

/// An `(n, k)` binary linear code with generator `G = [I_k | P]` and
/// parity-check matrix `H = [Pᵀ | I_{n-k}]`.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    k: usize,
    seed: u64,
    generator: BitMatrix,
    parity_check: BitMatrix,
    check_columns: PackedColumns,
}

impl LinearCode {
    /// Draws the redundancy part `P` from a ChaCha stream seeded with `seed`.
    pub fn random(n: usize, k: usize, seed: u64) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidCode { n, k });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = n - k;
        let p = BitMatrix::from_fn(k, r, |_, _| rng.random::<bool>());
        let generator = BitMatrix::from_fn(k, n, |i, j| if j < k { i == j } else { p.get(i, j - k) });
        let parity_check = BitMatrix::from_fn(r, n, |i, j| if j < k { p.get(j, i) } else { j - k == i });
        Ok(Self::from_parts(n, k, seed, generator, parity_check))
    }

    fn from_parts(n: usize, k: usize, seed: u64, generator: BitMatrix, parity_check: BitMatrix) -> Self {
        // Systematic G always has rank k.
        debug_assert_eq!(generator.rank(), k);
        debug_assert!(generator.mul(&parity_check.transpose()).unwrap().is_zero());
        let check_columns = PackedColumns::from_matrix(&parity_check);
        Self {
            n,
            k,
            seed,
            generator,
            parity_check,
            check_columns,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of parity equations, `n - k`.
    #[inline]
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.parity_check
    }

    /// Columns of `H`, packed for syndrome accumulation.
    pub fn check_columns(&self) -> &PackedColumns {
        &self.check_columns
    }

    /// `c = u · G`.
    pub fn encode(&self, message: &Message) -> Result<Codeword> {
        check_len("encode", self.k, message.len())?;
        vecmat(message, &self.generator)
    }

    pub fn syndrome(&self, word: &BitVec) -> Result<BitVec> {
        check_len("syndrome", self.n, word.len())?;
        Ok(self.check_columns.syndrome(word))
    }

    pub fn is_codeword(&self, word: &BitVec) -> Result<bool> {
        Ok(self.syndrome(word)?.is_zero())
    }

    /// Inverse of [`encode`](Self::encode) on codewords. With a systematic
    /// generator this is the projection onto the first `k` positions.
    pub fn recover_message(&self, codeword: &Codeword) -> Message {
        debug_assert_eq!(codeword.len(), self.n);
        let positions: Vec<usize> = (0..self.k).collect();
        codeword.select(&positions)
    }
}

pub fn generate_rlc(n: usize, k: usize, seed: u64) -> Result<LinearCode> {
    LinearCode::random(n, k, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::matvec;

    fn all_messages(k: usize) -> impl Iterator<Item = Message> {
        (0u32..1 << k).map(move |x| BitVec::from_bools(&(0..k).map(|i| (x >> i) & 1 == 1).collect::<Vec<_>>()))
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(LinearCode::random(4, 0, 1).is_err());
        assert!(LinearCode::random(4, 4, 1).is_err());
        assert!(LinearCode::random(4, 5, 1).is_err());
    }

    #[test]
    fn generator_orthogonal_to_parity_check() {
        for seed in 0..50 {
            for (n, k) in [(4, 2), (8, 4), (16, 10), (128, 105), (200, 100)] {
                let code = LinearCode::random(n, k, seed).unwrap();
                let prod = code.generator().mul(&code.parity_check().transpose()).unwrap();
                assert!(prod.is_zero());
                assert_eq!(code.parity_check().rank(), n - k);
            }
        }
    }

    #[test]
    fn deterministic_for_seed() {
        let a = LinearCode::random(128, 105, 42).unwrap();
        let b = LinearCode::random(128, 105, 42).unwrap();
        let c = LinearCode::random(128, 105, 43).unwrap();
        assert_eq!(a.generator(), b.generator());
        assert_eq!(a.parity_check(), b.parity_check());
        assert_ne!(a.generator(), c.generator());
    }

    #[test]
    fn exhaustive_codewords_and_round_trip() {
        let code = LinearCode::random(16, 10, 9).unwrap();
        let mut seen = std::collections::HashSet::new();
        for u in all_messages(10) {
            let c = code.encode(&u).unwrap();
            assert!(code.is_codeword(&c).unwrap());
            assert_eq!(matvec(code.parity_check(), &c).unwrap(), code.syndrome(&c).unwrap());
            assert_eq!(code.recover_message(&c), u);
            assert_eq!(c.select(&(0..10).collect::<Vec<_>>()), u);
            assert!(seen.insert(c));
        }
    }

    #[test]
    fn single_flips_are_detected() {
        let code = LinearCode::random(16, 10, 9).unwrap();
        for u in all_messages(10) {
            let c = code.encode(&u).unwrap();
            for i in 0..16 {
                let mut r = c.clone();
                r.flip(i);
                let visible = !code.parity_check().column(i).is_zero();
                assert_eq!(code.is_codeword(&r).unwrap(), !visible);
            }
        }
    }

    #[test]
    fn unit_messages_give_generator_rows() {
        let code = LinearCode::random(16, 10, 1).unwrap();
        assert!(code.encode(&BitVec::zeros(10)).unwrap().is_zero());
        assert!(code.is_codeword(&BitVec::zeros(16)).unwrap());
        assert!(code.recover_message(&BitVec::zeros(16)).is_zero());
        for i in 0..10 {
            let c = code.encode(&BitVec::unit(10, i)).unwrap();
            assert_eq!(c, code.generator().row(i));
            assert_eq!(code.recover_message(&code.generator().row(i)), BitVec::unit(10, i));
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let code = LinearCode::random(16, 10, 1).unwrap();
        assert!(code.encode(&BitVec::zeros(9)).is_err());
        assert!(code.is_codeword(&BitVec::zeros(15)).is_err());
    }
}
