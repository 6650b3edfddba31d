//! Putative noise-pattern schedules.
//!
//! Two orders are provided: nondecreasing Hamming weight for hard-decision
//! GRAND, and nondecreasing logistic weight (sum of 1-based reliability
//! ranks) for ORBGRAND. Both are generated lazily; the logistic-weight
//! stream at practical thresholds has millions of entries.

pub const DEFAULT_MAX_WEIGHT: usize = 3;
pub const DEFAULT_LW_MAX: usize = 104;

/// Bit positions to flip, relative to the vector being guessed on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ErrorPattern {
    pub flips: Vec<usize>,
}

impl ErrorPattern {
    pub fn weight(&self) -> usize {
        self.flips.len()
    }
}

/// A lazily generated sequence of flip sets. The slice returned by
/// [`advance`](Self::advance) is valid until the next call.
pub trait PatternStream {
    fn advance(&mut self) -> Option<&[usize]>;

    /// Total number of patterns the stream produces.
    fn budget(&self) -> u64;
}

/// Sum of 1-based reliability ranks.
pub fn logistic_weight(ranks: &[usize]) -> usize {
    ranks.iter().sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HardSchedule {
    pub length: usize,
    pub max_weight: usize,
}

impl HardSchedule {
    /// `max_weight` is clamped to `length`.
    pub fn new(length: usize, max_weight: usize) -> Self {
        Self {
            length,
            max_weight: max_weight.min(length),
        }
    }

    pub fn budget(&self) -> u64 {
        (0..=self.max_weight)
            .map(|w| binomial(self.length as u64, w as u64))
            .fold(0u64, u64::saturating_add)
    }

    pub fn patterns(&self) -> HardPatterns {
        HardPatterns {
            schedule: *self,
            combo: Vec::with_capacity(self.max_weight),
            started: false,
            done: false,
        }
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).unwrap_or(u64::MAX)
}

/// Weight 0, then every weight-1 pattern, then weight 2, ...; within a
/// weight, index tuples in lexicographic order.
#[derive(Clone, Debug)]
pub struct HardPatterns {
    schedule: HardSchedule,
    combo: Vec<usize>,
    started: bool,
    done: bool,
}

impl HardPatterns {
    fn step(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.schedule.length;
        let w = self.combo.len();
        if let Some(i) = (0..w).rev().find(|&i| self.combo[i] < n - w + i) {
            self.combo[i] += 1;
            for j in i + 1..w {
                self.combo[j] = self.combo[j - 1] + 1;
            }
            return true;
        }
        if w == self.schedule.max_weight {
            return false;
        }
        self.combo.clear();
        self.combo.extend(0..w + 1);
        true
    }
}

impl PatternStream for HardPatterns {
    fn advance(&mut self) -> Option<&[usize]> {
        if self.done || !self.step() {
            self.done = true;
            return None;
        }
        Some(&self.combo)
    }

    fn budget(&self) -> u64 {
        self.schedule.budget()
    }
}

impl Iterator for HardPatterns {
    type Item = ErrorPattern;

    fn next(&mut self) -> Option<ErrorPattern> {
        self.advance().map(|f| ErrorPattern { flips: f.to_vec() })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbSchedule {
    pub lw_max: usize,
    /// `rank_to_index[r - 1]` is the position holding reliability rank `r`
    /// (rank 1 = least reliable).
    pub rank_to_index: Vec<usize>,
}

impl OrbSchedule {
    /// Ranks positions by `|reliability|` ascending; ties keep index order.
    pub fn from_reliabilities(reliabilities: &[f64], lw_max: usize) -> Self {
        let mut order: Vec<usize> = (0..reliabilities.len()).collect();
        order.sort_by(|&a, &b| reliabilities[a].abs().total_cmp(&reliabilities[b].abs()));
        Self {
            lw_max,
            rank_to_index: order,
        }
    }

    /// Ranks equal to positions plus one.
    pub fn identity(length: usize, lw_max: usize) -> Self {
        Self {
            lw_max,
            rank_to_index: (0..length).collect(),
        }
    }

    pub fn length(&self) -> usize {
        self.rank_to_index.len()
    }

    /// Number of sets of distinct ranks in `1..=length` with sum at most `lw_max`.
    pub fn budget(&self) -> u64 {
        let lw = self.lw_max;
        let mut ways = vec![0u64; lw + 1];
        ways[0] = 1;
        for part in 1..=self.length().min(lw) {
            for s in (part..=lw).rev() {
                ways[s] = ways[s].saturating_add(ways[s - part]);
            }
        }
        ways.iter().fold(0u64, |a, &b| a.saturating_add(b))
    }

    pub fn patterns(&self) -> OrbPatterns<'_> {
        OrbPatterns {
            schedule: self,
            ranks: RankPartitions::new(self.length(), self.lw_max),
            positions: Vec::new(),
        }
    }
}

/// Sets of distinct ranks ordered by their sum. Within one sum, parts are
/// kept in descending order and sets are visited largest-first
/// (reverse lexicographic), e.g. sum 6: `{6}, {5,1}, {4,2}, {3,2,1}`.
#[derive(Clone, Debug)]
pub struct RankPartitions {
    cap: usize,
    lw_max: usize,
    sum: usize,
    parts: Vec<usize>,
    started: bool,
    done: bool,
}

impl RankPartitions {
    pub fn new(cap: usize, lw_max: usize) -> Self {
        Self {
            cap,
            lw_max,
            sum: 0,
            parts: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// Largest-first greedy fill of `remaining` with distinct parts `≤ cap`.
    /// The caller guarantees feasibility, `cap(cap+1)/2 ≥ remaining`.
    fn fill(parts: &mut Vec<usize>, mut remaining: usize, mut cap: usize) {
        while remaining > 0 {
            let part = cap.min(remaining);
            parts.push(part);
            remaining -= part;
            cap = part - 1;
        }
    }

    fn first_of_sum(&mut self) -> bool {
        if self.sum > self.lw_max || self.cap * (self.cap + 1) / 2 < self.sum {
            return false;
        }
        self.parts.clear();
        Self::fill(&mut self.parts, self.sum, self.cap);
        true
    }

    fn next_of_sum(&mut self) -> bool {
        let mut suffix = 0;
        for i in (0..self.parts.len()).rev() {
            suffix += self.parts[i];
            let v = self.parts[i] - 1;
            if v == 0 {
                continue;
            }
            let rest = suffix - v;
            if v * (v - 1) / 2 >= rest {
                self.parts.truncate(i);
                self.parts.push(v);
                Self::fill(&mut self.parts, rest, v - 1);
                return true;
            }
        }
        false
    }

    fn step(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return self.first_of_sum();
        }
        if self.next_of_sum() {
            return true;
        }
        self.sum += 1;
        self.first_of_sum()
    }

    /// Current rank set, descending.
    pub fn current(&self) -> &[usize] {
        &self.parts
    }

    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done || !self.step() {
            self.done = true;
            return None;
        }
        Some(&self.parts)
    }
}

impl Iterator for RankPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

/// Logistic-weight stream mapped from ranks to positions.
#[derive(Clone, Debug)]
pub struct OrbPatterns<'a> {
    schedule: &'a OrbSchedule,
    ranks: RankPartitions,
    positions: Vec<usize>,
}

impl OrbPatterns<'_> {
    pub fn current_ranks(&self) -> &[usize] {
        self.ranks.current()
    }
}

impl PatternStream for OrbPatterns<'_> {
    fn advance(&mut self) -> Option<&[usize]> {
        let ranks = self.ranks.advance()?;
        self.positions.clear();
        self.positions
            .extend(ranks.iter().map(|&r| self.schedule.rank_to_index[r - 1]));
        Some(&self.positions)
    }

    fn budget(&self) -> u64 {
        self.schedule.budget()
    }
}

impl Iterator for OrbPatterns<'_> {
    type Item = ErrorPattern;

    fn next(&mut self) -> Option<ErrorPattern> {
        self.advance().map(|f| ErrorPattern { flips: f.to_vec() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn flips(stream: impl Iterator<Item = ErrorPattern>) -> Vec<Vec<usize>> {
        stream.map(|p| p.flips).collect()
    }

    /// Every subset of `0..length` with at most `max_weight` elements,
    /// sorted by (size, lexicographic).
    fn brute_force_hard(length: usize, max_weight: usize) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = (0u32..1 << length)
            .map(|mask| (0..length).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.len() <= max_weight)
            .collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    #[test]
    fn hard_small_cases() {
        let s = HardSchedule::new(3, 1);
        assert_eq!(flips(s.patterns()), vec![vec![], vec![0], vec![1], vec![2]]);
        let s = HardSchedule::new(4, 2);
        let p = flips(s.patterns());
        assert_eq!(p.len(), 11);
        assert!(p.windows(2).all(|w| w[0].len() <= w[1].len()));
        assert_eq!(s.budget(), 11);
        assert_eq!(HardSchedule::new(10, 3).budget(), 176);
    }

    #[test]
    fn hard_matches_brute_force() {
        for length in 0..=10 {
            for w in 0..=3 {
                let s = HardSchedule::new(length, w);
                let p = flips(s.patterns());
                assert_eq!(p, brute_force_hard(length, w.min(length)));
                assert_eq!(p.len() as u64, s.budget());
            }
        }
    }

    #[test]
    fn max_weight_clamped_to_length() {
        let s = HardSchedule::new(2, 3);
        assert_eq!(s.max_weight, 2);
        assert_eq!(flips(s.patterns()).len(), 4);
    }

    #[test]
    fn logistic_weights() {
        assert_eq!(logistic_weight(&[]), 0);
        assert_eq!(logistic_weight(&[1, 2]), 3);
        assert_eq!(logistic_weight(&[2, 5, 6]), 13);
    }

    fn ranks(length: usize, lw_max: usize) -> Vec<Vec<usize>> {
        RankPartitions::new(length, lw_max).collect()
    }

    #[test]
    fn orb_small_cases() {
        assert_eq!(ranks(5, 3), vec![vec![], vec![1], vec![2], vec![3], vec![2, 1]]);
        assert_eq!(
            ranks(5, 4),
            vec![vec![], vec![1], vec![2], vec![3], vec![2, 1], vec![4], vec![3, 1]]
        );
        assert_eq!(ranks(2, 4), vec![vec![], vec![1], vec![2], vec![2, 1]]);
        assert_eq!(ranks(6, 6)[10..], [vec![6], vec![5, 1], vec![4, 2], vec![3, 2, 1]]);
        assert_eq!(OrbSchedule::identity(4, 4).budget(), 7);
        assert_eq!(OrbSchedule::identity(10, 4).budget(), 7);
        assert_eq!(OrbSchedule::identity(2, 4).budget(), 4);
    }

    #[test]
    fn orb_matches_brute_force() {
        for length in 0..=12 {
            for lw_max in 0..=20 {
                let got = ranks(length, lw_max);
                let weights: Vec<usize> = got.iter().map(|r| logistic_weight(r)).collect();
                assert!(weights.windows(2).all(|w| w[0] <= w[1]));
                let got_set: HashSet<Vec<usize>> = got
                    .iter()
                    .map(|r| {
                        let mut r = r.clone();
                        r.sort_unstable();
                        r
                    })
                    .collect();
                assert_eq!(got_set.len(), got.len(), "duplicates");
                let expected: HashSet<Vec<usize>> = (0u32..1 << length)
                    .map(|m| (1..=length).filter(|r| m >> (r - 1) & 1 == 1).collect::<Vec<_>>())
                    .filter(|s| logistic_weight(s) <= lw_max)
                    .collect();
                assert_eq!(got_set, expected);
                assert_eq!(OrbSchedule::identity(length, lw_max).budget(), got.len() as u64);
            }
        }
    }

    #[test]
    fn orb_budget_at_default_threshold() {
        assert_eq!(OrbSchedule::identity(128, 104).budget(), 7_469_383);
    }

    #[test]
    fn rank_mapping_follows_reliability() {
        let llr = [3.0, -0.5, 0.1, -7.0, 0.5];
        let s = OrbSchedule::from_reliabilities(&llr, 4);
        // |llr| ascending, ties by index: 2 (0.1), 1 (0.5), 4 (0.5), 0, 3.
        assert_eq!(s.rank_to_index, vec![2, 1, 4, 0, 3]);
        let mut stream = s.patterns();
        let mut seen = Vec::new();
        while let Some(p) = stream.advance() {
            let p = p.to_vec();
            let ranks = stream.current_ranks().to_vec();
            let mapped: Vec<usize> = ranks.iter().map(|&r| s.rank_to_index[r - 1]).collect();
            assert_eq!(p.to_vec(), mapped);
            seen.push(p.to_vec());
        }
        assert_eq!(seen[1], vec![2]);
        assert_eq!(seen[2], vec![1]);
    }
}
