//! Deterministic input generation for benchmarks and tests. The shuffled
//! pattern is a seeded Fisher-Yates walk over a splitmix64 stream, so the
//! same spec reproduces the same permutation on any platform.

use std::fmt;
use std::str::FromStr;

/// splitmix64: a tiny, well-distributed, portable PRNG stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Input shape for one benchmark sequence of values drawn from `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// Uniform permutation of `0..n` (seeded Fisher-Yates).
    Shuffled,
    /// `0, 1, .., n-1`.
    Sorted,
    /// `n-1, .., 1, 0`.
    Reversed,
    /// `i % k` ramps of period `k`.
    Sawtooth(u64),
    /// Ascending then descending, peak in the middle.
    OrganPipe,
    /// Seeded draws from `k` distinct values.
    FewUnique(u64),
}

impl Pattern {
    pub const DEFAULT_SAWTOOTH_PERIOD: u64 = 32;
    pub const DEFAULT_UNIQUE_VALUES: u64 = 16;
}

impl FromStr for Pattern {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, param) = match s.split_once(':') {
            Some((name, param)) => (name, Some(param)),
            None => (s, None),
        };
        let parse_param = |default: u64| -> Result<u64, UnknownPattern> {
            match param {
                None => Ok(default),
                Some(p) => match p.parse::<u64>() {
                    Ok(k) if k >= 1 => Ok(k),
                    _ => Err(UnknownPattern(s.to_string())),
                },
            }
        };
        match name {
            "shuffled" if param.is_none() => Ok(Pattern::Shuffled),
            "sorted" if param.is_none() => Ok(Pattern::Sorted),
            "reversed" if param.is_none() => Ok(Pattern::Reversed),
            "sawtooth" => Ok(Pattern::Sawtooth(parse_param(
                Pattern::DEFAULT_SAWTOOTH_PERIOD,
            )?)),
            "organ-pipe" if param.is_none() => Ok(Pattern::OrganPipe),
            "few-unique" => Ok(Pattern::FewUnique(parse_param(
                Pattern::DEFAULT_UNIQUE_VALUES,
            )?)),
            _ => Err(UnknownPattern(s.to_string())),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Shuffled => write!(f, "shuffled"),
            Pattern::Sorted => write!(f, "sorted"),
            Pattern::Reversed => write!(f, "reversed"),
            Pattern::Sawtooth(k) => write!(f, "sawtooth:{k}"),
            Pattern::OrganPipe => write!(f, "organ-pipe"),
            Pattern::FewUnique(k) => write!(f, "few-unique:{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownPattern(pub String);

impl fmt::Display for UnknownPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown pattern {:?} (expected shuffled, sorted, reversed, sawtooth[:k], organ-pipe, few-unique[:k])",
            self.0
        )
    }
}

impl std::error::Error for UnknownPattern {}

/// A fully determined benchmark input: length, shape, and PRNG seed (used
/// by the seeded patterns, ignored by the deterministic ones).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InputSpec {
    pub n: usize,
    pub pattern: Pattern,
    pub seed: u64,
}

/// Materialize the sequence described by `spec`. Same spec, same sequence.
pub fn generate(spec: &InputSpec) -> Vec<u64> {
    let n = spec.n;
    match spec.pattern {
        Pattern::Shuffled => shuffled(n, spec.seed),
        Pattern::Sorted => (0..n as u64).collect(),
        Pattern::Reversed => (0..n as u64).rev().collect(),
        Pattern::Sawtooth(k) => (0..n as u64).map(|i| i % k).collect(),
        Pattern::OrganPipe => (0..n as u64).map(|i| i.min(n as u64 - 1 - i)).collect(),
        Pattern::FewUnique(k) => {
            let mut rng = SplitMix64::new(spec.seed);
            (0..n).map(|_| rng.next_u64() % k).collect()
        }
    }
}

/// Seeded Fisher-Yates permutation of `0..n`.
pub fn shuffled(n: usize, seed: u64) -> Vec<u64> {
    let mut v: Vec<u64> = (0..n as u64).collect();
    let mut rng = SplitMix64::new(seed);
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
    v
}
