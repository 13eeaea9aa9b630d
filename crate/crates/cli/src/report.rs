//! Seeded trial runner and per-metric aggregation. Every trial's output is
//! verified (sorted and a permutation of the input) before its counters are
//! accepted into a report.

use std::fmt;

use wavesort::input::{generate, InputSpec, Pattern};
use wavesort::{sort, Algo, SortStats};

/// Mean, minimum and maximum of one metric across the trials of a report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSummary {
    pub mean: f64,
    pub min: u64,
    pub max: u64,
}

impl MetricSummary {
    fn from_values(values: &[u64]) -> Self {
        let sum: u128 = values.iter().map(|&v| v as u128).sum();
        MetricSummary {
            mean: sum as f64 / values.len() as f64,
            min: *values.iter().min().expect("at least one trial"),
            max: *values.iter().max().expect("at least one trial"),
        }
    }
}

/// Aggregated counters for one (algorithm, input spec) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub algo: String,
    pub n: usize,
    pub pattern: Pattern,
    pub trials: usize,
    pub seed: u64,
    pub comparisons: MetricSummary,
    pub swaps: MetricSummary,
    pub block_moves: MetricSummary,
    pub max_depth: MetricSummary,
}

/// A trial whose output failed verification; the report is aborted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialError {
    NotSorted { algo: String, trial: usize },
    NotPermutation { algo: String, trial: usize },
}

impl fmt::Display for TrialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrialError::NotSorted { algo, trial } => {
                write!(
                    f,
                    "verification failure: {algo} trial {trial} produced unsorted output"
                )
            }
            TrialError::NotPermutation { algo, trial } => {
                write!(
                    f,
                    "verification failure: {algo} trial {trial} did not permute its input"
                )
            }
        }
    }
}

impl std::error::Error for TrialError {}

/// Run `trials` independent trials of `algo` on fresh copies described by
/// `spec`, deriving trial seeds as `spec.seed + index`, and aggregate the
/// verified counters.
pub fn run_trials(algo: Algo, spec: &InputSpec, trials: usize) -> Result<BenchReport, TrialError> {
    run_trials_with(&algo.to_string(), spec, trials, |data| sort(data, algo))
}

/// [`run_trials`] over an arbitrary sorting function (the verification and
/// aggregation machinery is independent of the algorithm under test).
pub fn run_trials_with<F>(
    name: &str,
    spec: &InputSpec,
    trials: usize,
    mut sorter: F,
) -> Result<BenchReport, TrialError>
where
    F: FnMut(&mut [u64]) -> SortStats,
{
    assert!(trials >= 1, "at least one trial required");
    let mut comparisons = Vec::with_capacity(trials);
    let mut swaps = Vec::with_capacity(trials);
    let mut block_moves = Vec::with_capacity(trials);
    let mut max_depth = Vec::with_capacity(trials);

    for trial in 0..trials {
        let trial_spec = InputSpec {
            seed: spec.seed.wrapping_add(trial as u64),
            ..*spec
        };
        let input = generate(&trial_spec);
        let mut data = input.clone();
        let stats = sorter(&mut data);

        if !data.is_sorted() {
            return Err(TrialError::NotSorted {
                algo: name.to_string(),
                trial,
            });
        }
        let mut expected = input;
        expected.sort_unstable();
        if data != expected {
            return Err(TrialError::NotPermutation {
                algo: name.to_string(),
                trial,
            });
        }

        comparisons.push(stats.comparisons);
        swaps.push(stats.swaps);
        block_moves.push(stats.block_moves);
        max_depth.push(stats.max_depth as u64);
    }

    Ok(BenchReport {
        algo: name.to_string(),
        n: spec.n,
        pattern: spec.pattern,
        trials,
        seed: spec.seed,
        comparisons: MetricSummary::from_values(&comparisons),
        swaps: MetricSummary::from_values(&swaps),
        block_moves: MetricSummary::from_values(&block_moves),
        max_depth: MetricSummary::from_values(&max_depth),
    })
}
