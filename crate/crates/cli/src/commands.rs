//! Subcommand implementations. Each returns the text to print (and, where a
//! check can fail, whether it passed) so the binary stays a thin shell.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use wavesort::input::{InputSpec, Pattern};
use wavesort::theory::{c_best, c_worst, depth_bound, log2_factorial, pivot_pmf};
use wavesort::{sort, Algo, Variant};

use crate::emit::{emit_pmfs, emit_reports, Format};
use crate::report::run_trials;
use crate::verify;

/// `bench`: run seeded trials for each algorithm and emit one table row per
/// algorithm.
pub fn bench(
    algos: &[String],
    n: usize,
    pattern: &str,
    trials: usize,
    seed: u64,
    format: &str,
) -> Result<String> {
    if trials < 1 {
        bail!("--trials must be at least 1");
    }
    let format: Format = format.parse()?;
    let pattern: Pattern = pattern.parse()?;
    let algos: Vec<Algo> = if algos.is_empty() {
        Algo::ALL.to_vec()
    } else {
        algos
            .iter()
            .map(|s| s.parse::<Algo>().map_err(anyhow::Error::from))
            .collect::<Result<_>>()?
    };
    let spec = InputSpec { n, pattern, seed };
    let mut reports = Vec::with_capacity(algos.len());
    for algo in algos {
        let report = run_trials(algo, &spec, trials)
            .with_context(|| format!("benchmarking {algo} on {pattern} n={n}"))?;
        reports.push(report);
    }
    Ok(emit_reports(&reports, format))
}

/// `worst`: sorted-input exactness check of the basic variant against
/// `c_worst(n)`.
pub fn worst(n: u64) -> Result<(String, bool)> {
    let expected = c_worst(n)?;
    let mut data: Vec<u64> = (0..n).collect();
    let stats = sort(&mut data, Algo::Wave(Variant::Basic));
    let mut out = String::new();
    writeln!(out, "n: {n}").unwrap();
    writeln!(out, "comparisons: {}", stats.comparisons).unwrap();
    writeln!(out, "c_worst: {expected}").unwrap();
    let ok = stats.comparisons == expected;
    if ok {
        writeln!(out, "PASS: worst-case comparisons equal c_worst").unwrap();
    } else {
        writeln!(out, "FAIL: worst-case comparisons differ from c_worst").unwrap();
    }
    Ok((out, ok))
}

/// `theory`: the analytical quantities for one length.
pub fn theory(n: u64) -> Result<String> {
    if n < 2 {
        bail!("--n must be at least 2");
    }
    let mut out = String::new();
    writeln!(out, "n: {n}").unwrap();
    match c_best(n) {
        Ok(v) => writeln!(out, "c_best: {v}").unwrap(),
        Err(e) => writeln!(out, "c_best: n/a ({e})").unwrap(),
    }
    match c_worst(n) {
        Ok(v) => writeln!(out, "c_worst: {v}").unwrap(),
        Err(e) => writeln!(out, "c_worst: n/a ({e})").unwrap(),
    }
    writeln!(out, "log2_factorial: {}", log2_factorial(n)).unwrap();
    writeln!(out, "depth_bound: {}", depth_bound(n)).unwrap();
    Ok(out)
}

/// `pivot-dist`: pivot-rank distributions for one length and one or more
/// sorted-portion lengths.
pub fn pivot_dist(n: usize, ls_values: &[usize], format: &str) -> Result<String> {
    let format: Format = format.parse()?;
    let pmfs = ls_values
        .iter()
        .map(|&ls| pivot_pmf(n, ls).map_err(anyhow::Error::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(emit_pmfs(&pmfs, format))
}

/// `verify`: the property battery; one line per check.
pub fn run_verify(sizes: &[usize]) -> (String, bool) {
    let checks = verify::run(sizes);
    let mut out = String::new();
    let mut ok = true;
    for c in &checks {
        match &c.result {
            Ok(()) => writeln!(out, "PASS {}", c.name).unwrap(),
            Err(reason) => {
                ok = false;
                writeln!(out, "FAIL {}: {reason}", c.name).unwrap();
            }
        }
    }
    let passed = checks.iter().filter(|c| c.result.is_ok()).count();
    writeln!(out, "{passed}/{} checks passed", checks.len()).unwrap();
    (out, ok)
}
