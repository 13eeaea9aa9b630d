//! Analytical companions to the instrumented runs: the pivot-rank
//! distribution induced by median-of-sorted-portion selection, the
//! best/worst-case comparison bounds for the basic variant under doubling
//! expansion, the information-theoretic floor `log2(n!)`, and the
//! worst-case stack-depth bound.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoryError {
    /// The closed-form bounds are derived under doubling expansion and only
    /// hold for power-of-two lengths.
    NotPowerOfTwo { n: u64, min: u64 },
    /// Sorted-portion length must satisfy `1 <= ls <= n`.
    SortedLengthOutOfRange { n: usize, ls: usize },
}

impl fmt::Display for TheoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryError::NotPowerOfTwo { n, min } => {
                write!(f, "n = {n} must be a power of two >= {min}")
            }
            TheoryError::SortedLengthOutOfRange { n, ls } => {
                write!(f, "sorted-portion length {ls} out of range for n = {n}")
            }
        }
    }
}

impl std::error::Error for TheoryError {}

/// Distribution of the pivot's rank position in a sequence of length `n`
/// when the pivot is the (lower) median of a random `ls`-element sorted
/// portion. `probs[i - 1]` is the probability of rank `i`, `1 <= i <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PivotPmf {
    pub n: usize,
    pub ls: usize,
    pub probs: Vec<f64>,
}

/// Pivot-rank distribution for sequence length `n` and sorted-portion
/// length `ls`. For odd `ls = 2m + 1` the pivot is the exact median and
/// `p(i) = C(i-1, m) C(n-i, m) / C(n, 2m+1)`; for even `ls = 2m` it is the
/// lower median and `p(i) = C(i-1, m-1) C(n-i, m) / C(n, 2m)`. Evaluated in
/// log space so large `n` cannot overflow.
pub fn pivot_pmf(n: usize, ls: usize) -> Result<PivotPmf, TheoryError> {
    if ls < 1 || ls > n {
        return Err(TheoryError::SortedLengthOutOfRange { n, ls });
    }
    let lnfact = ln_factorials(n);
    let lnc = |a: usize, b: usize| -> Option<f64> {
        if b > a {
            return None;
        }
        Some(lnfact[a] - lnfact[b] - lnfact[a - b])
    };
    let (below, above, total) = if ls % 2 == 1 {
        let m = ls / 2;
        (m, m, lnc(n, 2 * m + 1).unwrap())
    } else {
        let m = ls / 2;
        (m - 1, m, lnc(n, 2 * m).unwrap())
    };
    let probs = (1..=n)
        .map(|i| match (lnc(i - 1, below), lnc(n - i, above)) {
            (Some(lo), Some(hi)) => (lo + hi - total).exp(),
            _ => 0.0,
        })
        .collect();
    Ok(PivotPmf { n, ls, probs })
}

fn ln_factorials(n: usize) -> Vec<f64> {
    let mut table = vec![0.0f64; n + 1];
    let mut acc = 0.0f64;
    for (i, slot) in table.iter_mut().enumerate().skip(2) {
        acc += (i as f64).ln();
        *slot = acc;
    }
    table
}

fn exact_log2(n: u64, min: u64) -> Result<u32, TheoryError> {
    if n < min || !n.is_power_of_two() {
        return Err(TheoryError::NotPowerOfTwo { n, min });
    }
    Ok(n.trailing_zeros())
}

/// Worst-case comparison count of the basic variant on a sorted ramp of
/// power-of-two length `n >= 4`: `(n/4) (log2^2 n - log2(n/4))`, exact.
pub fn c_worst(n: u64) -> Result<u64, TheoryError> {
    let k = exact_log2(n, 4)? as u64;
    Ok((n / 4) * (k * k - k + 2))
}

/// Best-case comparison bound of the basic variant for power-of-two
/// `n >= 2`: `n log2 n - 5n/4 + 1`, reported as a real-valued bound.
pub fn c_best(n: u64) -> Result<f64, TheoryError> {
    let k = exact_log2(n, 2)? as f64;
    let n = n as f64;
    Ok(n * k - 1.25 * n + 1.0)
}

/// The information-theoretic comparison floor `log2(n!)`, accumulated as
/// `sum log2 i` (relative error well under 1e-6 at the sizes of interest).
pub fn log2_factorial(n: u64) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for i in 2..=n {
        // Kahan: keep rounding error from accumulating over millions of terms.
        let y = (i as f64).log2() - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Worst-case stack-depth bound of the basic variant,
/// `(log2^2 n + log2 n) / 2`. Requires `n >= 2`.
pub fn depth_bound(n: u64) -> f64 {
    assert!(n >= 2);
    let lg = (n as f64).log2();
    0.5 * (lg * lg + lg)
}
