//! The `verify` subcommand: a self-contained property battery over the
//! kernels and all four algorithms, reporting one line per check.

use wavesort::input::{generate, shuffled, InputSpec, Pattern, SplitMix64};
use wavesort::theory::{c_worst, depth_bound};
use wavesort::{sort, Algo, Instrumented, Variant};

pub struct Check {
    pub name: String,
    pub result: Result<(), String>,
}

fn check(name: impl Into<String>, result: Result<(), String>) -> Check {
    Check {
        name: name.into(),
        result,
    }
}

fn verified_sort(algo: Algo, data: &[u64]) -> Result<(), String> {
    let mut s = data.to_vec();
    sort(&mut s, algo);
    let mut expected = data.to_vec();
    expected.sort_unstable();
    if s == expected {
        Ok(())
    } else {
        Err("output is not the sorted permutation of the input".to_string())
    }
}

/// Run the full battery across the given sizes.
pub fn run(sizes: &[usize]) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check(
        "partition comparison count on 10^4 random regions",
        partition_counts(),
    ));
    checks.push(check(
        "block-swap contract exhaustive ll,lr <= 6",
        block_swap_contract(),
    ));
    checks.push(check(
        "short-left kernel equals rotation for regions <= 12",
        rotation_oracle(),
    ));

    for &n in sizes {
        let patterns = [
            Pattern::Shuffled,
            Pattern::Sorted,
            Pattern::Reversed,
            Pattern::Sawtooth(16),
            Pattern::OrganPipe,
            Pattern::FewUnique(8),
        ];
        for algo in Algo::ALL {
            for pattern in patterns {
                let spec = InputSpec {
                    n,
                    pattern,
                    seed: 1,
                };
                checks.push(check(
                    format!("{algo} sorts {pattern} n={n}"),
                    verified_sort(algo, &generate(&spec)),
                ));
            }
        }
        checks.push(check(
            format!("wave variants agree on output n={n}"),
            variants_agree(n),
        ));
        if n >= 13 {
            checks.push(check(
                format!("adaptive short-circuit exact n={n}"),
                adaptive_exact(n),
            ));
        }
        if n >= 4 && n.is_power_of_two() {
            checks.push(check(
                format!("worst-case comparisons == c_worst n={n}"),
                worst_exact(n),
            ));
            checks.push(check(
                format!("depth within bounds n={n}"),
                depth_within_bounds(n),
            ));
        }
    }
    checks
}

fn partition_counts() -> Result<(), String> {
    let mut rng = SplitMix64::new(0xa5a5);
    for case in 0..10_000 {
        let unsorted = (rng.next_u64() % 40) as usize;
        let sorted = 1 + (rng.next_u64() % 20) as usize;
        let mut s: Vec<u64> = (0..unsorted + sorted)
            .map(|_| rng.next_u64() % 64)
            .collect();
        let end = s.len() - 1;
        s[unsorted..].sort_unstable();
        let p = unsorted + (end - unsorted) / 2;
        let mut seq = Instrumented::new(&mut s, |a: &u64, b| a < b);
        seq.partition(0, unsorted, p);
        if seq.comparisons() != unsorted as u64 {
            return Err(format!(
                "case {case}: {} comparisons for region length {unsorted}",
                seq.comparisons()
            ));
        }
    }
    Ok(())
}

fn block_swap_contract() -> Result<(), String> {
    for ll in 1..=6usize {
        for lr in 1..=6usize {
            let region: Vec<(u8, usize)> = (0..ll)
                .map(|i| (0u8, i))
                .chain((0..lr).map(|i| (1u8, i)))
                .collect();
            let mut s = region.clone();
            let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
            seq.block_swap(0, ll, ll + lr - 1);
            let front_ok = (0..lr).all(|i| s[i] == (1u8, i));
            let mut a = s.clone();
            a.sort_unstable();
            let mut b = region;
            b.sort_unstable();
            if !front_ok || a != b {
                return Err(format!("contract violated at ll={ll} lr={lr}"));
            }
        }
    }
    Ok(())
}

fn rotation_oracle() -> Result<(), String> {
    for len in 3..=12usize {
        for ll in 1..len {
            if ll >= len - ll {
                continue;
            }
            let mut s: Vec<u64> = (0..len as u64).collect();
            let mut expected = s.clone();
            expected.rotate_left(ll);
            let mut seq = Instrumented::new(&mut s, |a: &u64, b| a < b);
            seq.block_swap_sl(0, len - 1, ll);
            if s != expected {
                return Err(format!("rotation mismatch at len={len} ll={ll}"));
            }
        }
    }
    Ok(())
}

fn variants_agree(n: usize) -> Result<(), String> {
    for seed in 1..=3u64 {
        let data = shuffled(n, seed);
        let mut reference = data.clone();
        sort(&mut reference, Algo::Wave(Variant::Basic));
        for variant in [Variant::Tradeoff, Variant::Adaptive] {
            let mut s = data.clone();
            sort(&mut s, Algo::Wave(variant));
            if s != reference {
                return Err(format!("{variant:?} disagrees with basic at seed {seed}"));
            }
        }
    }
    Ok(())
}

fn adaptive_exact(n: usize) -> Result<(), String> {
    let mut s: Vec<u64> = (0..n as u64).collect();
    let stats = sort(&mut s, Algo::Wave(Variant::Adaptive));
    if stats.comparisons != (n - 1) as u64 || stats.swaps != 0 {
        return Err(format!(
            "sorted input: {} comparisons, {} swaps (want {}, 0)",
            stats.comparisons,
            stats.swaps,
            n - 1
        ));
    }
    let mut s: Vec<u64> = (0..n as u64).rev().collect();
    let stats = sort(&mut s, Algo::Wave(Variant::Adaptive));
    if stats.comparisons != (n - 1) as u64 || stats.swaps != (n / 2) as u64 {
        return Err(format!(
            "reversed input: {} comparisons, {} swaps (want {}, {})",
            stats.comparisons,
            stats.swaps,
            n - 1,
            n / 2
        ));
    }
    Ok(())
}

fn worst_exact(n: usize) -> Result<(), String> {
    let mut s: Vec<u64> = (0..n as u64).collect();
    let stats = sort(&mut s, Algo::Wave(Variant::Basic));
    let expected = c_worst(n as u64).map_err(|e| e.to_string())?;
    if stats.comparisons != expected {
        return Err(format!(
            "{} comparisons, c_worst is {expected}",
            stats.comparisons
        ));
    }
    Ok(())
}

fn depth_within_bounds(n: usize) -> Result<(), String> {
    let mut s: Vec<u64> = (0..n as u64).collect();
    let stats = sort(&mut s, Algo::Wave(Variant::Basic));
    let bound = depth_bound(n as u64);
    if (stats.max_depth as f64) > bound {
        return Err(format!(
            "sorted: depth {} exceeds bound {bound}",
            stats.max_depth
        ));
    }
    let lg = (n as f64).log2();
    for seed in 1..=3u64 {
        let mut s = shuffled(n, seed);
        let stats = sort(&mut s, Algo::Wave(Variant::Basic));
        if (stats.max_depth as f64) > 4.0 * lg {
            return Err(format!(
                "shuffled seed {seed}: depth {} exceeds 4*log2 n",
                stats.max_depth
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_passes_on_reference_sizes() {
        let checks = run(&[64, 1000, 1024]);
        for c in &checks {
            assert!(c.result.is_ok(), "{}: {:?}", c.name, c.result);
        }
        // Power-of-two sizes contribute the exactness checks.
        assert!(checks.iter().any(|c| c.name.contains("c_worst n=1024")));
        assert!(checks
            .iter()
            .any(|c| c.name.contains("adaptive short-circuit exact n=1000")));
    }
}
