//! Instrumented in-place sorting built around wave sort: the working set
//! expands from a sorted suffix (up-wave) and is sorted by partitioning
//! around the suffix's median with block swaps (down-wave). Every comparison,
//! swap, and block element move is counted, so runs are reproducible in
//! counter space and comparable against the closed-form bounds in [`theory`].
//!
//! Three wave variants ([`Variant`]) share the same kernels and differ only
//! in expansion policy; [`quicksort`] on the same partition serves as the
//! baseline. [`input`] generates the benchmark sequences deterministically.
//!
//! ```
//! use wavesort::{sort, Algo, Variant};
//!
//! let mut v = vec![3u64, 1, 4, 1, 5, 9, 2, 6];
//! let stats = sort(&mut v, Algo::Wave(Variant::Basic));
//! assert_eq!(v, [1, 1, 2, 3, 4, 5, 6, 9]);
//! assert!(stats.comparisons > 0);
//! ```

mod model;
mod primitives;
mod quick;
mod wave;

pub mod input;
pub mod theory;

use std::fmt;
use std::str::FromStr;

pub use model::{Instrumented, SortStats};
pub use quick::{quicksort, quicksort_by};
pub use wave::{wave_sort, wave_sort_by, Variant};

/// Algorithm selector spanning the wave variants and the baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    Wave(Variant),
    Quicksort,
}

impl Algo {
    pub const ALL: [Algo; 4] = [
        Algo::Wave(Variant::Basic),
        Algo::Wave(Variant::Tradeoff),
        Algo::Wave(Variant::Adaptive),
        Algo::Quicksort,
    ];
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Algo::Wave(Variant::Basic) => "wave-basic",
            Algo::Wave(Variant::Tradeoff) => "wave-tradeoff",
            Algo::Wave(Variant::Adaptive) => "wave-adaptive",
            Algo::Quicksort => "quicksort",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgo(pub String);

impl fmt::Display for UnknownAlgo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown algorithm {:?} (expected wave-basic, wave-tradeoff, wave-adaptive, quicksort)",
            self.0
        )
    }
}

impl std::error::Error for UnknownAlgo {}

impl FromStr for Algo {
    type Err = UnknownAlgo;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "wave-basic" => Ok(Algo::Wave(Variant::Basic)),
            "wave-tradeoff" => Ok(Algo::Wave(Variant::Tradeoff)),
            "wave-adaptive" => Ok(Algo::Wave(Variant::Adaptive)),
            "quicksort" => Ok(Algo::Quicksort),
            _ => Err(UnknownAlgo(s.to_string())),
        }
    }
}

/// Sort with the selected algorithm and a strict-less predicate.
pub fn sort_by<T, F>(data: &mut [T], less_fn: F, algo: Algo) -> SortStats
where
    F: FnMut(&T, &T) -> bool,
{
    match algo {
        Algo::Wave(variant) => wave_sort_by(data, less_fn, variant),
        Algo::Quicksort => quicksort_by(data, less_fn),
    }
}

/// [`sort_by`] with the natural order.
pub fn sort<T: Ord>(data: &mut [T], algo: Algo) -> SortStats {
    sort_by(data, T::lt, algo)
}
