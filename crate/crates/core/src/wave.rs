//! The wave sort drivers. Sorting proceeds from the right end: an up-wave
//! grows the working set by prepending unsorted data to the sorted suffix,
//! and a down-wave partitions the unsorted part around the sorted part's
//! median, block-swaps the pivot into place, and recurses. The variants
//! differ in how the working set expands and how small regions are handled,
//! never in the kernels.

use crate::model::{Instrumented, SortStats};

/// Selects one of the three wave sort drivers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Single-element seed, working set doubles per up-wave step.
    Basic,
    /// Eight-element insertion-sorted seed, sixteen-fold expansion, and
    /// insertion sort below twelve elements: trades a few comparisons for
    /// far fewer element moves.
    Tradeoff,
    /// Like [`Variant::Tradeoff`], but the seed is the maximal presorted
    /// (or reversed) tail run, so sorted and reversed inputs short-circuit
    /// in linear time.
    Adaptive,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Basic, Variant::Tradeoff, Variant::Adaptive];
}

/// Sort with the given wave variant and a strict-less predicate, returning
/// the counter snapshot.
pub fn wave_sort_by<T, F>(data: &mut [T], less_fn: F, variant: Variant) -> SortStats
where
    F: FnMut(&T, &T) -> bool,
{
    let n = data.len();
    let mut seq = Instrumented::new(data, less_fn);
    if n >= 2 {
        match variant {
            Variant::Basic => seq.upwave_basic(0, n - 1),
            Variant::Tradeoff => seq.upwave_tradeoff(0, n - 1),
            Variant::Adaptive => seq.upwave_adaptive(0, n - 1),
        }
    }
    seq.finish()
}

/// [`wave_sort_by`] with the natural order.
pub fn wave_sort<T: Ord>(data: &mut [T], variant: Variant) -> SortStats {
    wave_sort_by(data, T::lt, variant)
}

impl<T, F> Instrumented<'_, T, F>
where
    F: FnMut(&T, &T) -> bool,
{
    // ----- basic -----

    pub(crate) fn upwave_basic(&mut self, start: usize, end: usize) {
        if start == end {
            return;
        }
        let mut sorted_start = end;
        let mut left_bound = end - 1;
        let length = end - start + 1;
        while left_bound > start {
            self.downwave_basic(left_bound, sorted_start, end);
            sorted_start = left_bound;
            let sorted_length = end - sorted_start + 1;
            if length < sorted_length << 2 {
                break;
            }
            left_bound = end - (sorted_length << 1) + 1;
        }
        self.downwave_basic(start, sorted_start, end);
    }

    pub(crate) fn downwave_basic(&mut self, start: usize, sorted_start: usize, end: usize) {
        self.ctx.enter();
        self.downwave_basic_inner(start, sorted_start, end);
        self.ctx.leave();
    }

    fn downwave_basic_inner(&mut self, start: usize, sorted_start: usize, end: usize) {
        if sorted_start - start == 0 {
            return;
        }
        let p = sorted_start + (end - sorted_start) / 2;
        let m = self.partition(start, sorted_start, p);
        if m == sorted_start {
            if p == sorted_start {
                self.upwave_basic(start, sorted_start - 1);
                return;
            }
            self.downwave_basic(start, sorted_start, p - 1);
            return;
        }
        self.block_swap(m, sorted_start, p);
        // The pivot now rests at m + p - sorted_start, its final position;
        // both recursions exclude it.
        if m == start {
            if p == sorted_start {
                self.upwave_basic(m + 1, end);
                return;
            }
            self.downwave_basic(m + p - sorted_start + 1, p + 1, end);
            return;
        }
        if p == sorted_start {
            self.upwave_basic(start, m - 1);
            self.upwave_basic(m + 1, end);
            return;
        }
        self.downwave_basic(start, m, m + p - sorted_start - 1);
        self.downwave_basic(m + p - sorted_start + 1, p + 1, end);
    }

    // ----- trade-off -----

    pub(crate) fn upwave_tradeoff(&mut self, start: usize, end: usize) {
        let length = end - start + 1;
        if length == 1 {
            return;
        }
        if length <= 12 {
            self.insert_sort(start, end, end);
            return;
        }
        let mut sorted_start = end - 7;
        self.insert_sort(sorted_start, end, end);
        // The candidate bound may fall left of the region; signed arithmetic
        // keeps the loop guard meaningful there.
        let mut left_bound = end as i64 - 127;
        while left_bound > start as i64 {
            self.downwave_tradeoff(left_bound as usize, sorted_start, end);
            sorted_start = left_bound as usize;
            let mut sorted_length = (end - sorted_start + 1) as i64;
            if (length as i64) <= sorted_length << 6 {
                break;
            }
            sorted_length <<= 4;
            left_bound = end as i64 - sorted_length + 1;
        }
        self.downwave_tradeoff(start, sorted_start, end);
    }

    pub(crate) fn downwave_tradeoff(&mut self, start: usize, sorted_start: usize, end: usize) {
        self.ctx.enter();
        self.downwave_tradeoff_inner(start, sorted_start, end);
        self.ctx.leave();
    }

    fn downwave_tradeoff_inner(&mut self, start: usize, sorted_start: usize, end: usize) {
        let unsorted_length = sorted_start - start;
        if unsorted_length == 0 {
            return;
        }
        if end - sorted_start == 0 {
            // Pivot pool exhausted: insertion-sort small leftovers, restart
            // the wave on anything larger.
            if unsorted_length < 12 {
                self.insert_sort(start, end, end);
                return;
            }
            self.upwave_tradeoff(start, end);
            return;
        }
        let p = sorted_start + (end - sorted_start) / 2;
        let m = self.partition(start, sorted_start, p);
        if m == sorted_start {
            if p == sorted_start {
                self.upwave_tradeoff(start, sorted_start - 1);
                return;
            }
            self.downwave_tradeoff(start, sorted_start, p - 1);
            return;
        }
        self.block_swap(m, sorted_start, p);
        if m == start {
            if p == sorted_start {
                self.upwave_tradeoff(m + 1, end);
                return;
            }
            self.downwave_tradeoff(m + p - sorted_start + 1, p + 1, end);
            return;
        }
        if p == sorted_start {
            self.upwave_tradeoff(start, m - 1);
            self.upwave_tradeoff(m + 1, end);
            return;
        }
        self.downwave_tradeoff(start, m, m + p - sorted_start - 1);
        self.downwave_tradeoff(m + p - sorted_start + 1, p + 1, end);
    }

    // ----- adaptive -----

    pub(crate) fn upwave_adaptive(&mut self, start: usize, end: usize) {
        let length = end - start + 1;
        if length == 1 {
            return;
        }
        if length <= 12 {
            self.insert_sort(start, end, end);
            return;
        }
        let mut sorted_start = self.pre_sorted(start, end);
        let mut sorted_length = (end - sorted_start + 1) as i64;
        if sorted_length < 8 {
            self.insert_sort(end - 7, sorted_start, end);
            sorted_start = end - 7;
            sorted_length = 8;
        }
        sorted_length <<= 4;
        let mut left_bound = end as i64 - sorted_length + 1;
        while left_bound > start as i64 {
            self.downwave_adaptive(left_bound as usize, sorted_start, end);
            sorted_start = left_bound as usize;
            sorted_length = (end - sorted_start + 1) as i64;
            if (length as i64) <= sorted_length << 6 {
                break;
            }
            sorted_length <<= 4;
            left_bound = end as i64 - sorted_length + 1;
        }
        self.downwave_adaptive(start, sorted_start, end);
    }

    pub(crate) fn downwave_adaptive(&mut self, start: usize, sorted_start: usize, end: usize) {
        self.ctx.enter();
        self.downwave_adaptive_inner(start, sorted_start, end);
        self.ctx.leave();
    }

    fn downwave_adaptive_inner(&mut self, start: usize, sorted_start: usize, end: usize) {
        let unsorted_length = sorted_start - start;
        if unsorted_length == 0 {
            return;
        }
        if end - sorted_start == 0 {
            if unsorted_length < 12 {
                self.insert_sort(start, end, end);
                return;
            }
            self.upwave_adaptive(start, end);
            return;
        }
        let p = sorted_start + (end - sorted_start) / 2;
        let m = self.partition(start, sorted_start, p);
        if m == sorted_start {
            if p == sorted_start {
                self.upwave_adaptive(start, sorted_start - 1);
                return;
            }
            self.downwave_adaptive(start, sorted_start, p - 1);
            return;
        }
        self.block_swap(m, sorted_start, p);
        if m == start {
            if p == sorted_start {
                self.upwave_adaptive(m + 1, end);
                return;
            }
            self.downwave_adaptive(m + p - sorted_start + 1, p + 1, end);
            return;
        }
        if p == sorted_start {
            self.upwave_adaptive(start, m - 1);
            self.upwave_adaptive(m + 1, end);
            return;
        }
        self.downwave_adaptive(start, m, m + p - sorted_start - 1);
        self.downwave_adaptive(m + p - sorted_start + 1, p + 1, end);
    }

    /// Scan backwards from `end` for the maximal tail run that is either
    /// strictly ascending at its first probed pair (kept as is) or
    /// non-ascending (reversed in place). Returns the run's start index;
    /// `[t, end]` is sorted afterwards. One comparison per scanned pair.
    pub fn pre_sorted(&mut self, start: usize, end: usize) -> usize {
        assert!(start <= end && end < self.data.len());
        let mut ascending = false;
        let mut i = end;
        while i > start {
            if ascending {
                if self.less(i, i - 1) {
                    return i;
                }
                i -= 1;
                continue;
            }
            if self.less(i - 1, i) {
                if i == end {
                    ascending = true;
                    i -= 1;
                    continue;
                }
                self.reverse_range(i, end);
                return i;
            }
            i -= 1;
        }
        if ascending {
            return start;
        }
        self.reverse_range(start, end);
        start
    }

    /// Reverse `[start, end]` in place; counts one swap per exchanged pair.
    pub fn reverse_range(&mut self, start: usize, end: usize) {
        assert!(start <= end && end < self.data.len());
        self.data[start..=end].reverse();
        let len = end - start + 1;
        self.ctx.swaps += (len / 2) as u64;
    }
}
