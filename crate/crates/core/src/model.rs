//! The instrumented sequence abstraction shared by every algorithm in this
//! crate: a mutable slice, a strict-less comparator, and the operation
//! counters that make runs reproducible in counter space.

/// Final counter snapshot of one completed sort invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SortStats {
    /// Length of the sorted sequence.
    pub n: usize,
    /// Calls to the strict-less predicate.
    pub comparisons: u64,
    /// Pairwise element exchanges.
    pub swaps: u64,
    /// Elements relocated by block operations (block swaps and insertion
    /// shifts), counted by the block-accounting convention: `2*lr` for a
    /// short-right swap, `ll + lr` for a short-left swap, `m - i + 1` for an
    /// insertion landing at `m`.
    pub block_moves: u64,
    /// High-water mark of the partition-level recursion depth (down-wave
    /// frames; up-wave expansion frames are iterative bookkeeping and do not
    /// push partition state).
    pub max_depth: u32,
}

/// Mutable counters carried through one sort invocation.
///
/// Counters only ever increase while a sort runs; `depth` returns to zero
/// when the sort returns. One context never outlives its invocation, so
/// trials on disjoint slices can run in parallel.
#[derive(Debug, Default, Clone)]
pub(crate) struct SortContext {
    pub(crate) comparisons: u64,
    pub(crate) swaps: u64,
    pub(crate) block_moves: u64,
    pub(crate) depth: u32,
    pub(crate) max_depth: u32,
}

impl SortContext {
    pub(crate) fn enter(&mut self) {
        self.depth += 1;
        if self.depth > self.max_depth {
            self.max_depth = self.depth;
        }
    }

    pub(crate) fn leave(&mut self) {
        debug_assert!(self.depth > 0);
        self.depth -= 1;
    }

    /// Snapshot of a completed invocation. Calling this mid-recursion is a
    /// contract violation.
    pub(crate) fn snapshot(&self, n: usize) -> SortStats {
        assert!(
            self.depth == 0,
            "snapshot taken at recursion depth {}, expected 0",
            self.depth
        );
        SortStats {
            n,
            comparisons: self.comparisons,
            swaps: self.swaps,
            block_moves: self.block_moves,
            max_depth: self.max_depth,
        }
    }
}

/// A slice under instrumentation: every comparison flows through [`less`]
/// and every pairwise exchange through [`swap`], so the counters account for
/// all work an algorithm performs on the data.
///
/// `less` must be a strict weak order (irreflexive, transitive); out-of-range
/// indices are programming errors and panic.
///
/// [`less`]: Instrumented::less
/// [`swap`]: Instrumented::swap
pub struct Instrumented<'a, T, F> {
    pub(crate) data: &'a mut [T],
    pub(crate) less_fn: F,
    pub(crate) ctx: SortContext,
}

impl<'a, T, F> Instrumented<'a, T, F>
where
    F: FnMut(&T, &T) -> bool,
{
    pub fn new(data: &'a mut [T], less_fn: F) -> Self {
        Instrumented {
            data,
            less_fn,
            ctx: SortContext::default(),
        }
    }

    /// Does the element at `i` order strictly before the element at `j`?
    /// Counts exactly one comparison.
    #[inline]
    pub fn less(&mut self, i: usize, j: usize) -> bool {
        self.ctx.comparisons += 1;
        (self.less_fn)(&self.data[i], &self.data[j])
    }

    /// Exchange the elements at `i` and `j`. Counts one swap, even when
    /// `i == j`.
    #[inline]
    pub fn swap(&mut self, i: usize, j: usize) {
        self.ctx.swaps += 1;
        self.data.swap(i, j);
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn comparisons(&self) -> u64 {
        self.ctx.comparisons
    }

    pub fn swaps(&self) -> u64 {
        self.ctx.swaps
    }

    pub fn block_moves(&self) -> u64 {
        self.ctx.block_moves
    }

    pub fn max_depth(&self) -> u32 {
        self.ctx.max_depth
    }

    /// Consume the instrument and return the counter snapshot.
    pub fn finish(self) -> SortStats {
        let n = self.data.len();
        self.ctx.snapshot(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(a: &i64, b: &i64) -> bool {
        a < b
    }

    #[test]
    fn less_counts_one_comparison() {
        let mut s = [3i64, 5];
        let mut seq = Instrumented::new(&mut s, lt);
        assert!(seq.less(0, 1));
        assert_eq!(seq.comparisons(), 1);

        let mut s = [5i64, 3];
        let mut seq = Instrumented::new(&mut s, lt);
        assert!(!seq.less(0, 1));
        assert_eq!(seq.comparisons(), 1);
    }

    #[test]
    fn less_is_irreflexive_on_equal_keys() {
        let mut s = [4i64, 4];
        let mut seq = Instrumented::new(&mut s, lt);
        assert!(!seq.less(0, 1));
        assert!(!seq.less(1, 0));
        assert_eq!(seq.comparisons(), 2);
    }

    #[test]
    fn swap_exchanges_and_counts() {
        let mut s = [1i64, 2];
        let mut seq = Instrumented::new(&mut s, lt);
        seq.swap(0, 1);
        assert_eq!(seq.swaps(), 1);
        assert_eq!(s, [2, 1]);

        let mut s = ['a', 'b', 'c'];
        let mut seq = Instrumented::new(&mut s, |a, b| a < b);
        seq.swap(0, 2);
        assert_eq!(seq.swaps(), 1);
        assert_eq!(s, ['c', 'b', 'a']);
    }

    #[test]
    fn self_swap_still_counts() {
        let mut s = [7i64];
        let mut seq = Instrumented::new(&mut s, lt);
        seq.swap(0, 0);
        assert_eq!(seq.swaps(), 1);
        assert_eq!(s, [7]);
    }

    #[test]
    fn fresh_context_snapshots_to_zero() {
        let mut s: [i64; 0] = [];
        let seq = Instrumented::new(&mut s, lt);
        let stats = seq.finish();
        assert_eq!(
            stats,
            SortStats {
                n: 0,
                comparisons: 0,
                swaps: 0,
                block_moves: 0,
                max_depth: 0
            }
        );
    }

    #[test]
    #[should_panic(expected = "recursion depth")]
    fn snapshot_mid_recursion_is_a_contract_violation() {
        let mut ctx = SortContext::default();
        ctx.enter();
        let _ = ctx.snapshot(1);
    }

    #[test]
    fn depth_tracks_high_water_mark() {
        let mut ctx = SortContext::default();
        ctx.enter();
        ctx.enter();
        ctx.leave();
        ctx.enter();
        ctx.leave();
        ctx.leave();
        assert_eq!(ctx.max_depth, 2);
        assert_eq!(ctx.depth, 0);
    }
}
