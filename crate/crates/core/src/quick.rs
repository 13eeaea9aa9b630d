//! Classic quicksort on the same `n - 1`-comparison partition, used as the
//! comparison baseline. Pivot is the last element of each subrange; the
//! recursion takes the smaller side and iterates on the larger, keeping the
//! stack logarithmic.

use crate::model::{Instrumented, SortStats};

/// Quicksort with a strict-less predicate, returning the counter snapshot.
pub fn quicksort_by<T, F>(data: &mut [T], less_fn: F) -> SortStats
where
    F: FnMut(&T, &T) -> bool,
{
    let n = data.len();
    let mut seq = Instrumented::new(data, less_fn);
    if n >= 2 {
        seq.quick_range(0, n - 1);
    }
    seq.finish()
}

/// [`quicksort_by`] with the natural order.
pub fn quicksort<T: Ord>(data: &mut [T]) -> SortStats {
    quicksort_by(data, T::lt)
}

impl<T, F> Instrumented<'_, T, F>
where
    F: FnMut(&T, &T) -> bool,
{
    pub(crate) fn quick_range(&mut self, mut l: usize, mut r: usize) {
        self.ctx.enter();
        while l < r {
            let m = self.partition(l, r, r);
            if m != r {
                self.swap(m, r);
            }
            let left_len = m - l;
            let right_len = r - m;
            if left_len < right_len {
                if left_len > 1 {
                    self.quick_range(l, m - 1);
                }
                l = m + 1;
            } else {
                if right_len > 1 {
                    self.quick_range(m + 1, r);
                }
                r = m - 1;
            }
        }
        self.ctx.leave();
    }
}
