//! The three kernels all sort variants are built from: a partition that
//! spends exactly `r - l` comparisons on the region `[l, r)`, the pair of
//! block-swap routines that move every affected element exactly once, and a
//! binary-search insertion sort.

use std::mem::ManuallyDrop;
use std::ptr;

use crate::model::Instrumented;

impl<T, F> Instrumented<'_, T, F>
where
    F: FnMut(&T, &T) -> bool,
{
    /// Partition the region `[l, r)` around the pivot at index `p`, which
    /// must lie outside the region. Returns the split index `m` in `[l, r]`:
    /// afterwards no element of `[l, m)` orders after the pivot and no
    /// element of `[m, r)` orders before it.
    ///
    /// Costs exactly `r - l` comparisons; an empty region (`l == r`) costs
    /// none.
    pub fn partition(&mut self, l: usize, r: usize, p: usize) -> usize {
        assert!(l <= r && r <= self.data.len() && p < self.data.len());
        debug_assert!(p < l || p >= r, "pivot must sit outside the scanned region");
        let mut i = l;
        let mut j = r;
        loop {
            loop {
                if i == j {
                    return i;
                }
                if self.less(p, i) {
                    break;
                }
                i += 1;
            }
            loop {
                j -= 1;
                if j == i {
                    return i;
                }
                if self.less(j, p) {
                    break;
                }
            }
            self.swap(i, j);
            i += 1;
        }
    }

    /// Exchange the adjacent blocks `[m, r)` (left, length `ll = r - m`) and
    /// `[r, p]` (right, length `lr = p - r + 1`): the right block lands in
    /// order at `m`, displaced left-block elements fill the rest.
    ///
    /// Counter deltas: nothing for `ll == 0`; one swap for `lr == 1`;
    /// otherwise `2*lr` block moves for the short-right kernel or `ll + lr`
    /// for the short-left kernel.
    pub fn block_swap(&mut self, m: usize, r: usize, p: usize) {
        assert!(m <= r && r <= p && p < self.data.len());
        let ll = r - m;
        if ll == 0 {
            return;
        }
        let lr = p - r + 1;
        if lr == 1 {
            self.swap(m, p);
            return;
        }
        if lr <= ll {
            self.block_swap_sr(m, r, p);
            self.ctx.block_moves += (lr as u64) << 1;
            return;
        }
        self.block_swap_sl(m, p, ll);
        self.ctx.block_moves += (ll + lr) as u64;
    }

    /// Short-left kernel: the region `[m, p]` is rotated left by `ll`, the
    /// length of the (strictly shorter) left block. A cycle-leader walk
    /// moves each element exactly once, spilling one element per cycle into
    /// a temporary.
    ///
    /// Requires `1 <= ll < lr`. Counter accounting is the dispatcher's job.
    pub fn block_swap_sl(&mut self, m: usize, p: usize, ll: usize) {
        assert!(m <= p && p < self.data.len());
        assert!(
            ll >= 1 && ll < p - m + 1 - ll,
            "left block must be strictly shorter"
        );
        // The walk duplicates one slot at a time and resolves every
        // duplicate before the loop ends, so plain bitwise copies are sound:
        // each original value is dropped exactly once by its final owner.
        unsafe {
            let base = self.data.as_mut_ptr();
            let mut tmp = ManuallyDrop::new(ptr::read(base.add(m)));
            let mut init = m;
            let mut j = m;
            let nm = p - ll + 1;
            for _ in 0..(p - m + 1) {
                let k;
                if j >= nm {
                    k = j - nm + m;
                    if k == init {
                        init += 1;
                        ptr::write(base.add(j), ManuallyDrop::take(&mut tmp));
                        j = init;
                        tmp = ManuallyDrop::new(ptr::read(base.add(j)));
                        continue;
                    }
                } else {
                    k = j + ll;
                }
                ptr::copy_nonoverlapping(base.add(k), base.add(j), 1);
                j = k;
            }
        }
    }

    /// Short-right kernel: the right block `[r, p]` lands in order at `m`;
    /// only as many left-block elements as the right block holds are
    /// displaced (into `[r, p]`, reversed), the middle stays put. One
    /// temporary, each touched element moves once.
    ///
    /// Requires `1 <= lr <= ll`. Counter accounting is the dispatcher's job.
    pub fn block_swap_sr(&mut self, m: usize, r: usize, p: usize) {
        assert!(m < r && r <= p && p < self.data.len());
        let (ll, lr) = (r - m, p - r + 1);
        assert!(lr <= ll, "right block must not be longer");
        unsafe {
            let base = self.data.as_mut_ptr();
            let mut i = m;
            let tmp = ManuallyDrop::new(ptr::read(base.add(i)));
            let mut j = r;
            while j < p {
                ptr::copy_nonoverlapping(base.add(j), base.add(i), 1);
                i += 1;
                ptr::copy_nonoverlapping(base.add(i), base.add(j), 1);
                j += 1;
            }
            ptr::copy_nonoverlapping(base.add(j), base.add(i), 1);
            ptr::write(base.add(j), ManuallyDrop::into_inner(tmp));
        }
    }

    /// Insert the elements of `[l, sorted_start)` one by one into the sorted
    /// suffix `[sorted_start, r]`, right to left, locating each slot by
    /// binary search. Equal keys land after existing equals. Each insertion
    /// landing at `m` shifts `[i+1, m]` down and adds `m - i + 1` block
    /// moves.
    pub fn insert_sort(&mut self, l: usize, sorted_start: usize, r: usize) {
        assert!(l <= sorted_start && sorted_start <= r && r < self.data.len());
        let mut sorted_index = sorted_start;
        while sorted_index > l {
            sorted_index -= 1;
            let mut low = sorted_index;
            let mut hi = r;
            let mut m = (low + hi + 1) >> 1;
            while low < hi {
                if self.less(sorted_index, m) {
                    hi = m - 1;
                } else {
                    low = m;
                }
                m = (low + hi + 1) >> 1;
            }
            if m > sorted_index {
                self.data[sorted_index..=m].rotate_left(1);
                self.ctx.block_moves += (m - sorted_index + 1) as u64;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::model::Instrumented;

    fn lt(a: &i64, b: &i64) -> bool {
        a < b
    }

    #[test]
    fn partition_empty_region() {
        let mut s = [9i64, 8, 7, 1];
        let mut seq = Instrumented::new(&mut s, lt);
        assert_eq!(seq.partition(3, 3, 3), 3);
        assert_eq!(seq.comparisons(), 0);
        assert_eq!(seq.swaps(), 0);
    }

    #[test]
    fn partition_hand_trace() {
        let mut s = [5i64, 1, 4, 2, 3];
        let mut seq = Instrumented::new(&mut s, lt);
        let m = seq.partition(0, 4, 4);
        assert_eq!(m, 2);
        assert_eq!(seq.comparisons(), 4);
        assert_eq!(seq.swaps(), 1);
        assert_eq!(s, [2, 1, 4, 5, 3]);
    }

    #[test]
    fn partition_all_below_pivot() {
        let mut s = [1i64, 2, 9];
        let mut seq = Instrumented::new(&mut s, lt);
        let m = seq.partition(0, 2, 2);
        assert_eq!(m, 2);
        assert_eq!(seq.comparisons(), 2);
        assert_eq!(seq.swaps(), 0);
        assert_eq!(s, [1, 2, 9]);
    }

    fn block_region(ll: usize, lr: usize) -> Vec<(u8, usize)> {
        // left block tagged 0, right block tagged 1, both position-stamped
        (0..ll)
            .map(|i| (0u8, i))
            .chain((0..lr).map(|i| (1u8, i)))
            .collect()
    }

    #[test]
    fn block_swap_sl_matches_hand_traces() {
        // [A0,B0,B1,B2] rotated by ll=1 -> [B0,B1,B2,A0]
        let mut s = block_region(1, 3);
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap_sl(0, 3, 1);
        assert_eq!(s, vec![(1, 0), (1, 1), (1, 2), (0, 0)]);

        // [A0,A1,B0,B1,B2] rotated by ll=2 -> [B0,B1,B2,A0,A1]
        let mut s = block_region(2, 3);
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap_sl(0, 4, 2);
        assert_eq!(s, vec![(1, 0), (1, 1), (1, 2), (0, 0), (0, 1)]);
    }

    #[test]
    fn block_swap_sl_equals_rotation_on_all_small_regions() {
        for len in 2..=12usize {
            for ll in 1..len {
                let lr = len - ll;
                if ll >= lr {
                    continue;
                }
                let mut s: Vec<usize> = (0..len).collect();
                let mut expected = s.clone();
                expected.rotate_left(ll);
                let mut seq = Instrumented::new(&mut s, |a: &usize, b| a < b);
                seq.block_swap_sl(0, len - 1, ll);
                assert_eq!(s, expected, "len={len} ll={ll}");
            }
        }
    }

    #[test]
    fn block_swap_sr_matches_hand_traces() {
        let mut s = block_region(3, 2);
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap_sr(0, 3, 4);
        assert_eq!(s, vec![(1, 0), (1, 1), (0, 2), (0, 1), (0, 0)]);

        let mut s = block_region(1, 1);
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap_sr(0, 1, 1);
        assert_eq!(s, vec![(1, 0), (0, 0)]);

        let mut s = block_region(2, 1);
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap_sr(0, 2, 2);
        assert_eq!(s, vec![(1, 0), (0, 1), (0, 0)]);
    }

    #[test]
    fn block_swap_contract_exhaustive() {
        // Right block must land in order at the destination and the region
        // multiset must be preserved, for every block shape up to 6x6.
        for ll in 0..=6usize {
            for lr in 1..=6usize {
                let mut s = block_region(ll, lr);
                let original = s.clone();
                let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
                seq.block_swap(0, ll, ll + lr - 1);

                let expected_front: Vec<(u8, usize)> = (0..lr).map(|i| (1u8, i)).collect();
                assert_eq!(&s[..lr], &expected_front[..], "ll={ll} lr={lr}");

                let mut sorted_after = s.clone();
                sorted_after.sort();
                let mut sorted_before = original;
                sorted_before.sort();
                assert_eq!(sorted_after, sorted_before, "ll={ll} lr={lr}");
            }
        }
    }

    #[test]
    fn block_swap_accounting() {
        // ll == 0: untouched, no counters.
        let mut s = block_region(0, 3);
        let before = s.clone();
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap(0, 0, 2);
        assert_eq!(seq.swaps() + seq.block_moves(), 0);
        assert_eq!(s, before);

        // lr == 1: one swap, no block moves.
        let mut s = block_region(4, 1);
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap(0, 4, 4);
        assert_eq!(seq.swaps(), 1);
        assert_eq!(seq.block_moves(), 0);

        // lr <= ll: short right, 2*lr moves.
        let mut s = block_region(3, 2);
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap(0, 3, 4);
        assert_eq!(seq.block_moves(), 4);
        assert_eq!(seq.swaps(), 0);

        // lr > ll: short left, ll + lr moves.
        let mut s = block_region(1, 3);
        let mut seq = Instrumented::new(&mut s, |a: &(u8, usize), b| a < b);
        seq.block_swap(0, 1, 3);
        assert_eq!(seq.block_moves(), 4);
        assert_eq!(seq.swaps(), 0);
    }

    #[test]
    fn block_swap_handles_non_copy_elements() {
        let mut s: Vec<String> = ["a0", "a1", "b0", "b1", "b2"]
            .iter()
            .map(|x| x.to_string())
            .collect();
        let mut seq = Instrumented::new(&mut s, |a: &String, b| a < b);
        seq.block_swap(0, 2, 4);
        assert_eq!(s, vec!["b0", "b1", "b2", "a0", "a1"]);

        let mut s: Vec<String> = ["a0", "a1", "a2", "b0"]
            .iter()
            .map(|x| x.to_string())
            .collect();
        let mut seq = Instrumented::new(&mut s, |a: &String, b| a < b);
        seq.block_swap(0, 3, 3);
        assert_eq!(s, vec!["b0", "a1", "a2", "a0"]);
    }

    #[test]
    fn insert_sort_inserts_prefix() {
        let mut s = [2i64, 1, 3];
        let mut seq = Instrumented::new(&mut s, lt);
        seq.insert_sort(0, 1, 2);
        assert_eq!(s, [1, 2, 3]);
    }

    #[test]
    fn insert_sort_sorted_input_moves_nothing() {
        let mut s = [1i64, 2, 3, 4];
        let mut seq = Instrumented::new(&mut s, lt);
        seq.insert_sort(0, 3, 3);
        assert_eq!(seq.block_moves(), 0);
        assert_eq!(s, [1, 2, 3, 4]);
    }

    #[test]
    fn insert_sort_single_element_range() {
        let mut s = [5i64];
        let mut seq = Instrumented::new(&mut s, lt);
        seq.insert_sort(0, 0, 0);
        assert_eq!(seq.comparisons(), 0);
        assert_eq!(s, [5]);
    }

    #[test]
    fn insert_sort_move_accounting() {
        // Inserting 9's left neighbour 2 at position 1 shifts 2 slots.
        let mut s = [9i64, 1, 2, 3];
        let mut seq = Instrumented::new(&mut s, lt);
        seq.insert_sort(0, 1, 3);
        // 9 travels to index 3: moves 3-0+1 = 4.
        assert_eq!(seq.block_moves(), 4);
        assert_eq!(s, [1, 2, 3, 9]);
    }

    #[test]
    fn insert_sort_places_equal_keys_after_existing() {
        let mut s = [(5i64, 'n'), (1, 'a'), (5, 'b'), (9, 'c')];
        let mut seq = Instrumented::new(&mut s, |a: &(i64, char), b| a.0 < b.0);
        seq.insert_sort(0, 1, 3);
        // The incoming 5 goes after the resident 5.
        assert_eq!(s, [(1, 'a'), (5, 'b'), (5, 'n'), (9, 'c')]);
    }

    #[test]
    fn insert_sort_exhaustive_permutations() {
        use itertools::Itertools;
        for len in 1..=8usize {
            for perm in (0..len).permutations(len) {
                let mut s = perm.clone();
                let mut seq = Instrumented::new(&mut s, |a: &usize, b| a < b);
                seq.insert_sort(0, len - 1, len - 1);
                let mut expected = perm.clone();
                expected.sort_unstable();
                assert_eq!(s, expected, "perm={perm:?}");
            }
        }
    }
}
