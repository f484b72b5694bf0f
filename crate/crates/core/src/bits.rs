//! Word-level helpers for fixed-width vertex bitsets.

use smallvec::SmallVec;

/// Inline storage covers graphs up to 256 vertices without touching the heap.
pub(crate) type Words = SmallVec<[u64; 4]>;

#[inline]
pub(crate) fn words_for(order: usize) -> usize {
    order.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn zeros(words: usize) -> Words {
    SmallVec::from_elem(0, words)
}

/// All bits `0..order` set.
#[cfg(test)]
pub(crate) fn full(order: usize) -> Words {
    let words = words_for(order);
    let mut out = zeros(words);
    for (w, word) in out.iter_mut().enumerate() {
        let lo = w * 64;
        if order >= lo + 64 {
            *word = u64::MAX;
        } else if order > lo {
            *word = (1u64 << (order - lo)) - 1;
        }
    }
    out
}

#[inline]
pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i >> 6] |= 1u64 << (i & 63);
}

#[inline]
pub(crate) fn clear(bits: &mut [u64], i: usize) {
    bits[i >> 6] &= !(1u64 << (i & 63));
}

#[inline]
pub(crate) fn test(bits: &[u64], i: usize) -> bool {
    bits[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub(crate) fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(bits: &[u64]) -> bool {
    bits.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

#[inline]
pub(crate) fn andnot_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

#[inline]
pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Ascending indices of the set bits.
pub(crate) fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let tz = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + tz)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_masks_tail_word() {
        let f = full(70);
        assert_eq!(f.len(), 2);
        assert_eq!(count(&f), 70);
        assert!(test(&f, 69));
        assert!(!test(&f, 70));
        assert_eq!(count(&full(64)), 64);
    }

    #[test]
    fn ones_iterates_in_order() {
        let mut b = zeros(3);
        for i in [0, 5, 63, 64, 130] {
            set(&mut b, i);
        }
        assert_eq!(ones(&b).collect::<Vec<_>>(), vec![0, 5, 63, 64, 130]);
        assert_eq!(ones(&b).next(), Some(0));
        clear(&mut b, 0);
        assert_eq!(ones(&b).next(), Some(5));
    }
}
