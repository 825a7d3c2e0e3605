//! Bit-mask helpers for vertex sets packed into a `u64`.

use std::cmp::Ordering;

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Packs the bits of `row` selected by `mask` into the low bits, keeping order.
#[inline]
pub fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (i, v) in Bits(mask).enumerate() {
        out |= (row >> v & 1) << i;
    }
    out
}

/// Spreads the low bits of `packed` onto the positions of `mask`.
#[inline]
pub fn expand(packed: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (i, v) in Bits(mask).enumerate() {
        out |= (packed >> i & 1) << v;
    }
    out
}

/// Compares two vertex sets as ascending vertex lists.
pub fn lex_cmp(a: u64, b: u64) -> Ordering {
    Bits(a).cmp(Bits(b))
}

/// Size first, then lexicographic.
pub fn size_lex_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| lex_cmp(a, b))
}

/// All `k`-subsets of the vertices in `within`, in lexicographic order.
pub fn subsets_of_size(within: u64, k: usize) -> Vec<u64> {
    let verts: Vec<usize> = Bits(within).collect();
    let mut out = Vec::new();
    if k > verts.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << verts[i]));
        // advance the rightmost index that can still move
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < verts.len() - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
