//! Fixed-width subsets of a ground set of at most 64 elements.
//!
//! Bit `i` stands for the element with internal index `i`, i.e. the `i`-th
//! smallest label of the ground set.

use std::cmp::Ordering;
use std::fmt;

/// Maximum supported ground-set size.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// All elements `0..n`.
    pub fn full(n: usize) -> Subset {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        Subset(it.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(self, i: usize) -> Subset {
        Subset(self.0 | (1u64 << i))
    }

    #[inline]
    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    #[inline]
    pub fn symmetric_difference(self, o: Subset) -> Subset {
        Subset(self.0 ^ o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, o: Subset) -> bool {
        self.0 & o.0 == 0
    }

    /// Complement inside `0..n`.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset(Subset::full(n).0 & !self.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Drops bit `i` and shifts the higher bits down by one.
    #[inline]
    pub fn squeeze_out(self, i: usize) -> Subset {
        let low = self.0 & ((1u64 << i) - 1);
        let high = if i >= 63 { 0 } else { (self.0 >> (i + 1)) << i };
        Subset(low | high)
    }

    /// Removes every bit in `gone`, compacting the remaining bits downwards.
    pub fn squeeze(self, gone: Subset) -> Subset {
        let mut out = 0u64;
        let mut pos = 0;
        for i in 0..64 {
            if gone.contains(i) {
                continue;
            }
            if self.contains(i) {
                out |= 1u64 << pos;
            }
            pos += 1;
        }
        Subset(out)
    }

    /// Maps bit `i` to bit `map[i]`.
    pub fn permute(self, map: &[usize]) -> Subset {
        Subset::from_indices(self.iter().map(|i| map[i]))
    }

    /// Lexicographic order of the sorted index sequences, e.g. `{0,1} < {0,2} < {1,2}`.
    pub fn lex_cmp(self, o: Subset) -> Ordering {
        let d = self.0 ^ o.0;
        if d == 0 {
            return Ordering::Equal;
        }
        let low = d & d.wrapping_neg();
        let above = !((low << 1).wrapping_sub(1));
        if self.0 & low != 0 {
            // `o` is a proper prefix when it has nothing beyond `low`
            if o.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for SubsetIter {}

/// All `k`-element subsets of `0..n`, in increasing numeric order of the bitmask.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= 64);
    let first = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(Subset::full(k).0)
    };
    KSubsets { n, cur: first }
}

pub struct KSubsets {
    n: usize,
    cur: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let v = self.cur?;
        // Gosper's hack; stop once the pattern leaves 0..n
        self.cur = if v == 0 {
            None
        } else {
            let c = v & v.wrapping_neg();
            let r = v.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let next = (((r ^ v) >> 2) / c) | r;
                (self.n == 64 || next >> self.n == 0).then_some(next)
            }
        };
        Some(Subset(v))
    }
}

/// All subsets of `within`, in increasing numeric order.
pub fn subsets_of(within: Subset) -> impl Iterator<Item = Subset> {
    let mask = within.0;
    let mut cur = Some(0u64);
    std::iter::from_fn(move || {
        let v = cur?;
        cur = if v == mask { None } else { Some((v.wrapping_sub(mask)) & mask) };
        Some(Subset(v))
    })
}

/// `k`-subsets of an arbitrary index set, built from `k_subsets` on positions.
pub fn k_subsets_of(within: Subset, k: usize) -> impl Iterator<Item = Subset> {
    let idx: Vec<usize> = within.iter().collect();
    k_subsets(idx.len(), k).map(move |s| Subset::from_indices(s.iter().map(|p| idx[p])))
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}
