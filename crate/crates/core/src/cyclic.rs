//! Cyclic orders on a totally ordered ground set.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::label::{GroundLabel, GroundSet};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// The rotation `i_k < i_{k+1} < ... < i_n < i_1 < ... < i_{k-1}` of a ground
/// set, identified by the internal index `start` of `i_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicShiftedOrder {
    n: usize,
    start: usize,
}

impl CyclicShiftedOrder {
    pub fn new(ground: &GroundSet, start: &GroundLabel) -> Result<Self> {
        Ok(CyclicShiftedOrder { n: ground.len(), start: ground.require_index(start)? })
    }

    /// Rotation starting at internal index `start` of an `n`-element ground.
    pub fn at(n: usize, start: usize) -> Self {
        assert!(start < n.max(1));
        CyclicShiftedOrder { n, start }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Position of index `i` in this rotation.
    #[inline]
    pub fn key(&self, i: usize) -> usize {
        (i + self.n - self.start) % self.n
    }

    /// Index at position `p` of this rotation.
    #[inline]
    pub fn nth(&self, p: usize) -> usize {
        (self.start + p) % self.n
    }

    pub fn compare_index(&self, a: usize, b: usize) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn compare(&self, ground: &GroundSet, a: &GroundLabel, b: &GroundLabel) -> Result<Ordering> {
        Ok(self.compare_index(ground.require_index(a)?, ground.require_index(b)?))
    }

    /// Elements of `s` listed in this order.
    pub fn sorted(&self, s: Subset) -> Vec<usize> {
        let mut v: Vec<usize> = s.iter().collect();
        v.sort_by_key(|&i| self.key(i));
        v
    }

    pub fn min_of(&self, s: Subset) -> Option<usize> {
        s.iter().min_by_key(|&i| self.key(i))
    }

    /// Cyclic Gale order: `s <= t` componentwise after sorting both.
    pub fn gale_leq(&self, s: Subset, t: Subset) -> Result<bool> {
        if s.len() != t.len() {
            return Err(Error::UnequalCardinality(s.len(), t.len()));
        }
        Ok(self.gale_leq_unchecked(s, t))
    }

    pub(crate) fn gale_leq_unchecked(&self, s: Subset, t: Subset) -> bool {
        let a = self.sorted(s);
        let b = self.sorted(t);
        a.iter().zip(&b).all(|(&x, &y)| self.key(x) <= self.key(y))
    }
}

/// The cyclic interval `[a, b]` of internal indices on an `n`-element ground.
pub fn interval(n: usize, a: usize, b: usize) -> Subset {
    let o = CyclicShiftedOrder::at(n, a);
    Subset::from_indices((0..=o.key(b)).map(|p| o.nth(p)))
}

pub fn cyclic_interval(ground: &GroundSet, a: &GroundLabel, b: &GroundLabel) -> Result<Subset> {
    Ok(interval(ground.len(), ground.require_index(a)?, ground.require_index(b)?))
}

/// Whether `s` is a cyclic interval of an `n`-element ground. The empty set
/// and the whole ground count as intervals.
pub fn is_cyclic_interval(n: usize, s: Subset) -> bool {
    if s.is_empty() || s == Subset::full(n) {
        return true;
    }
    // exactly one position where membership switches on, going around
    (0..n).filter(|&i| s.contains(i) && !s.contains((i + n - 1) % n)).count() == 1
}

/// Whether the elements of `x` and `y` alternate around the circle, i.e. some
/// `w < a < v < b` in cyclic order with `w, v` from one set and `a, b` from
/// the other. Shared elements are ignored.
pub fn are_crossing(x: Subset, y: Subset) -> bool {
    let shared = x.intersection(y);
    let (x, y) = (x.difference(shared), y.difference(shared));
    if x.len() < 2 || y.len() < 2 {
        return false;
    }
    let marks = x.union(y);
    let mut changes = 0;
    let mut prev = x.contains(marks.max().unwrap());
    for i in marks.iter() {
        let cur = x.contains(i);
        if cur != prev {
            changes += 1;
        }
        prev = cur;
    }
    changes >= 4
}

/// Pairwise non-crossing blocks. Blocks must be disjoint and lie in the ground.
pub fn is_noncrossing_partition(ground: &GroundSet, blocks: &[Subset]) -> Result<bool> {
    let mut seen = Subset::EMPTY;
    for b in blocks {
        if !b.is_subset(ground.full()) || !b.is_disjoint(seen) {
            return Err(Error::NotAPartition);
        }
        seen = seen.union(*b);
    }
    Ok(blocks.iter().enumerate().all(|(i, a)| blocks[i + 1..].iter().all(|b| !are_crossing(*a, *b))))
}

/// The basis chosen greedily in the rotation `o`; it is lexicographically and
/// Gale minimal among the bases.
pub fn lex_min_basis(m: &Matroid, o: CyclicShiftedOrder) -> Subset {
    let n = m.len();
    let mut cur = Subset::EMPTY;
    for p in 0..n {
        if cur.len() == m.rank() {
            break;
        }
        let e = o.nth(p);
        if m.is_independent(cur.insert(e)) {
            cur = cur.insert(e);
        }
    }
    cur
}
