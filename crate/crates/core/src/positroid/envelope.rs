//! Positroid recognition, envelopes and envelope classes.

use std::cmp::Ordering;

use super::necklace::{grassmann_necklace_of, GrassmannNecklace};
use crate::cyclic::{are_crossing, CyclicShiftedOrder};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::matroid::Matroid;
use crate::subset::{k_subsets, Subset};

/// Default cap on the size of the envelope-class search space.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// The positroid `P` together with every ordered matroid whose envelope is `P`.
#[derive(Clone, Debug)]
pub struct EnvelopeClass {
    pub envelope: Matroid,
    pub members: Vec<Matroid>,
}

impl EnvelopeClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Bases `B` with `J_{i_j} ≤_{i_j} B` for every `j`.
pub fn envelope_from_necklace(j: &GrassmannNecklace) -> Matroid {
    let n = j.ground().len();
    let orders: Vec<CyclicShiftedOrder> = (0..n).map(|s| CyclicShiftedOrder::at(n, s)).collect();
    let bases: Vec<Subset> =
        k_subsets(n, j.rank()).filter(|b| orders.iter().enumerate().all(|(s, o)| o.gale_leq_unchecked(j.entry(s), *b))).collect();
    Matroid::from_bases_unchecked(j.ground().clone(), bases)
}

/// The positroid with the same Grassmann necklace as `m`.
pub fn envelope_positroid(m: &Matroid) -> Matroid {
    if m.is_empty() {
        return m.clone();
    }
    envelope_from_necklace(&grassmann_necklace_of(m))
}

/// No circuit crosses a cocircuit disjoint from it.
pub fn is_positroid_by_crossing(m: &Matroid) -> bool {
    let cocircuits = m.cocircuit_sets();
    m.circuit_sets().iter().all(|c| cocircuits.iter().all(|d| !c.is_disjoint(*d) || !are_crossing(*c, *d)))
}

/// The matroid equals its positroid envelope.
pub fn is_positroid_by_envelope(m: &Matroid) -> bool {
    envelope_positroid(m) == *m
}

/// Positroid test. Both characterizations are evaluated; they must agree.
pub fn is_positroid(m: &Matroid) -> bool {
    let a = is_positroid_by_crossing(m);
    let b = is_positroid_by_envelope(m);
    assert_eq!(a, b, "positroid characterizations disagree on {m:?}");
    a
}

/// `M ≥ N` in the rank-preserving weak order.
pub fn weak_map_leq(m: &Matroid, n: &Matroid) -> Result<bool> {
    if m.ground() != n.ground() {
        return Err(Error::GroundMismatch);
    }
    if m.rank() != n.rank() {
        return Err(Error::RankMismatch(m.rank(), n.rank()));
    }
    Ok(n.bases().iter().all(|b| m.is_basis(*b)))
}

/// Whether `candidate` has the same Grassmann necklace as the positroid `p`.
pub fn envelope_membership_check(p: &Matroid, candidate: &Matroid) -> Result<bool> {
    if p.ground() != candidate.ground() {
        return Err(Error::GroundMismatch);
    }
    Ok(grassmann_necklace_of(p) == grassmann_necklace_of(candidate))
}

/// Orders matroids on a common ground by their sorted basis lists.
pub fn canonical_cmp(a: &Matroid, b: &Matroid) -> Ordering {
    let (x, y) = (a.sorted_bases(), b.sorted_bases());
    for (s, t) in x.iter().zip(&y) {
        match s.lex_cmp(*t) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    x.len().cmp(&y.len())
}

/// An exchange requirement: if bases `a` and `b` are both present then some
/// basis in `rescue` must be present too.
struct Clause {
    a: u128,
    b: u128,
    rescue: u128,
}

struct ClassSearch {
    clauses: Vec<Clause>,
    free: Vec<usize>,
}

#[derive(Clone, Copy)]
struct State {
    inc: u128,
    exc: u128,
}

impl ClassSearch {
    fn new(bases: &[Subset]) -> ClassSearch {
        let index = |s: Subset| bases.binary_search(&s).ok();
        let mut clauses = Vec::new();
        for (ia, &b1) in bases.iter().enumerate() {
            for (ib, &b2) in bases.iter().enumerate() {
                let out = b1.difference(b2);
                if out.len() < 2 {
                    continue;
                }
                let inn = b2.difference(b1);
                for x in out.iter() {
                    let base = b1.remove(x);
                    let rescue = inn.iter().filter_map(|y| index(base.insert(y))).fold(0u128, |acc, i| acc | 1 << i);
                    clauses.push(Clause { a: 1 << ia, b: 1 << ib, rescue });
                }
            }
        }
        ClassSearch { clauses, free: Vec::new() }
    }

    fn propagate(&self, mut st: State) -> Option<State> {
        loop {
            let mut changed = false;
            for c in &self.clauses {
                if (c.a | c.b) & st.exc != 0 || c.rescue & st.inc != 0 {
                    continue;
                }
                let open = c.rescue & !st.exc;
                let a_in = c.a & st.inc != 0;
                let b_in = c.b & st.inc != 0;
                match (a_in, b_in, open.count_ones()) {
                    (true, true, 0) => return None,
                    (true, true, 1) => {
                        st.inc |= open;
                        changed = true;
                    }
                    (true, false, 0) => {
                        st.exc |= c.b;
                        changed = true;
                    }
                    (false, true, 0) => {
                        st.exc |= c.a;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return Some(st);
            }
        }
    }

    fn next_free(&self, st: State) -> Option<usize> {
        self.free.iter().copied().find(|&i| (st.inc | st.exc) >> i & 1 == 0)
    }

    fn branches(&self, st: State) -> Vec<State> {
        let Some(i) = self.next_free(st) else {
            return Vec::new();
        };
        let bit = 1u128 << i;
        [State { inc: st.inc | bit, exc: st.exc }, State { inc: st.inc, exc: st.exc | bit }].into_iter().filter_map(|s| self.propagate(s)).collect()
    }

    fn solve(&self, st: State, out: &mut Vec<u128>) {
        if self.next_free(st).is_none() {
            out.push(st.inc);
            return;
        }
        for s in self.branches(st) {
            self.solve(s, out);
        }
    }
}

pub fn envelope_class_of(p: &Matroid) -> Result<EnvelopeClass> {
    envelope_class_with(p, DEFAULT_BUDGET, Strategy::default())
}

/// All matroids with the same Grassmann necklace as the positroid `p`, i.e.
/// exchange-closed families between the necklace entries and `ℬ(p)`.
///
/// The search space has `2^f` candidate families, `f` the number of bases of
/// `p` outside the necklace; when that exceeds `budget` the search is refused.
pub fn envelope_class_with(p: &Matroid, budget: u64, strategy: Strategy) -> Result<EnvelopeClass> {
    if !is_positroid(p) {
        return Err(Error::NotAPositroid);
    }
    let bases = p.bases();
    let necklace = grassmann_necklace_of(p);
    let mandatory: Vec<usize> = necklace.entries().iter().map(|e| bases.binary_search(e).expect("necklace entries are bases")).collect();
    let free_count = bases.len() - {
        let mut m = mandatory.clone();
        m.sort_unstable();
        m.dedup();
        m.len()
    };
    if free_count >= 64 || (1u64 << free_count) > budget {
        return Err(Error::BudgetExceeded { free: free_count, budget });
    }
    debug_assert!(bases.len() <= 128);
    let mut search = ClassSearch::new(bases);
    let inc0 = mandatory.iter().fold(0u128, |acc, &i| acc | 1 << i);
    search.free = (0..bases.len()).filter(|i| inc0 >> i & 1 == 0).collect();
    let mut out = Vec::new();
    if let Some(root) = search.propagate(State { inc: inc0, exc: 0 }) {
        // expand a frontier so the pieces can be solved independently
        let mut frontier = vec![root];
        while frontier.len() < 64 {
            let mut next = Vec::new();
            let mut grew = false;
            for st in &frontier {
                if search.next_free(*st).is_none() {
                    next.push(*st);
                } else {
                    next.extend(search.branches(*st));
                    grew = true;
                }
            }
            frontier = next;
            if !grew {
                break;
            }
        }
        out = strategy
            .map(&frontier, |st| {
                let mut v = Vec::new();
                search.solve(*st, &mut v);
                v
            })
            .into_iter()
            .flatten()
            .collect();
    }
    let mut members: Vec<Matroid> = out
        .into_iter()
        .map(|mask| {
            let fam: Vec<Subset> = (0..bases.len()).filter(|i| mask >> i & 1 == 1).map(|i| bases[i]).collect();
            Matroid::from_bases_unchecked(p.ground().clone(), fam)
        })
        .collect();
    for m in &members {
        assert_eq!(grassmann_necklace_of(m), necklace, "class member with a different necklace");
    }
    members.sort_by(canonical_cmp);
    Ok(EnvelopeClass { envelope: p.clone(), members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::GroundSet;
    use crate::matroid::exchange_violation;
    use crate::subset::subsets_of;

    fn m(bases: &[&[i64]]) -> Matroid {
        Matroid::from_int_bases(GroundSet::range(4), bases).unwrap()
    }

    fn u24() -> Matroid {
        Matroid::from_bases(GroundSet::range(4), k_subsets(4, 2).collect()).unwrap()
    }

    /// Every subfamily of the envelope's bases, filtered by the definitions.
    fn class_by_scan(p: &Matroid) -> Vec<Matroid> {
        let bases = p.bases();
        let j = grassmann_necklace_of(p);
        let mut out: Vec<Matroid> = subsets_of(Subset::full(bases.len()))
            .skip(1)
            .filter_map(|fam| {
                let v: Vec<Subset> = fam.iter().map(|i| bases[i]).collect();
                exchange_violation(&v, Strategy::Sequential).is_none().then(|| Matroid::from_bases_unchecked(p.ground().clone(), v))
            })
            .filter(|x| grassmann_necklace_of(x) == j)
            .collect();
        out.sort_by(canonical_cmp);
        out
    }

    #[test]
    fn u24_class() {
        let class = envelope_class_of(&u24()).unwrap();
        let expect = [
            m(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]),
            m(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[3, 4]]),
            m(&[&[1, 2], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]),
            m(&[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]),
        ];
        assert_eq!(class.len(), 4);
        for e in &expect {
            assert!(class.members.contains(e));
        }
        assert_eq!(class.members, class_by_scan(&u24()));
    }

    #[test]
    fn envelope_examples() {
        let n2 = m(&[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]);
        assert_eq!(envelope_positroid(&n2), u24());
        assert!(!is_positroid_by_crossing(&n2));
        assert!(!is_positroid(&n2));
        assert!(is_positroid(&u24()));
        assert!(weak_map_leq(&u24(), &n2).unwrap());
        assert!(weak_map_leq(&n2, &n2).unwrap());
        let m1 = m(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[3, 4]]);
        let m2 = m(&[&[1, 2], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]);
        assert!(!weak_map_leq(&m1, &m2).unwrap());
        assert!(envelope_membership_check(&u24(), &m1).unwrap());
    }

    #[test]
    fn small_matroids_are_positroids() {
        for n in 0..=3usize {
            for r in 0..=n {
                let all: Vec<Subset> = k_subsets(n, r).collect();
                for fam in subsets_of(Subset::full(all.len())).skip(1) {
                    let v: Vec<Subset> = fam.iter().map(|i| all[i]).collect();
                    if let Ok(x) = Matroid::from_bases(GroundSet::range(n), v) {
                        assert!(is_positroid(&x));
                    }
                }
            }
        }
    }

    #[test]
    fn class_matches_scan_on_rank2_positroids() {
        for fam in subsets_of(Subset::full(6)).skip(1) {
            let all: Vec<Subset> = k_subsets(4, 2).collect();
            let v: Vec<Subset> = fam.iter().map(|i| all[i]).collect();
            let Ok(x) = Matroid::from_bases(GroundSet::range(4), v) else { continue };
            if !is_positroid(&x) {
                assert_eq!(envelope_class_of(&x).unwrap_err(), Error::NotAPositroid);
                continue;
            }
            let seq = envelope_class_with(&x, DEFAULT_BUDGET, Strategy::Sequential).unwrap();
            let par = envelope_class_with(&x, DEFAULT_BUDGET, Strategy::Parallel).unwrap();
            assert_eq!(seq.members, class_by_scan(&x));
            assert_eq!(seq.members, par.members);
        }
    }

    #[test]
    fn budget_is_reported() {
        let e = envelope_class_with(&u24(), 2, Strategy::Sequential).unwrap_err();
        assert_eq!(e, Error::BudgetExceeded { free: 2, budget: 2 });
    }
}
