//! Ordered matroids stored by their basis families.

mod format;
mod iso;
mod minor;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::label::{GroundLabel, GroundSet};
use crate::subset::{k_subsets, Subset};

pub use iso::{all_isomorphisms, find_isomorphism, is_isomorphic};
pub use minor::{find_minor, find_minor_with, has_minor_isomorphic, MinorWitness};

/// A family of subsets of a ground set (circuits, cocircuits, flats, ...).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    pub ground: GroundSet,
    pub members: Vec<Subset>,
}

impl SubsetFamily {
    /// Members sorted lexicographically by their label sequences.
    pub fn new(ground: GroundSet, mut members: Vec<Subset>) -> Self {
        members.sort_by(|a, b| a.lex_cmp(*b));
        members.dedup();
        SubsetFamily { ground, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.contains(&s)
    }

    pub fn render(&self) -> Vec<String> {
        self.members.iter().map(|s| self.ground.render(*s)).collect()
    }
}

/// An ordered matroid: a ground set with a basis family satisfying the
/// exchange axiom. Immutable; circuits and cocircuits are memoized.
#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    rank: usize,
    /// Sorted by bitmask value so membership is a binary search.
    bases: Arc<[Subset]>,
    circuits: OnceLock<Arc<[Subset]>>,
    cocircuits: OnceLock<Arc<[Subset]>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field("rank", &self.rank)
            .field("bases", &self.sorted_bases().iter().map(|b| self.ground.render(*b)).collect::<Vec<_>>())
            .finish()
    }
}

/// First violation of the basis exchange axiom, if any.
pub(crate) fn exchange_violation(bases: &[Subset], strategy: Strategy) -> Option<(Subset, Subset, usize)> {
    debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
    let check = |b1: &Subset| {
        for &b2 in bases {
            let out = b1.difference(b2);
            if out.len() <= 1 {
                // the only exchange recovers b2 itself
                continue;
            }
            let inn = b2.difference(*b1);
            for x in out.iter() {
                let base = b1.remove(x);
                let ok = inn.iter().any(|y| bases.binary_search(&base.insert(y)).is_ok());
                if !ok {
                    return Some((*b1, b2, x));
                }
            }
        }
        None
    };
    strategy.find_map_first(bases, check)
}

impl Matroid {
    /// Validating constructor.
    pub fn from_bases(ground: GroundSet, bases: Vec<Subset>) -> Result<Matroid> {
        Self::from_bases_with(ground, bases, Strategy::default())
    }

    pub fn from_bases_with(ground: GroundSet, mut bases: Vec<Subset>, strategy: Strategy) -> Result<Matroid> {
        let first = *bases.first().ok_or(Error::EmptyBases)?;
        let full = ground.full();
        for b in &bases {
            if !b.is_subset(full) {
                return Err(Error::SubsetNotInGround);
            }
            if b.len() != first.len() {
                return Err(Error::UnequalCardinality(first.len(), b.len()));
            }
        }
        bases.sort_unstable();
        bases.dedup();
        if let Some((b1, b2, x)) = exchange_violation(&bases, strategy) {
            return Err(Error::ExchangeViolation { b1: ground.render(b1), b2: ground.render(b2), x: ground.label(x).to_string() });
        }
        Ok(Self::from_bases_unchecked(ground, bases))
    }

    /// Builds from labelled bases given as label lists.
    pub fn from_label_bases(ground: GroundSet, bases: &[Vec<GroundLabel>]) -> Result<Matroid> {
        let sets = bases.iter().map(|b| ground.subset_of(b.iter())).collect::<Result<Vec<_>>>()?;
        Matroid::from_bases(ground, sets)
    }

    /// Builds from integer-labelled bases, e.g. `&[&[1, 2], &[1, 3]]`.
    pub fn from_int_bases(ground: GroundSet, bases: &[&[i64]]) -> Result<Matroid> {
        let sets = bases.iter().map(|b| ground.subset_of_ints(b.iter().copied())).collect::<Result<Vec<_>>>()?;
        Matroid::from_bases(ground, sets)
    }

    /// Caller guarantees the family is a nonempty equicardinal basis family.
    pub(crate) fn from_bases_unchecked(ground: GroundSet, mut bases: Vec<Subset>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        let rank = bases[0].len();
        Matroid { ground, rank, bases: bases.into(), circuits: OnceLock::new(), cocircuits: OnceLock::new() }
    }

    /// The matroid whose circuits are the given family. The family must
    /// satisfy the circuit axioms; bases are the maximal circuit-free sets.
    pub fn from_circuits(ground: GroundSet, circuits: &[Subset]) -> Matroid {
        let n = ground.len();
        let mut circuits: Vec<Subset> = circuits.to_vec();
        circuits.sort_unstable();
        circuits.dedup();
        let free = |s: Subset| !circuits.iter().any(|c| c.is_subset(s));
        let mut greedy = Subset::EMPTY;
        for e in 0..n {
            if free(greedy.insert(e)) {
                greedy = greedy.insert(e);
            }
        }
        let rank = greedy.len();
        let bases: Vec<Subset> = k_subsets(n, rank).filter(|s| free(*s)).collect();
        let m = Matroid::from_bases_unchecked(ground, bases);
        let _ = m.circuits.set(circuits.into());
        m
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in bitmask order.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    /// Bases in lexicographic order of their label sequences.
    pub fn sorted_bases(&self) -> Vec<Subset> {
        let mut v = self.bases.to_vec();
        v.sort_by(|a, b| a.lex_cmp(*b));
        v
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    pub fn index_of(&self, l: &GroundLabel) -> Result<usize> {
        self.ground.require_index(l)
    }

    pub fn subset(&self, labels: &[i64]) -> Subset {
        self.ground.subset_of_ints(labels.iter().copied()).expect("labels in ground")
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.bases.iter().any(|b| s.is_subset(*b))
    }

    /// Size of a largest independent subset of `x`.
    pub fn rank_of(&self, x: Subset) -> usize {
        let mut best = 0;
        for b in self.bases.iter() {
            let k = b.intersection(x).len();
            if k > best {
                best = k;
                if best == x.len() || best == self.rank {
                    break;
                }
            }
        }
        best
    }

    pub fn closure_of(&self, x: Subset) -> Subset {
        let r = self.rank_of(x);
        let mut cl = x;
        for e in self.full().difference(x).iter() {
            if self.rank_of(x.insert(e)) == r {
                cl = cl.insert(e);
            }
        }
        cl
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        self.closure_of(x) == x
    }

    pub fn is_hyperplane(&self, x: Subset) -> bool {
        self.rank > 0 && self.rank_of(x) == self.rank - 1 && self.is_flat(x)
    }

    pub fn is_circuit(&self, x: Subset) -> bool {
        !x.is_empty() && !self.is_independent(x) && x.iter().all(|e| self.is_independent(x.remove(e)))
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Subset {
        let union = self.bases.iter().fold(Subset::EMPTY, |a, b| a.union(*b));
        self.full().difference(union)
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Subset {
        self.bases.iter().fold(self.full(), |a, b| a.intersection(*b))
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.loops().contains(i)
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        self.coloops().contains(i)
    }

    fn circuit_cache(&self) -> &Arc<[Subset]> {
        self.circuits.get_or_init(|| fundamental_circuits(self).into())
    }

    /// All circuits, lexicographically sorted.
    pub fn circuits(&self) -> SubsetFamily {
        SubsetFamily::new(self.ground.clone(), self.circuit_cache().to_vec())
    }

    /// Circuits as raw subsets (bitmask order).
    pub fn circuit_sets(&self) -> &[Subset] {
        self.circuit_cache()
    }

    pub fn cocircuit_sets(&self) -> &[Subset] {
        self.cocircuits.get_or_init(|| fundamental_circuits(&self.dual()).into())
    }

    pub fn cocircuits(&self) -> SubsetFamily {
        SubsetFamily::new(self.ground.clone(), self.cocircuit_sets().to_vec())
    }

    pub fn circuit_hyperplanes(&self) -> SubsetFamily {
        let members = self.circuit_sets().iter().copied().filter(|c| c.len() == self.rank && self.is_hyperplane(*c)).collect();
        SubsetFamily::new(self.ground.clone(), members)
    }

    pub fn dual(&self) -> Matroid {
        let full = self.full();
        let bases = self.bases.iter().map(|b| full.difference(*b)).collect();
        let d = Matroid::from_bases_unchecked(self.ground.clone(), bases);
        if let Some(c) = self.circuits.get() {
            let _ = d.cocircuits.set(c.clone());
        }
        if let Some(c) = self.cocircuits.get() {
            let _ = d.circuits.set(c.clone());
        }
        d
    }

    pub fn delete(&self, e: &GroundLabel) -> Result<Matroid> {
        Ok(self.delete_index(self.index_of(e)?))
    }

    pub fn contract(&self, e: &GroundLabel) -> Result<Matroid> {
        Ok(self.contract_index(self.index_of(e)?))
    }

    pub fn delete_index(&self, e: usize) -> Matroid {
        let bases: Vec<Subset> = if self.is_coloop(e) {
            self.bases.iter().map(|b| b.remove(e)).collect()
        } else {
            self.bases.iter().filter(|b| !b.contains(e)).copied().collect()
        };
        self.drop_element(e, bases)
    }

    /// Contracting a loop is the same as deleting it.
    pub fn contract_index(&self, e: usize) -> Matroid {
        let bases: Vec<Subset> =
            if self.is_loop(e) { self.bases.to_vec() } else { self.bases.iter().filter(|b| b.contains(e)).map(|b| b.remove(e)).collect() };
        self.drop_element(e, bases)
    }

    fn drop_element(&self, e: usize, bases: Vec<Subset>) -> Matroid {
        let ground = self.ground.restrict(self.full().remove(e));
        let bases = bases.into_iter().map(|b| b.squeeze_out(e)).collect();
        Matroid::from_bases_unchecked(ground, bases)
    }

    /// `M / contractions \ deletions`, applied one element at a time from the
    /// largest index down.
    pub fn minor(&self, deletions: Subset, contractions: Subset) -> Result<Matroid> {
        if !deletions.union(contractions).is_subset(self.full()) {
            return Err(Error::SubsetNotInGround);
        }
        if !deletions.is_disjoint(contractions) {
            return Err(Error::OverlappingMinorSets);
        }
        let mut m = self.clone();
        let gone = deletions.union(contractions);
        let mut order: Vec<usize> = gone.iter().collect();
        order.reverse();
        for e in order {
            m = if deletions.contains(e) { m.delete_index(e) } else { m.contract_index(e) };
        }
        Ok(m)
    }

    /// Restriction `M | keep`.
    pub fn restrict(&self, keep: Subset) -> Matroid {
        self.minor(self.full().difference(keep), Subset::EMPTY).expect("valid deletion set")
    }

    /// Relaxation of a circuit-hyperplane: the basis family gains `x`.
    pub fn relax_circuit_hyperplane(&self, x: Subset) -> Result<Matroid> {
        if !x.is_subset(self.full()) || !self.is_circuit(x) || !self.is_hyperplane(x) {
            return Err(Error::NotACircuitHyperplane(self.ground.render(x)));
        }
        let mut bases = self.bases.to_vec();
        bases.push(x);
        Ok(Matroid::from_bases_unchecked(self.ground.clone(), bases))
    }

    /// Renames the elements: element `i` receives label `labels[i]`. The
    /// internal indices are re-sorted according to the new labels.
    pub fn relabel(&self, labels: &[GroundLabel]) -> Result<Matroid> {
        assert_eq!(labels.len(), self.len());
        let ground = GroundSet::from_unsorted(labels.to_vec())?;
        if ground.len() != labels.len() {
            return Err(Error::PreconditionViolation("relabelling is not injective".into()));
        }
        let map: Vec<usize> = labels.iter().map(|l| ground.index_of(l).unwrap()).collect();
        let bases = self.bases.iter().map(|b| b.permute(&map)).collect();
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    /// Applies an index permutation: element `i` moves to position `perm[i]`
    /// while the ground labels stay in place.
    pub fn permute(&self, perm: &[usize]) -> Matroid {
        let bases = self.bases.iter().map(|b| b.permute(perm)).collect();
        Matroid::from_bases_unchecked(self.ground.clone(), bases)
    }

    /// Same matroid with the ground relabelled `1..=n` in order.
    pub fn standardized(&self) -> Matroid {
        Matroid::from_bases_unchecked(GroundSet::range(self.len()), self.bases.to_vec())
    }

    pub fn is_uniform(&self) -> bool {
        self.bases.len() as u64 == crate::subset::binomial(self.len(), self.rank)
    }
}

/// Circuits as fundamental circuits: for every basis `B` and `e` outside it,
/// `{e} ∪ {b ∈ B : B - b + e is a basis}`. Every circuit arises this way.
fn fundamental_circuits(m: &Matroid) -> Vec<Subset> {
    let full = m.full();
    let mut out: Vec<Subset> = Vec::new();
    for &b in m.bases.iter() {
        for e in full.difference(b).iter() {
            let mut c = Subset::singleton(e);
            for x in b.iter() {
                if m.is_basis(b.remove(x).insert(e)) {
                    c = c.insert(x);
                }
            }
            out.push(c);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::subsets_of;

    fn u24() -> Matroid {
        Matroid::from_int_bases(GroundSet::range(4), &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]).unwrap()
    }

    fn n2() -> Matroid {
        Matroid::from_int_bases(GroundSet::range(4), &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]).unwrap()
    }

    /// Minimal dependent sets by direct scan over all subsets.
    fn circuits_by_scan(m: &Matroid) -> Vec<Subset> {
        let mut out: Vec<Subset> =
            subsets_of(m.full()).filter(|s| !m.is_independent(*s) && s.iter().all(|e| m.is_independent(s.remove(e)))).collect();
        out.sort_unstable();
        out
    }

    /// rank as max independent subset by scan.
    fn rank_by_scan(m: &Matroid, x: Subset) -> usize {
        subsets_of(x).filter(|s| m.is_independent(*s)).map(|s| s.len()).max().unwrap()
    }

    #[test]
    fn construction_errors() {
        let g = GroundSet::range(3);
        assert_eq!(Matroid::from_bases(g.clone(), vec![]), Err(Error::EmptyBases));
        let r = Matroid::from_int_bases(g.clone(), &[&[1, 2], &[3]]);
        assert!(matches!(r, Err(Error::UnequalCardinality(2, 1))));
        let g4 = GroundSet::range(4);
        let r = Matroid::from_int_bases(g4, &[&[1, 2], &[3, 4]]);
        assert!(matches!(r, Err(Error::ExchangeViolation { .. })));
    }

    #[test]
    fn rank_examples() {
        let u = u24();
        assert_eq!(u.rank_of(Subset::EMPTY), 0);
        assert_eq!(u.rank_of(u.subset(&[1, 2, 3])), 2);
        let n = n2();
        assert_eq!(n.rank_of(n.subset(&[1, 3])), 1);
        assert_eq!(rank_by_scan(&n, n.subset(&[1, 3])), 1);
        assert_eq!(u.rank_of(u.full()), u.rank());
    }

    #[test]
    fn closure_examples() {
        let n = n2();
        assert_eq!(n.closure_of(n.subset(&[1])), n.subset(&[1, 3]));
        assert_eq!(n.closure_of(n.full()), n.full());
        let u = u24();
        assert_eq!(u.closure_of(u.subset(&[1])), u.subset(&[1]));
    }

    #[test]
    fn circuit_examples() {
        let u = u24();
        assert_eq!(u.circuits().members, k_subsets(4, 3).collect::<Vec<_>>().tap_sorted_lex());
        let n = n2();
        assert_eq!(n.circuits().members, vec![n.subset(&[1, 3]), n.subset(&[2, 4])]);
        assert_eq!(n.cocircuits().members, vec![n.subset(&[1, 3]), n.subset(&[2, 4])]);
        let coloop = Matroid::from_int_bases(GroundSet::range(1), &[&[1]]).unwrap();
        assert_eq!(coloop.cocircuits().members, vec![Subset::singleton(0)]);
        assert!(coloop.circuits().is_empty());
        for m in [u, n, coloop] {
            let mut c = m.circuit_sets().to_vec();
            c.sort_unstable();
            assert_eq!(c, circuits_by_scan(&m));
        }
    }

    trait SortedLex {
        fn tap_sorted_lex(self) -> Self;
    }

    impl SortedLex for Vec<Subset> {
        fn tap_sorted_lex(mut self) -> Self {
            self.sort_by(|a, b| a.lex_cmp(*b));
            self
        }
    }

    #[test]
    fn dual_examples() {
        let u = u24();
        assert_eq!(u.dual(), u);
        let n = n2();
        assert_eq!(n.dual(), n);
        let free = Matroid::from_int_bases(GroundSet::range(3), &[&[1, 2, 3]]).unwrap();
        assert_eq!(free.dual().rank(), 0);
        assert_eq!(free.dual().dual(), free);
    }

    #[test]
    fn minor_examples() {
        let u = u24();
        let d = u.delete(&GroundLabel::integer(4)).unwrap();
        assert_eq!((d.len(), d.rank(), d.num_bases()), (3, 2, 3));
        let c = u.contract(&GroundLabel::integer(4)).unwrap();
        assert_eq!((c.len(), c.rank(), c.num_bases()), (3, 1, 3));
        assert!(matches!(u.delete(&GroundLabel::integer(9)), Err(Error::LabelNotInGround(_))));
        // loop contraction is deletion
        let lp = Matroid::from_int_bases(GroundSet::range(2), &[&[1]]).unwrap();
        assert_eq!(lp.contract_index(1), lp.delete_index(1));
        assert_eq!(u.minor(u.subset(&[1]), u.subset(&[1])), Err(Error::OverlappingMinorSets));
    }

    #[test]
    fn multi_contraction_is_order_independent() {
        let n = n2();
        let a = n.contract_index(0).contract_index(0);
        let b = n.contract_index(1).contract_index(0);
        assert_eq!(a, b);
        assert_eq!(n.minor(Subset::EMPTY, n.subset(&[1, 2])).unwrap(), a);
    }

    #[test]
    fn relaxation_examples() {
        let n = n2();
        let m1 = n.relax_circuit_hyperplane(n.subset(&[1, 3])).unwrap();
        let expect = Matroid::from_int_bases(GroundSet::range(4), &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[3, 4]]).unwrap();
        assert_eq!(m1, expect);
        assert!(matches!(u24().relax_circuit_hyperplane(Subset::from_indices([0, 1])), Err(Error::NotACircuitHyperplane(_))));
        assert_eq!(n.circuit_hyperplanes().members, vec![n.subset(&[1, 3]), n.subset(&[2, 4])]);
        assert!(u24().circuit_hyperplanes().is_empty());
    }

    #[test]
    fn from_circuits_round_trip() {
        let n = n2();
        let m = Matroid::from_circuits(n.ground().clone(), n.circuit_sets());
        assert_eq!(m, n);
    }

    #[test]
    fn relabel_resorts() {
        let n = n2();
        let labels: Vec<_> = [4, 3, 2, 1].iter().map(|&v| GroundLabel::integer(v)).collect();
        let r = n.relabel(&labels).unwrap();
        // element 1 -> 4, 2 -> 3, ... ; bases {1,2} -> {3,4}
        assert!(r.is_basis(r.subset(&[3, 4])));
        assert!(!r.is_basis(r.subset(&[2, 4])));
    }
}
