//! Search for minors isomorphic to a target.

use super::{is_isomorphic, Matroid};
use crate::exec::Strategy;
use crate::label::GroundSet;
use crate::subset::{k_subsets, k_subsets_of, Subset};

/// `M / contract \ delete` is isomorphic to the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub contract: Subset,
    pub delete: Subset,
}

pub fn find_minor(m: &Matroid, target: &Matroid) -> Option<MinorWitness> {
    find_minor_with(m, target, Strategy::default())
}

/// Every minor is `M / I \ D` with `I` independent and `D` coindependent in
/// `M / I`; the search runs over such pairs, contraction sets first.
pub fn find_minor_with(m: &Matroid, target: &Matroid, strategy: Strategy) -> Option<MinorWitness> {
    let n = m.len();
    let nt = target.len();
    if nt > n || target.rank() > m.rank() {
        return None;
    }
    let k = m.rank() - target.rank();
    if nt + k > n {
        return None;
    }
    let d = n - nt - k;
    let want = target.num_bases();
    let contractions: Vec<Subset> = k_subsets(n, k).filter(|s| m.is_independent(*s)).collect();
    let full = m.full();
    strategy.find_map_first(&contractions, |&i| {
        let over: Vec<Subset> = m.bases().iter().filter(|b| i.is_subset(**b)).map(|b| b.difference(i)).collect();
        for del in k_subsets_of(full.difference(i), d) {
            let count = over.iter().filter(|b| b.is_disjoint(del)).count();
            if count != want {
                continue;
            }
            let gone = i.union(del);
            let bases = over.iter().filter(|b| b.is_disjoint(del)).map(|b| b.squeeze(gone)).collect();
            let minor = Matroid::from_bases_unchecked(GroundSet::range(nt), bases);
            if is_isomorphic(&minor, target) {
                return Some(MinorWitness { contract: i, delete: del });
            }
        }
        None
    })
}

pub fn has_minor_isomorphic(m: &Matroid, target: &Matroid) -> bool {
    find_minor(m, target).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::subsets_of;

    fn uniform(r: usize, n: usize) -> Matroid {
        Matroid::from_bases(GroundSet::range(n), k_subsets(n, r).collect()).unwrap()
    }

    /// Every disjoint (contract, delete) pair, through the public minor operation.
    fn minor_by_scan(m: &Matroid, t: &Matroid) -> bool {
        let full = m.full();
        subsets_of(full)
            .any(|c| subsets_of(full.difference(c)).any(|d| c.len() + d.len() + t.len() == m.len() && is_isomorphic(&m.minor(d, c).unwrap(), t)))
    }

    #[test]
    fn trivial_minor() {
        let u = uniform(2, 4);
        let w = find_minor(&u, &u).unwrap();
        assert_eq!(w, MinorWitness { contract: Subset::EMPTY, delete: Subset::EMPTY });
    }

    #[test]
    fn witness_is_valid() {
        let u = uniform(3, 6);
        let t = uniform(2, 4);
        let w = find_minor(&u, &t).unwrap();
        assert!(is_isomorphic(&u.minor(w.delete, w.contract).unwrap(), &t));
    }

    #[test]
    fn agrees_with_scan() {
        let n2 = Matroid::from_int_bases(GroundSet::range(4), &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]).unwrap();
        let u24 = uniform(2, 4);
        let u13 = uniform(1, 3);
        let u23 = uniform(2, 3);
        for (m, t) in [(&n2, &u24), (&n2, &u13), (&u24, &u13), (&n2, &u23), (&u24, &u23)] {
            assert_eq!(has_minor_isomorphic(m, t), minor_by_scan(m, t));
        }
        assert!(!has_minor_isomorphic(&n2, &u24));
        assert!(has_minor_isomorphic(&n2, &uniform(1, 2)));
    }

    #[test]
    fn strategies_agree() {
        let u = uniform(3, 7);
        let t = uniform(2, 5);
        assert_eq!(find_minor_with(&u, &t, Strategy::Sequential), find_minor_with(&u, &t, Strategy::Parallel));
    }
}
