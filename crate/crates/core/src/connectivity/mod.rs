//! Connectivity, separations, direct sums and 2-sums.

mod tree;

pub use tree::{
    canonical_tree_decomposition, canonical_tree_with, envelope_tree, positroid_tree_check, NodeKind, SplitOrder, TreeDecomposition, TreeEdge,
    TreeNode,
};

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::label::{GroundLabel, GroundSet};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// `λ(X) = r(X) + r(E ∖ X) − r(E)`.
pub fn connectivity_lambda(m: &Matroid, x: Subset) -> usize {
    m.rank_of(x) + m.rank_of(m.full().difference(x)) - m.rank()
}

pub fn find_k_separation(m: &Matroid, k: usize) -> Option<(Subset, Subset)> {
    find_k_separation_with(m, k, Strategy::default())
}

const BLOCK: u64 = 1 << 12;

fn separates(m: &Matroid, x: Subset, k: usize) -> bool {
    let y = m.full().difference(x);
    x.len() >= k && y.len() >= k && connectivity_lambda(m, x) < k
}

/// The `k`-separation `(X, E ∖ X)` with `X` containing the first element and
/// least as a bitmask.
pub fn find_k_separation_with(m: &Matroid, k: usize, strategy: Strategy) -> Option<(Subset, Subset)> {
    let n = m.len();
    if k == 0 || n < 2 * k {
        return None;
    }
    // X = {0} ∪ (t shifted up by one), t over all proper patterns of the rest
    let count: u64 = (1u64 << (n - 1)) - 1;
    let blocks: Vec<u64> = (0..count.div_ceil(BLOCK)).collect();
    let x = strategy
        .find_map_first(&blocks, |&b| (b * BLOCK..((b + 1) * BLOCK).min(count)).map(|t| Subset(1 | (t << 1))).find(|&x| separates(m, x, k)))?;
    Some((x, m.full().difference(x)))
}

/// The same scan from the other end: `X` greatest as a bitmask.
pub(crate) fn find_last_k_separation(m: &Matroid, k: usize) -> Option<(Subset, Subset)> {
    let n = m.len();
    if k == 0 || n < 2 * k {
        return None;
    }
    let count: u64 = (1u64 << (n - 1)) - 1;
    let x = (0..count).rev().map(|t| Subset(1 | (t << 1))).find(|&x| separates(m, x, k))?;
    Some((x, m.full().difference(x)))
}

/// No `k`-separation for any `k < c`.
pub fn is_n_connected(m: &Matroid, c: usize) -> bool {
    (1..c).all(|k| find_k_separation(m, k).is_none())
}

pub fn direct_sum(m: &Matroid, n: &Matroid) -> Result<Matroid> {
    if !m.ground().common(n.ground()).is_empty() {
        return Err(Error::OverlappingGrounds);
    }
    let (ground, ma, mb) = m.ground().merge(n.ground())?;
    let mut bases = Vec::with_capacity(m.num_bases() * n.num_bases());
    for b in m.bases() {
        let b = b.permute(&ma);
        for c in n.bases() {
            bases.push(b.union(c.permute(&mb)));
        }
    }
    Ok(Matroid::from_bases_unchecked(ground, bases))
}

/// Ground sets of the 2-connected components, ordered by least element.
pub fn component_sets(m: &Matroid) -> Vec<Subset> {
    let n = m.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for c in m.circuit_sets() {
        let first = Subset::min(*c).unwrap();
        for e in c.iter() {
            let (a, b) = (find(&mut parent, first), find(&mut parent, e));
            parent[a] = b;
        }
    }
    let mut comps: Vec<Subset> = Vec::new();
    let mut root_of = vec![usize::MAX; n];
    for e in 0..n {
        let r = find(&mut parent, e);
        if root_of[r] == usize::MAX {
            root_of[r] = comps.len();
            comps.push(Subset::EMPTY);
        }
        comps[root_of[r]] = comps[root_of[r]].insert(e);
    }
    comps
}

/// The 2-connected components; their direct sum is `m`.
pub fn connected_components(m: &Matroid) -> Vec<Matroid> {
    component_sets(m).into_iter().map(|s| m.restrict(s)).collect()
}

/// Both parts have more than two elements.
pub fn is_nontrivial_two_sum(m: &Matroid, n: &Matroid) -> bool {
    m.len() > 2 && n.len() > 2
}

/// The 2-sum along the single shared element `e`, built from its circuits.
pub fn two_sum(m: &Matroid, n: &Matroid, e: &GroundLabel) -> Result<Matroid> {
    if m.len() < 2 || n.len() < 2 {
        return Err(Error::PreconditionViolation("(i) both ground sets need at least two elements".into()));
    }
    let common = m.ground().common(n.ground());
    if common.len() != 1 || &common[0] != e {
        return Err(Error::PreconditionViolation(format!("(ii) the ground sets must meet exactly in {{{e}}}")));
    }
    let em = m.index_of(e)?;
    let en = n.index_of(e)?;
    if m.is_loop(em) || m.is_coloop(em) || n.is_loop(en) || n.is_coloop(en) {
        return Err(Error::PreconditionViolation(format!("(iii) {e} is a loop or coloop of a part")));
    }
    let (merged, ma, mb) = m.ground().merge(n.ground())?;
    let eu = merged.index_of(e).unwrap();
    let keep = merged.full().remove(eu);
    let ground = merged.restrict(keep);
    let lift = |s: Subset, map: &[usize]| s.permute(map).squeeze_out(eu);
    let mut circuits = Vec::new();
    let (with_m, without_m): (Vec<Subset>, Vec<Subset>) = m.circuit_sets().iter().partition(|c| c.contains(em));
    let (with_n, without_n): (Vec<Subset>, Vec<Subset>) = n.circuit_sets().iter().partition(|c| c.contains(en));
    circuits.extend(without_m.iter().map(|c| lift(*c, &ma)));
    circuits.extend(without_n.iter().map(|c| lift(*c, &mb)));
    for c1 in &with_m {
        for c2 in &with_n {
            circuits.push(lift(c1.remove(em), &ma).union(lift(c2.remove(en), &mb)));
        }
    }
    Ok(Matroid::from_circuits(ground, &circuits))
}

/// For a 2-separation `(X, Y)` of `m`, the parts `M_1` on `X ∪ c` and `M_2`
/// on `Y ∪ c` with `m = M_1 ⊕₂ M_2`. The circuits of `M_1` are those of `M|X`
/// together with `(C ∩ X) ∪ c` for circuits `C` meeting both sides.
pub fn split_along(m: &Matroid, x: Subset, c: &GroundLabel) -> Result<(Matroid, Matroid)> {
    if m.ground().index_of(c).is_some() {
        return Err(Error::PreconditionViolation(format!("connector {c} is already in the ground set")));
    }
    let y = m.full().difference(x);
    Ok((part(m, x, c)?, part(m, y, c)?))
}

fn part(m: &Matroid, side: Subset, c: &GroundLabel) -> Result<Matroid> {
    let mut labels = m.ground().labels_of(side);
    labels.push(c.clone());
    let ground = GroundSet::from_unsorted(labels)?;
    let to_new: Vec<usize> =
        (0..m.len()).map(|i| if side.contains(i) { ground.index_of(m.ground().label(i)).unwrap() } else { usize::MAX }).collect();
    let ci = ground.index_of(c).unwrap();
    let mut fam: Vec<Subset> = Vec::new();
    for circ in m.circuit_sets() {
        let inside = circ.intersection(side);
        let mapped = Subset::from_indices(inside.iter().map(|i| to_new[i]));
        if inside == *circ {
            fam.push(mapped);
        } else if !inside.is_empty() {
            fam.push(mapped.insert(ci));
        }
    }
    fam.sort_unstable();
    fam.dedup();
    let minimal: Vec<Subset> = fam.iter().copied().filter(|s| !fam.iter().any(|t| t != s && t.is_subset(*s))).collect();
    Ok(Matroid::from_circuits(ground, &minimal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{circuit_matroid, graphic_matroid, uniform, uniform_on, whirl, Graph};
    use crate::matroid::is_isomorphic;
    use crate::subset::subsets_of;

    fn labels(v: &[(i64, i64)]) -> GroundSet {
        GroundSet::new(v.iter().map(|&(a, b)| GroundLabel::ratio(a, b)).collect()).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let u = uniform(2, 4).unwrap();
        assert_eq!(connectivity_lambda(&u, Subset::EMPTY), 0);
        let a = uniform_on(1, GroundSet::range(2)).unwrap();
        let b = uniform_on(1, GroundSet::from_ints([3, 4]).unwrap()).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(connectivity_lambda(&s, s.subset(&[1, 2])), 0);
        let t = two_sum(
            &circuit_matroid(labels(&[(1, 1), (5, 2), (4, 1)])).unwrap(),
            &uniform_on(1, labels(&[(2, 1), (5, 2), (3, 1)])).unwrap(),
            &GroundLabel::ratio(5, 2),
        )
        .unwrap();
        assert_eq!(connectivity_lambda(&t, t.subset(&[1, 4])), 1);
    }

    #[test]
    fn lambda_symmetries() {
        let ms = [uniform(2, 4).unwrap(), whirl(3).unwrap(), uniform(1, 5).unwrap()];
        for m in &ms {
            let d = m.dual();
            for x in subsets_of(m.full()) {
                let l = connectivity_lambda(m, x);
                assert_eq!(l, connectivity_lambda(m, m.full().difference(x)));
                assert_eq!(l, connectivity_lambda(&d, x));
            }
        }
    }

    #[test]
    fn separations() {
        assert_eq!(find_k_separation(&uniform(2, 4).unwrap(), 2), None);
        let a = uniform_on(1, GroundSet::range(2)).unwrap();
        let b = uniform_on(1, GroundSet::from_ints([3, 4]).unwrap()).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(find_k_separation(&s, 1), Some((s.subset(&[1, 2]), s.subset(&[3, 4]))));
        // triangle 1,2,3 with 4 parallel to 3
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2), (2, 0), (2, 0)]).unwrap();
        let m = graphic_matroid(&g).unwrap();
        let (x, y) = find_k_separation(&m, 2).unwrap();
        assert_eq!((x, y), (m.subset(&[1, 2]), m.subset(&[3, 4])));
        assert_eq!(connectivity_lambda(&m, m.subset(&[3, 4])), 1);
        assert_eq!(find_last_k_separation(&m, 2), Some((x, y)));
        let w = whirl(4).unwrap();
        assert_eq!(find_k_separation_with(&w, 3, Strategy::Sequential), find_k_separation_with(&w, 3, Strategy::Parallel));
    }

    #[test]
    fn connectedness() {
        assert!(is_n_connected(&whirl(3).unwrap(), 3));
        let lp = Matroid::from_int_bases(GroundSet::range(3), &[&[1], &[2]]).unwrap();
        assert!(!is_n_connected(&lp, 2));
        assert!(is_n_connected(&uniform(4, 5).unwrap(), 2));
    }

    #[test]
    fn direct_sums_and_components() {
        let a = uniform_on(1, GroundSet::range(1)).unwrap();
        let b = uniform_on(0, GroundSet::from_ints([2]).unwrap()).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!((s.len(), s.rank(), s.loops()), (2, 1, Subset::singleton(1)));
        assert_eq!(direct_sum(&a, &a), Err(Error::OverlappingGrounds));
        let w = whirl(2).unwrap();
        let c = circuit_matroid(GroundSet::from_ints([5, 6, 7]).unwrap()).unwrap();
        let wc = direct_sum(&w, &c).unwrap();
        assert_eq!(connected_components(&wc), vec![w.clone(), c.clone()]);
        assert_eq!(connected_components(&w), vec![w.clone()]);
        let withloop = direct_sum(&w, &uniform_on(0, GroundSet::from_ints([5]).unwrap()).unwrap()).unwrap();
        assert_eq!(component_sets(&withloop)[1], Subset::singleton(4));
    }

    #[test]
    fn two_sum_of_triangles_is_a_four_circuit() {
        let a = circuit_matroid(labels(&[(1, 1), (5, 2), (4, 1)])).unwrap();
        let b = circuit_matroid(labels(&[(2, 1), (5, 2), (3, 1)])).unwrap();
        let e = GroundLabel::ratio(5, 2);
        let s = two_sum(&a, &b, &e).unwrap();
        assert_eq!(s, uniform(3, 4).unwrap());
        assert!(is_nontrivial_two_sum(&a, &b));
        let coloop = Matroid::from_bases(labels(&[(5, 2), (3, 1)]), vec![Subset::full(2)]).unwrap();
        assert!(matches!(two_sum(&a, &coloop, &e), Err(Error::PreconditionViolation(m)) if m.starts_with("(iii)")));
        assert!(matches!(two_sum(&a, &a, &e), Err(Error::PreconditionViolation(m)) if m.starts_with("(ii)")));
    }

    /// Bases of a 2-sum: `B1 ∪ B2 − e` with `e` in exactly one of them.
    fn two_sum_by_bases(m: &Matroid, n: &Matroid, e: &GroundLabel) -> Matroid {
        let (merged, ma, mb) = m.ground().merge(n.ground()).unwrap();
        let eu = merged.index_of(e).unwrap();
        let mut bases = Vec::new();
        for b1 in m.bases() {
            for b2 in n.bases() {
                let (x, y) = (b1.permute(&ma), b2.permute(&mb));
                if x.contains(eu) != y.contains(eu) {
                    bases.push(x.union(y).remove(eu).squeeze_out(eu));
                }
            }
        }
        Matroid::from_bases(merged.restrict(merged.full().remove(eu)), bases).unwrap()
    }

    #[test]
    fn two_sum_matches_basis_formula() {
        let w = whirl(3).unwrap();
        let e = GroundLabel::integer(6);
        let other = uniform_on(2, GroundSet::from_ints([6, 7, 8, 9]).unwrap()).unwrap();
        assert_eq!(two_sum(&w, &other, &e).unwrap(), two_sum_by_bases(&w, &other, &e));
        let c = circuit_matroid(GroundSet::from_ints([6, 7, 8]).unwrap()).unwrap();
        assert_eq!(two_sum(&w, &c, &e).unwrap(), two_sum_by_bases(&w, &c, &e));
    }

    #[test]
    fn split_then_glue() {
        let w = whirl(3).unwrap();
        let c = circuit_matroid(GroundSet::from_ints([6, 7, 8]).unwrap()).unwrap();
        let s = two_sum(&w, &c, &6.into()).unwrap();
        let x = s.subset(&[1, 2, 3, 4, 5]);
        assert_eq!(connectivity_lambda(&s, x), 1);
        let conn = GroundLabel::ratio(11, 2);
        let (p, q) = split_along(&s, x, &conn).unwrap();
        assert!(is_isomorphic(&p, &w));
        assert!(is_isomorphic(&q, &c));
        assert_eq!(two_sum(&p, &q, &conn).unwrap(), s);
    }
}
