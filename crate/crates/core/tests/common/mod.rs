#![allow(dead_code)]

use std::sync::OnceLock;

use positroid::corpus::{all_positroids, matroid_corpus};
use positroid::subset::{k_subsets, subsets_of};
use positroid::{GroundLabel, GroundSet, Matroid, Strategy, Subset};

/// Every matroid on `[n]`, `n <= 6`.
pub fn corpus6() -> &'static [Matroid] {
    static C: OnceLock<Vec<Matroid>> = OnceLock::new();
    C.get_or_init(|| matroid_corpus(6, Strategy::default()))
}

pub fn corpus_upto(n: usize) -> impl Iterator<Item = &'static Matroid> {
    corpus6().iter().filter(move |m| m.len() <= n)
}

/// Every positroid on `[n]` for `n <= max_n`.
pub fn positroids_upto(max_n: usize) -> Vec<Matroid> {
    (1..=max_n).flat_map(|n| all_positroids(n, Strategy::default())).collect()
}

/// Same matroid with every label moved by `by`.
pub fn shifted(m: &Matroid, by: i64) -> Matroid {
    let labels: Vec<GroundLabel> = m.ground().labels().iter().map(|l| l.offset(by)).collect();
    m.relabel(&labels).unwrap()
}

pub fn ints(m: &Matroid, s: Subset) -> Vec<i64> {
    m.ground().labels_of(s).iter().map(|l| l.to_string().parse().unwrap()).collect()
}

/// Rank from the definition: the largest independent subset.
pub fn rank_by_scan(m: &Matroid, x: Subset) -> usize {
    m.bases().iter().map(|b| b.intersection(x).len()).max().unwrap_or(0)
}

/// Exchange axiom checked literally.
pub fn exchange_holds(bases: &[Subset]) -> bool {
    bases.iter().all(|b1| {
        bases.iter().all(|b2| b1.difference(*b2).iter().all(|x| b2.difference(*b1).iter().any(|y| bases.contains(&b1.remove(x).insert(y)))))
    })
}

pub fn matroid_on(n: usize, bases: Vec<Subset>) -> Matroid {
    Matroid::from_bases(GroundSet::range(n), bases).unwrap()
}

/// Minimal dependent sets from the definition.
pub fn circuits_by_scan(m: &Matroid) -> Vec<Subset> {
    let dependent = |s: Subset| !m.bases().iter().any(|b| s.is_subset(*b));
    let mut out: Vec<Subset> = subsets_of(m.full()).filter(|s| dependent(*s) && s.iter().all(|e| !dependent(s.remove(e)))).collect();
    out.sort();
    out
}

pub fn all_k_subsets(n: usize, k: usize) -> Vec<Subset> {
    k_subsets(n, k).collect()
}
