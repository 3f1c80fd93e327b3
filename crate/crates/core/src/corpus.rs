//! Generated families of small ordered matroids: uniform and graphic
//! matroids under every ordering, relaxations, duals, every positroid on
//! `[n]` and the members of their envelope classes.

use std::collections::{BTreeMap, HashSet};

use crate::constructions::{graphic_matroid, uniform, Graph};
use crate::error::Result;
use crate::exec::Strategy;
use crate::label::GroundSet;
use crate::matroid::{is_isomorphic, Matroid};
use crate::positroid::{envelope_class_with, envelope_from_necklace, permutation_to_necklace, DecoratedPermutation, FixedColor, DEFAULT_BUDGET};
use crate::subset::Subset;

/// Every decorated permutation of `[n]`, ordered by image sequence and then
/// by the colors of the fixed points (coloop before loop).
pub fn decorated_permutations(n: usize) -> Vec<DecoratedPermutation> {
    let ground = GroundSet::range(n);
    let mut out = Vec::new();
    for image in permutations(n) {
        let fixed: Vec<usize> = (0..n).filter(|&i| image[i] == i).collect();
        for mask in 0u32..1 << fixed.len() {
            let mut colors = vec![None; n];
            for (k, &i) in fixed.iter().enumerate() {
                colors[i] = Some(if mask >> (fixed.len() - 1 - k) & 1 == 0 { FixedColor::Coloop } else { FixedColor::Loop });
            }
            out.push(DecoratedPermutation::new(ground.clone(), image.clone(), colors).expect("valid by construction"));
        }
    }
    out
}

/// Permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Rank of the positroid of a decorated permutation: the anti-exceedances
/// counted from the first element, plus the coloops.
pub fn permutation_rank(p: &DecoratedPermutation) -> usize {
    let inv = p.inverse();
    let n = p.len();
    (0..n).filter(|&j| j < inv.image(j)).count() + p.coloops().len()
}

/// The positroid whose decorated permutation is `p`.
pub fn positroid_of_permutation(p: &DecoratedPermutation) -> Result<Matroid> {
    let j = permutation_to_necklace(p, permutation_rank(p))?;
    Ok(envelope_from_necklace(&j))
}

/// Every positroid on `[n]`, in the order of [`decorated_permutations`].
pub fn all_positroids(n: usize, strategy: Strategy) -> Vec<Matroid> {
    let perms = decorated_permutations(n);
    strategy.map(&perms, |p| positroid_of_permutation(p).expect("every decorated permutation has a positroid"))
}

/// `U^r_n` for `1 <= n <= max_n`.
pub fn uniform_matroids(max_n: usize) -> Vec<Matroid> {
    (1..=max_n).flat_map(|n| (0..=n).map(move |r| uniform(r, n).unwrap())).collect()
}

/// Edge sequences of connected multigraphs with `m` edges, vertices
/// introduced in order. Every graphic matroid on `m` elements arises.
fn edge_sequences(m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(m: usize, vertices: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 0..=vertices {
            for u in 0..=v.min(vertices - 1) {
                if v == vertices && u == v {
                    continue;
                }
                cur.push((u, v));
                go(m, vertices.max(v + 1), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, 1, &mut Vec::new(), &mut out);
    out
}

/// Isomorphism-class representatives among `ms`.
pub fn isomorphism_classes(ms: Vec<Matroid>) -> Vec<Matroid> {
    let mut buckets: BTreeMap<(usize, usize, usize, Vec<usize>), Vec<Matroid>> = BTreeMap::new();
    for m in ms {
        let mut degrees: Vec<usize> = (0..m.len()).map(|i| m.bases().iter().filter(|b| b.contains(i)).count()).collect();
        degrees.sort_unstable();
        let bucket = buckets.entry((m.len(), m.rank(), m.num_bases(), degrees)).or_default();
        if !bucket.iter().any(|x| is_isomorphic(x, &m)) {
            bucket.push(m);
        }
    }
    buckets.into_values().flatten().collect()
}

/// Every ordering of every matroid in `reps`, deduplicated.
pub fn all_orderings(reps: &[Matroid], strategy: Strategy) -> Vec<Matroid> {
    let mut out = Vec::new();
    for m in reps {
        let perms = permutations(m.len());
        out.extend(strategy.map(&perms, |p| m.permute(p)));
    }
    dedupe(out)
}

/// Graphic matroids with `m` edges under every ordering, on `[m]`.
pub fn graphic_matroids(m: usize, strategy: Strategy) -> Vec<Matroid> {
    let seqs = edge_sequences(m);
    let ms = strategy.map(&seqs, |s| {
        let vertices = s.iter().map(|e| e.1 + 1).max().unwrap_or(1);
        graphic_matroid(&Graph::from_pairs(vertices, s).unwrap()).unwrap()
    });
    all_orderings(&isomorphism_classes(dedupe(ms)), strategy)
}

/// Closes `ms` under relaxing circuit-hyperplanes.
pub fn with_relaxations(ms: Vec<Matroid>) -> Vec<Matroid> {
    let mut seen: HashSet<(usize, Vec<Subset>)> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = ms;
    while let Some(m) = queue.pop() {
        if !seen.insert(key(&m)) {
            continue;
        }
        for h in m.circuit_hyperplanes().members {
            queue.push(m.relax_circuit_hyperplane(h).unwrap());
        }
        out.push(m);
    }
    sort(out)
}

pub fn with_duals(ms: Vec<Matroid>) -> Vec<Matroid> {
    let duals: Vec<Matroid> = ms.iter().map(|m| m.dual()).collect();
    dedupe(ms.into_iter().chain(duals).collect())
}

fn key(m: &Matroid) -> (usize, Vec<Subset>) {
    (m.len(), m.bases().to_vec())
}

fn sort(mut ms: Vec<Matroid>) -> Vec<Matroid> {
    ms.sort_by_cached_key(key);
    ms
}

/// Removes repeats (matroids on `[n]` compared by bases) and sorts.
pub fn dedupe(ms: Vec<Matroid>) -> Vec<Matroid> {
    let mut seen = HashSet::new();
    sort(ms.into_iter().filter(|m| seen.insert(key(m))).collect())
}

/// Members of the envelope classes of every positroid on `[n]` whose class
/// fits the default budget.
pub fn envelope_members(n: usize, strategy: Strategy) -> Vec<Matroid> {
    let ps = all_positroids(n, strategy);
    let classes = strategy.map(&ps, |p| envelope_class_with(p, DEFAULT_BUDGET, Strategy::Sequential).map(|c| c.members).unwrap_or_default());
    dedupe(classes.into_iter().flatten().collect())
}

/// Uniform matroids, graphic matroids of all graphs with at most `max_n`
/// edges, their relaxations and duals, every positroid and every envelope
/// class member, all on `[n]` with `n <= max_n`.
pub fn matroid_corpus(max_n: usize, strategy: Strategy) -> Vec<Matroid> {
    let mut ms = uniform_matroids(max_n);
    for m in 1..=max_n {
        ms.extend(graphic_matroids(m, strategy));
    }
    let ms = with_duals(with_relaxations(ms));
    let mut all = ms;
    for n in 1..=max_n {
        all.extend(envelope_members(n, strategy));
    }
    let all = with_duals(with_relaxations(all));
    all.into_iter().filter(|m| !m.is_empty()).collect()
}
