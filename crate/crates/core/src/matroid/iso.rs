//! Matroid isomorphism by invariant pruning and backtracking.

use super::Matroid;

struct Profile {
    n: usize,
    deg: Vec<usize>,
    pair: Vec<Vec<usize>>,
}

impl Profile {
    fn of(m: &Matroid) -> Profile {
        let n = m.len();
        let mut deg = vec![0; n];
        let mut pair = vec![vec![0; n]; n];
        for b in m.bases() {
            let idx: Vec<usize> = b.iter().collect();
            for (a, &i) in idx.iter().enumerate() {
                deg[i] += 1;
                for &j in &idx[a + 1..] {
                    pair[i][j] += 1;
                    pair[j][i] += 1;
                }
            }
        }
        Profile { n, deg, pair }
    }

    fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.deg.clone();
        d.sort_unstable();
        d
    }

    fn pair_signature(&self, i: usize) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.n).filter(|&j| j != i).map(|j| self.pair[i][j]).collect();
        s.sort_unstable();
        s
    }
}

fn cheap_invariants_match(a: &Matroid, b: &Matroid) -> bool {
    a.len() == b.len()
        && a.rank() == b.rank()
        && a.num_bases() == b.num_bases()
        && a.loops().len() == b.loops().len()
        && a.coloops().len() == b.coloops().len()
}

struct Search<'a> {
    a: &'a Matroid,
    b: &'a Matroid,
    pa: Profile,
    pb: Profile,
    order: Vec<usize>,
    cands: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(a: &'a Matroid, b: &'a Matroid) -> Option<Search<'a>> {
        if !cheap_invariants_match(a, b) {
            return None;
        }
        let pa = Profile::of(a);
        let pb = Profile::of(b);
        if pa.sorted_degrees() != pb.sorted_degrees() {
            return None;
        }
        let n = a.len();
        let sig_a: Vec<_> = (0..n).map(|i| pa.pair_signature(i)).collect();
        let sig_b: Vec<_> = (0..n).map(|i| pb.pair_signature(i)).collect();
        let cands: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| pa.deg[i] == pb.deg[j] && sig_a[i] == sig_b[j]).collect()).collect();
        if cands.iter().any(|c| c.is_empty()) {
            return None;
        }
        // most constrained first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (cands[i].len(), i));
        Some(Search { a, b, pa, pb, order, cands, map: vec![usize::MAX; n], used: vec![false; n] })
    }

    fn consistent(&self, depth: usize, i: usize, j: usize) -> bool {
        self.order[..depth].iter().all(|&p| self.pa.pair[i][p] == self.pb.pair[j][self.map[p]])
    }

    fn verify(&self) -> bool {
        self.a.bases().iter().all(|b| self.b.is_basis(b.permute(&self.map)))
    }

    fn run(&mut self, depth: usize, out: &mut Vec<Vec<usize>>, want_all: bool) -> bool {
        if depth == self.order.len() {
            if self.verify() {
                out.push(self.map.clone());
                return !want_all;
            }
            return false;
        }
        let i = self.order[depth];
        for c in 0..self.cands[i].len() {
            let j = self.cands[i][c];
            if self.used[j] || !self.consistent(depth, i, j) {
                continue;
            }
            self.map[i] = j;
            self.used[j] = true;
            let done = self.run(depth + 1, out, want_all);
            self.used[j] = false;
            self.map[i] = usize::MAX;
            if done {
                return true;
            }
        }
        false
    }
}

/// A bijection `map` (index in `a` to index in `b`) carrying the bases of `a`
/// onto those of `b`.
pub fn find_isomorphism(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    if b.is_uniform() {
        return (cheap_invariants_match(a, b)).then(|| (0..a.len()).collect());
    }
    let mut s = Search::new(a, b)?;
    let mut out = Vec::new();
    s.run(0, &mut out, false);
    out.pop()
}

pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Every isomorphism from `a` to `b`.
pub fn all_isomorphisms(a: &Matroid, b: &Matroid) -> Vec<Vec<usize>> {
    let Some(mut s) = Search::new(a, b) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    s.run(0, &mut out, true);
    out
}
