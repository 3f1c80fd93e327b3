//! Brute-force realizability over GF(2) and GF(3).
//!
//! A representation can always be brought to the form `[I | A]` on a fixed
//! basis `B₀`, where column `e` of `A` is supported exactly on the fundamental
//! circuit of `e` minus `e`. Scaling rows and columns then makes every entry on
//! a spanning forest of the support graph equal to 1. Over GF(2) nothing is
//! left to choose; over GF(3) each remaining support entry is ±1.

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::matroid::Matroid;
use crate::subset::{k_subsets_of, Subset};

/// Largest number of free ±1 entries searched over GF(3).
pub const MAX_FREE_ENTRIES: usize = 22;
/// Largest ground set accepted by the oracles.
pub const MAX_ORACLE_GROUND: usize = 16;

fn det_mod(mut a: Vec<Vec<u8>>, p: u8) -> u8 {
    let n = a.len();
    let mut det: u32 = 1;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
        if piv != c {
            a.swap(piv, c);
            det = (det * (p as u32 - 1)) % p as u32;
        }
        let pv = a[c][c] as u32;
        det = det * pv % p as u32;
        // inverse of pv mod p, p prime and small
        let inv = (1..p as u32).find(|x| x * pv % p as u32 == 1).unwrap();
        for r in c + 1..n {
            let f = a[r][c] as u32 * inv % p as u32;
            if f == 0 {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for k in c..n {
                let sub = f * a[c][k] as u32 % p as u32;
                a[r][k] = ((a[r][k] as u32 + p as u32 - sub) % p as u32) as u8;
            }
        }
    }
    det as u8
}

struct Setup {
    rank: usize,
    b0: Vec<usize>,
    /// Non-basis columns in search order with their supports (row positions).
    cols: Vec<(usize, Vec<usize>)>,
    /// Entries fixed to 1 by scaling, as (column position, row).
    forced: Vec<Vec<bool>>,
    free: usize,
}

fn setup(m: &Matroid) -> Setup {
    let b0_set = m.sorted_bases()[0];
    let b0: Vec<usize> = b0_set.iter().collect();
    let mut cols = Vec::new();
    for e in m.full().difference(b0_set).iter() {
        let support: Vec<usize> = (0..b0.len()).filter(|&row| m.is_basis(b0_set.remove(b0[row]).insert(e))).collect();
        cols.push((e, support));
    }
    // spanning forest of the bipartite graph rows × columns
    let r = b0.len();
    let mut parent: Vec<usize> = (0..r + cols.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut y = x;
        while p[y] != y {
            y = p[y];
        }
        p[x] = y;
        y
    }
    let mut forced = vec![vec![false; r]; cols.len()];
    let mut free = 0;
    for (ci, (_, support)) in cols.iter().enumerate() {
        for &row in support {
            let (a, b) = (find(&mut parent, row), find(&mut parent, r + ci));
            if a != b {
                parent[a] = b;
                forced[ci][row] = true;
            } else {
                free += 1;
            }
        }
    }
    Setup { rank: r, b0, cols, forced, free }
}

struct Checker<'a> {
    m: &'a Matroid,
    s: Setup,
    p: u8,
    /// subsets to test once column position `i` is assigned
    tests: Vec<Vec<Subset>>,
}

type Columns = Vec<Option<Vec<u8>>>;

impl Checker<'_> {
    fn consistent(&self, vecs: &Columns, t: Subset) -> bool {
        let r = self.s.rank;
        let mut mat = vec![vec![0u8; r]; r];
        for (c, e) in t.iter().enumerate() {
            let v = vecs[e].as_ref().unwrap();
            for row in 0..r {
                mat[row][c] = v[row];
            }
        }
        (det_mod(mat, self.p) != 0) == self.m.is_basis(t)
    }

    /// Candidate vectors for column position `i`.
    fn options(&self, i: usize) -> Vec<Vec<u8>> {
        let support = &self.s.cols[i].1;
        let choices: Vec<usize> = support.iter().copied().filter(|&row| !self.s.forced[i][row]).collect();
        let count: u32 = if self.p == 2 { 1 } else { 1 << choices.len() };
        (0..count)
            .map(|mask| {
                let mut v = vec![0u8; self.s.rank];
                for &row in support {
                    v[row] = 1;
                }
                for (k, &row) in choices.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        v[row] = self.p - 1;
                    }
                }
                v
            })
            .collect()
    }

    fn place(&self, vecs: &mut Columns, i: usize, v: Vec<u8>) -> bool {
        vecs[self.s.cols[i].0] = Some(v);
        self.tests[i].iter().all(|t| self.consistent(vecs, *t))
    }

    fn search(&self, vecs: &mut Columns, i: usize) -> bool {
        if i == self.s.cols.len() {
            return true;
        }
        for v in self.options(i) {
            if self.place(vecs, i, v) && self.search(vecs, i + 1) {
                return true;
            }
        }
        vecs[self.s.cols[i].0] = None;
        false
    }
}

fn realizable(m: &Matroid, p: u8, strategy: Strategy) -> Result<bool> {
    if m.len() > MAX_ORACLE_GROUND {
        return Err(Error::OracleScaleExceeded(format!("{} elements exceed {MAX_ORACLE_GROUND}", m.len())));
    }
    let s = setup(m);
    if p == 3 && s.free > MAX_FREE_ENTRIES {
        return Err(Error::OracleScaleExceeded(format!("{} free entries exceed {MAX_FREE_ENTRIES}", s.free)));
    }
    let r = s.rank;
    let mut vecs: Columns = vec![None; m.len()];
    for (row, &b) in s.b0.iter().enumerate() {
        let mut v = vec![0u8; r];
        v[row] = 1;
        vecs[b] = Some(v);
    }
    let mut placed = Subset::from_indices(s.b0.iter().copied());
    let mut tests = Vec::new();
    for (e, _) in &s.cols {
        let list: Vec<Subset> = if r == 0 { Vec::new() } else { k_subsets_of(placed, r - 1).map(|t| t.insert(*e)).collect() };
        tests.push(list);
        placed = placed.insert(*e);
    }
    let c = Checker { m, s, p, tests };
    if c.s.cols.is_empty() {
        return Ok(true);
    }
    // fan out over the choices for the first free column
    let first = c.options(0);
    let found = strategy.find_map_first(&first, |v| {
        let mut vecs = vecs.clone();
        (c.place(&mut vecs, 0, v.clone()) && c.search(&mut vecs, 1)).then_some(())
    });
    Ok(found.is_some())
}

pub fn f2_realizable(m: &Matroid) -> Result<bool> {
    realizable(m, 2, Strategy::default())
}

pub fn f3_realizable(m: &Matroid) -> Result<bool> {
    realizable(m, 3, Strategy::default())
}

pub fn f3_realizable_with(m: &Matroid, strategy: Strategy) -> Result<bool> {
    realizable(m, 3, strategy)
}
