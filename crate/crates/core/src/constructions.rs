//! Uniform and graphic matroids, wheels, whirls and the graphs `N_r`.
//!
//! Wheels and `N_r` use the positroid edge ordering: spokes (or the parallel
//! bundle) carry the odd labels `1, 3, ..., 2r-1` and the rim the even labels
//! `2, 4, ..., 2r`. Spoke `2k+1` meets the rim at the vertex shared by rim edges
//! `2k` and `2k+2` (indices mod `2r`).

use crate::error::{Error, Result};
use crate::label::{GroundLabel, GroundSet};
use crate::matroid::Matroid;
use crate::subset::{k_subsets, Subset};

/// A multigraph with labelled edges. Loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, GroundLabel)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize, GroundLabel)>) -> Result<Graph> {
        if let Some(e) = edges.iter().find(|e| e.0 >= vertices || e.1 >= vertices) {
            return Err(Error::PreconditionViolation(format!("edge {} has an endpoint outside the graph", e.2)));
        }
        Ok(Graph { vertices, edges })
    }

    /// Edges labelled `1, 2, ...` in the given order.
    pub fn from_pairs(vertices: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let edges = pairs.iter().enumerate().map(|(i, &(u, v))| (u, v, GroundLabel::integer(i as i64 + 1))).collect();
        Graph::new(vertices, edges)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// The cycle matroid: bases are the maximal forests.
pub fn graphic_matroid(g: &Graph) -> Result<Matroid> {
    let ground = GroundSet::from_unsorted(g.edges.iter().map(|e| e.2.clone()).collect())?;
    if ground.len() != g.edges.len() {
        return Err(Error::PreconditionViolation("edge labels are not distinct".into()));
    }
    // edge endpoints in ground-index order
    let mut ends = vec![(0, 0); g.edges.len()];
    for (u, v, l) in &g.edges {
        ends[ground.index_of(l).unwrap()] = (*u, *v);
    }
    let mut uf = UnionFind::new(g.vertices);
    let rank = ends.iter().filter(|&&(u, v)| uf.union(u, v)).count();
    let bases = k_subsets(ends.len(), rank)
        .filter(|s| {
            let mut uf = UnionFind::new(g.vertices);
            s.iter().all(|i| uf.union(ends[i].0, ends[i].1))
        })
        .collect();
    Ok(Matroid::from_bases_unchecked(ground, bases))
}

/// `U^r_n` on a given ground set.
pub fn uniform_on(r: usize, ground: GroundSet) -> Result<Matroid> {
    let n = ground.len();
    if r > n {
        return Err(Error::BadRank(r, n));
    }
    Ok(Matroid::from_bases_unchecked(ground, k_subsets(n, r).collect()))
}

/// `U^r_n` on `{1, ..., n}`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n > crate::subset::MAX_GROUND {
        return Err(Error::GroundTooLarge(n));
    }
    uniform_on(r, GroundSet::range(n))
}

/// `U^{n-1}_n`, a single circuit.
pub fn circuit_matroid(ground: GroundSet) -> Result<Matroid> {
    let n = ground.len();
    if n == 0 {
        return Err(Error::BadRank(0, 0));
    }
    uniform_on(n - 1, ground)
}

/// `U^1_n`, a single cocircuit.
pub fn cocircuit_matroid(ground: GroundSet) -> Result<Matroid> {
    if ground.is_empty() {
        return Err(Error::BadRank(1, 0));
    }
    uniform_on(1, ground)
}

fn check_rank(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    if 2 * r > crate::subset::MAX_GROUND {
        return Err(Error::GroundTooLarge(2 * r));
    }
    Ok(())
}

/// The rim `{2, 4, ..., 2r}`.
pub fn rim(r: usize) -> Subset {
    Subset::from_indices((1..=r).map(|k| 2 * k - 1))
}

/// Rim edges `2k = (v_{k-1}, v_k)` for `k = 1..r`, indices mod `r`, on the
/// vertices `first..first+r`.
fn rim_edges(r: usize, first: usize) -> Vec<(usize, usize, GroundLabel)> {
    (1..=r).map(|k| (first + k - 1, first + k % r, GroundLabel::integer(2 * k as i64))).collect()
}

/// The wheel `W_r`: hub `0`, rim vertices `1..=r`.
pub fn wheel_graph(r: usize) -> Result<Graph> {
    check_rank(r)?;
    let mut edges: Vec<_> = (0..r).map(|k| (0, 1 + k, GroundLabel::integer(2 * k as i64 + 1))).collect();
    edges.extend(rim_edges(r, 1));
    Graph::new(r + 1, edges)
}

pub fn wheel(r: usize) -> Result<(Graph, Matroid)> {
    let g = wheel_graph(r)?;
    let m = graphic_matroid(&g)?;
    Ok((g, m))
}

/// The whirl: the wheel with its rim relaxed.
pub fn whirl(r: usize) -> Result<Matroid> {
    wheel(r)?.1.relax_circuit_hyperplane(rim(r))
}

/// `N_r`: an `r`-cycle on vertices `0..r` (rim labels as in the wheel) and `r`
/// parallel edges from vertex `0` to an extra vertex `r`.
pub fn n_graph_graph(r: usize) -> Result<Graph> {
    check_rank(r)?;
    let mut edges: Vec<_> = (0..r).map(|k| (0, r, GroundLabel::integer(2 * k as i64 + 1))).collect();
    edges.extend(rim_edges(r, 0));
    Graph::new(r + 1, edges)
}

pub fn n_graph(r: usize) -> Result<(Graph, Matroid)> {
    let g = n_graph_graph(r)?;
    let m = graphic_matroid(&g)?;
    Ok((g, m))
}

/// `N_r` with its rim relaxed.
pub fn n_relaxed(r: usize) -> Result<Matroid> {
    n_graph(r)?.1.relax_circuit_hyperplane(rim(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::is_isomorphic;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    /// Spanning-tree count by the matrix-tree theorem.
    fn kirchhoff(g: &Graph) -> i64 {
        let n = g.vertices;
        let mut lap = vec![vec![BigRational::zero(); n]; n];
        for (u, v, _) in &g.edges {
            if u == v {
                continue;
            }
            lap[*u][*u] += BigRational::one();
            lap[*v][*v] += BigRational::one();
            lap[*u][*v] -= BigRational::one();
            lap[*v][*u] -= BigRational::one();
        }
        let mut a: Vec<Vec<BigRational>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
        let k = n - 1;
        let mut det = BigRational::one();
        for c in 0..k {
            let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else { return 0 };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let piv = a[c][c].clone();
            det *= piv.clone();
            for r in c + 1..k {
                let f = &a[r][c] / &piv;
                #[allow(clippy::needless_range_loop)]
                for cc in c..k {
                    let d = &f * &a[c][cc];
                    a[r][cc] -= d;
                }
            }
        }
        let v: BigInt = det.to_integer();
        v.try_into().unwrap()
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(uniform(2, 4).unwrap().num_bases(), 6);
        let z = uniform(0, 3).unwrap();
        assert_eq!((z.num_bases(), z.loops().len()), (1, 3));
        assert_eq!(uniform(5, 4).unwrap_err(), Error::BadRank(5, 4));
    }

    #[test]
    fn graphic_examples() {
        let tri = Graph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(graphic_matroid(&tri).unwrap(), uniform(2, 3).unwrap());
        let (_, n2) = n_graph(2).unwrap();
        let expect = Matroid::from_int_bases(GroundSet::range(4), &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]).unwrap();
        assert_eq!(n2, expect);
        let looped = Graph::from_pairs(2, &[(0, 0), (0, 1)]).unwrap();
        assert_eq!(graphic_matroid(&looped).unwrap().loops(), Subset::singleton(0));
    }

    #[test]
    fn spanning_tree_counts() {
        for r in 2..=6 {
            let (g, m) = wheel(r).unwrap();
            assert_eq!(m.num_bases() as i64, kirchhoff(&g), "wheel {r}");
            assert_eq!(whirl(r).unwrap().num_bases() as i64, kirchhoff(&g) + 1);
            let (h, n) = n_graph(r).unwrap();
            assert_eq!(n.num_bases() as i64, kirchhoff(&h));
        }
        assert_eq!(wheel(3).unwrap().1.num_bases(), 16);
        assert_eq!(whirl(3).unwrap().num_bases(), 17);
    }

    #[test]
    fn small_rank_identities() {
        let u24 = uniform(2, 4).unwrap();
        assert!(is_isomorphic(&whirl(2).unwrap(), &u24));
        assert!(is_isomorphic(&n_relaxed(2).unwrap(), &wheel(2).unwrap().1));
        assert_eq!(whirl(1).unwrap_err(), Error::RankTooSmall(1));
        assert_eq!(n_graph(0).unwrap_err(), Error::RankTooSmall(0));
    }

    #[test]
    fn rim_is_the_circuit_hyperplane() {
        for r in [2, 4, 5] {
            let (_, m) = wheel(r).unwrap();
            assert_eq!(m.circuit_hyperplanes().members, vec![rim(r)], "r = {r}");
        }
        let (_, k4) = wheel(3).unwrap();
        assert!(k4.circuit_hyperplanes().contains(rim(3)));
    }

    #[test]
    fn circuits_and_cocircuits() {
        let g = GroundSet::range(3);
        assert_eq!(circuit_matroid(g.clone()).unwrap(), uniform(2, 3).unwrap());
        assert_eq!(circuit_matroid(g.clone()).unwrap().dual(), cocircuit_matroid(g).unwrap());
    }
}
