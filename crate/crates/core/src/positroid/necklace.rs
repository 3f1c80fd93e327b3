//! Grassmann necklaces.

use std::fmt;

use super::perm::{DecoratedPermutation, FixedColor};
use crate::cyclic::{lex_min_basis, CyclicShiftedOrder};
use crate::error::{Error, Result};
use crate::label::GroundSet;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// `(J_{i_1}, ..., J_{i_n})`: entry `j` is the lexicographically minimal basis
/// in the rotation starting at `i_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannNecklace {
    ground: GroundSet,
    entries: Vec<Subset>,
}

impl GrassmannNecklace {
    /// Validates equal cardinality and the successor rule.
    pub fn new(ground: GroundSet, entries: Vec<Subset>) -> Result<Self> {
        let n = ground.len();
        if entries.len() != n {
            return Err(Error::InconsistentNecklace(format!("{} entries for {n} elements", entries.len())));
        }
        if let Some(first) = entries.first() {
            if let Some(bad) = entries.iter().find(|e| e.len() != first.len()) {
                return Err(Error::InconsistentNecklace(format!("entries {} and {} differ in size", ground.render(*first), ground.render(*bad))));
            }
        }
        for j in 0..n {
            let cur = entries[j];
            let next = entries[(j + 1) % n];
            if !cur.is_subset(ground.full()) {
                return Err(Error::SubsetNotInGround);
            }
            let ok = if cur.contains(j) {
                let rest = cur.remove(j);
                rest.is_subset(next) && next.difference(rest).len() == 1
            } else {
                next == cur
            };
            if !ok {
                return Err(Error::InconsistentNecklace(format!(
                    "J_{} = {} cannot follow J_{} = {}",
                    ground.label((j + 1) % n),
                    ground.render(next),
                    ground.label(j),
                    ground.render(cur)
                )));
            }
        }
        Ok(GrassmannNecklace { ground, entries })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn entries(&self) -> &[Subset] {
        &self.entries
    }

    pub fn entry(&self, j: usize) -> Subset {
        self.entries[j]
    }

    /// Common size of the entries.
    pub fn rank(&self) -> usize {
        self.entries.first().map_or(0, |e| e.len())
    }

    /// Reads `π(i_j) = i_k` off `J_{i_{j+1}} = (J_{i_j} ∖ i_j) ∪ i_k`.
    pub fn to_permutation(&self) -> DecoratedPermutation {
        let n = self.entries.len();
        let mut image = vec![0; n];
        let mut colors = vec![None; n];
        for j in 0..n {
            let cur = self.entries[j];
            let next = self.entries[(j + 1) % n];
            if !cur.contains(j) {
                image[j] = j;
                colors[j] = Some(FixedColor::Loop);
            } else if next == cur {
                image[j] = j;
                colors[j] = Some(FixedColor::Coloop);
            } else {
                image[j] = next.difference(cur.remove(j)).min().unwrap();
            }
        }
        DecoratedPermutation::new(self.ground.clone(), image, colors).expect("validated necklace")
    }

    /// `J_{i_j}: {…}` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (j, e) in self.entries.iter().enumerate() {
            out.push_str(&format!("J_{}: {}\n", self.ground.label(j), self.ground.render(*e)));
        }
        out
    }
}

impl fmt::Display for GrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for GrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| self.ground.render(*e)).collect();
        write!(f, "GrassmannNecklace({})", parts.join(", "))
    }
}

pub fn grassmann_necklace_of(m: &Matroid) -> GrassmannNecklace {
    let n = m.len();
    let entries = (0..n).map(|j| lex_min_basis(m, CyclicShiftedOrder::at(n, j))).collect();
    GrassmannNecklace { ground: m.ground().clone(), entries }
}

pub fn necklace_to_permutation(j: &GrassmannNecklace) -> DecoratedPermutation {
    j.to_permutation()
}

/// `J_{i} = {j : j <_i π⁻¹(j)} ∪ {coloops}`; every entry must have size `k`.
pub fn permutation_to_necklace(p: &DecoratedPermutation, k: usize) -> Result<GrassmannNecklace> {
    let n = p.len();
    let inv = p.inverse();
    let coloops = p.coloops();
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let o = CyclicShiftedOrder::at(n, i);
        let mut e = coloops;
        for j in 0..n {
            if o.key(j) < o.key(inv.image(j)) {
                e = e.insert(j);
            }
        }
        if e.len() != k {
            return Err(Error::NotARealizablePermutationRank(k));
        }
        entries.push(e);
    }
    GrassmannNecklace::new(p.ground().clone(), entries)
}
