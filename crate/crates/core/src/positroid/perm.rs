//! Decorated permutations.

use std::fmt;

use crate::error::{Error, Result};
use crate::label::{GroundLabel, GroundSet};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Decoration of a fixed point: coloops carry color −1, loops +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedColor {
    Coloop,
    Loop,
}

impl FixedColor {
    pub fn value(self) -> i8 {
        match self {
            FixedColor::Coloop => -1,
            FixedColor::Loop => 1,
        }
    }

    pub fn negate(self) -> FixedColor {
        match self {
            FixedColor::Coloop => FixedColor::Loop,
            FixedColor::Loop => FixedColor::Coloop,
        }
    }
}

/// A permutation of the ground set whose fixed points are colored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecoratedPermutation {
    ground: GroundSet,
    image: Vec<usize>,
    colors: Vec<Option<FixedColor>>,
}

impl DecoratedPermutation {
    /// `image[i]` is the index of the image of element `i`; `colors[i]` must be
    /// set exactly on fixed points.
    pub fn new(ground: GroundSet, image: Vec<usize>, colors: Vec<Option<FixedColor>>) -> Result<Self> {
        let n = ground.len();
        if image.len() != n || colors.len() != n {
            return Err(Error::InvalidPermutation("length differs from the ground set".into()));
        }
        let mut hit = vec![false; n];
        for (i, &j) in image.iter().enumerate() {
            if j >= n || hit[j] {
                return Err(Error::InvalidPermutation("not a bijection".into()));
            }
            hit[j] = true;
            if (i == j) != colors[i].is_some() {
                return Err(Error::InvalidPermutation(format!("colors must be given exactly on fixed points (element {})", ground.label(i))));
            }
        }
        Ok(DecoratedPermutation { ground, image, colors })
    }

    /// Builds from `(label, image label)` pairs; unlisted elements are fixed
    /// points with the given colors.
    pub fn from_pairs(ground: GroundSet, pairs: &[(i64, i64)], coloops: &[i64], loops: &[i64]) -> Result<Self> {
        let n = ground.len();
        let mut image: Vec<usize> = (0..n).collect();
        let mut colors = vec![None; n];
        for &(a, b) in pairs {
            let i = ground.require_index(&a.into())?;
            image[i] = ground.require_index(&b.into())?;
        }
        for (list, c) in [(coloops, FixedColor::Coloop), (loops, FixedColor::Loop)] {
            for &x in list {
                colors[ground.require_index(&x.into())?] = Some(c);
            }
        }
        DecoratedPermutation::new(ground, image, colors)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn color(&self, i: usize) -> Option<FixedColor> {
        self.colors[i]
    }

    pub fn apply(&self, l: &GroundLabel) -> Result<&GroundLabel> {
        Ok(self.ground.label(self.image[self.ground.require_index(l)?]))
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.image[i] == i
    }

    pub fn coloops(&self) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&i| self.colors[i] == Some(FixedColor::Coloop)))
    }

    pub fn loops(&self) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&i| self.colors[i] == Some(FixedColor::Loop)))
    }

    /// `(π⁻¹, −col)`.
    pub fn inverse(&self) -> DecoratedPermutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        let colors = self.colors.iter().map(|c| c.map(FixedColor::negate)).collect();
        DecoratedPermutation { ground: self.ground.clone(), image: inv, colors }
    }

    /// Cycles (length ≥ 2) as index lists, each rendered from a monotone
    /// rotation when one exists, otherwise from its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.is_fixed(s) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.image[x];
            }
            out.push(canonical_rotation(cyc));
        }
        out
    }

    /// Cycle notation, e.g. `(1,3,5)(6,4,2)` or `(1,2) ~3 _4`.
    pub fn render(&self) -> String {
        if self.is_empty() {
            return "()".into();
        }
        enum Unit {
            Cycle(Vec<usize>),
            Fixed(usize, FixedColor),
        }
        let mut units: Vec<(usize, Unit)> = self.cycles().into_iter().map(|c| (*c.iter().min().unwrap(), Unit::Cycle(c))).collect();
        for i in 0..self.len() {
            if let Some(c) = self.colors[i] {
                units.push((i, Unit::Fixed(i, c)));
            }
        }
        units.sort_by_key(|u| u.0);
        let mut out = String::new();
        let mut prev_cycle = None;
        for (_, u) in &units {
            let is_cycle = matches!(u, Unit::Cycle(_));
            if prev_cycle.is_some() && !(is_cycle && prev_cycle == Some(true)) {
                out.push(' ');
            }
            match u {
                Unit::Cycle(c) => {
                    let parts: Vec<String> = c.iter().map(|&i| self.ground.label(i).to_string()).collect();
                    out.push('(');
                    out.push_str(&parts.join(","));
                    out.push(')');
                }
                Unit::Fixed(i, FixedColor::Coloop) => out.push_str(&format!("~{}", self.ground.label(*i))),
                Unit::Fixed(i, FixedColor::Loop) => out.push_str(&format!("_{}", self.ground.label(*i))),
            }
            prev_cycle = Some(is_cycle);
        }
        out
    }

    fn label_map(&self) -> Vec<(GroundLabel, GroundLabel, Option<FixedColor>)> {
        (0..self.len()).map(|i| (self.ground.label(i).clone(), self.ground.label(self.image[i]).clone(), self.colors[i])).collect()
    }

    fn from_label_map(ground: GroundSet, map: Vec<(GroundLabel, GroundLabel, Option<FixedColor>)>) -> Result<Self> {
        let n = ground.len();
        let mut image = vec![usize::MAX; n];
        let mut colors = vec![None; n];
        for (a, b, c) in map {
            let i = ground.require_index(&a)?;
            image[i] = ground.require_index(&b)?;
            colors[i] = c;
        }
        DecoratedPermutation::new(ground, image, colors)
    }
}

fn canonical_rotation(cyc: Vec<usize>) -> Vec<usize> {
    let k = cyc.len();
    let rot = |s: usize| -> Vec<usize> { (0..k).map(|t| cyc[(s + t) % k]).collect() };
    let rotations: Vec<Vec<usize>> = (0..k).map(rot).collect();
    if let Some(r) = rotations.iter().find(|r| r.windows(2).all(|w| w[0] < w[1])) {
        return r.clone();
    }
    if let Some(r) = rotations.iter().find(|r| r.windows(2).all(|w| w[0] > w[1])) {
        return r.clone();
    }
    let m = (0..k).min_by_key(|&s| cyc[s]).unwrap();
    rotations[m].clone()
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DecoratedPermutation({})", self.render())
    }
}

/// The decorated permutation of an ordered matroid. Coloops are fixed with
/// color −1 and loops with +1; any other `i_j` maps to the first `i_k` after it
/// in cyclic order with `i_j ∈ cl([i_{j+1}, i_k])`.
pub fn decorated_permutation_of(m: &Matroid) -> DecoratedPermutation {
    let n = m.len();
    let loops = m.loops();
    let coloops = m.coloops();
    let mut image = vec![0; n];
    let mut colors = vec![None; n];
    for j in 0..n {
        if coloops.contains(j) {
            image[j] = j;
            colors[j] = Some(FixedColor::Coloop);
            continue;
        }
        if loops.contains(j) {
            image[j] = j;
            colors[j] = Some(FixedColor::Loop);
            continue;
        }
        let mut span = Subset::EMPTY;
        let mut found = None;
        for p in 1..n {
            let k = (j + p) % n;
            span = span.insert(k);
            if m.rank_of(span.insert(j)) == m.rank_of(span) {
                found = Some(k);
                break;
            }
        }
        image[j] = found.expect("a non-coloop lies in the closure of the rest");
    }
    DecoratedPermutation::new(m.ground().clone(), image, colors).expect("well-formed by construction")
}

/// `π₁ ⊔ π₂` on disjoint ground sets.
pub fn disjoint_union_perm(p1: &DecoratedPermutation, p2: &DecoratedPermutation) -> Result<DecoratedPermutation> {
    if !p1.ground.common(&p2.ground).is_empty() {
        return Err(Error::OverlappingGrounds);
    }
    let (ground, _, _) = p1.ground.merge(&p2.ground)?;
    let mut map = p1.label_map();
    map.extend(p2.label_map());
    DecoratedPermutation::from_label_map(ground, map)
}

/// The decorated permutation of a 2-sum along `e`, spliced from the
/// permutations of the two parts. `e` must not be a fixed point of either.
pub fn two_sum_perm(pm: &DecoratedPermutation, pn: &DecoratedPermutation, e: &GroundLabel) -> Result<DecoratedPermutation> {
    let common = pm.ground.common(&pn.ground);
    if common.len() != 1 || &common[0] != e {
        return Err(Error::SharedElementNotUnique);
    }
    let em = pm.ground.require_index(e)?;
    let en = pn.ground.require_index(e)?;
    if pm.is_fixed(em) || pn.is_fixed(en) {
        return Err(Error::FixedConnector(e.to_string()));
    }
    let pm_e = pm.ground.label(pm.image[em]).clone();
    let pn_e = pn.ground.label(pn.image[en]).clone();
    let mut map = Vec::new();
    for (a, b, c) in pm.label_map() {
        if &a == e {
            continue;
        }
        let b = if &b == e { pn_e.clone() } else { b };
        map.push((a, b, c));
    }
    for (a, b, c) in pn.label_map() {
        if &a == e {
            continue;
        }
        let b = if &b == e { pm_e.clone() } else { b };
        map.push((a, b, c));
    }
    let labels: Vec<GroundLabel> = map.iter().map(|t| t.0.clone()).collect();
    let ground = GroundSet::from_unsorted(labels)?;
    DecoratedPermutation::from_label_map(ground, map)
}
