//! Exact rational ground labels and totally ordered ground sets.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND};

/// A ground-set element. Labels are exact rationals so that a new element can
/// always be inserted strictly between two existing ones.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundLabel(BigRational);

impl GroundLabel {
    pub fn integer(v: i64) -> Self {
        GroundLabel(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GroundLabel(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    /// The midpoint of two labels.
    pub fn midpoint(a: &GroundLabel, b: &GroundLabel) -> GroundLabel {
        GroundLabel((&a.0 + &b.0) / BigRational::from_integer(BigInt::from(2)))
    }

    /// `self + t * (other - self)` for a rational fraction `t`.
    pub fn lerp(&self, other: &GroundLabel, num: i64, den: i64) -> GroundLabel {
        let t = BigRational::new(BigInt::from(num), BigInt::from(den));
        GroundLabel(&self.0 + (&other.0 - &self.0) * t)
    }

    pub fn offset(&self, delta: i64) -> GroundLabel {
        GroundLabel(&self.0 + BigRational::from_integer(BigInt::from(delta)))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<i64> for GroundLabel {
    fn from(v: i64) -> Self {
        GroundLabel::integer(v)
    }
}

impl fmt::Display for GroundLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for GroundLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GroundLabel {
    type Err = String;

    /// Accepts `7`, `-3`, `5/2` and finite decimals such as `2.5`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let bad = || format!("invalid label `{s}`");
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(GroundLabel(BigRational::new(n, d)));
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int_part: BigInt = if int.is_empty() || int == "-" || int == "+" { BigInt::zero() } else { int.parse().map_err(|_| bad())? };
            let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
            let den = num_traits::pow(BigInt::from(10), frac.len());
            let mut v = BigRational::from_integer(int_part.abs()) + BigRational::new(frac_part, den);
            if negative {
                v = -v;
            }
            return Ok(GroundLabel(v));
        }
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(GroundLabel(BigRational::from_integer(n)))
    }
}

/// A finite, strictly increasing sequence of labels. Internal index `i` refers
/// to the `i`-th smallest label.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet(Arc<[GroundLabel]>);

impl GroundSet {
    pub fn new(labels: Vec<GroundLabel>) -> Result<Self> {
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedGround);
        }
        Ok(GroundSet(labels.into()))
    }

    /// Sorts and deduplicates before validating the size.
    pub fn from_unsorted(mut labels: Vec<GroundLabel>) -> Result<Self> {
        labels.sort();
        labels.dedup();
        GroundSet::new(labels)
    }

    /// The ground set `{1, 2, ..., n}`.
    pub fn range(n: usize) -> Self {
        GroundSet::new((1..=n as i64).map(GroundLabel::integer).collect()).expect("n <= 64")
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(it: I) -> Result<Self> {
        GroundSet::new(it.into_iter().map(GroundLabel::integer).collect())
    }

    pub fn empty() -> Self {
        GroundSet(Vec::new().into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[GroundLabel] {
        &self.0
    }

    pub fn label(&self, i: usize) -> &GroundLabel {
        &self.0[i]
    }

    pub fn index_of(&self, l: &GroundLabel) -> Option<usize> {
        self.0.binary_search(l).ok()
    }

    pub fn require_index(&self, l: &GroundLabel) -> Result<usize> {
        self.index_of(l).ok_or_else(|| Error::LabelNotInGround(l.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Builds a subset from labels, failing on unknown labels.
    pub fn subset_of<'a, I: IntoIterator<Item = &'a GroundLabel>>(&self, it: I) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in it {
            s = s.insert(self.require_index(l)?);
        }
        Ok(s)
    }

    pub fn subset_of_ints<I: IntoIterator<Item = i64>>(&self, it: I) -> Result<Subset> {
        let labels: Vec<_> = it.into_iter().map(GroundLabel::integer).collect();
        self.subset_of(labels.iter())
    }

    pub fn labels_of(&self, s: Subset) -> Vec<GroundLabel> {
        s.iter().map(|i| self.0[i].clone()).collect()
    }

    /// Renders a subset as `{a,b,c}`.
    pub fn render(&self, s: Subset) -> String {
        let parts: Vec<String> = s.iter().map(|i| self.0[i].to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// The ground set restricted to the given indices.
    pub fn restrict(&self, keep: Subset) -> GroundSet {
        GroundSet(keep.iter().map(|i| self.0[i].clone()).collect::<Vec<_>>().into())
    }

    /// Sorted union of two ground sets together with the index maps of each
    /// input into the union.
    pub fn merge(&self, other: &GroundSet) -> Result<(GroundSet, Vec<usize>, Vec<usize>)> {
        let mut all: Vec<GroundLabel> = self.0.iter().chain(other.0.iter()).cloned().collect();
        all.sort();
        all.dedup();
        let merged = GroundSet::new(all)?;
        let ma = self.0.iter().map(|l| merged.index_of(l).unwrap()).collect();
        let mb = other.0.iter().map(|l| merged.index_of(l).unwrap()).collect();
        Ok((merged, ma, mb))
    }

    /// Labels shared by both ground sets.
    pub fn common(&self, other: &GroundSet) -> Vec<GroundLabel> {
        self.0.iter().filter(|l| other.index_of(l).is_some()).cloned().collect()
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
