//! Census of all positroids on `[n]`.

use crate::classify::{is_binary, is_ternary_positroid, whirl_count};
use crate::corpus::{decorated_permutations, permutation_rank, positroid_of_permutation};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::positroid::{envelope_class_with, DEFAULT_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub rank: usize,
    pub permutation: String,
    pub binary: bool,
    pub ternary: bool,
    /// Whirl nodes; `None` for non-ternary positroids.
    pub w: Option<usize>,
    /// Envelope class size by enumeration; `None` when over budget.
    pub class_size: Option<usize>,
}

/// One row per positroid on `[n]` (optionally of one rank), ordered by rank
/// and then by decorated permutation.
pub fn census(n: usize, rank: Option<usize>, budget: u64, strategy: Strategy) -> Result<Vec<CensusRow>> {
    if n > crate::subset::MAX_GROUND {
        return Err(Error::GroundTooLarge(n));
    }
    let mut perms: Vec<_> = decorated_permutations(n).into_iter().filter(|p| rank.is_none_or(|r| permutation_rank(p) == r)).collect();
    perms.sort_by_key(permutation_rank);
    let rows = strategy.map(&perms, |p| -> Result<CensusRow> {
        let m = positroid_of_permutation(p)?;
        let ternary = is_ternary_positroid(&m)?;
        let w = if ternary { Some(whirl_count(&m)?) } else { None };
        let class_size = match envelope_class_with(&m, budget, Strategy::Sequential) {
            Ok(c) => Some(c.len()),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(CensusRow { n, rank: m.rank(), permutation: p.render(), binary: is_binary(&m), ternary, w, class_size })
    });
    rows.into_iter().collect()
}

pub fn census_default(n: usize, rank: Option<usize>) -> Result<Vec<CensusRow>> {
    census(n, rank, DEFAULT_BUDGET, Strategy::default())
}

/// CSV with header `n,rank,permutation,binary,ternary,w,class_size`.
pub fn to_csv(rows: &[CensusRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "rank", "permutation", "binary", "ternary", "w", "class_size"]).unwrap();
    for r in rows {
        let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
        w.write_record([
            r.n.to_string(),
            r.rank.to_string(),
            r.permutation.clone(),
            r.binary.to_string(),
            r.ternary.to_string(),
            opt(r.w),
            opt(r.class_size),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
