//! Plain-text matroid files.
//!
//! ```text
//! ground: 1 2 3 4
//! rank: 2
//! bases:
//! 1 2
//! 1 4
//! ```
//!
//! Bases are written one per line in lexicographic order. A rank-0 matroid has
//! the single empty basis, written as an empty line. `#` starts a comment.

use std::fmt;
use std::str::FromStr;

use super::Matroid;
use crate::error::{Error, Result};
use crate::label::{GroundLabel, GroundSet};
use crate::subset::Subset;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_labels(line: usize, text: &str) -> Result<Vec<GroundLabel>> {
    text.split_whitespace().map(|t| t.parse::<GroundLabel>().map_err(|e| parse_err(line, e))).collect()
}

impl Matroid {
    pub fn to_text(&self) -> String {
        let mut out = format!("ground: {}\nrank: {}\nbases:\n", self.ground, self.rank);
        for b in self.sorted_bases() {
            let parts: Vec<String> = b.iter().map(|i| self.ground.label(i).to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Matroid> {
        let mut ground: Option<GroundSet> = None;
        let mut rank: Option<usize> = None;
        let mut bases: Option<Vec<Subset>> = None;
        let mut last = 0;
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            last = line;
            let content = raw.split('#').next().unwrap_or("").trim();
            if let Some(bs) = bases.as_mut() {
                if content.is_empty() {
                    continue;
                }
                let g = ground.as_ref().expect("ground precedes bases");
                let labels = parse_labels(line, content)?;
                let set = g.subset_of(labels.iter()).map_err(|e| parse_err(line, e.to_string()))?;
                if set.len() != labels.len() {
                    return Err(parse_err(line, "repeated label in basis"));
                }
                let r = rank.expect("rank precedes bases");
                if set.len() != r {
                    return Err(parse_err(line, format!("basis has {} labels but rank is {r}", set.len())));
                }
                bs.push(set);
                continue;
            }
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once(':').ok_or_else(|| parse_err(line, "expected `key: value`"))?;
            match key.trim() {
                "ground" if ground.is_none() => {
                    let labels = parse_labels(line, value)?;
                    ground = Some(GroundSet::new(labels).map_err(|e| parse_err(line, e.to_string()))?);
                }
                "rank" if rank.is_none() => {
                    let r = value.trim().parse::<usize>().map_err(|_| parse_err(line, "rank must be a nonnegative integer"))?;
                    rank = Some(r);
                }
                "bases" => {
                    if ground.is_none() || rank.is_none() {
                        return Err(parse_err(line, "`bases:` must follow `ground:` and `rank:`"));
                    }
                    if !value.trim().is_empty() {
                        return Err(parse_err(line, "bases start on the next line"));
                    }
                    bases = Some(Vec::new());
                }
                other => return Err(parse_err(line, format!("unexpected key `{other}`"))),
            }
        }
        let (Some(ground), Some(rank), Some(mut bases)) = (ground, rank, bases) else {
            return Err(parse_err(last, "missing `ground:`, `rank:` or `bases:`"));
        };
        if rank > ground.len() {
            return Err(parse_err(last, format!("rank {rank} exceeds ground size {}", ground.len())));
        }
        if rank == 0 {
            bases = vec![Subset::EMPTY];
        }
        Matroid::from_bases(ground, bases)
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Matroid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Matroid> {
        Matroid::parse(s)
    }
}
