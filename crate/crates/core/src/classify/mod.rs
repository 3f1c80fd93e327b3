//! Binary and ternary classification of positroids and the `4^w` count of
//! envelope classes.

mod realize;

use std::fmt::Write as _;

use crate::connectivity::{canonical_tree_decomposition, connected_components, NodeKind, TreeDecomposition};
use crate::constructions::{n_graph, n_relaxed, uniform, wheel, whirl};
use crate::error::{Error, Result};
use crate::matroid::{all_isomorphisms, has_minor_isomorphic, is_isomorphic, Matroid};
use crate::positroid::{envelope_class_of, envelope_membership_check, is_positroid};

pub use realize::{f2_realizable, f3_realizable, f3_realizable_with, MAX_FREE_ENTRIES, MAX_ORACLE_GROUND};

/// No `U^2_4` minor.
pub fn is_binary(m: &Matroid) -> bool {
    !has_minor_isomorphic(m, &uniform(2, 4).unwrap())
}

/// No `U^2_5` or `U^3_5` minor.
pub fn is_ternary_positroid(p: &Matroid) -> Result<bool> {
    if !is_positroid(p) {
        return Err(Error::NotAPositroid);
    }
    Ok(minor_free_ternary(p))
}

fn minor_free_ternary(m: &Matroid) -> bool {
    !has_minor_isomorphic(m, &uniform(2, 5).unwrap()) && !has_minor_isomorphic(m, &uniform(3, 5).unwrap())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeTag {
    /// Circuit, cocircuit or a piece with fewer than three elements.
    Binary,
    /// Isomorphic to the whirl of this rank.
    Whirl(usize),
}

fn tag_node(m: &Matroid, kind: NodeKind) -> Option<NodeTag> {
    match kind {
        NodeKind::Circuit | NodeKind::Cocircuit | NodeKind::Whole => Some(NodeTag::Binary),
        NodeKind::ThreeConnected => {
            let r = m.rank();
            if r >= 2 && m.len() == 2 * r && is_isomorphic(m, &whirl(r).unwrap()) {
                Some(NodeTag::Whirl(r))
            } else if is_binary(m) {
                Some(NodeTag::Binary)
            } else {
                None
            }
        }
    }
}

type TaggedTree = (TreeDecomposition, Vec<NodeTag>);

/// Canonical trees of the connected components with every node tagged, or
/// `None` if some node is neither binary nor a whirl.
fn tagged_components(p: &Matroid) -> Result<Option<Vec<TaggedTree>>> {
    let mut out = Vec::new();
    for c in connected_components(p) {
        let tree = canonical_tree_decomposition(&c)?;
        let tags: Option<Vec<NodeTag>> = tree.nodes.iter().map(|n| tag_node(&n.matroid, n.kind)).collect();
        let Some(tags) = tags else { return Ok(None) };
        out.push((tree, tags));
    }
    Ok(Some(out))
}

/// Ternary test through the decomposition: every tree node of every
/// component is a circuit, a cocircuit or a whirl.
pub fn is_ternary_by_structure(p: &Matroid) -> Result<bool> {
    if !is_positroid(p) {
        return Err(Error::NotAPositroid);
    }
    Ok(tagged_components(p)?.is_some())
}

#[derive(Clone, Debug)]
pub struct StructureNode {
    pub tag: NodeTag,
    pub class_size: usize,
    /// Whether the class was confirmed to consist of the four whirl-family
    /// members (always true for binary nodes).
    pub class_verified: bool,
}

#[derive(Clone, Debug)]
pub struct ComponentStructure {
    pub tree: TreeDecomposition,
    pub nodes: Vec<StructureNode>,
}

#[derive(Clone, Debug)]
pub struct TernaryStructure {
    pub components: Vec<ComponentStructure>,
    /// Number of whirl nodes.
    pub w: usize,
}

impl TernaryStructure {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.components {
            let _ = writeln!(out, "component {{{}}}", labels(&c.tree.matroid));
            for (n, s) in c.tree.nodes.iter().zip(&c.nodes) {
                let what = match s.tag {
                    NodeTag::Binary => n.kind.name().to_string(),
                    NodeTag::Whirl(r) => format!("whirl r={r}"),
                };
                let check = if s.class_verified { "" } else { " unverified" };
                let _ = writeln!(out, "  {what} {{{}}} class {}{check}", labels(&n.matroid), s.class_size);
            }
        }
        let _ = writeln!(out, "w = {}", self.w);
        out
    }
}

fn labels(m: &Matroid) -> String {
    m.ground().labels().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}

/// `M(N_r)`, `N^r`, `M(W_r)` and `W^r` on `1..=2r`.
pub fn whirl_family(r: usize) -> Result<[Matroid; 4]> {
    Ok([n_graph(r)?.1, n_relaxed(r)?, wheel(r)?.1, whirl(r)?])
}

/// Carries `c` (on the ground of `whirl(r)`) onto `node` along `map`.
fn transport(c: &Matroid, map: &[usize], node: &Matroid) -> Matroid {
    let bases = c.bases().iter().map(|b| b.permute(map)).collect();
    Matroid::from_bases_unchecked(node.ground().clone(), bases)
}

/// Checks that the envelope class of a whirl node is the whirl family up to
/// isomorphism. Enumerates the class for `r <= 3`; for larger `r` looks for
/// an isomorphism carrying all four family members into the class.
fn verify_whirl_class(node: &Matroid, r: usize) -> Result<bool> {
    let family = whirl_family(r)?;
    if r <= 3 {
        let class = envelope_class_of(node)?;
        if class.len() != 4 {
            return Ok(false);
        }
        let ok = family.iter().all(|f| {
            let members = class.members.iter().filter(|m| is_isomorphic(m, f)).count();
            let expected = family.iter().filter(|g| is_isomorphic(g, f)).count();
            members == expected
        });
        return Ok(ok);
    }
    let fits = |base: &Matroid, cands: &[Matroid]| -> Result<bool> {
        for map in all_isomorphisms(base, node) {
            let mut all = true;
            for c in cands {
                if !envelope_membership_check(node, &transport(c, &map, node))? {
                    all = false;
                    break;
                }
            }
            if all {
                return Ok(true);
            }
        }
        Ok(false)
    };
    if fits(&family[3], &family)? {
        return Ok(true);
    }
    let duals: Vec<Matroid> = family.iter().map(|f| f.dual()).collect();
    fits(&duals[3], &duals)
}

/// Decomposition report of a ternary positroid.
pub fn ternary_structure(p: &Matroid) -> Result<TernaryStructure> {
    if !is_ternary_positroid(p)? {
        return Err(Error::NotTernary);
    }
    let comps = tagged_components(p)?.ok_or(Error::NotTernary)?;
    let mut components = Vec::new();
    let mut w = 0;
    for (tree, tags) in comps {
        let mut nodes = Vec::new();
        for (n, tag) in tree.nodes.iter().zip(tags) {
            let s = match tag {
                NodeTag::Binary => StructureNode { tag, class_size: 1, class_verified: true },
                NodeTag::Whirl(r) => {
                    w += 1;
                    StructureNode { tag, class_size: 4, class_verified: verify_whirl_class(&n.matroid, r)? }
                }
            };
            nodes.push(s);
        }
        components.push(ComponentStructure { tree, nodes });
    }
    Ok(TernaryStructure { components, w })
}

/// Number of whirl nodes over all components.
pub fn whirl_count(p: &Matroid) -> Result<usize> {
    if !is_ternary_positroid(p)? {
        return Err(Error::NotTernary);
    }
    let comps = tagged_components(p)?.ok_or(Error::NotTernary)?;
    Ok(comps.iter().flat_map(|(_, tags)| tags).filter(|t| matches!(t, NodeTag::Whirl(_))).count())
}

/// `4^w`, the size of the envelope class of a ternary positroid.
pub fn envelope_count(p: &Matroid) -> Result<u64> {
    Ok(4u64.pow(whirl_count(p)? as u32))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_positroid: bool,
    pub is_binary: bool,
    /// For non-positroids this comes from the GF(3) oracle and is `None`
    /// when that search is out of scale.
    pub is_ternary: Option<bool>,
    /// Whirl nodes of a ternary positroid; 0 otherwise.
    pub w: usize,
    pub envelope_size: Option<u64>,
}

pub fn classify(m: &Matroid) -> Classification {
    let is_positroid = is_positroid(m);
    let is_binary = is_binary(m);
    if !is_positroid {
        let is_ternary = if is_binary { Some(true) } else { f3_realizable(m).ok() };
        return Classification { is_positroid, is_binary, is_ternary, w: 0, envelope_size: None };
    }
    let ternary = minor_free_ternary(m);
    let (w, envelope_size) = if ternary {
        let w = whirl_count(m).expect("ternary positroid has a whirl decomposition");
        (w, Some(4u64.pow(w as u32)))
    } else {
        (0, envelope_class_of(m).ok().map(|c| c.len() as u64))
    };
    Classification { is_positroid, is_binary, is_ternary: Some(ternary), w, envelope_size }
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

impl Classification {
    pub fn render_text(&self) -> String {
        let size = self.envelope_size.map_or("unknown".to_string(), |s| s.to_string());
        format!(
            "positroid: {}\nbinary: {}\nternary: {}\nw: {}\nenvelope size: {size}\n",
            self.is_positroid,
            self.is_binary,
            flag(self.is_ternary),
            self.w
        )
    }

    /// `key=value` lines; unknown values are left empty.
    pub fn render_kv(&self) -> String {
        let ternary = self.is_ternary.map_or(String::new(), |b| b.to_string());
        let size = self.envelope_size.map_or(String::new(), |s| s.to_string());
        format!("is_positroid={}\nis_binary={}\nis_ternary={ternary}\nw={}\nenvelope_size={size}\n", self.is_positroid, self.is_binary, self.w)
    }
}
