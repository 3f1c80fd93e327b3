//! Canonical tree decompositions of 2-connected matroids.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{find_k_separation, find_last_k_separation, is_n_connected, split_along, two_sum};
use crate::cyclic::is_cyclic_interval;
use crate::error::{Error, Result};
use crate::label::GroundLabel;
use crate::matroid::Matroid;
use crate::positroid::{envelope_class_of, is_positroid};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    Circuit,
    Cocircuit,
    ThreeConnected,
    /// The whole matroid, when it has fewer than three elements.
    Whole,
}

impl NodeKind {
    pub fn of(m: &Matroid) -> NodeKind {
        let n = m.len();
        if n < 3 {
            NodeKind::Whole
        } else if m.is_uniform() && m.rank() == n - 1 {
            NodeKind::Circuit
        } else if m.is_uniform() && m.rank() == 1 {
            NodeKind::Cocircuit
        } else {
            NodeKind::ThreeConnected
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NodeKind::Circuit => "circuit",
            NodeKind::Cocircuit => "cocircuit",
            NodeKind::ThreeConnected => "three_connected",
            NodeKind::Whole => "whole",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TreeNode {
    pub matroid: Matroid,
    pub kind: NodeKind,
    /// Size of the node's envelope class, when annotated.
    pub class_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub connector: GroundLabel,
}

/// A matroid-labelled tree whose nodes glue back to the decomposed matroid.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    pub nodes: Vec<TreeNode>,
    pub edges: Vec<TreeEdge>,
    /// The decomposed matroid.
    pub matroid: Matroid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitOrder {
    /// Split at the least 2-separation first.
    First,
    /// Split at the greatest 2-separation first.
    Last,
}

pub fn canonical_tree_decomposition(m: &Matroid) -> Result<TreeDecomposition> {
    canonical_tree_with(m, SplitOrder::First)
}

/// Splits along 2-separations until every piece is 3-connected, a circuit or
/// a cocircuit, then merges adjacent circuits and adjacent cocircuits.
/// Connectors get labels in the gap just before the first element of the far
/// side of their edge, seen from the node holding the first element.
pub fn canonical_tree_with(m: &Matroid, order: SplitOrder) -> Result<TreeDecomposition> {
    if !is_n_connected(m, 2) {
        return Err(Error::NotTwoConnected);
    }
    let mut fresh = m.ground().labels().last().cloned().unwrap_or_else(|| GroundLabel::integer(0));
    let mut pieces = Vec::new();
    split(m, order, &mut fresh, &mut pieces)?;
    let mut nodes: Vec<Matroid> = pieces;
    loop {
        let edges = edges_of(&nodes, m);
        let merge = edges.iter().find(|e| {
            let (ka, kb) = (NodeKind::of(&nodes[e.a]), NodeKind::of(&nodes[e.b]));
            ka == kb && matches!(ka, NodeKind::Circuit | NodeKind::Cocircuit)
        });
        let Some(e) = merge else { break };
        let glued = two_sum(&nodes[e.a], &nodes[e.b], &e.connector)?;
        let (a, b) = (e.a, e.b);
        nodes[a] = glued;
        nodes.remove(b);
    }
    let nodes = relabel_connectors(m, nodes)?;
    let edges = edges_of(&nodes, m);
    let nodes = nodes.into_iter().map(|x| TreeNode { kind: NodeKind::of(&x), matroid: x, class_size: None }).collect();
    Ok(TreeDecomposition { nodes, edges, matroid: m.clone() })
}

fn split(m: &Matroid, order: SplitOrder, fresh: &mut GroundLabel, out: &mut Vec<Matroid>) -> Result<()> {
    let sep = match order {
        SplitOrder::First => find_k_separation(m, 2),
        SplitOrder::Last => find_last_k_separation(m, 2),
    };
    let Some((x, _)) = sep else {
        out.push(m.clone());
        return Ok(());
    };
    *fresh = fresh.offset(1);
    let (p, q) = split_along(m, x, fresh)?;
    split(&p, order, fresh, out)?;
    split(&q, order, fresh, out)
}

/// Labels shared by two nodes are the connectors.
fn edges_of(nodes: &[Matroid], m: &Matroid) -> Vec<TreeEdge> {
    let mut holders: BTreeMap<GroundLabel, Vec<usize>> = BTreeMap::new();
    for (i, x) in nodes.iter().enumerate() {
        for l in x.ground().labels() {
            if m.ground().index_of(l).is_none() {
                holders.entry(l.clone()).or_default().push(i);
            }
        }
    }
    holders
        .into_iter()
        .map(|(connector, h)| {
            assert_eq!(h.len(), 2, "connector {connector} must join exactly two nodes");
            TreeEdge { a: h[0], b: h[1], connector }
        })
        .collect()
}

/// Original elements on the side of `edge` away from node `root`.
fn far_side(nodes: &[Matroid], edges: &[TreeEdge], m: &Matroid, root: usize, edge: usize) -> Subset {
    let e = &edges[edge];
    // walk from the endpoint farther from the root without crossing `edge`
    let start = if reaches(edges, root, e.a, edge) { e.b } else { e.a };
    let mut seen = vec![false; nodes.len()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut side = Subset::EMPTY;
    while let Some(v) = stack.pop() {
        for l in nodes[v].ground().labels() {
            if let Some(i) = m.ground().index_of(l) {
                side = side.insert(i);
            }
        }
        for (k, f) in edges.iter().enumerate() {
            if k == edge {
                continue;
            }
            let w = if f.a == v {
                f.b
            } else if f.b == v {
                f.a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    side
}

/// Whether `to` is reachable from `from` without using edge `skip`.
fn reaches(edges: &[TreeEdge], from: usize, to: usize, skip: usize) -> bool {
    let mut seen = vec![from];
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for (k, f) in edges.iter().enumerate() {
            if k == skip {
                continue;
            }
            for (x, y) in [(f.a, f.b), (f.b, f.a)] {
                if x == v && !seen.contains(&y) {
                    seen.push(y);
                    stack.push(y);
                }
            }
        }
    }
    false
}

fn root_node(nodes: &[Matroid], m: &Matroid) -> usize {
    let first = m.ground().label(0);
    nodes.iter().position(|x| x.ground().index_of(first).is_some()).unwrap_or(0)
}

fn relabel_connectors(m: &Matroid, nodes: Vec<Matroid>) -> Result<Vec<Matroid>> {
    let edges = edges_of(&nodes, m);
    if edges.is_empty() {
        return Ok(nodes);
    }
    let root = root_node(&nodes, m);
    // gap index a: the connector goes between labels a-1 and a
    let mut by_gap: BTreeMap<usize, Vec<(usize, GroundLabel)>> = BTreeMap::new();
    for (k, e) in edges.iter().enumerate() {
        let side = far_side(&nodes, &edges, m, root, k);
        let a = side.min().expect("every side holds an element");
        by_gap.entry(a).or_default().push((side.len(), e.connector.clone()));
    }
    let mut rename: BTreeMap<GroundLabel, GroundLabel> = BTreeMap::new();
    for (a, mut list) in by_gap {
        list.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
        let hi = m.ground().label(a);
        let lo = m.ground().label(a - 1);
        let den = list.len() as i64 + 1;
        for (t, (_, old)) in list.into_iter().enumerate() {
            rename.insert(old, lo.lerp(hi, t as i64 + 1, den));
        }
    }
    nodes
        .into_iter()
        .map(|x| {
            let labels: Vec<GroundLabel> = x.ground().labels().iter().map(|l| rename.get(l).cloned().unwrap_or_else(|| l.clone())).collect();
            x.relabel(&labels)
        })
        .collect()
}

impl TreeDecomposition {
    /// Glues the nodes back together along the edges.
    pub fn reconstruct(&self) -> Result<Matroid> {
        let mut nodes: Vec<Option<Matroid>> = self.nodes.iter().map(|n| Some(n.matroid.clone())).collect();
        let mut owner: Vec<usize> = (0..nodes.len()).collect();
        for e in &self.edges {
            let (a, b) = (find(&mut owner, e.a), find(&mut owner, e.b));
            let glued = two_sum(nodes[a].as_ref().unwrap(), nodes[b].as_ref().unwrap(), &e.connector)?;
            nodes[a] = Some(glued);
            nodes[b] = None;
            owner[b] = a;
        }
        let r = find(&mut owner, 0);
        Ok(nodes[r].take().unwrap())
    }

    /// Original elements on the side of edge `k` away from the node holding
    /// the first element.
    pub fn far_side(&self, k: usize) -> Subset {
        let nodes: Vec<Matroid> = self.nodes.iter().map(|n| n.matroid.clone()).collect();
        far_side(&nodes, &self.edges, &self.matroid, root_node(&nodes, &self.matroid), k)
    }

    /// Kind and original elements of every node, sorted; equal for any two
    /// canonical trees of the same matroid.
    pub fn shape(&self) -> Vec<(NodeKind, Subset)> {
        let mut v: Vec<(NodeKind, Subset)> = self
            .nodes
            .iter()
            .map(|n| {
                let s = Subset::from_indices(n.matroid.ground().labels().iter().filter_map(|l| self.matroid.ground().index_of(l)));
                (n.kind, s)
            })
            .collect();
        v.sort();
        v
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph tree {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let labels: Vec<String> = n.matroid.ground().labels().iter().map(|l| l.to_string()).collect();
            let mut text = format!("{} {{{}}}", n.kind.name(), labels.join(","));
            if let Some(c) = n.class_size {
                let _ = write!(text, " class {c}");
            }
            let _ = writeln!(out, "  n{i} [label=\"{text}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.a, e.b, e.connector);
        }
        out.push_str("}\n");
        out
    }
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    p[x] = r;
    r
}

/// Every node of the canonical tree is a positroid, and every edge cuts the
/// ground into two cyclic intervals whose glued sides are positroids.
pub fn positroid_tree_check(m: &Matroid) -> Result<bool> {
    let t = canonical_tree_decomposition(m)?;
    if !t.nodes.iter().all(|n| is_positroid(&n.matroid)) {
        return Ok(false);
    }
    for (k, e) in t.edges.iter().enumerate() {
        let side = t.far_side(k);
        if !is_cyclic_interval(m.len(), side) {
            return Ok(false);
        }
        let (p, q) = split_along(m, side, &e.connector)?;
        if !is_positroid(&p) || !is_positroid(&q) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The canonical tree of a 2-connected positroid with each node annotated by
/// the size of its envelope class.
pub fn envelope_tree(p: &Matroid) -> Result<TreeDecomposition> {
    if !is_positroid(p) {
        return Err(Error::NotAPositroid);
    }
    let mut t = canonical_tree_decomposition(p)?;
    for n in &mut t.nodes {
        n.class_size = Some(envelope_class_of(&n.matroid)?.len());
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::direct_sum;
    use crate::constructions::{circuit_matroid, graphic_matroid, uniform, whirl, Graph};
    use crate::label::GroundSet;

    #[test]
    fn single_node_trees() {
        let w = canonical_tree_decomposition(&whirl(3).unwrap()).unwrap();
        assert_eq!(w.nodes.len(), 1);
        assert_eq!(w.nodes[0].kind, NodeKind::ThreeConnected);
        let c = canonical_tree_decomposition(&uniform(3, 4).unwrap()).unwrap();
        assert_eq!((c.nodes.len(), c.nodes[0].kind), (1, NodeKind::Circuit));
        let small = canonical_tree_decomposition(&uniform(1, 2).unwrap()).unwrap();
        assert_eq!(small.nodes[0].kind, NodeKind::Whole);
        let a = uniform(1, 1).unwrap();
        let b = Matroid::from_bases(GroundSet::from_ints([2]).unwrap(), vec![Subset::EMPTY]).unwrap();
        assert_eq!(canonical_tree_decomposition(&direct_sum(&a, &b).unwrap()).unwrap_err(), Error::NotTwoConnected);
    }

    #[test]
    fn doubled_triangle_edge() {
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2), (2, 0), (2, 0)]).unwrap();
        let m = graphic_matroid(&g).unwrap();
        let t = canonical_tree_decomposition(&m).unwrap();
        let mut kinds: Vec<NodeKind> = t.nodes.iter().map(|n| n.kind).collect();
        kinds.sort();
        assert_eq!(kinds, vec![NodeKind::Circuit, NodeKind::Cocircuit]);
        assert_eq!(t.edges.len(), 1);
        assert_eq!(t.reconstruct().unwrap(), m);
        assert!(t.to_dot().contains(" -- "));
    }

    #[test]
    fn chains_merge_into_one_circuit() {
        // a 6-circuit splits into triangles that must merge back
        let c6 = uniform(5, 6).unwrap();
        let t = canonical_tree_decomposition(&c6).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(t.nodes[0].kind, NodeKind::Circuit);
    }

    #[test]
    fn glued_whirls() {
        let w = whirl(3).unwrap();
        let c = circuit_matroid(GroundSet::from_ints([6, 7, 8]).unwrap()).unwrap();
        let s = two_sum(&w, &c, &6.into()).unwrap();
        for order in [SplitOrder::First, SplitOrder::Last] {
            let t = canonical_tree_with(&s, order).unwrap();
            assert_eq!(t.nodes.len(), 2);
            assert_eq!(t.reconstruct().unwrap(), s);
        }
        assert_eq!(canonical_tree_with(&s, SplitOrder::First).unwrap().shape(), canonical_tree_with(&s, SplitOrder::Last).unwrap().shape());
        assert!(positroid_tree_check(&s).unwrap());
        let et = envelope_tree(&s).unwrap();
        let mut sizes: Vec<usize> = et.nodes.iter().map(|n| n.class_size.unwrap()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 4]);
    }

    #[test]
    fn tree_check_examples() {
        assert!(positroid_tree_check(&whirl(3).unwrap()).unwrap());
        let n2 = Matroid::from_int_bases(GroundSet::range(4), &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]).unwrap();
        assert_eq!(positroid_tree_check(&n2), Err(Error::NotTwoConnected));
        let m1 = Matroid::from_int_bases(GroundSet::range(4), &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[3, 4]]).unwrap();
        assert!(!positroid_tree_check(&m1).unwrap());
        assert!(!is_positroid(&m1));
    }
}
