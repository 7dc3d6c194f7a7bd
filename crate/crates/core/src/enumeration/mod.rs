//! Brute-force oracles over every labeled digraph on a handful of nodes.
//!
//! Nothing here is clever on purpose: graphs are generated by counting a
//! bitmask over all ordered pairs and filtered with direct checks, so the
//! counts can be trusted as an independent reference for the closed-form
//! recurrences in [`crate::counting`].

mod digraph;

pub use digraph::{Digraph, MAX_NODES};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::counting::{ExactCount, PartitionTriple};
use digraph::{full_set, is_acyclic_on};

/// Node count above which enumeration is refused unless forced.
pub const DEFAULT_CAP: usize = 5;
/// Node count above which enumeration is always refused.
pub const FORCED_CAP: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("node count must be between 1 and {MAX_NODES}, got {0}")]
    NodeCount(usize),
    #[error("target {target} is not a node of a {n}-node graph")]
    TargetOutOfRange { target: usize, n: usize },
    #[error("edge {src}->{dst} is outside a {n}-node graph")]
    EdgeOutOfRange { src: usize, dst: usize, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("mask {mask:#x} has bits beyond the pairs of a {n}-node graph")]
    MaskOutOfRange { n: usize, mask: u64 },
    #[error("graph has a directed cycle")]
    Cyclic,
    #[error("{}", cap_message(*.n, *.cap))]
    CapExceeded { n: usize, cap: usize },
}

fn cap_message(n: usize, cap: usize) -> String {
    let pairs = n * (n - 1);
    let hint = if cap < FORCED_CAP {
        format!(" (pass --force to allow n = {FORCED_CAP})")
    } else {
        String::new()
    };
    format!(
        "n = {n} means enumerating 2^{pairs} = {} digraphs; the limit is n <= {cap}{hint}",
        1u128 << pairs
    )
}

/// How far enumeration may go.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Cap {
    /// Up to [`DEFAULT_CAP`] nodes (2^20 digraphs).
    #[default]
    Default,
    /// Up to [`FORCED_CAP`] nodes (2^30 digraphs, minutes of work).
    Forced,
}

impl Cap {
    pub fn from_force(force: bool) -> Self {
        if force {
            Cap::Forced
        } else {
            Cap::Default
        }
    }

    pub fn max_nodes(self) -> usize {
        match self {
            Cap::Default => DEFAULT_CAP,
            Cap::Forced => FORCED_CAP,
        }
    }

    pub fn check(self, n: usize) -> Result<(), EnumError> {
        if n == 0 {
            return Err(EnumError::NodeCount(n));
        }
        if n > self.max_nodes() {
            return Err(EnumError::CapExceeded {
                n,
                cap: self.max_nodes(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeRole {
    Target,
    Parent,
    Child,
    Spouse,
    Other,
}

impl NodeRole {
    /// Single-letter tag used in DOT exports.
    pub fn letter(self) -> char {
        match self {
            NodeRole::Target => 'T',
            NodeRole::Parent => 'P',
            NodeRole::Child => 'C',
            NodeRole::Spouse => 'S',
            NodeRole::Other => 'O',
        }
    }
}

/// Role of every node relative to the graph's target, held as node bitsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoleMap {
    n: usize,
    target: usize,
    parents: u8,
    children: u8,
    spouses: u8,
}

impl RoleMap {
    fn compute(g: &Digraph) -> Self {
        let t = g.target();
        let preds = g.predecessors();
        let succs = g.successors();
        let parents = preds[t];
        let children = succs[t];
        let rest = full_set(g.node_count()) & !(parents | children | (1 << t));
        let mut spouses = 0u8;
        for (v, &out) in succs.iter().enumerate().take(g.node_count()) {
            if rest & (1 << v) != 0 && out & children != 0 {
                spouses |= 1 << v;
            }
        }
        RoleMap {
            n: g.node_count(),
            target: t,
            parents,
            children,
            spouses,
        }
    }

    pub fn role(&self, v: usize) -> NodeRole {
        let bit = 1u8 << v;
        if v == self.target {
            NodeRole::Target
        } else if self.parents & bit != 0 {
            NodeRole::Parent
        } else if self.children & bit != 0 {
            NodeRole::Child
        } else if self.spouses & bit != 0 {
            NodeRole::Spouse
        } else {
            NodeRole::Other
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, NodeRole)> + '_ {
        (0..self.n).map(|v| (v, self.role(v)))
    }

    pub fn count(&self, role: NodeRole) -> usize {
        self.iter().filter(|&(_, r)| r == role).count()
    }

    /// Parent, child and spouse-or-other class sizes.
    pub fn partition(&self) -> PartitionTriple {
        let n_p = self.parents.count_ones() as usize;
        let n_c = self.children.count_ones() as usize;
        PartitionTriple {
            n_p,
            n_c,
            n_so: self.n - 1 - n_p - n_c,
        }
    }

    fn is_child(&self, v: usize) -> bool {
        self.children & (1 << v) != 0
    }

    fn is_parent(&self, v: usize) -> bool {
        self.parents & (1 << v) != 0
    }

    /// Edges an MB structure may contain: anything into a child, and
    /// parent-to-target arcs.
    fn admits(&self, src: usize, dst: usize) -> bool {
        self.is_child(dst) || (dst == self.target && self.is_parent(src))
    }
}

pub fn is_dag(g: &Digraph) -> bool {
    g.is_acyclic()
}

/// Assigns each node its role relative to `g.target()`.
///
/// Parents are in-neighbours of the target and children its out-neighbours.
/// Of the remaining nodes, those with an arc into a child are spouses and the
/// rest are others.
pub fn classify_roles(g: &Digraph) -> Result<RoleMap, EnumError> {
    if !g.is_acyclic() {
        return Err(EnumError::Cyclic);
    }
    Ok(RoleMap::compute(g))
}

/// True iff `g` is a canonical MB structure for its target: acyclic, and
/// every edge is parent→target, target→child, parent→child, spouse→child or
/// child→child. No arcs among parents, between parents and spouses, or
/// touching other nodes.
pub fn is_canonical_mb(g: &Digraph) -> bool {
    if !g.is_acyclic() {
        return false;
    }
    let roles = RoleMap::compute(g);
    g.edges().all(|(s, d)| roles.admits(s, d))
}

/// Canonical, order-independent encoding of one MB structure.
///
/// Ordering is lexicographic over `(n, target, edges)` with edges sorted by
/// `(source, destination)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MbStructureKey {
    n: usize,
    target: usize,
    edges: Vec<(usize, usize)>,
}

impl MbStructureKey {
    fn of(g: &Digraph) -> Self {
        MbStructureKey {
            n: g.node_count(),
            target: g.target(),
            edges: g.edges().collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_edges(self.n, self.target, &self.edges)
            .expect("key edges are valid for their node count")
    }

    pub fn roles(&self) -> RoleMap {
        RoleMap::compute(&self.to_digraph())
    }

    /// Swaps the labels of the target and node 0 so keys for different
    /// targets can be compared.
    pub fn relabel_target_to_zero(&self) -> MbStructureKey {
        let t = self.target;
        let swap = |v: usize| {
            if v == t {
                0
            } else if v == 0 {
                t
            } else {
                v
            }
        };
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(s, d)| (swap(s), swap(d)))
            .collect();
        edges.sort_unstable();
        MbStructureKey {
            n: self.n,
            target: 0,
            edges,
        }
    }

    /// `"0>2;1>2"`, or `"-"` for the empty structure.
    pub fn edge_list(&self) -> String {
        if self.edges.is_empty() {
            return "-".to_string();
        }
        self.edges
            .iter()
            .map(|(s, d)| format!("{s}>{d}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Debug for MbStructureKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MbStructureKey(n={}, t={}, {})",
            self.n,
            self.target,
            self.edge_list()
        )
    }
}

/// Projects a DAG onto the Markov blanket of its target.
///
/// Keeps arcs into children (from the target, parents, other children and
/// any outside node, which thereby becomes a spouse) plus parent→target
/// arcs; drops everything else.
pub fn extract_mb(g: &Digraph) -> Result<MbStructureKey, EnumError> {
    let roles = classify_roles(g)?;
    Ok(MbStructureKey::of(
        &g.filter_edges(|s, d| roles.admits(s, d)),
    ))
}

/// Every digraph on `n` nodes, in increasing edge-mask order.
pub fn all_digraphs(
    n: usize,
    target: usize,
    cap: Cap,
) -> Result<impl Iterator<Item = Digraph>, EnumError> {
    cap.check(n)?;
    Digraph::empty(n, target)?;
    let total = 1u64 << (n * (n - 1));
    Ok((0..total)
        .map(move |mask| Digraph::from_mask(n, target, mask).expect("mask below 2^(n(n-1))")))
}

pub fn count_dags_brute(n: usize, cap: Cap) -> Result<ExactCount, EnumError> {
    let count = all_digraphs(n, 0, cap)?.filter(is_dag).count();
    Ok(ExactCount::from(count as u64))
}

pub fn count_mb_naive(n: usize, target: usize, cap: Cap) -> Result<ExactCount, EnumError> {
    let count = all_digraphs(n, target, cap)?
        .filter(is_canonical_mb)
        .count();
    Ok(ExactCount::from(count as u64))
}

/// Image of [`extract_mb`] over all DAGs on `n` nodes.
#[derive(Clone, Debug)]
pub struct ExtractionSummary {
    pub dags_scanned: u64,
    pub structures: BTreeSet<MbStructureKey>,
}

pub fn extraction_image(n: usize, target: usize, cap: Cap) -> Result<ExtractionSummary, EnumError> {
    let mut dags_scanned = 0;
    let mut structures = BTreeSet::new();
    for g in all_digraphs(n, target, cap)? {
        // extract_mb rejects cycles; skip them up front
        if !g.is_acyclic() {
            continue;
        }
        dags_scanned += 1;
        structures.insert(extract_mb(&g)?);
    }
    Ok(ExtractionSummary {
        dags_scanned,
        structures,
    })
}

pub fn count_mb_by_extraction(n: usize, target: usize, cap: Cap) -> Result<ExactCount, EnumError> {
    let image = extraction_image(n, target, cap)?;
    Ok(ExactCount::from(image.structures.len() as u64))
}

/// Every canonical MB structure for `target`, in key order.
pub fn enumerate_mb(
    n: usize,
    target: usize,
    cap: Cap,
) -> Result<impl Iterator<Item = MbStructureKey>, EnumError> {
    let mut keys: Vec<_> = all_digraphs(n, target, cap)?
        .filter(is_canonical_mb)
        .map(|g| MbStructureKey::of(&g))
        .collect();
    keys.sort_unstable();
    Ok(keys.into_iter())
}

/// True iff the child-induced subgraph of `key` is acyclic.
pub fn children_acyclic(key: &MbStructureKey) -> bool {
    let g = key.to_digraph();
    let roles = RoleMap::compute(&g);
    is_acyclic_on(&g.predecessors(), g.node_count(), roles.children)
}

#[cfg(test)]
mod tests {
    use super::*;

    // X=0, Z=1 (target), Y=2
    const X: usize = 0;
    const Z: usize = 1;
    const Y: usize = 2;

    fn g3(edges: &[(usize, usize)]) -> Digraph {
        Digraph::from_edges(3, Z, edges).unwrap()
    }

    #[test]
    fn digraph_stream_sizes() {
        assert_eq!(all_digraphs(1, 0, Cap::Default).unwrap().count(), 1);
        assert_eq!(all_digraphs(2, 0, Cap::Default).unwrap().count(), 4);
        assert_eq!(all_digraphs(3, 2, Cap::Default).unwrap().count(), 64);
        let masks: Vec<_> = all_digraphs(3, 0, Cap::Default)
            .unwrap()
            .map(|g| g.mask())
            .collect();
        assert_eq!(masks, (0..64).collect::<Vec<_>>());
    }

    #[test]
    fn cap_enforced() {
        let err = all_digraphs(6, 0, Cap::Default).err().unwrap();
        assert_eq!(err, EnumError::CapExceeded { n: 6, cap: 5 });
        let msg = err.to_string();
        assert!(msg.contains("2^30"), "{msg}");
        assert!(msg.contains("--force"), "{msg}");
        assert!(all_digraphs(6, 0, Cap::Forced).is_ok());
        assert!(matches!(
            all_digraphs(7, 0, Cap::Forced).err().unwrap(),
            EnumError::CapExceeded { n: 7, cap: 6 }
        ));
        assert_eq!(
            all_digraphs(0, 0, Cap::Default).err().unwrap(),
            EnumError::NodeCount(0)
        );
        assert!(matches!(
            all_digraphs(3, 3, Cap::Default).err().unwrap(),
            EnumError::TargetOutOfRange { .. }
        ));
    }

    #[test]
    fn roles_of_small_patterns() {
        let roles = classify_roles(&g3(&[(X, Z), (Z, Y), (X, Y)])).unwrap();
        assert_eq!(roles.role(X), NodeRole::Parent);
        assert_eq!(roles.role(Z), NodeRole::Target);
        assert_eq!(roles.role(Y), NodeRole::Child);

        let roles = classify_roles(&g3(&[(Z, Y), (X, Y)])).unwrap();
        assert_eq!(roles.role(Y), NodeRole::Child);
        assert_eq!(roles.role(X), NodeRole::Spouse);

        let roles = classify_roles(&g3(&[])).unwrap();
        assert_eq!(roles.count(NodeRole::Other), 2);
        assert_eq!(roles.count(NodeRole::Target), 1);

        assert_eq!(
            classify_roles(&g3(&[(X, Y), (Y, X)])),
            Err(EnumError::Cyclic)
        );
    }

    #[test]
    fn canonical_checks() {
        assert!(is_canonical_mb(&g3(&[(X, Z), (Z, Y), (X, Y)])));
        // W=2 is not a child; parent arc leaves the blanket
        assert!(!is_canonical_mb(&g3(&[(X, Z), (X, 2)])));
        // Y is not a child of Z, so X->Y is between outside nodes
        assert!(!is_canonical_mb(&g3(&[(X, Y)])));
        assert!(!is_canonical_mb(&g3(&[(Z, X), (X, Z)])));
        assert!(is_canonical_mb(&g3(&[])));
    }

    #[test]
    fn canonical_rejects_forbidden_arcs() {
        let g = |e: &[(usize, usize)]| Digraph::from_edges(4, 0, e).unwrap();
        // parents 1,2 with an arc between them
        assert!(!is_canonical_mb(&g(&[(1, 0), (2, 0), (1, 2)])));
        // parent 1, spouse 3 of child 2, parent->spouse arc
        assert!(!is_canonical_mb(&g(&[(1, 0), (0, 2), (3, 2), (1, 3)])));
        // child -> spouse
        assert!(!is_canonical_mb(&g(&[(0, 2), (3, 2), (2, 3)])));
        // child -> child chain is allowed
        assert!(is_canonical_mb(&g(&[(0, 1), (0, 2), (1, 2), (3, 2)])));
    }

    #[test]
    fn extraction_examples() {
        let key = extract_mb(&g3(&[(X, Z), (X, Y)])).unwrap();
        assert_eq!(key.edges(), &[(X, Z)]);
        assert!(is_canonical_mb(&key.to_digraph()));

        let v = g3(&[(Z, Y), (X, Y)]);
        assert_eq!(extract_mb(&v).unwrap().to_digraph(), v);
        let tri = g3(&[(X, Z), (Z, Y), (X, Y)]);
        assert_eq!(extract_mb(&tri).unwrap().to_digraph(), tri);

        assert_eq!(extract_mb(&g3(&[(X, Y), (Y, X)])), Err(EnumError::Cyclic));
    }

    #[test]
    fn two_node_structures() {
        let keys: Vec<_> = enumerate_mb(2, 0, Cap::Default)
            .unwrap()
            .map(|k| k.edge_list())
            .collect();
        assert_eq!(keys, vec!["-", "0>1", "1>0"]);
        let one: Vec<_> = enumerate_mb(1, 0, Cap::Default).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert!(one[0].edges().is_empty());
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_dags_brute(3, Cap::Default).unwrap(), 25u64);
        assert_eq!(count_mb_naive(2, 1, Cap::Default).unwrap(), 3u64);
        assert_eq!(count_mb_naive(3, 2, Cap::Default).unwrap(), 15u64);
        assert_eq!(count_mb_by_extraction(1, 0, Cap::Default).unwrap(), 1u64);
        let image = extraction_image(3, 0, Cap::Default).unwrap();
        assert_eq!(image.dags_scanned, 25);
        assert_eq!(image.structures.len(), 15);
    }

    #[test]
    fn relabeling_moves_target_to_zero() {
        let g = Digraph::from_edges(3, 2, &[(0, 2), (2, 1)]).unwrap();
        let key = extract_mb(&g).unwrap().relabel_target_to_zero();
        assert_eq!(key.target(), 0);
        assert_eq!(key.edges(), &[(0, 1), (2, 0)]);
    }

    #[test]
    fn children_subgraph_check() {
        let key =
            extract_mb(&Digraph::from_edges(4, 0, &[(0, 1), (0, 2), (1, 2)]).unwrap()).unwrap();
        assert!(children_acyclic(&key));
        assert_eq!(
            key.roles().partition(),
            PartitionTriple {
                n_p: 0,
                n_c: 2,
                n_so: 1
            }
        );
    }
}
