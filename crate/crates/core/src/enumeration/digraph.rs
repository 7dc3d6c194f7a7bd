//! Small labeled digraphs stored as a bitmask over ordered node pairs.

use std::fmt;

use super::EnumError;

/// Largest node count whose `n(n-1)` ordered pairs fit in a `u64` mask.
pub const MAX_NODES: usize = 8;

/// Bit position of the ordered pair `(src, dst)`, row-major with the
/// diagonal skipped.
#[inline]
pub(crate) fn pair_index(n: usize, src: usize, dst: usize) -> u32 {
    debug_assert!(src != dst && src < n && dst < n);
    let col = if dst < src { dst } else { dst - 1 };
    (src * (n - 1) + col) as u32
}

#[inline]
fn pair_of(n: usize, bit: u32) -> (usize, usize) {
    let bit = bit as usize;
    let src = bit / (n - 1);
    let col = bit % (n - 1);
    let dst = if col < src { col } else { col + 1 };
    (src, dst)
}

/// A labeled directed graph without self-loops on at most [`MAX_NODES`]
/// nodes, with one designated target node.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    target: usize,
    mask: u64,
}

impl Digraph {
    /// The edgeless graph.
    pub fn empty(n: usize, target: usize) -> Result<Self, EnumError> {
        Self::from_mask(n, target, 0)
    }

    pub fn from_mask(n: usize, target: usize, mask: u64) -> Result<Self, EnumError> {
        if n == 0 || n > MAX_NODES {
            return Err(EnumError::NodeCount(n));
        }
        if target >= n {
            return Err(EnumError::TargetOutOfRange { target, n });
        }
        let bits = n * (n - 1);
        if bits < 64 && mask >> bits != 0 {
            return Err(EnumError::MaskOutOfRange { n, mask });
        }
        Ok(Digraph { n, target, mask })
    }

    pub fn from_edges(
        n: usize,
        target: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, EnumError> {
        let mut g = Self::empty(n, target)?;
        for &(src, dst) in edges {
            g.insert(src, dst)?;
        }
        Ok(g)
    }

    pub fn insert(&mut self, src: usize, dst: usize) -> Result<(), EnumError> {
        if src >= self.n || dst >= self.n {
            return Err(EnumError::EdgeOutOfRange {
                src,
                dst,
                n: self.n,
            });
        }
        if src == dst {
            return Err(EnumError::SelfLoop(src));
        }
        self.mask |= 1 << pair_index(self.n, src, dst);
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn edge_count(&self) -> u32 {
        self.mask.count_ones()
    }

    #[inline]
    pub fn has_edge(&self, src: usize, dst: usize) -> bool {
        src != dst
            && src < self.n
            && dst < self.n
            && self.mask & (1 << pair_index(self.n, src, dst)) != 0
    }

    /// Edges in `(src, dst)` lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros();
            rest &= rest - 1;
            Some(pair_of(n, bit))
        })
    }

    /// Out-neighbour sets, one bitset of node indices per node.
    pub fn successors(&self) -> [u8; MAX_NODES] {
        let mut out = [0u8; MAX_NODES];
        for (src, dst) in self.edges() {
            out[src] |= 1 << dst;
        }
        out
    }

    /// In-neighbour sets, one bitset of node indices per node.
    pub fn predecessors(&self) -> [u8; MAX_NODES] {
        let mut inn = [0u8; MAX_NODES];
        for (src, dst) in self.edges() {
            inn[dst] |= 1 << src;
        }
        inn
    }

    /// Keeps only the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Digraph {
        let mut mask = 0;
        for (src, dst) in self.edges() {
            if keep(src, dst) {
                mask |= 1 << pair_index(self.n, src, dst);
            }
        }
        Digraph { mask, ..*self }
    }

    /// True iff there is no directed cycle, by repeatedly peeling nodes with
    /// no remaining in-edges.
    pub fn is_acyclic(&self) -> bool {
        is_acyclic_on(&self.predecessors(), self.n, full_set(self.n))
    }
}

pub(crate) fn full_set(n: usize) -> u8 {
    ((1u16 << n) - 1) as u8
}

/// Kahn-style peeling restricted to the node subset `within`.
pub(crate) fn is_acyclic_on(preds: &[u8; MAX_NODES], n: usize, within: u8) -> bool {
    let mut remaining = within;
    loop {
        if remaining == 0 {
            return true;
        }
        let mut sources = 0u8;
        for (v, &p) in preds.iter().enumerate().take(n) {
            if remaining & (1 << v) != 0 && p & remaining == 0 {
                sources |= 1 << v;
            }
        }
        if sources == 0 {
            return false;
        }
        remaining &= !sources;
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("target", &self.target)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
