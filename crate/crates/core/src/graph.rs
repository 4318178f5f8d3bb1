//! Immutable directed multigraph with compressed out-adjacency.

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type ArcId = usize;

/// Largest admissible arc weight magnitude.
pub const MAX_WEIGHT: i64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
    pub weight: i64,
}

impl From<(VertexId, VertexId, i64)> for Arc {
    fn from((tail, head, weight): (VertexId, VertexId, i64)) -> Self {
        Arc { tail, head, weight }
    }
}

/// Largest admissible vertex count; vertex ids fit in a `u32` slot.
pub const MAX_VERTICES: usize = u32::MAX as usize;

/// One slot of the compressed out-adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutArc {
    pub head: u32,
    pub weight: i64,
}

/// A directed weighted multigraph. Parallel arcs and self-loops are allowed.
///
/// Arc ids are dense and follow input order. The out-adjacency is stored in
/// CSR form: the arcs leaving `u` occupy slots `offsets[u]..offsets[u + 1]`,
/// in input order. `slot_arc` maps a slot back to its arc id and is kept out
/// of the hot array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    arcs: Vec<Arc>,
    offsets: Vec<usize>,
    adj: Vec<OutArc>,
    slot_arc: Vec<ArcId>,
}

impl Graph {
    /// Builds a graph on `n` vertices, validating endpoints and weight bounds.
    pub fn new<I, A>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: Into<Arc>,
    {
        if n > MAX_VERTICES {
            return Err(Error::InvalidParams(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let arcs: Vec<Arc> = arcs.into_iter().map(Into::into).collect();
        for (id, a) in arcs.iter().enumerate() {
            if a.tail >= n || a.head >= n {
                return Err(Error::ArcVertexOutOfRange { arc: id });
            }
            if a.weight.unsigned_abs() > MAX_WEIGHT as u64 {
                return Err(Error::WeightOutOfRange { arc: id, weight: a.weight });
            }
        }

        // counting sort by tail; stable, so input order is kept per vertex
        let mut offsets = vec![0usize; n + 1];
        for a in &arcs {
            offsets[a.tail + 1] += 1;
        }
        for u in 0..n {
            offsets[u + 1] += offsets[u];
        }
        let m = arcs.len();
        let mut cursor = offsets.clone();
        let mut adj = vec![OutArc { head: 0, weight: 0 }; m];
        let mut slot_arc = vec![0; m];
        for (id, a) in arcs.iter().enumerate() {
            let slot = cursor[a.tail];
            cursor[a.tail] += 1;
            adj[slot] = OutArc { head: a.head as u32, weight: a.weight };
            slot_arc[slot] = id;
        }

        Ok(Graph { n, arcs, offsets, adj, slot_arc })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> Option<&Arc> {
        self.arcs.get(id)
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    /// Arcs leaving `u` as `(arc id, head, weight)`, in input order.
    ///
    /// Panics if `u >= n`.
    #[inline]
    pub fn out_arcs(&self, u: VertexId) -> impl Iterator<Item = (ArcId, VertexId, i64)> + '_ {
        let range = self.slot_range(u);
        self.slot_arc[range.clone()]
            .iter()
            .zip(&self.adj[range])
            .map(|(&a, o)| (a, o.head as VertexId, o.weight))
    }

    /// Slots holding the arcs leaving `u`.
    #[inline]
    pub fn slot_range(&self, u: VertexId) -> std::ops::Range<usize> {
        self.offsets[u]..self.offsets[u + 1]
    }

    /// The whole out-adjacency array, indexed by slot.
    #[inline]
    pub fn adjacency(&self) -> &[OutArc] {
        &self.adj
    }

    /// Arc id stored in an adjacency slot.
    #[inline]
    pub fn slot_arc(&self, slot: usize) -> ArcId {
        self.slot_arc[slot]
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Marks every vertex reachable from `s` along directed arcs, ignoring weights.
    pub fn reachable_mask(&self, s: VertexId) -> Result<Vec<bool>> {
        self.check_vertex(s)?;
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for (_, v, _) in self.out_arcs(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        Ok(seen)
    }

    /// Vertices reachable from `s`, in increasing id order. `s` is always included.
    pub fn reachable_set(&self, s: VertexId) -> Result<Vec<VertexId>> {
        let mask = self.reachable_mask(s)?;
        Ok(mask.iter().enumerate().filter(|(_, &r)| r).map(|(v, _)| v).collect())
    }
}
