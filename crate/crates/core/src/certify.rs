//! Certificate verification.
//!
//! [`certify`] is the linear-time verifier: one depth-first traversal from the
//! source over tight arcs, checking the relaxation inequality on every arc it
//! scans, followed by a sweep for labelled vertices the traversal never
//! reached. [`check_constraints_naive`] evaluates the same four constraints
//! directly, one after another, and serves as the verifier's oracle.

use std::fmt;

use crate::dist::{Certificate, Dist};
use crate::error::{Error, Result};
use crate::graph::{ArcId, Graph, VertexId};

/// Why a certificate was rejected, with the witness that locates the violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rejection {
    /// The source label is not `Finite(0)`.
    SourceNotZero { source: VertexId },
    /// `D[head] > D[tail] + weight` on this arc.
    RelaxationViolated { arc: ArcId },
    /// Finite label on a vertex that no tight path from the source reaches.
    FiniteButNotTightReachable { vertex: VertexId },
    /// Non-infinite label on a vertex unreachable from the source.
    UnreachableNotInfinity { vertex: VertexId },
}

impl Rejection {
    pub fn name(&self) -> &'static str {
        match self {
            Rejection::SourceNotZero { .. } => "SourceNotZero",
            Rejection::RelaxationViolated { .. } => "RelaxationViolated",
            Rejection::FiniteButNotTightReachable { .. } => "FiniteButNotTightReachable",
            Rejection::UnreachableNotInfinity { .. } => "UnreachableNotInfinity",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::SourceNotZero { source } => write!(f, "SourceNotZero vertex {source}"),
            Rejection::RelaxationViolated { arc } => write!(f, "RelaxationViolated arc {arc}"),
            Rejection::FiniteButNotTightReachable { vertex }
            | Rejection::UnreachableNotInfinity { vertex } => {
                write!(f, "{} vertex {vertex}", self.name())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerifyResult {
    Accept,
    Reject(Rejection),
}

impl VerifyResult {
    pub fn is_accept(&self) -> bool {
        matches!(self, VerifyResult::Accept)
    }

    pub fn rejection(&self) -> Option<Rejection> {
        match self {
            VerifyResult::Accept => None,
            VerifyResult::Reject(r) => Some(*r),
        }
    }
}

/// Work counters from one run of [`certify_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraversalStats {
    pub vertices_popped: usize,
    pub arcs_scanned: usize,
}

/// A closed directed walk, given as arc ids. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness(Vec<ArcId>);

impl CycleWitness {
    pub fn new(arcs: Vec<ArcId>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::EmptyCycle);
        }
        Ok(CycleWitness(arcs))
    }

    pub fn arcs(&self) -> &[ArcId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sum of arc weights, or `None` if an arc id is out of range.
    pub fn total_weight(&self, g: &Graph) -> Option<i64> {
        let mut sum: i128 = 0;
        for &a in &self.0 {
            sum += g.arc(a)?.weight as i128;
        }
        i64::try_from(sum).ok()
    }

    /// Vertex sequence: the tail of every arc, in order.
    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        self.0.iter().filter_map(|&a| g.arc(a).map(|arc| arc.tail)).collect()
    }
}

fn check_inputs(g: &Graph, s: VertexId, cert: &Certificate) -> Result<()> {
    g.check_vertex(s)?;
    check_len(g, cert)
}

fn check_len(g: &Graph, cert: &Certificate) -> Result<()> {
    if cert.len() != g.n() {
        return Err(Error::CertLengthMismatch { expected: g.n(), found: cert.len() });
    }
    Ok(())
}

/// Verifies that `cert` holds the exact shortest-path distances from `s`.
///
/// Runs in O(n + m). The witness is deterministic: arcs are scanned in
/// adjacency order and the traversal stack is LIFO.
pub fn certify(g: &Graph, s: VertexId, cert: &Certificate) -> Result<VerifyResult> {
    certify_with_stats(g, s, cert).map(|(r, _)| r)
}

/// [`certify`], also reporting how many vertices and arcs the traversal touched.
pub fn certify_with_stats(
    g: &Graph,
    s: VertexId,
    cert: &Certificate,
) -> Result<(VerifyResult, TraversalStats)> {
    check_inputs(g, s, cert)?;
    let mut stats = TraversalStats::default();
    let labels = cert.labels();

    if labels[s] != Dist::ZERO {
        return Ok((VerifyResult::Reject(Rejection::SourceNotZero { source: s }), stats));
    }

    // Infinity becomes i64::MAX: finite labels and arc weights are bounded so
    // that `du + w` stays far below it, and an infinite head then fails the
    // relaxation test like any other too-large label.
    let flat: Vec<i64> = labels.iter().map(|d| d.finite().unwrap_or(i64::MAX)).collect();
    let adj = g.adjacency();
    let mut marked = vec![false; g.n()];
    let mut stack = vec![s as u32];
    marked[s] = true;
    while let Some(u) = stack.pop() {
        let u = u as usize;
        stats.vertices_popped += 1;
        // only finite-labelled vertices are ever pushed
        let du = flat[u];
        let range = g.slot_range(u);
        let first = range.start;
        for (i, out) in adj[range].iter().enumerate() {
            let v = out.head as usize;
            let via = du + out.weight;
            let dv = flat[v];
            if dv > via {
                stats.arcs_scanned += i + 1;
                let r = Rejection::RelaxationViolated { arc: g.slot_arc(first + i) };
                return Ok((VerifyResult::Reject(r), stats));
            }
            if dv == via && !marked[v] {
                marked[v] = true;
                stack.push(v as u32);
            }
        }
        stats.arcs_scanned += g.out_degree(u);
    }

    let mut reachable: Option<Vec<bool>> = None;
    for v in 0..g.n() {
        if !marked[v] && labels[v] != Dist::Infinity {
            let reach = reachable.get_or_insert_with(|| {
                g.reachable_mask(s).expect("source already validated")
            });
            let r = if reach[v] {
                Rejection::FiniteButNotTightReachable { vertex: v }
            } else {
                Rejection::UnreachableNotInfinity { vertex: v }
            };
            return Ok((VerifyResult::Reject(r), stats));
        }
    }
    Ok((VerifyResult::Accept, stats))
}

/// Per-arc tightness: arc `(u, v, w)` is tight iff `D[u]` is finite and `D[v] = D[u] + w`.
pub fn tight_arcs(g: &Graph, cert: &Certificate) -> Result<Vec<bool>> {
    check_len(g, cert)?;
    Ok(g.arcs()
        .iter()
        .map(|a| cert[a.tail].is_finite() && cert[a.head] == cert[a.tail].add_weight(a.weight))
        .collect())
}

/// Evaluates the four constraints one at a time, without the fused traversal.
///
/// Accepts exactly when [`certify`] accepts; the witness may differ.
pub fn check_constraints_naive(g: &Graph, s: VertexId, cert: &Certificate) -> Result<VerifyResult> {
    check_inputs(g, s, cert)?;
    let reject = |r| Ok(VerifyResult::Reject(r));

    if cert[s] != Dist::ZERO {
        return reject(Rejection::SourceNotZero { source: s });
    }

    for (arc, a) in g.arcs().iter().enumerate() {
        if cert[a.tail].is_finite() && cert[a.head] > cert[a.tail].add_weight(a.weight) {
            return reject(Rejection::RelaxationViolated { arc });
        }
    }

    let reachable = g.reachable_mask(s)?;
    let tight = tight_arcs(g, cert)?;
    let tight_reach = reach_within(g, s, &tight);
    for v in 0..g.n() {
        if reachable[v] && !tight_reach[v] {
            return reject(Rejection::FiniteButNotTightReachable { vertex: v });
        }
    }

    for v in 0..g.n() {
        if !reachable[v] && cert[v] != Dist::Infinity {
            return reject(Rejection::UnreachableNotInfinity { vertex: v });
        }
    }
    Ok(VerifyResult::Accept)
}

/// Reachability from `s` using only arcs whose flag is set.
fn reach_within(g: &Graph, s: VertexId, allowed: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::from([s]);
    seen[s] = true;
    while let Some(u) = queue.pop_front() {
        for (arc, v, _) in g.out_arcs(u) {
            if allowed[arc] && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Checks that `cycle` is a closed walk of negative total weight whose first
/// vertex is reachable from `s`.
pub fn verify_negative_cycle_witness(g: &Graph, s: VertexId, cycle: &CycleWitness) -> Result<bool> {
    g.check_vertex(s)?;
    let arcs = cycle
        .arcs()
        .iter()
        .map(|&id| g.arc(id).copied().ok_or(Error::ArcOutOfRange { arc: id, m: g.m() }))
        .collect::<Result<Vec<_>>>()?;

    let closed = arcs.iter().zip(arcs.iter().cycle().skip(1)).all(|(a, b)| a.head == b.tail);
    if !closed {
        return Ok(false);
    }
    let total: i128 = arcs.iter().map(|a| a.weight as i128).sum();
    if total >= 0 {
        return Ok(false);
    }
    Ok(g.reachable_mask(s)?[arcs[0].tail])
}
