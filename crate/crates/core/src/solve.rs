//! Reference solvers: Bellman-Ford as the prover, and an exhaustive
//! simple-path solver as an independent oracle on tiny graphs.

use crate::certify::CycleWitness;
use crate::dist::{Certificate, Dist};
use crate::error::{Error, Result};
use crate::graph::{ArcId, Graph, VertexId};

/// Vertex limit for [`brute_force_solve`].
pub const BRUTE_FORCE_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Distances(Certificate),
    NegativeCycle(CycleWitness),
}

impl SolveOutcome {
    pub fn distances(&self) -> Option<&Certificate> {
        match self {
            SolveOutcome::Distances(c) => Some(c),
            SolveOutcome::NegativeCycle(_) => None,
        }
    }

    pub fn cycle(&self) -> Option<&CycleWitness> {
        match self {
            SolveOutcome::Distances(_) => None,
            SolveOutcome::NegativeCycle(w) => Some(w),
        }
    }

    pub fn is_negative_cycle(&self) -> bool {
        matches!(self, SolveOutcome::NegativeCycle(_))
    }
}

struct Relaxer<'g> {
    g: &'g Graph,
    dist: Vec<Option<i64>>,
    /// Adjacency slot of the arc that last lowered each label.
    pred: Vec<Option<usize>>,
}

impl<'g> Relaxer<'g> {
    fn new(g: &'g Graph, s: VertexId) -> Self {
        let mut dist = vec![None; g.n()];
        dist[s] = Some(0);
        Relaxer { g, dist, pred: vec![None; g.n()] }
    }

    /// One pass over every arc; returns the last vertex whose label dropped.
    fn round(&mut self) -> Option<VertexId> {
        let adj = self.g.adjacency();
        let mut last = None;
        for u in 0..self.g.n() {
            if self.dist[u].is_none() {
                continue;
            }
            for slot in self.g.slot_range(u) {
                let out = adj[slot];
                let v = out.head as usize;
                // re-read: a negative self-loop lowers dist[u] mid-scan
                let cand = self.dist[u].unwrap_or_default() + out.weight;
                if self.dist[v].map_or(true, |dv| cand < dv) {
                    self.dist[v] = Some(cand);
                    self.pred[v] = Some(slot);
                    last = Some(v);
                }
            }
        }
        last
    }

    fn labels(&self) -> Vec<Dist> {
        self.dist.iter().map(|d| d.map_or(Dist::Infinity, Dist::Finite)).collect()
    }

    fn pred_arc(&self, v: VertexId) -> Option<ArcId> {
        self.pred[v].map(|slot| self.g.slot_arc(slot))
    }

    /// Walks n predecessor steps back from `start` to land on a cycle of the
    /// predecessor graph, then collects it in forward order. `None` if the walk
    /// runs into the source before n steps.
    fn extract_cycle(&self, start: VertexId) -> Option<Vec<ArcId>> {
        let arcs = self.g.arcs();
        let mut x = start;
        for _ in 0..self.g.n() {
            x = arcs[self.pred_arc(x)?].tail;
        }
        let mut cycle = Vec::new();
        let mut v = x;
        loop {
            let arc = self.pred_arc(v)?;
            cycle.push(arc);
            v = arcs[arc].tail;
            if v == x {
                break;
            }
        }
        cycle.reverse();
        Some(cycle)
    }
}

/// Bellman-Ford from `s` with early exit and negative-cycle extraction.
///
/// O(n·m) worst case. The returned cycle is reachable from `s`.
pub fn bellman_ford(g: &Graph, s: VertexId) -> Result<SolveOutcome> {
    g.check_vertex(s)?;
    let mut r = Relaxer::new(g, s);
    for _ in 1..g.n() {
        if r.round().is_none() {
            return Ok(SolveOutcome::Distances(Certificate::new(r.labels())?));
        }
    }
    let Some(mut relaxed) = r.round() else {
        return Ok(SolveOutcome::Distances(Certificate::new(r.labels())?));
    };
    // a reachable negative cycle keeps relaxing forever, so this terminates
    loop {
        if let Some(cycle) = r.extract_cycle(relaxed) {
            return Ok(SolveOutcome::NegativeCycle(CycleWitness::new(cycle)?));
        }
        relaxed = r.round().expect("negative cycle keeps relaxing");
    }
}

/// Labels after `rounds` full relaxation passes, whether or not a negative
/// cycle exists. Finite exactly on vertices reached so far.
pub fn relaxation_labels(g: &Graph, s: VertexId, rounds: usize) -> Result<Vec<Dist>> {
    g.check_vertex(s)?;
    let mut r = Relaxer::new(g, s);
    for _ in 0..rounds {
        if r.round().is_none() {
            break;
        }
    }
    Ok(r.labels())
}

/// Every simple directed cycle, as arc sequences. Each cycle is reported once,
/// rooted at its smallest vertex. Parallel arcs yield distinct cycles.
///
/// Exponential; intended for graphs with a handful of vertices.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<ArcId>> {
    fn extend(
        g: &Graph,
        root: VertexId,
        u: VertexId,
        on_path: &mut [bool],
        path: &mut Vec<ArcId>,
        out: &mut Vec<Vec<ArcId>>,
    ) {
        for (arc, v, _) in g.out_arcs(u) {
            if v == root {
                path.push(arc);
                out.push(path.clone());
                path.pop();
            } else if v > root && !on_path[v] {
                on_path[v] = true;
                path.push(arc);
                extend(g, root, v, on_path, path, out);
                path.pop();
                on_path[v] = false;
            }
        }
    }

    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::new();
    for root in 0..g.n() {
        on_path[root] = true;
        extend(g, root, root, &mut on_path, &mut path, &mut out);
        on_path[root] = false;
    }
    out
}

/// Exhaustive solver for graphs with at most [`BRUTE_FORCE_MAX_N`] vertices.
///
/// Reports the minimum-weight negative simple cycle reachable from `s` if one
/// exists; otherwise the minimum weight over all simple `s`-paths per vertex.
pub fn brute_force_solve(g: &Graph, s: VertexId) -> Result<SolveOutcome> {
    if g.n() > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLargeForBruteForce { n: g.n(), max: BRUTE_FORCE_MAX_N });
    }
    g.check_vertex(s)?;
    let reachable = g.reachable_mask(s)?;

    let weight = |c: &[ArcId]| c.iter().map(|&a| g.arcs()[a].weight).sum::<i64>();
    let worst = simple_cycles(g)
        .into_iter()
        .filter(|c| reachable[g.arcs()[c[0]].tail])
        .map(|c| (weight(&c), c))
        .filter(|(w, _)| *w < 0)
        .min_by_key(|(w, _)| *w);
    if let Some((_, c)) = worst {
        return Ok(SolveOutcome::NegativeCycle(CycleWitness::new(c)?));
    }

    fn walk(g: &Graph, u: VertexId, len: i64, on_path: &mut [bool], best: &mut [Option<i64>]) {
        if best[u].map_or(true, |b| len < b) {
            best[u] = Some(len);
        }
        for (_, v, w) in g.out_arcs(u) {
            if !on_path[v] {
                on_path[v] = true;
                walk(g, v, len + w, on_path, best);
                on_path[v] = false;
            }
        }
    }

    let mut best = vec![None; g.n()];
    let mut on_path = vec![false; g.n()];
    on_path[s] = true;
    walk(g, s, 0, &mut on_path, &mut best);
    let labels = best.into_iter().map(|d| d.map_or(Dist::Infinity, Dist::Finite)).collect();
    Ok(SolveOutcome::Distances(Certificate::new(labels)?))
}
