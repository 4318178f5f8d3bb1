//! Seeded instance and adversarial-certificate generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so every
//! output is a pure function of the parameters and the seed.

use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dist::{Certificate, Dist, MAX_LABEL};
use crate::error::{Error, Result};
use crate::graph::{Arc, Graph, VertexId, MAX_WEIGHT};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenMode {
    /// Uniform endpoints and weights; negative cycles may appear.
    Unrestricted,
    /// Potential-shifted reduced costs; every cycle has nonnegative weight.
    NoNegativeCycle,
}

impl FromStr for GenMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unrestricted" => Ok(GenMode::Unrestricted),
            "no-negative-cycle" | "no_negative_cycle" => Ok(GenMode::NoNegativeCycle),
            other => Err(Error::InvalidParams(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenParams {
    pub n: usize,
    pub m: usize,
    pub wmin: i64,
    pub wmax: i64,
    pub mode: GenMode,
    pub seed: u64,
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if self.wmin > self.wmax {
            return Err(Error::InvalidParams(format!("wmin {} > wmax {}", self.wmin, self.wmax)));
        }
        if self.wmin < -MAX_WEIGHT || self.wmax > MAX_WEIGHT {
            return Err(Error::InvalidParams("weight bounds must lie within ±2^31".into()));
        }
        Ok(())
    }
}

/// Generates a random multigraph as described by `p`.
///
/// In [`GenMode::NoNegativeCycle`] each weight is `c(u,v) + p(u) - p(v)` with
/// reduced cost `c` drawn from `[0, wmax - wmin]` and potentials `p` drawn from
/// `[0, P]`. Summed around a cycle the potentials cancel, leaving a
/// nonnegative total, while single arcs can still be negative. The ranges are
/// capped so `c + P <= 2^31` and the final clamp never changes a weight.
pub fn gen_random_graph(p: &GenParams) -> Result<Graph> {
    p.validate()?;
    let mut rng = rng_from_seed(p.seed);
    let n = p.n;
    let mut arcs = Vec::with_capacity(p.m);
    match p.mode {
        GenMode::Unrestricted => {
            for _ in 0..p.m {
                let tail = rng.gen_range(0..n);
                let head = rng.gen_range(0..n);
                let weight = rng.gen_range(p.wmin..=p.wmax);
                arcs.push(Arc { tail, head, weight });
            }
        }
        GenMode::NoNegativeCycle => {
            let reduced_max = (p.wmax - p.wmin).clamp(0, MAX_WEIGHT);
            let spread = p.wmin.unsigned_abs().max(p.wmax.unsigned_abs()) as i64;
            let potential_max = spread.min(MAX_WEIGHT - reduced_max);
            let potential: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=potential_max)).collect();
            for _ in 0..p.m {
                let tail = rng.gen_range(0..n);
                let head = rng.gen_range(0..n);
                let reduced = rng.gen_range(0..=reduced_max);
                let weight = (reduced + potential[tail] - potential[head]).clamp(-MAX_WEIGHT, MAX_WEIGHT);
                arcs.push(Arc { tail, head, weight });
            }
        }
    }
    Graph::new(n, arcs)
}

/// Appends a negative-weight cycle over `k` distinct random vertices, plus an
/// arc from vertex 0 onto the cycle when it is not already reachable from 0.
pub fn inject_negative_cycle(g: &Graph, k: usize, seed: u64) -> Result<Graph> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParams(format!("cycle length {k} not in [1, {}]", g.n())));
    }
    let mut rng = rng_from_seed(seed);
    let vertices: Vec<VertexId> = sample(&mut rng, g.n(), k).into_vec();

    let mut weights: Vec<i64> = (0..k - 1).map(|_| rng.gen_range(-10..=10)).collect();
    let partial: i64 = weights.iter().sum();
    weights.push(-partial - rng.gen_range(1..=10));

    let mut arcs = g.arcs().to_vec();
    for i in 0..k {
        arcs.push(Arc { tail: vertices[i], head: vertices[(i + 1) % k], weight: weights[i] });
    }
    let reach = g.reachable_mask(0)?;
    if !vertices.iter().any(|&v| reach[v]) {
        arcs.push(Arc { tail: 0, head: vertices[0], weight: rng.gen_range(0..=10) });
    }
    Graph::new(g.n(), arcs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MutationKind {
    /// Adds a nonzero delta to a finite label other than the source's.
    PerturbFinite(i64),
    /// Replaces a finite label with infinity.
    FiniteToInfinity,
    /// Replaces an infinite label with the given value.
    InfinityToFinite(i64),
    /// Sets the source label to a nonzero value.
    CorruptSource(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mutation {
    Applied { vertex: VertexId, cert: Certificate },
    NoTargetAvailable,
}

impl Mutation {
    pub fn into_cert(self) -> Option<Certificate> {
        match self {
            Mutation::Applied { cert, .. } => Some(cert),
            Mutation::NoTargetAvailable => None,
        }
    }
}

/// Changes exactly one label of `cert`, at a seeded-random eligible vertex.
pub fn mutate_certificate(
    cert: &Certificate,
    source: VertexId,
    kind: MutationKind,
    seed: u64,
) -> Result<Mutation> {
    if source >= cert.len() {
        return Err(Error::VertexOutOfRange { vertex: source, n: cert.len() });
    }
    let in_range = |v: i64| v.unsigned_abs() <= MAX_LABEL as u64;
    let labels = cert.labels();
    let eligible: Vec<(VertexId, Dist)> = match kind {
        MutationKind::PerturbFinite(0) | MutationKind::CorruptSource(0) => {
            return Err(Error::InvalidParams("mutation value must be nonzero".into()));
        }
        MutationKind::PerturbFinite(delta) => labels
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != source)
            .filter_map(|(v, d)| {
                let new = d.finite()?.checked_add(delta).filter(|&x| in_range(x))?;
                Some((v, Dist::Finite(new)))
            })
            .collect(),
        MutationKind::FiniteToInfinity => labels
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_finite())
            .map(|(v, _)| (v, Dist::Infinity))
            .collect(),
        MutationKind::InfinityToFinite(value) => {
            if !in_range(value) {
                return Err(Error::InvalidParams(format!("value {value} exceeds the label bound")));
            }
            labels
                .iter()
                .enumerate()
                .filter(|(_, d)| !d.is_finite())
                .map(|(v, _)| (v, Dist::Finite(value)))
                .collect()
        }
        MutationKind::CorruptSource(value) => {
            if !in_range(value) {
                return Err(Error::InvalidParams(format!("value {value} exceeds the label bound")));
            }
            if labels[source] == Dist::Finite(value) {
                vec![]
            } else {
                vec![(source, Dist::Finite(value))]
            }
        }
    };

    if eligible.is_empty() {
        return Ok(Mutation::NoTargetAvailable);
    }
    let mut rng = rng_from_seed(seed);
    let (vertex, label) = eligible[rng.gen_range(0..eligible.len())];
    Ok(Mutation::Applied { vertex, cert: cert.with_label(vertex, label)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::cert;
    use crate::solve::brute_force_solve;

    fn params(n: usize, m: usize, mode: GenMode, seed: u64) -> GenParams {
        GenParams { n, m, wmin: -8, wmax: 8, mode, seed }
    }

    #[test]
    fn singleton() {
        let g = gen_random_graph(&params(1, 0, GenMode::Unrestricted, 9)).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn deterministic_in_seed() {
        for mode in [GenMode::Unrestricted, GenMode::NoNegativeCycle] {
            let a = gen_random_graph(&params(20, 60, mode, 42)).unwrap();
            let b = gen_random_graph(&params(20, 60, mode, 42)).unwrap();
            let c = gen_random_graph(&params(20, 60, mode, 43)).unwrap();
            assert_eq!(a, b);
            assert_ne!(a, c);
        }
    }

    #[test]
    fn weights_stay_in_bounds() {
        let g = gen_random_graph(&params(30, 200, GenMode::Unrestricted, 1)).unwrap();
        assert!(g.arcs().iter().all(|a| (-8..=8).contains(&a.weight)));

        let wide = GenParams {
            n: 50,
            m: 300,
            wmin: -MAX_WEIGHT,
            wmax: MAX_WEIGHT,
            mode: GenMode::NoNegativeCycle,
            seed: 5,
        };
        assert!(gen_random_graph(&wide).is_ok());
    }

    #[test]
    fn no_negative_cycle_mode_has_negative_arcs_but_no_negative_cycles() {
        let mut saw_negative_arc = false;
        for seed in 0..1000 {
            let n = 1 + (seed as usize % 7);
            let g = gen_random_graph(&params(n, 3 * n, GenMode::NoNegativeCycle, seed)).unwrap();
            saw_negative_arc |= g.arcs().iter().any(|a| a.weight < 0);
            for s in 0..n {
                assert!(!brute_force_solve(&g, s).unwrap().is_negative_cycle(), "seed {seed}");
            }
        }
        assert!(saw_negative_arc);
    }

    #[test]
    fn invalid_params() {
        assert!(gen_random_graph(&params(0, 0, GenMode::Unrestricted, 0)).is_err());
        let mut p = params(3, 3, GenMode::Unrestricted, 0);
        p.wmin = 5;
        p.wmax = 4;
        assert!(gen_random_graph(&p).is_err());
        p.wmin = -MAX_WEIGHT - 1;
        p.wmax = 0;
        assert!(gen_random_graph(&p).is_err());
        assert_eq!("unrestricted".parse::<GenMode>().unwrap(), GenMode::Unrestricted);
        assert!("bogus".parse::<GenMode>().is_err());
    }

    #[test]
    fn self_loop_injection() {
        let g = Graph::new(3, Vec::<Arc>::new()).unwrap();
        let h = inject_negative_cycle(&g, 1, 7).unwrap();
        let loop_arc = h.arcs()[0];
        assert_eq!(loop_arc.tail, loop_arc.head);
        assert!(loop_arc.weight < 0);
        // connector needed unless the loop sits on vertex 0
        assert_eq!(h.m(), if loop_arc.tail == 0 { 1 } else { 2 });
    }

    #[test]
    fn injected_cycles_are_found_by_the_oracle() {
        for seed in 0..300u64 {
            let n = 1 + (seed as usize % 9);
            let g = gen_random_graph(&params(n, n, GenMode::NoNegativeCycle, seed)).unwrap();
            let k = 1 + (seed as usize / 9) % n;
            let h = inject_negative_cycle(&g, k, seed).unwrap();
            assert!(h.m() == g.m() + k || h.m() == g.m() + k + 1);
            assert!(brute_force_solve(&h, 0).unwrap().is_negative_cycle(), "seed {seed}");
        }
        let g = Graph::new(2, Vec::<Arc>::new()).unwrap();
        assert!(inject_negative_cycle(&g, 3, 0).is_err());
        assert!(inject_negative_cycle(&g, 0, 0).is_err());
    }

    #[test]
    fn perturb_single_field() {
        let c = cert(&[0, -2, 2, -1]);
        let m = mutate_certificate(&c, 0, MutationKind::PerturbFinite(1), 3).unwrap();
        let Mutation::Applied { vertex, cert: out } = m else { panic!("no target") };
        assert_ne!(vertex, 0);
        let mut expected = c.clone().into_labels();
        expected[vertex] = expected[vertex].add_weight(1);
        assert_eq!(out.labels(), &expected[..]);

        // only the source is finite: nothing to perturb
        let lonely = Certificate::new(vec![Dist::ZERO, Dist::Infinity]).unwrap();
        assert_eq!(
            mutate_certificate(&lonely, 0, MutationKind::PerturbFinite(1), 0).unwrap(),
            Mutation::NoTargetAvailable
        );
    }

    #[test]
    fn finite_to_infinity_may_hit_source() {
        let c = Certificate::new(vec![Dist::ZERO, Dist::Infinity]).unwrap();
        let out = mutate_certificate(&c, 0, MutationKind::FiniteToInfinity, 11).unwrap();
        assert_eq!(
            out,
            Mutation::Applied {
                vertex: 0,
                cert: Certificate::new(vec![Dist::Infinity, Dist::Infinity]).unwrap()
            }
        );
    }

    #[test]
    fn infinity_to_finite_choice_is_seeded() {
        let c = Certificate::new(vec![Dist::ZERO, Dist::Infinity, Dist::Infinity]).unwrap();
        let mut hit = [false; 3];
        for seed in 0..32 {
            let a = mutate_certificate(&c, 0, MutationKind::InfinityToFinite(5), seed).unwrap();
            let b = mutate_certificate(&c, 0, MutationKind::InfinityToFinite(5), seed).unwrap();
            assert_eq!(a, b);
            let Mutation::Applied { vertex, cert: out } = a else { panic!() };
            assert_eq!(out[vertex], Dist::Finite(5));
            hit[vertex] = true;
        }
        assert_eq!(hit, [false, true, true]);
        let full = cert(&[0, 1]);
        assert_eq!(
            mutate_certificate(&full, 0, MutationKind::InfinityToFinite(5), 0).unwrap(),
            Mutation::NoTargetAvailable
        );
    }

    #[test]
    fn corrupt_source() {
        let c = cert(&[0, -2]);
        let out = mutate_certificate(&c, 0, MutationKind::CorruptSource(-4), 0).unwrap();
        assert_eq!(out, Mutation::Applied { vertex: 0, cert: cert(&[-4, -2]) });
        assert!(mutate_certificate(&c, 0, MutationKind::CorruptSource(0), 0).is_err());
        assert!(mutate_certificate(&c, 0, MutationKind::PerturbFinite(0), 0).is_err());
        assert!(mutate_certificate(&c, 5, MutationKind::CorruptSource(1), 0).is_err());
    }
}
