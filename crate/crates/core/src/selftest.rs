//! Randomized differential sweep over small instances.
//!
//! Cross-checks Bellman-Ford against the brute-force oracle, the linear-time
//! verifier against the naive constraint checker, and the verifier against
//! mutated and negative-cycle certificates. Used by the `selftest` CLI
//! subcommand and by the acceptance suite.

use std::fmt;

use rand::Rng;

use crate::certify::{certify, check_constraints_naive, verify_negative_cycle_witness};
use crate::dist::{Certificate, Dist};
use crate::error::Result;
use crate::generate::{
    gen_random_graph, inject_negative_cycle, mutate_certificate, rng_from_seed, GenMode, GenParams,
    Mutation, MutationKind,
};
use crate::graph::{Graph, VertexId};
use crate::solve::{bellman_ford, brute_force_solve, relaxation_labels, SolveOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub instances: usize,
    pub negative_cycle_instances: usize,
    pub max_n: usize,
    pub max_m: usize,
    pub wmin: i64,
    pub wmax: i64,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            instances: 1000,
            negative_cycle_instances: 200,
            max_n: 8,
            max_m: 20,
            wmin: -8,
            wmax: 8,
            seed: 0x5eed,
        }
    }
}

/// Pass/fail counter for one family of checks. Keeps the first failure.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} ok", self.checked - self.failed, self.checked)?;
        if let Some(first) = &self.first_failure {
            write!(f, " (first failure: {first})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub instances: usize,
    pub solvable_instances: usize,
    pub negative_cycle_instances: usize,
    /// Bellman-Ford vs brute force, per instance.
    pub oracle_agreement: Tally,
    /// Prover certificate accepted by both checkers, per solvable instance.
    pub soundness: Tally,
    /// Mutated true certificate rejected, per applied mutation.
    pub mutation_kill: Tally,
    /// Witness valid and finite candidates rejected, per injected instance.
    pub negative_cycle: Tally,
    /// `certify` and the naive checker agree, per (instance, certificate) pair.
    pub decision_equivalence: Tally,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        [
            &self.oracle_agreement,
            &self.soundness,
            &self.mutation_kill,
            &self.negative_cycle,
            &self.decision_equivalence,
        ]
        .iter()
        .all(|t| t.passed())
    }

    pub fn mutations_per_solvable_instance(&self) -> f64 {
        self.mutation_kill.checked as f64 / self.solvable_instances.max(1) as f64
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "instances: {} ({} solvable), injected negative-cycle instances: {}",
            self.instances, self.solvable_instances, self.negative_cycle_instances
        )?;
        writeln!(f, "oracle agreement:     {}", self.oracle_agreement)?;
        writeln!(f, "prover soundness:     {}", self.soundness)?;
        writeln!(f, "mutation kill:        {}", self.mutation_kill)?;
        writeln!(f, "negative cycles:      {}", self.negative_cycle)?;
        write!(f, "decision equivalence: {}", self.decision_equivalence)
    }
}

fn same_outcome(a: &SolveOutcome, b: &SolveOutcome) -> bool {
    match (a, b) {
        (SolveOutcome::Distances(x), SolveOutcome::Distances(y)) => x == y,
        (SolveOutcome::NegativeCycle(_), SolveOutcome::NegativeCycle(_)) => true,
        _ => false,
    }
}

fn mutation_kinds(rng: &mut impl Rng) -> Vec<MutationKind> {
    let nonzero = |rng: &mut dyn rand::RngCore| {
        let v: i64 = rng.gen_range(1..=20);
        if rng.gen_bool(0.5) { v } else { -v }
    };
    vec![
        MutationKind::PerturbFinite(1),
        MutationKind::PerturbFinite(-1),
        MutationKind::PerturbFinite(nonzero(rng)),
        MutationKind::FiniteToInfinity,
        MutationKind::InfinityToFinite(rng.gen_range(-20..=20)),
        MutationKind::CorruptSource(nonzero(rng)),
    ]
}

fn random_cert(rng: &mut impl Rng, n: usize, s: VertexId, all_finite: bool) -> Certificate {
    let labels = (0..n)
        .map(|v| {
            if v == s && rng.gen_bool(0.7) {
                Dist::ZERO
            } else if !all_finite && rng.gen_bool(0.3) {
                Dist::Infinity
            } else {
                Dist::Finite(rng.gen_range(-50..=50))
            }
        })
        .collect();
    Certificate::new(labels).expect("small labels")
}

struct Sweep {
    report: SweepReport,
}

impl Sweep {
    fn equivalence(&mut self, g: &Graph, s: VertexId, cert: &Certificate, tag: &str) -> Result<bool> {
        let fast = certify(g, s, cert)?;
        let naive = check_constraints_naive(g, s, cert)?;
        self.report.decision_equivalence.record(fast.is_accept() == naive.is_accept(), || {
            format!("{tag}: certify {fast:?} vs naive {naive:?} on {cert:?}")
        });
        Ok(fast.is_accept())
    }

    fn instance(&mut self, idx: usize, cfg: &SweepConfig, rng: &mut impl Rng) -> Result<()> {
        let n = rng.gen_range(1..=cfg.max_n);
        let m = rng.gen_range(0..=cfg.max_m);
        let mode = if idx % 2 == 0 { GenMode::Unrestricted } else { GenMode::NoNegativeCycle };
        let params = GenParams { n, m, wmin: cfg.wmin, wmax: cfg.wmax, mode, seed: rng.gen() };
        let g = gen_random_graph(&params)?;
        let s = rng.gen_range(0..n);
        let tag = format!("instance {idx} {params:?} s={s}");

        let bf = bellman_ford(&g, s)?;
        let brute = brute_force_solve(&g, s)?;
        let witness_ok = match &bf {
            SolveOutcome::NegativeCycle(w) => verify_negative_cycle_witness(&g, s, w)?,
            SolveOutcome::Distances(_) => true,
        };
        self.report
            .oracle_agreement
            .record(same_outcome(&bf, &brute) && witness_ok, || format!("{tag}: bf {bf:?} brute {brute:?}"));

        match &bf {
            SolveOutcome::Distances(cert) => {
                self.report.solvable_instances += 1;
                let fast = certify(&g, s, cert)?;
                let naive = check_constraints_naive(&g, s, cert)?;
                self.report.soundness.record(fast.is_accept() && naive.is_accept(), || {
                    format!("{tag}: certify {fast:?}, naive {naive:?}")
                });
                self.equivalence(&g, s, cert, &tag)?;

                for kind in mutation_kinds(rng) {
                    let Mutation::Applied { vertex, cert: bad } =
                        mutate_certificate(cert, s, kind, rng.gen())?
                    else {
                        continue;
                    };
                    let accepted = self.equivalence(&g, s, &bad, &tag)?;
                    self.report
                        .mutation_kill
                        .record(!accepted, || format!("{tag}: {kind:?} at {vertex} survived"));
                }
            }
            SolveOutcome::NegativeCycle(_) => {
                let labels = relaxation_labels(&g, s, n.saturating_sub(1))?;
                self.equivalence(&g, s, &Certificate::new(labels)?, &tag)?;
            }
        }

        for _ in 0..2 {
            let all_finite = rng.gen_bool(0.5);
            let cert = random_cert(rng, n, s, all_finite);
            self.equivalence(&g, s, &cert, &tag)?;
        }
        Ok(())
    }

    fn negative_cycle_instance(&mut self, idx: usize, cfg: &SweepConfig, rng: &mut impl Rng) -> Result<()> {
        let n = rng.gen_range(1..=cfg.max_n);
        let m = rng.gen_range(0..=cfg.max_m);
        let params = GenParams {
            n,
            m,
            wmin: cfg.wmin,
            wmax: cfg.wmax,
            mode: GenMode::NoNegativeCycle,
            seed: rng.gen(),
        };
        let base = gen_random_graph(&params)?;
        let k = rng.gen_range(1..=n);
        let g = inject_negative_cycle(&base, k, rng.gen())?;
        let s = 0;
        let tag = format!("negative-cycle instance {idx} {params:?} k={k}");

        let bf = bellman_ford(&g, s)?;
        let brute = brute_force_solve(&g, s)?;
        self.report
            .oracle_agreement
            .record(same_outcome(&bf, &brute), || format!("{tag}: bf {bf:?} brute {brute:?}"));

        let witness_ok = match &bf {
            SolveOutcome::NegativeCycle(w) => verify_negative_cycle_witness(&g, s, w)?,
            SolveOutcome::Distances(_) => false,
        };
        let mut candidates = vec![Certificate::new(relaxation_labels(&g, s, n.saturating_sub(1))?)?];
        for _ in 0..3 {
            candidates.push(random_cert(rng, n, s, true).with_label(s, Dist::ZERO)?);
        }
        let mut all_rejected = true;
        for cert in &candidates {
            all_rejected &= !self.equivalence(&g, s, cert, &tag)?;
        }
        self.report.negative_cycle.record(witness_ok && all_rejected, || {
            format!("{tag}: witness ok {witness_ok}, all candidates rejected {all_rejected}")
        });
        Ok(())
    }
}

/// Runs the sweep. Errors only on internal failures; check failures are tallied.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rng = rng_from_seed(cfg.seed);
    let mut sweep = Sweep { report: SweepReport::default() };
    for idx in 0..cfg.instances {
        sweep.instance(idx, cfg, &mut rng)?;
        sweep.report.instances += 1;
    }
    for idx in 0..cfg.negative_cycle_instances {
        sweep.negative_cycle_instance(idx, cfg, &mut rng)?;
        sweep.report.negative_cycle_instances += 1;
    }
    Ok(sweep.report)
}
