//! Wall-clock comparison of certificate verification against recomputation.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::certify::certify;
use crate::dist::Certificate;
use crate::graph::Graph;
use crate::error::{Error, Result};
use crate::generate::{gen_random_graph, GenMode, GenParams};
use crate::solve::{bellman_ford, SolveOutcome};

pub const MIN_REPETITIONS: usize = 5;

/// Column order of [`BenchReport::csv`].
pub const CSV_HEADER: &str = "n,m,certify_ns,bf_ns,speedup";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub certify_time: Duration,
    pub bellman_ford_time: Duration,
    pub speedup: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub repetitions: usize,
    pub seed: u64,
}

impl BenchReport {
    /// `CSV_HEADER` followed by one row per size.
    pub fn csv(&self) -> String {
        let mut out = format!("{CSV_HEADER}\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{:.3}",
                r.n,
                r.m,
                r.certify_time.as_nanos(),
                r.bellman_ford_time.as_nanos(),
                r.speedup
            )
            .unwrap();
        }
        out
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "{:>10} {:>10} {:>14} {:>14} {:>9}\n",
            "n", "m", "certify", "bellman-ford", "speedup"
        );
        for r in &self.rows {
            writeln!(
                out,
                "{:>10} {:>10} {:>14?} {:>14?} {:>8.1}x",
                r.n, r.m, r.certify_time, r.bellman_ford_time, r.speedup
            )
            .unwrap();
        }
        writeln!(
            out,
            "medians of {} repetitions, seed {}, single-threaded, std::time::Instant",
            self.repetitions, self.seed
        )
        .unwrap();
        out
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    let k = samples.len();
    if k % 2 == 1 {
        samples[k / 2]
    } else {
        (samples[k / 2 - 1] + samples[k / 2]) / 2
    }
}

fn time<T>(f: impl FnOnce() -> T) -> (Duration, T) {
    let start = Instant::now();
    let out = f();
    (start.elapsed(), out)
}

struct Instance {
    n: usize,
    m: usize,
    graph: Graph,
    cert: Certificate,
    certify_samples: Vec<Duration>,
    bf_samples: Vec<Duration>,
}

/// Times `certify` and `bellman_ford` on one no-negative-cycle instance per size.
///
/// Repetitions are interleaved across sizes, so slow drift in machine load
/// affects every size alike instead of skewing the ratios between them. Each
/// timed pair is preceded by an untimed `certify` on the same graph, so both
/// algorithms are measured warm.
pub fn run_scaling_bench(sizes: &[(usize, usize)], seed: u64, repetitions: usize) -> Result<BenchReport> {
    if repetitions < MIN_REPETITIONS {
        return Err(Error::InvalidParams(format!(
            "need at least {MIN_REPETITIONS} repetitions, got {repetitions}"
        )));
    }
    let mut instances = Vec::with_capacity(sizes.len());
    for (i, &(n, m)) in sizes.iter().enumerate() {
        let params = GenParams {
            n,
            m,
            wmin: -100,
            wmax: 100,
            mode: GenMode::NoNegativeCycle,
            seed: seed.wrapping_add(i as u64),
        };
        let graph = gen_random_graph(&params)?;
        let cert = match bellman_ford(&graph, 0)? {
            SolveOutcome::Distances(c) => c,
            SolveOutcome::NegativeCycle(_) => unreachable!("generator excludes negative cycles"),
        };
        // warm-up, and a sanity check that the prover output verifies
        assert!(certify(&graph, 0, &cert)?.is_accept(), "prover certificate must verify");
        instances.push(Instance {
            n,
            m,
            graph,
            cert,
            certify_samples: Vec::with_capacity(repetitions),
            bf_samples: Vec::with_capacity(repetitions),
        });
    }

    for _ in 0..repetitions {
        for inst in &mut instances {
            // untimed pass so both timed runs start with this graph in cache
            std::hint::black_box(certify(&inst.graph, 0, &inst.cert)?);
            let (t, r) = time(|| certify(&inst.graph, 0, &inst.cert));
            std::hint::black_box(r?);
            inst.certify_samples.push(t);
            let (t, r) = time(|| bellman_ford(&inst.graph, 0));
            std::hint::black_box(r?);
            inst.bf_samples.push(t);
        }
    }

    let rows = instances
        .into_iter()
        .map(|inst| {
            let certify_time = median(inst.certify_samples);
            let bellman_ford_time = median(inst.bf_samples);
            let speedup = bellman_ford_time.as_secs_f64() / certify_time.as_secs_f64().max(1e-9);
            BenchRow { n: inst.n, m: inst.m, certify_time, bellman_ford_time, speedup }
        })
        .collect();
    Ok(BenchReport { rows, repetitions, seed })
}
