//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use spcert::generate::rng_from_seed;
use spcert::selftest::{run_sweep, SweepConfig, SweepReport};
use spcert::{
    gen_random_graph, parse_cert, parse_gr, run_scaling_bench, write_cert, write_gr, Certificate,
    Dist, GenMode, GenParams, GraphDocument, MAX_LABEL,
};

const SWEEP_INSTANCES: usize = 1000;
const NEGATIVE_CYCLE_INSTANCES: usize = 200;
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
const MIN_MUTATIONS_PER_INSTANCE: f64 = 4.0;

const BENCH_N: usize = 10_000;
const BENCH_MS: [usize; 3] = [100_000, 200_000, 400_000];
const BENCH_REPETITIONS: usize = 15;
const RATIO_WINDOW: (f64, f64) = (1.3, 3.0);
const MIN_SPEEDUP: f64 = 5.0;
const BENCH_BUDGET: Duration = Duration::from_secs(120);

const ROUND_TRIP_DOCUMENTS: usize = 500;

struct Outcome {
    id: &'static str,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn sweep() -> (SweepReport, Duration) {
    let cfg = SweepConfig {
        instances: SWEEP_INSTANCES,
        negative_cycle_instances: NEGATIVE_CYCLE_INSTANCES,
        max_n: 8,
        max_m: 20,
        wmin: -8,
        wmax: 8,
        seed: 20_241_016,
    };
    let start = Instant::now();
    let report = run_sweep(&cfg).expect("sweep runs");
    (report, start.elapsed())
}

fn oracle_equivalence(r: &SweepReport, elapsed: Duration) -> Outcome {
    let passed = r.instances >= SWEEP_INSTANCES && r.oracle_agreement.passed() && elapsed < SWEEP_BUDGET;
    Outcome {
        id: "AC1",
        title: "Bellman-Ford matches brute force",
        passed,
        detail: format!("{} in {elapsed:.1?} over {} instances", r.oracle_agreement, r.instances),
    }
}

fn prover_soundness(r: &SweepReport) -> Outcome {
    Outcome {
        id: "AC2",
        title: "prover certificates accepted by both checkers",
        passed: r.soundness.passed() && r.soundness.checked == r.solvable_instances && r.solvable_instances > 0,
        detail: r.soundness.to_string(),
    }
}

fn mutation_kill(r: &SweepReport) -> Outcome {
    let per = r.mutations_per_solvable_instance();
    Outcome {
        id: "AC3",
        title: "every mutated certificate rejected",
        passed: r.mutation_kill.passed() && per >= MIN_MUTATIONS_PER_INSTANCE,
        detail: format!("{}, {per:.2} mutations per solvable instance", r.mutation_kill),
    }
}

fn negative_cycles(r: &SweepReport) -> Outcome {
    Outcome {
        id: "AC4",
        title: "negative-cycle witnesses valid, finite candidates rejected",
        passed: r.negative_cycle.passed() && r.negative_cycle.checked >= NEGATIVE_CYCLE_INSTANCES,
        detail: r.negative_cycle.to_string(),
    }
}

fn decision_equivalence(r: &SweepReport) -> Outcome {
    Outcome {
        id: "AC5",
        title: "certify and naive checker agree",
        passed: r.decision_equivalence.passed(),
        detail: r.decision_equivalence.to_string(),
    }
}

fn linear_time() -> Outcome {
    let sizes: Vec<_> = BENCH_MS.iter().map(|&m| (BENCH_N, m)).collect();
    let start = Instant::now();
    let report = run_scaling_bench(&sizes, 7, BENCH_REPETITIONS).expect("bench runs");
    let elapsed = start.elapsed();
    print!("{}", report.table());
    print!("{}", report.csv());

    let ratios: Vec<f64> = report
        .rows
        .windows(2)
        .map(|w| w[1].certify_time.as_secs_f64() / w[0].certify_time.as_secs_f64())
        .collect();
    let ratios_ok = ratios.iter().all(|r| (RATIO_WINDOW.0..=RATIO_WINDOW.1).contains(r));
    let speedup = report.rows.last().unwrap().speedup;
    Outcome {
        id: "AC6",
        title: "certify time scales linearly and beats Bellman-Ford",
        passed: ratios_ok && speedup >= MIN_SPEEDUP && elapsed < BENCH_BUDGET,
        detail: format!(
            "certify ratios {:?} (window {RATIO_WINDOW:?}), speedup {speedup:.1}x at m={} (min {MIN_SPEEDUP}x), {elapsed:.1?}",
            ratios.iter().map(|r| format!("{r:.2}")).collect::<Vec<_>>(),
            BENCH_MS[2],
        ),
    }
}

fn round_trip() -> Outcome {
    let mut rng = rng_from_seed(500);
    let mut failures = 0;
    for _ in 0..ROUND_TRIP_DOCUMENTS {
        let n = rng.gen_range(1..=40);
        let mode = if rng.gen_bool(0.5) { GenMode::Unrestricted } else { GenMode::NoNegativeCycle };
        let bound: i64 = if rng.gen_bool(0.2) { 1 << 31 } else { 1000 };
        let params = GenParams { n, m: rng.gen_range(0..=120), wmin: -bound, wmax: bound, mode, seed: rng.gen() };
        let graph = gen_random_graph(&params).unwrap();
        let source = rng.gen_bool(0.5).then(|| rng.gen_range(0..n));
        let doc = GraphDocument { graph, source };
        let text = write_gr(&doc);
        if parse_gr(&text).as_ref() != Ok(&doc) {
            failures += 1;
        }

        let labels = (0..n)
            .map(|_| match rng.gen_range(0..4) {
                0 => Dist::Infinity,
                1 => Dist::Finite(rng.gen_range(-MAX_LABEL..=MAX_LABEL)),
                _ => Dist::Finite(rng.gen_range(-100..=100)),
            })
            .collect();
        let cert = Certificate::new(labels).unwrap();
        if parse_cert(&write_cert(&cert), n).as_ref() != Ok(&cert) {
            failures += 1;
        }
    }
    Outcome {
        id: "AC7",
        title: "graph and certificate formats round-trip",
        passed: failures == 0,
        detail: format!("{ROUND_TRIP_DOCUMENTS} documents per format, {failures} failures"),
    }
}

fn main() -> ExitCode {
    let (report, elapsed) = sweep();
    let outcomes = [
        oracle_equivalence(&report, elapsed),
        prover_soundness(&report),
        mutation_kill(&report),
        negative_cycles(&report),
        decision_equivalence(&report),
        linear_time(),
        round_trip(),
    ];

    let mut all = true;
    for o in &outcomes {
        all &= o.passed;
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {} {}: {}", o.id, o.title, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
