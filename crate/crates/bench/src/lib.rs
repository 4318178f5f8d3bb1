//! Instances shared by the criterion benches.

use spcert::{bellman_ford, gen_random_graph, Certificate, GenMode, GenParams, Graph, SolveOutcome};

/// Edge counts benched at `n = 10_000`.
pub const SIZES: [(usize, usize); 3] = [(10_000, 100_000), (10_000, 200_000), (10_000, 400_000)];

/// A graph with no negative cycle and its true distances from vertex 0.
pub fn solvable_instance(n: usize, m: usize, seed: u64) -> (Graph, Certificate) {
    let params = GenParams { n, m, wmin: -100, wmax: 100, mode: GenMode::NoNegativeCycle, seed };
    let graph = gen_random_graph(&params).expect("valid parameters");
    match bellman_ford(&graph, 0).expect("source in range") {
        SolveOutcome::Distances(cert) => (graph, cert),
        SolveOutcome::NegativeCycle(_) => unreachable!("generator excludes negative cycles"),
    }
}
