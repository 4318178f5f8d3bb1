//! Linear-time verification of single-source shortest-path distances on
//! directed graphs with positive, zero and negative arc weights.
//!
//! A prover (here [`bellman_ford`]) emits claimed distance labels; [`certify`]
//! checks them in O(n + m) without recomputing anything. A certificate is
//! accepted exactly when it equals the true distance vector, so a graph with a
//! negative cycle reachable from the source has no accepted certificate.
//!
//! ```
//! use spcert::{bellman_ford, certify, Graph, SolveOutcome};
//!
//! let g = Graph::new(4, [(0, 1, 5), (0, 2, 2), (2, 1, -4), (1, 3, 1), (2, 3, 10)]).unwrap();
//! let SolveOutcome::Distances(cert) = bellman_ford(&g, 0).unwrap() else { unreachable!() };
//! assert!(certify(&g, 0, &cert).unwrap().is_accept());
//! ```

pub mod certify;
pub mod dist;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod scaling;
pub mod selftest;
pub mod solve;

pub use certify::{
    certify, certify_with_stats, check_constraints_naive, tight_arcs, verify_negative_cycle_witness,
    CycleWitness, Rejection, TraversalStats, VerifyResult,
};
pub use dist::{Certificate, Dist, MAX_LABEL};
pub use error::{Error, Result};
pub use format::{parse_cert, parse_cert_any, parse_gr, write_cert, write_gr, GraphDocument, ParseError};
pub use generate::{
    gen_random_graph, inject_negative_cycle, mutate_certificate, GenMode, GenParams, Mutation,
    MutationKind,
};
pub use graph::{Arc, ArcId, Graph, VertexId, MAX_WEIGHT};
pub use scaling::{run_scaling_bench, BenchReport, BenchRow};
pub use solve::{bellman_ford, brute_force_solve, relaxation_labels, simple_cycles, SolveOutcome};
