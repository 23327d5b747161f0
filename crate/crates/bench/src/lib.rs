//! Seeded fixtures shared by the benchmarks.

use tightbound_core::generate::Family;
use tightbound_core::{BitMatrix, ExactCnfFormula, Instance, Lin2System, WeightedDigraph};

pub fn oriented(n: usize, seed: u64) -> WeightedDigraph {
    let family = Family::RandomOriented {
        n,
        arcs: n * (n - 1) / 4,
        max_weight: 5,
    };
    match family.generate(seed).expect("valid parameters") {
        Instance::Digraph(g) => g,
        _ => unreachable!(),
    }
}

pub fn lin2(n: usize, m: usize, seed: u64) -> Lin2System {
    let family = Family::RandomLin2 {
        n,
        m,
        max_arity: n.min(4),
        max_weight: 5,
    };
    match family.generate(seed).expect("valid parameters") {
        Instance::Lin2(s) => s,
        _ => unreachable!(),
    }
}

pub fn complete_rcnf(r: usize, copies: usize) -> ExactCnfFormula {
    match (Family::DisjointCompleteRcnf { r, copies })
        .generate(0)
        .expect("valid parameters")
    {
        Instance::Cnf(f) => f,
        _ => unreachable!(),
    }
}

/// Coefficient matrix of a random `m × n` system.
pub fn matrix(m: usize, n: usize, seed: u64) -> BitMatrix {
    lin2(n, m, seed).coefficient_matrix()
}
