//! Seeded instance generators: the tight families plus random instances for
//! tests and benchmarks. Identical parameters and seed give identical output.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::format::Instance;
use crate::linord::WeightedDigraph;
use crate::maxlin::Lin2System;
use crate::rsat::{Clause, ExactCnfFormula, Literal};

/// Upper limit on vertex and variable counts accepted by the generators.
pub const MAX_GEN_SIZE: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Random undirected graph with every edge replaced by two opposite arcs
    /// of equal weight. Every order has `X = 0`.
    SymmetricDigraph { n: usize },
    RandomOriented {
        n: usize,
        arcs: usize,
        max_weight: u64,
    },
    /// Pairs `Σ_{i∈I} z_i = 1`, `Σ_{i∈I} z_i = 0` of equal weight over
    /// distinct sets `I`. Every assignment has `X = 0`.
    CancellingPairsLin2 { n: usize, pairs: usize },
    RandomLin2 {
        n: usize,
        m: usize,
        max_arity: usize,
        max_weight: u64,
    },
    /// All `2^r` clauses over `r` variables; exactly `2^r − 1` are satisfied
    /// by every assignment.
    CompleteRcnf { r: usize },
    /// `copies` complete formulas on disjoint variable blocks.
    DisjointCompleteRcnf { r: usize, copies: usize },
    /// All nonempty subsets of `n` variables with right-hand side 1.
    Remark2 { n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::SymmetricDigraph { .. } => "symmetric-digraph",
            Family::RandomOriented { .. } => "random-oriented",
            Family::CancellingPairsLin2 { .. } => "cancelling-pairs-lin2",
            Family::RandomLin2 { .. } => "random-lin2",
            Family::CompleteRcnf { .. } => "complete-rcnf",
            Family::DisjointCompleteRcnf { .. } => "disjoint-complete-rcnf",
            Family::Remark2 { .. } => "remark2",
        }
    }

    /// Families whose guaranteed value is attained exactly, so every positive
    /// parameter decides NO.
    pub fn is_tight(&self) -> bool {
        matches!(
            self,
            Family::SymmetricDigraph { .. }
                | Family::CancellingPairsLin2 { .. }
                | Family::CompleteRcnf { .. }
                | Family::DisjointCompleteRcnf { .. }
        )
    }

    pub fn generate(&self, seed: u64) -> Result<Instance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(match *self {
            Family::SymmetricDigraph { n } => Instance::Digraph(symmetric_digraph(n, &mut rng)?),
            Family::RandomOriented {
                n,
                arcs,
                max_weight,
            } => Instance::Digraph(random_oriented(n, arcs, max_weight, &mut rng)?),
            Family::CancellingPairsLin2 { n, pairs } => {
                Instance::Lin2(cancelling_pairs_lin2(n, pairs, &mut rng)?)
            }
            Family::RandomLin2 {
                n,
                m,
                max_arity,
                max_weight,
            } => Instance::Lin2(random_lin2(n, m, max_arity, max_weight, &mut rng)?),
            Family::CompleteRcnf { r } => Instance::Cnf(disjoint_complete_rcnf(r, 1)?),
            Family::DisjointCompleteRcnf { r, copies } => {
                Instance::Cnf(disjoint_complete_rcnf(r, copies)?)
            }
            Family::Remark2 { n } => Instance::Lin2(crate::moments::gen_remark2(n)?),
        })
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn check_size(what: &str, n: usize) -> Result<()> {
    if n > MAX_GEN_SIZE {
        return Err(bad(format!("{what} {n} exceeds {MAX_GEN_SIZE}")));
    }
    Ok(())
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn symmetric_digraph(n: usize, rng: &mut impl Rng) -> Result<WeightedDigraph> {
    check_size("vertex count", n)?;
    let mut arcs = Vec::new();
    for (u, v) in all_pairs(n) {
        if rng.gen_bool(0.5) {
            let w = rng.gen_range(1..=3);
            arcs.push((u, v, w));
            arcs.push((v, u, w));
        }
    }
    WeightedDigraph::new(n, arcs)
}

/// `arcs` distinct vertex pairs, each oriented at random, weights uniform
/// in `1..=max_weight`.
pub fn random_oriented(
    n: usize,
    arcs: usize,
    max_weight: u64,
    rng: &mut impl Rng,
) -> Result<WeightedDigraph> {
    check_size("vertex count", n)?;
    let pairs = all_pairs(n);
    if arcs > pairs.len() || max_weight == 0 {
        return Err(bad(format!(
            "need arcs <= {} and max_weight >= 1",
            pairs.len()
        )));
    }
    let chosen = index::sample(rng, pairs.len(), arcs).into_vec();
    let mut list = Vec::with_capacity(arcs);
    for i in chosen {
        let (u, v) = pairs[i];
        let w = rng.gen_range(1..=max_weight);
        list.push(if rng.gen_bool(0.5) {
            (u, v, w)
        } else {
            (v, u, w)
        });
    }
    WeightedDigraph::new(n, list)
}

/// Arbitrary digraph, possibly with 2-cycles, each ordered pair present with
/// probability `density`.
pub fn random_digraph(
    n: usize,
    density: f64,
    max_weight: u64,
    rng: &mut impl Rng,
) -> Result<WeightedDigraph> {
    check_size("vertex count", n)?;
    if !(0.0..=1.0).contains(&density) || max_weight == 0 {
        return Err(bad("density must lie in [0, 1] and max_weight >= 1"));
    }
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                arcs.push((u, v, rng.gen_range(1..=max_weight)));
            }
        }
    }
    WeightedDigraph::new(n, arcs)
}

fn random_subset(n: usize, size: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut vars = index::sample(rng, n, size).into_vec();
    vars.sort_unstable();
    vars
}

pub fn cancelling_pairs_lin2(n: usize, pairs: usize, rng: &mut impl Rng) -> Result<Lin2System> {
    if n == 0 || n >= 63 {
        return Err(bad("n must lie in 1..=62"));
    }
    if pairs as u64 > (1u64 << n) - 1 {
        return Err(bad(format!("at most 2^{n} - 1 distinct sets exist")));
    }
    let mut seen = std::collections::HashSet::new();
    let mut triples = Vec::with_capacity(2 * pairs);
    while seen.len() < pairs {
        let mask = rng.gen_range(1..1u64 << n);
        if seen.insert(mask) {
            let vars: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let w = rng.gen_range(1..=3);
            triples.push((vars.clone(), true, w));
            triples.push((vars, false, w));
        }
    }
    Lin2System::from_triples(n, triples)
}

/// `m` equations with arity uniform in `1..=max_arity`, random right-hand
/// sides and weights in `1..=max_weight`. Duplicates are allowed.
pub fn random_lin2(
    n: usize,
    m: usize,
    max_arity: usize,
    max_weight: u64,
    rng: &mut impl Rng,
) -> Result<Lin2System> {
    check_size("variable count", n)?;
    if max_arity == 0 || max_arity > n || max_weight == 0 {
        return Err(bad("need 1 <= max_arity <= n and max_weight >= 1"));
    }
    let triples: Vec<_> = (0..m)
        .map(|_| {
            let t = rng.gen_range(1..=max_arity);
            (
                random_subset(n, t, rng),
                rng.gen(),
                rng.gen_range(1..=max_weight),
            )
        })
        .collect();
    Lin2System::from_triples(n, triples)
}

/// Like [`random_lin2`] but no variable occurs in more than `rho`
/// equations; equations that cannot be placed are skipped, so the result
/// may have fewer than `m` equations.
pub fn random_lin2_bounded_occurrence(
    n: usize,
    m: usize,
    rho: usize,
    max_arity: usize,
    max_weight: u64,
    rng: &mut impl Rng,
) -> Result<Lin2System> {
    check_size("variable count", n)?;
    if rho == 0 || max_arity == 0 || max_weight == 0 {
        return Err(bad("rho, max_arity and max_weight must be positive"));
    }
    let mut load = vec![0usize; n];
    let mut triples = Vec::new();
    for _ in 0..m {
        let mut free: Vec<usize> = (0..n).filter(|&v| load[v] < rho).collect();
        if free.is_empty() {
            break;
        }
        free.shuffle(rng);
        let t = rng.gen_range(1..=max_arity.min(free.len()));
        let mut vars = free[..t].to_vec();
        vars.sort_unstable();
        for &v in &vars {
            load[v] += 1;
        }
        triples.push((vars, rng.gen(), rng.gen_range(1..=max_weight)));
    }
    Lin2System::from_triples(n, triples)
}

/// `m` random clauses of width exactly `r` over `n` variables.
pub fn random_rcnf(n: usize, m: usize, r: usize, rng: &mut impl Rng) -> Result<ExactCnfFormula> {
    check_size("variable count", n)?;
    if r > n {
        return Err(bad(format!("clause width {r} exceeds variable count {n}")));
    }
    let clauses = (0..m)
        .map(|_| {
            let lits = random_subset(n, r, rng)
                .into_iter()
                .map(|v| Literal::new(v, rng.gen()))
                .collect();
            Clause::new(lits)
        })
        .collect::<Result<Vec<_>>>()?;
    ExactCnfFormula::new(n, r, clauses)
}

pub fn disjoint_complete_rcnf(r: usize, copies: usize) -> Result<ExactCnfFormula> {
    if !(2..=16).contains(&r) || copies == 0 {
        return Err(bad("need 2 <= r <= 16 and copies >= 1"));
    }
    check_size("variable count", r * copies)?;
    let mut clauses = Vec::with_capacity(copies << r);
    for c in 0..copies {
        for signs in 0u32..1 << r {
            let lits = (0..r)
                .map(|i| Literal::new(c * r + i, signs >> i & 1 == 0))
                .collect();
            clauses.push(Clause::new(lits)?);
        }
    }
    ExactCnfFormula::new(r * copies, r, clauses)
}
