//! Verdicts and diagnostics shared by the three deciders.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::linord::{LinearOrder, WeightedDigraph};
use crate::maxlin::Lin2System;
use crate::rsat::ExactCnfFormula;

/// Default cap on the number of vertices or variables an exact solver will
/// enumerate over.
pub const DEFAULT_EXACT_CAP: usize = 24;

/// Limits and parallelism for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    pub cap: usize,
    /// Worker threads for enumeration; `0` uses the global rayon pool.
    pub workers: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_EXACT_CAP,
            workers: 0,
        }
    }
}

impl SolveConfig {
    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap,
            ..Self::default()
        }
    }

    /// Runs `op` on a pool with the configured number of workers.
    pub(crate) fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        if self.workers == 0 {
            return op();
        }
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
        {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// The instance is large enough that the moment bound alone proves YES.
    YesByBound,
    /// An exact search on the kernel found a solution meeting the target.
    YesWitness,
    /// Exhaustive search on the kernel proved no solution meets the target.
    No,
    /// The kernel is larger than the exact-solve cap; the reduced instance
    /// is returned instead of an answer.
    Kernel,
}

impl Verdict {
    pub fn is_yes(self) -> bool {
        matches!(self, Verdict::YesByBound | Verdict::YesWitness)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::YesByBound => "YES_BY_BOUND",
            Verdict::YesWitness => "YES_WITNESS",
            Verdict::No => "NO",
            Verdict::Kernel => "KERNEL",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One integer comparison `lhs >= rhs` made while deciding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdCheck {
    pub name: &'static str,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl ThresholdCheck {
    pub fn new(name: &'static str, lhs: impl Into<BigUint>, rhs: impl Into<BigUint>) -> Self {
        Self {
            name,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Order(LinearOrder),
    Assignment(Vec<bool>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelInstance {
    Digraph(WeightedDigraph),
    Lin2(Lin2System),
    Cnf(ExactCnfFormula),
}

impl KernelInstance {
    /// `(name, value)` size figures for reporting.
    pub fn size_stats(&self) -> Vec<(&'static str, usize)> {
        match self {
            KernelInstance::Digraph(g) => vec![
                ("n", g.vertex_count()),
                ("arcs", g.arc_count()),
                ("active_vertices", g.active_vertices().len()),
            ],
            KernelInstance::Lin2(s) => vec![
                ("n", s.var_count()),
                ("m", s.equations().len()),
                ("occurring_vars", s.occurring_vars().len()),
            ],
            KernelInstance::Cnf(f) => vec![
                ("n", f.var_count()),
                ("m", f.clauses().len()),
                ("occurring_vars", f.occurring_vars().len()),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionOutcome {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub kernel: Option<KernelInstance>,
    pub thresholds: Vec<ThresholdCheck>,
    /// Objective value reached by the exact search, at the problem's scale
    /// (2X, X or 2^r X), when a search was run.
    pub best_value: Option<i64>,
    pub notes: Vec<String>,
}

impl DecisionOutcome {
    pub(crate) fn new(verdict: Verdict) -> Self {
        Self {
            verdict,
            witness: None,
            kernel: None,
            thresholds: Vec::new(),
            best_value: None,
            notes: Vec::new(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict.is_yes()
    }
}
