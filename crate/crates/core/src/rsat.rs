//! Max Exact r-SAT above the `(1 − 2^{-r})m` bound, for formulas whose
//! conflict number is at most `(2^r − 2)m`.
//!
//! Every clause contributes `+1` when satisfied and `1 − 2^r` otherwise, so
//! the sum is `2^r·X = 2^r·(satisfied) − (2^r − 1)·m`, an integer.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::maxlin::best_over_range;
use crate::outcome::{
    DecisionOutcome, KernelInstance, SolveConfig, ThresholdCheck, Verdict, Witness,
};

const MAX_WIDTH: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: usize, positive: bool) -> Self {
        Self { var, positive }
    }

    /// From a DIMACS-style signed, 1-based integer.
    pub fn from_dimacs(lit: i64) -> Option<Self> {
        (lit != 0).then(|| Self::new(lit.unsigned_abs() as usize - 1, lit > 0))
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn negated(self) -> Self {
        Self::new(self.var, !self.positive)
    }

    pub fn is_true(self, x: &[bool]) -> bool {
        x[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "¬x{}", self.var + 1)
        }
    }
}

/// Clause with literals sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause(Vec<Literal>);

impl Clause {
    pub fn new(mut lits: Vec<Literal>) -> Result<Self> {
        lits.sort_unstable();
        for w in lits.windows(2) {
            if w[0].var == w[1].var {
                let what = if w[0].positive == w[1].positive {
                    "repeated literal"
                } else {
                    "complementary literals"
                };
                return Err(Error::InvalidInstance(format!(
                    "{what} on variable x{} in one clause",
                    w[0].var + 1
                )));
            }
        }
        Ok(Self(lits))
    }

    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn is_satisfied(&self, x: &[bool]) -> bool {
        self.0.iter().any(|l| l.is_true(x))
    }
}

/// A multiset of clauses, each with exactly `r` literals over distinct
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCnfFormula {
    n: usize,
    r: usize,
    clauses: Vec<Clause>,
}

impl ExactCnfFormula {
    pub fn new(n: usize, r: usize, clauses: Vec<Clause>) -> Result<Self> {
        if !(2..=MAX_WIDTH).contains(&r) {
            return Err(Error::InvalidInstance(format!(
                "clause width {r} outside 2..={MAX_WIDTH}"
            )));
        }
        for (j, c) in clauses.iter().enumerate() {
            if c.width() != r {
                return Err(Error::InvalidInstance(format!(
                    "clause {j} has {} literals, expected {r}",
                    c.width()
                )));
            }
            if let Some(l) = c.literals().iter().find(|l| l.var >= n) {
                return Err(Error::InvalidInstance(format!(
                    "clause {j} uses x{} beyond {n} variables",
                    l.var + 1
                )));
            }
        }
        Ok(Self { n, r, clauses })
    }

    /// Builds from DIMACS-style signed literals.
    pub fn from_dimacs(n: usize, r: usize, clauses: &[Vec<i64>]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| {
                let lits = c
                    .iter()
                    .map(|&l| {
                        Literal::from_dimacs(l).ok_or_else(|| {
                            Error::InvalidInstance("literal 0 inside a clause".into())
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Clause::new(lits)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, r, clauses)
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.r
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn occurring_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for c in &self.clauses {
            for l in c.literals() {
                seen[l.var] = true;
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    pub fn satisfied_count(&self, x: &[bool]) -> usize {
        self.clauses.iter().filter(|c| c.is_satisfied(x)).count()
    }

    /// `2^r`.
    pub fn scale(&self) -> i64 {
        1i64 << self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRelation {
    /// Some literal of one clause appears negated in the other.
    Conflict,
    /// No conflict and `t ≥ 1` shared literals.
    Overlap(usize),
    /// No shared variable.
    Disjoint,
}

pub fn pair_relation(y: &Clause, z: &Clause) -> PairRelation {
    let mut shared = 0;
    for a in y.literals() {
        for b in z.literals() {
            if a.var == b.var {
                if a.positive != b.positive {
                    return PairRelation::Conflict;
                }
                shared += 1;
            }
        }
    }
    if shared > 0 {
        PairRelation::Overlap(shared)
    } else {
        PairRelation::Disjoint
    }
}

/// `4^r·E(X_Y·X_Z)` for two distinct clauses of width `r` in the given
/// relation: 0 when disjoint, −1 on a conflict, `2^t − 1` for an overlap of
/// `t` literals.
pub fn pairwise_term_scaled(relation: PairRelation) -> i64 {
    match relation {
        PairRelation::Disjoint => 0,
        PairRelation::Conflict => -1,
        PairRelation::Overlap(t) => (1i64 << t) - 1,
    }
}

/// Counts over ordered pairs of distinct clause indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConflictStats {
    pub conflicts: u64,
    pub overlaps: u64,
    pub conflict_number: i64,
}

pub fn conflict_number(f: &ExactCnfFormula) -> ConflictStats {
    let (mut conflicts, mut overlaps) = (0u64, 0u64);
    for (i, y) in f.clauses.iter().enumerate() {
        for z in &f.clauses[i + 1..] {
            match pair_relation(y, z) {
                PairRelation::Conflict => conflicts += 2,
                PairRelation::Overlap(_) => overlaps += 2,
                PairRelation::Disjoint => {}
            }
        }
    }
    ConflictStats {
        conflicts,
        overlaps,
        conflict_number: conflicts as i64 - overlaps as i64,
    }
}

/// `(2^r − 2)·m`, the largest conflict number the bound covers.
pub fn conflict_bound(f: &ExactCnfFormula) -> i64 {
    (f.scale() - 2) * f.clauses.len() as i64
}

/// `2^r·X` at assignment `x`.
pub fn x_value_scaled(f: &ExactCnfFormula, x: &[bool]) -> i64 {
    assert_eq!(
        x.len(),
        f.n,
        "assignment length differs from variable count"
    );
    let m = f.clauses.len() as i64;
    f.scale() * f.satisfied_count(x) as i64 - (f.scale() - 1) * m
}

/// The parameter `k = k_num / 2^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalParameterK {
    k_num: u64,
}

impl RationalParameterK {
    pub fn new(k_num: u64) -> Result<Self> {
        if k_num == 0 {
            return Err(Error::InvalidParameter(
                "k numerator must be positive".into(),
            ));
        }
        Ok(Self { k_num })
    }

    pub fn numerator(self) -> u64 {
        self.k_num
    }
}

/// `16·64^r·k_num²`: the integer form of `√m / (2^r·4·8^r) ≥ k_num / 2^r`.
pub fn rsat_threshold(r: usize, k: RationalParameterK) -> BigUint {
    let kn = BigUint::from(k.k_num);
    BigUint::from(16u32) * BigUint::from(64u32).pow(r as u32) * &kn * &kn
}

/// `m ≥ 16·64^r·k_num²`.
pub fn rsat_bound_check(m: usize, r: usize, k: RationalParameterK) -> ThresholdCheck {
    ThresholdCheck::new("m>=16*64^r*k_num^2", m, rsat_threshold(r, k))
}

/// Decides whether some assignment satisfies at least `(1 − 2^{-r})m + k`
/// clauses.
///
/// Formulas with conflict number above `(2^r − 2)m` are refused; see
/// [`diagnose_rsatalb`] for an exact answer on those.
pub fn decide_rsatalb(
    f: &ExactCnfFormula,
    k: RationalParameterK,
    cfg: &SolveConfig,
) -> Result<DecisionOutcome> {
    let stats = conflict_number(f);
    let allowed = conflict_bound(f);
    if stats.conflict_number > allowed {
        return Err(Error::Refused(format!(
            "conflict number {} exceeds (2^r-2)m = {allowed}",
            stats.conflict_number
        )));
    }
    let bound = rsat_bound_check(f.clauses.len(), f.r, k);
    if bound.holds() {
        let mut out = DecisionOutcome::new(Verdict::YesByBound);
        out.thresholds.push(bound);
        return Ok(out);
    }
    let mut out = solve_against(f, k, cfg)?;
    out.thresholds.push(bound);
    out.notes.push(format!(
        "conflict number {} <= {allowed}",
        stats.conflict_number
    ));
    Ok(out)
}

/// Exact answer without the moment bound, for formulas outside the
/// restricted family. The outcome is never YES_BY_BOUND.
pub fn diagnose_rsatalb(
    f: &ExactCnfFormula,
    k: RationalParameterK,
    cfg: &SolveConfig,
) -> Result<DecisionOutcome> {
    let mut out = solve_against(f, k, cfg)?;
    out.notes
        .push("diagnostic exact solve; no bound applied".into());
    Ok(out)
}

fn solve_against(
    f: &ExactCnfFormula,
    k: RationalParameterK,
    cfg: &SolveConfig,
) -> Result<DecisionOutcome> {
    match solve_exact(f, cfg) {
        Ok((best, x)) => {
            let mut out = if best >= k.k_num as i64 {
                let mut out = DecisionOutcome::new(Verdict::YesWitness);
                out.witness = Some(Witness::Assignment(x));
                out
            } else {
                DecisionOutcome::new(Verdict::No)
            };
            out.best_value = Some(best);
            Ok(out)
        }
        Err(Error::CapExceeded { size, cap, .. }) => {
            let mut out = DecisionOutcome::new(Verdict::Kernel);
            out.notes
                .push(format!("kernel has {size} variables, cap is {cap}"));
            out.kernel = Some(KernelInstance::Cnf(f.clone()));
            Ok(out)
        }
        Err(e) => Err(e),
    }
}

/// Maximum of `2^r·X` over all assignments of the occurring variables (the
/// others are set to false), with the lowest-numbered maximizer.
pub fn solve_exact(f: &ExactCnfFormula, cfg: &SolveConfig) -> Result<(i64, Vec<bool>)> {
    let vars = f.occurring_vars();
    let t = vars.len();
    if t > cfg.cap || t >= 63 {
        return Err(Error::CapExceeded {
            what: "variable",
            size: t,
            cap: cfg.cap,
        });
    }
    let mut local = vec![usize::MAX; f.n];
    for (bit, &v) in vars.iter().enumerate() {
        local[v] = bit;
    }
    // (positive mask, negative mask)
    let masks: Vec<(u64, u64)> = f
        .clauses
        .iter()
        .map(|c| {
            c.literals().iter().fold((0, 0), |(p, n), l| {
                let bit = 1u64 << local[l.var];
                if l.positive {
                    (p | bit, n)
                } else {
                    (p, n | bit)
                }
            })
        })
        .collect();
    let scale = f.scale();
    let m = f.clauses.len() as i64;
    let value = |x: u64| -> i64 {
        let sat = masks
            .iter()
            .filter(|&&(p, n)| x & p != 0 || !x & n != 0)
            .count() as i64;
        scale * sat - (scale - 1) * m
    };
    let (best, arg) = cfg.install(|| best_over_range(1u64 << t, value));
    let mut x = vec![false; f.n];
    for (bit, &v) in vars.iter().enumerate() {
        x[v] = arg >> bit & 1 == 1;
    }
    Ok((best, x))
}
