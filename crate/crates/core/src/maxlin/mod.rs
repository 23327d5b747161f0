//! Weighted Max Lin-2 above the `W/2` bound.
//!
//! `X` is the satisfied weight minus the unsatisfied weight; an assignment
//! reaches `W/2 + k` exactly when `X ≥ 2k`.

mod decide;
mod reduce;

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVec};
use crate::outcome::SolveConfig;

pub use decide::{
    arity_threshold, auto_case, check_case, decide_linalb, linalb_bound_check,
    occurrence_threshold, odd_set_threshold, solve_linalb_faithful, CaseTag,
};
pub use reduce::{
    lift_assignment, occurrence_reduce, occurrence_reduce_with_threshold, rank_reduce,
    OccurrenceReduction, RankReduction, RemovedBatch,
};

/// `Σ_{i ∈ vars} z_i = rhs` with a positive weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    vars: Vec<usize>,
    rhs: bool,
    weight: u64,
}

impl Equation {
    /// Variables are sorted; a repeated variable or an empty set is rejected.
    pub fn new(mut vars: Vec<usize>, rhs: bool, weight: u64) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidInstance("equation without variables".into()));
        }
        if weight == 0 {
            return Err(Error::InvalidInstance("equation with zero weight".into()));
        }
        vars.sort_unstable();
        if vars.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance(format!(
                "variable {} repeated in one equation",
                vars.windows(2).find(|w| w[0] == w[1]).unwrap()[0]
            )));
        }
        Ok(Self { vars, rhs, weight })
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn rhs(&self) -> bool {
        self.rhs
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn is_satisfied(&self, z: &[bool]) -> bool {
        self.vars.iter().fold(false, |acc, &i| acc ^ z[i]) == self.rhs
    }

    /// `+w` when satisfied by `z`, `−w` otherwise.
    pub fn signed_value(&self, z: &[bool]) -> i64 {
        if self.is_satisfied(z) {
            self.weight as i64
        } else {
            -(self.weight as i64)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lin2System {
    n: usize,
    equations: Vec<Equation>,
    total_weight: u64,
}

impl Lin2System {
    pub fn new(n: usize, equations: Vec<Equation>) -> Result<Self> {
        if let Some(e) = equations.iter().find(|e| e.vars.iter().any(|&i| i >= n)) {
            return Err(Error::InvalidInstance(format!(
                "equation over {:?} references a variable outside 0..{n}",
                e.vars
            )));
        }
        let total_weight = equations
            .iter()
            .try_fold(0u64, |acc, e| acc.checked_add(e.weight))
            .filter(|&w| w <= (i64::MAX / 2) as u64)
            .ok_or(Error::Overflow("total weight"))?;
        Ok(Self {
            n,
            equations,
            total_weight,
        })
    }

    /// Convenience constructor from `(vars, rhs, weight)` triples.
    pub fn from_triples(
        n: usize,
        triples: impl IntoIterator<Item = (Vec<usize>, bool, u64)>,
    ) -> Result<Self> {
        let equations = triples
            .into_iter()
            .map(|(vars, rhs, w)| Equation::new(vars, rhs, w))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, equations)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            equations: Vec::new(),
            total_weight: 0,
        }
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    /// Number of equations each variable appears in.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.n];
        for e in &self.equations {
            for &i in &e.vars {
                occ[i] += 1;
            }
        }
        occ
    }

    /// Variables appearing in at least one equation, in increasing order.
    pub fn occurring_vars(&self) -> Vec<usize> {
        let occ = self.occurrences();
        (0..self.n).filter(|&i| occ[i] > 0).collect()
    }

    /// Row `j` is the indicator vector of equation `j`'s variables.
    pub fn coefficient_matrix(&self) -> BitMatrix {
        let rows: Vec<BitVec> = self
            .equations
            .iter()
            .map(|e| BitVec::from_indices(self.n, e.vars.iter().copied()))
            .collect();
        BitMatrix::from_rows(self.n, &rows).expect("rows sized to variable count")
    }

    /// True when no two equations share the same variable set.
    pub fn is_merge_normalized(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.equations.iter().all(|e| seen.insert(&e.vars))
    }

    /// Indices of the equations `z` satisfies.
    pub fn satisfied_set(&self, z: &[bool]) -> Vec<usize> {
        (0..self.equations.len())
            .filter(|&j| self.equations[j].is_satisfied(z))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SystemStats {
    pub m: usize,
    pub total_weight: u64,
    /// Largest equation size, `r(S)`.
    pub max_arity: usize,
    /// Largest number of equations sharing one variable, `ρ`.
    pub max_occurrence: usize,
}

pub fn system_stats(s: &Lin2System) -> SystemStats {
    SystemStats {
        m: s.equations.len(),
        total_weight: s.total_weight,
        max_arity: s.equations.iter().map(|e| e.vars.len()).max().unwrap_or(0),
        max_occurrence: s.occurrences().into_iter().max().unwrap_or(0),
    }
}

/// `X = (satisfied weight) − (unsatisfied weight)`.
pub fn evaluate_x(s: &Lin2System, z: &[bool]) -> i64 {
    assert_eq!(
        z.len(),
        s.n,
        "assignment length differs from variable count"
    );
    s.equations.iter().map(|e| e.signed_value(z)).sum()
}

/// Rule 4: merges equations over the same variable set. Equal right sides
/// add their weights; opposite right sides keep the heavier side with the
/// weight difference, and an exact cancellation drops the equation. The
/// surviving equations keep the order of their first occurrence.
pub fn merge_duplicates(s: &Lin2System) -> Lin2System {
    // signed weight: positive for rhs 0, negative for rhs 1
    let mut slot: HashMap<&[usize], usize> = HashMap::new();
    let mut merged: Vec<(&[usize], i128)> = Vec::new();
    for e in &s.equations {
        let signed = if e.rhs {
            -i128::from(e.weight)
        } else {
            i128::from(e.weight)
        };
        match slot.get(e.vars.as_slice()) {
            Some(&i) => merged[i].1 += signed,
            None => {
                slot.insert(&e.vars, merged.len());
                merged.push((&e.vars, signed));
            }
        }
    }
    let equations = merged
        .into_iter()
        .filter(|&(_, signed)| signed != 0)
        .map(|(vars, signed)| Equation {
            vars: vars.to_vec(),
            rhs: signed < 0,
            weight: signed.unsigned_abs() as u64,
        })
        .collect();
    Lin2System::new(s.n, equations).expect("merging never increases the total weight")
}

/// A set `U` of variables meeting every equation in an odd number of
/// variables, found by solving the system with every right side set to 1.
pub fn find_odd_set(s: &Lin2System) -> Option<Vec<usize>> {
    let rhs = BitVec::from_bools(&vec![true; s.equations.len()]);
    gf2::solve_affine(&s.coefficient_matrix(), &rhs)
        .expect("right side sized to the equation count")
        .map(|z| z.iter_ones().collect())
}

/// Maximum of `X` over all assignments, with the lowest-numbered assignment
/// attaining it. Only variables that occur in some equation are enumerated;
/// the rest are set to 0.
pub fn solve_exact(s: &Lin2System, cfg: &SolveConfig) -> Result<(i64, Vec<bool>)> {
    let vars = s.occurring_vars();
    let t = vars.len();
    if t > cfg.cap || t >= 63 {
        return Err(Error::CapExceeded {
            what: "variable",
            size: t,
            cap: cfg.cap,
        });
    }
    let mut local = vec![usize::MAX; s.n];
    for (bit, &v) in vars.iter().enumerate() {
        local[v] = bit;
    }
    let rows: Vec<(u64, bool, i64)> = s
        .equations
        .iter()
        .map(|e| {
            let mask = e.vars.iter().fold(0u64, |m, &v| m | 1 << local[v]);
            (mask, e.rhs, e.weight as i64)
        })
        .collect();
    let value = |z: u64| -> i64 {
        rows.iter()
            .map(|&(mask, rhs, w)| {
                if ((z & mask).count_ones() & 1 == 1) == rhs {
                    w
                } else {
                    -w
                }
            })
            .sum()
    };
    let (best, arg) = cfg.install(|| best_over_range(1u64 << t, value));
    let mut z = vec![false; s.n];
    for (bit, &v) in vars.iter().enumerate() {
        z[v] = arg >> bit & 1 == 1;
    }
    Ok((best, z))
}

/// Maximizes `value` over `0..size`, returning the smallest maximizer.
/// The range is split into fixed blocks so the result does not depend on
/// the number of workers.
pub(crate) fn best_over_range(size: u64, value: impl Fn(u64) -> i64 + Sync) -> (i64, u64) {
    const BLOCK: u64 = 1 << 12;
    let blocks = size.div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|b| {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(size);
            let mut best = (i64::MIN, lo);
            for z in lo..hi {
                let v = value(z);
                if v > best.0 {
                    best = (v, z);
                }
            }
            best
        })
        .reduce(
            || (i64::MIN, u64::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        )
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(super) fn sys(n: usize, eqs: &[(&[usize], u8, u64)]) -> Lin2System {
        Lin2System::from_triples(n, eqs.iter().map(|&(v, b, w)| (v.to_vec(), b == 1, w))).unwrap()
    }

    #[test]
    fn equation_validation() {
        assert!(Equation::new(vec![], true, 1).is_err());
        assert!(Equation::new(vec![0, 0], true, 1).is_err());
        assert!(Equation::new(vec![0], true, 0).is_err());
        assert_eq!(Equation::new(vec![2, 0], false, 1).unwrap().vars(), &[0, 2]);
        assert!(Lin2System::from_triples(1, [(vec![1], true, 1)]).is_err());
    }

    #[test]
    fn merge_examples() {
        let merged = merge_duplicates(&sys(2, &[(&[0, 1], 1, 2), (&[0, 1], 0, 3)]));
        assert_eq!(merged, sys(2, &[(&[0, 1], 0, 1)]));
        let merged = merge_duplicates(&sys(1, &[(&[0], 1, 1), (&[0], 1, 4)]));
        assert_eq!(merged, sys(1, &[(&[0], 1, 5)]));
        let merged = merge_duplicates(&sys(2, &[(&[0, 1], 1, 2), (&[0, 1], 0, 2)]));
        assert!(merged.equations().is_empty());
        assert!(merged.is_merge_normalized());
    }

    #[test]
    fn stats_examples() {
        let s = system_stats(&sys(2, &[(&[0], 1, 1), (&[0, 1], 1, 2)]));
        assert_eq!(
            (s.m, s.total_weight, s.max_arity, s.max_occurrence),
            (2, 3, 2, 2)
        );
        let s = system_stats(&Lin2System::empty(3));
        assert_eq!((s.m, s.total_weight), (0, 0));
    }

    #[test]
    fn odd_set_examples() {
        let s = sys(3, &[(&[0, 1], 0, 1), (&[1, 2], 1, 1)]);
        let u = find_odd_set(&s).unwrap();
        for e in s.equations() {
            let hits = e.vars().iter().filter(|v| u.contains(v)).count();
            assert_eq!(hits % 2, 1);
        }
        assert_eq!(find_odd_set(&sys(1, &[(&[0], 0, 1)])), Some(vec![0]));
        let pair = sys(2, &[(&[0, 1], 1, 1), (&[0, 1], 1, 1)]);
        assert_eq!(find_odd_set(&pair), Some(vec![0]));
        // z1+z2, z2+z3, z1+z3 would need an odd total over an even count
        let triangle = sys(3, &[(&[0, 1], 0, 1), (&[1, 2], 0, 1), (&[0, 2], 0, 1)]);
        assert_eq!(find_odd_set(&triangle), None);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate_x(&sys(1, &[(&[0], 0, 2)]), &[false]), 2);
        assert_eq!(
            evaluate_x(&sys(2, &[(&[0], 1, 1), (&[0, 1], 1, 2)]), &[false, false]),
            -3
        );
        assert_eq!(evaluate_x(&Lin2System::empty(2), &[true, false]), 0);
    }

    #[test]
    fn exact_examples() {
        let cfg = SolveConfig::default();
        assert_eq!(
            solve_exact(&sys(1, &[(&[0], 0, 2)]), &cfg).unwrap(),
            (2, vec![false])
        );
        let pair = sys(2, &[(&[0, 1], 1, 1), (&[0, 1], 0, 1)]);
        assert_eq!(solve_exact(&pair, &cfg).unwrap().0, 0);
        let two = sys(2, &[(&[0], 1, 1), (&[0, 1], 1, 2)]);
        assert_eq!(solve_exact(&two, &cfg).unwrap(), (3, vec![true, false]));
        assert!(matches!(
            solve_exact(&two, &SolveConfig::with_cap(1)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn exact_is_independent_of_workers() {
        let s = Lin2System::from_triples(
            14,
            (0..13).map(|i| (vec![i, i + 1], i % 2 == 1, 1 + i as u64 % 3)),
        )
        .unwrap();
        let one = solve_exact(
            &s,
            &SolveConfig {
                cap: 24,
                workers: 1,
            },
        )
        .unwrap();
        let four = solve_exact(
            &s,
            &SolveConfig {
                cap: 24,
                workers: 4,
            },
        )
        .unwrap();
        assert_eq!(one, four);
    }
}
