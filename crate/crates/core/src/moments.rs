//! Exact distributions of the three `X` variables and checks of the moment
//! inequalities the kernel bounds rest on.
//!
//! A distribution is a table of integer values `scale·X` with integer counts
//! over the whole sample space (all `n!` vertex orders or all `2^n`
//! assignments). Moments are exact rationals and irrational thresholds are
//! compared after raising both sides to integer powers, so nothing here uses
//! floating point except the explicitly labelled Monte-Carlo estimates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linord::{digraph_stats, WeightedDigraph};
use crate::maxlin::{Equation, Lin2System};
use crate::rsat::{self, Clause, ExactCnfFormula};

/// Largest vertex count [`dist_linord`] enumerates by default.
pub const ORDER_CAP: usize = 9;
/// Largest variable count [`dist_lin2`] and [`dist_rsat`] enumerate by default.
pub const ASSIGNMENT_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactDistribution {
    scale: u64,
    /// `(scale·X, count)`, sorted by value, counts positive.
    mass: Vec<(i64, u64)>,
    total: u64,
}

impl ExactDistribution {
    pub fn new(scale: u64, counts: BTreeMap<i64, u64>) -> Result<Self> {
        if scale == 0 {
            return Err(Error::InvalidParameter("scale must be positive".into()));
        }
        let mass: Vec<(i64, u64)> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        let total = mass
            .iter()
            .try_fold(0u64, |acc, &(_, c)| acc.checked_add(c))
            .ok_or(Error::Overflow("sample space size"))?;
        if total == 0 {
            return Err(Error::InvalidParameter("empty sample space".into()));
        }
        Ok(Self { scale, mass, total })
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn mass(&self) -> &[(i64, u64)] {
        &self.mass
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, value: i64) -> u64 {
        self.mass
            .binary_search_by_key(&value, |&(v, _)| v)
            .map_or(0, |i| self.mass[i].1)
    }

    /// `Prob(X = a) = Prob(X = −a)` for every `a`.
    pub fn is_symmetric(&self) -> bool {
        self.mass.iter().all(|&(v, c)| self.count(-v) == c)
    }

    /// Exact probability of the event `keep(scale·X)`.
    pub fn probability(&self, keep: impl Fn(i64) -> bool) -> BigRational {
        let hits: u64 = self
            .mass
            .iter()
            .filter(|(v, _)| keep(*v))
            .map(|&(_, c)| c)
            .sum();
        ratio(BigInt::from(hits), BigInt::from(self.total))
    }
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn parallel_counts(
    blocks: u64,
    fill: impl Fn(u64, &mut BTreeMap<i64, u64>) + Sync,
) -> BTreeMap<i64, u64> {
    (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut local = BTreeMap::new();
            fill(b, &mut local);
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (v, c) in b {
                *a.entry(v).or_insert(0) += c;
            }
            a
        })
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap || size >= 63 {
        return Err(Error::CapExceeded { what, size, cap });
    }
    Ok(())
}

/// Distribution of `2X` over all `n!` vertex orders.
pub fn dist_linord(g: &WeightedDigraph, cap: usize) -> Result<ExactDistribution> {
    let n = g.vertex_count();
    check_cap("vertex", n, cap)?;
    if n == 0 {
        return ExactDistribution::new(2, BTreeMap::from([(0, 1)]));
    }
    // in_arcs[v] = (tail bit, weight)
    let mut in_arcs: Vec<Vec<(u64, i64)>> = vec![Vec::new(); n];
    for a in g.arcs() {
        in_arcs[a.head].push((1 << a.tail, a.weight as i64));
    }
    let total_weight = g.total_weight() as i64;

    fn extend(
        placed: u64,
        forward: i64,
        n: usize,
        in_arcs: &[Vec<(u64, i64)>],
        total_weight: i64,
        out: &mut BTreeMap<i64, u64>,
    ) {
        if placed.count_ones() as usize == n {
            *out.entry(2 * forward - total_weight).or_insert(0) += 1;
            return;
        }
        for v in 0..n {
            if placed >> v & 1 == 0 {
                let gain: i64 = in_arcs[v]
                    .iter()
                    .filter(|(bit, _)| placed & bit != 0)
                    .map(|&(_, w)| w)
                    .sum();
                extend(
                    placed | 1 << v,
                    forward + gain,
                    n,
                    in_arcs,
                    total_weight,
                    out,
                );
            }
        }
    }

    let counts = parallel_counts(n as u64, |first, out| {
        extend(1 << first, 0, n, &in_arcs, total_weight, out)
    });
    ExactDistribution::new(2, counts)
}

fn assignment_counts(n: usize, value: impl Fn(u64) -> i64 + Sync) -> BTreeMap<i64, u64> {
    const BLOCK: u64 = 1 << 10;
    let size = 1u64 << n;
    parallel_counts(size.div_ceil(BLOCK), |b, out| {
        for z in b * BLOCK..((b + 1) * BLOCK).min(size) {
            *out.entry(value(z)).or_insert(0) += 1;
        }
    })
}

/// Distribution of `X` over all `2^n` assignments.
pub fn dist_lin2(s: &Lin2System, cap: usize) -> Result<ExactDistribution> {
    let n = s.var_count();
    check_cap("variable", n, cap)?;
    let rows: Vec<(u64, bool, i64)> = s
        .equations()
        .iter()
        .map(|e| {
            let mask = e.vars().iter().fold(0u64, |m, &v| m | 1 << v);
            (mask, e.rhs(), e.weight() as i64)
        })
        .collect();
    let counts = assignment_counts(n, |z| {
        rows.iter()
            .map(|&(mask, rhs, w)| {
                if ((z & mask).count_ones() & 1 == 1) == rhs {
                    w
                } else {
                    -w
                }
            })
            .sum()
    });
    ExactDistribution::new(1, counts)
}

/// Distribution of `2^r·X` over all `2^n` assignments.
pub fn dist_rsat(f: &ExactCnfFormula, cap: usize) -> Result<ExactDistribution> {
    let n = f.var_count();
    check_cap("variable", n, cap)?;
    let masks: Vec<(u64, u64)> = f
        .clauses()
        .iter()
        .map(|c| {
            c.literals().iter().fold((0, 0), |(p, q), l| {
                if l.positive {
                    (p | 1 << l.var, q)
                } else {
                    (p, q | 1 << l.var)
                }
            })
        })
        .collect();
    let scale = f.scale();
    let m = f.clauses().len() as i64;
    let counts = assignment_counts(n, |x| {
        let sat = masks
            .iter()
            .filter(|&&(p, q)| x & p != 0 || !x & q != 0)
            .count() as i64;
        scale * sat - (scale - 1) * m
    });
    ExactDistribution::new(scale as u64, counts)
}

/// `E(X^p)` at unit scale.
pub fn moment_p(d: &ExactDistribution, p: u32) -> BigRational {
    let sum: BigInt = d
        .mass
        .iter()
        .map(|&(v, c)| BigInt::from(v).pow(p) * BigInt::from(c))
        .sum();
    ratio(sum, BigInt::from(d.total) * BigInt::from(d.scale).pow(p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub e1: BigRational,
    pub e2: BigRational,
    pub e4: BigRational,
    pub symmetric: bool,
}

pub fn moment_report(d: &ExactDistribution) -> MomentReport {
    MomentReport {
        e1: moment_p(d, 1),
        e2: moment_p(d, 2),
        e4: moment_p(d, 4),
        symmetric: d.is_symmetric(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub second_moment: BigRational,
    /// `Prob(X ≥ √E(X²))`, only computed for symmetric distributions.
    pub tail_probability: Option<BigRational>,
    /// Whether that probability is positive; `None` when the lemma does not
    /// apply.
    pub holds: Option<bool>,
}

/// For a symmetric `X`, checks `Prob(X ≥ √E(X²)) > 0`. The event is
/// evaluated as `{X > 0, X² ≥ E(X²)} ∪ {X = 0, E(X²) = 0}`.
pub fn verify_symmetric_lemma(d: &ExactDistribution) -> SymmetryReport {
    let second_moment = moment_p(d, 2);
    if !d.is_symmetric() {
        return SymmetryReport {
            symmetric: false,
            second_moment,
            tail_probability: None,
            holds: None,
        };
    }
    let scale_sq = int(d.scale) * int(d.scale);
    let level = &second_moment * &scale_sq;
    let zero_moment = second_moment.is_zero();
    let prob = d.probability(|v| (v > 0 && int(v) * int(v) >= level) || (v == 0 && zero_moment));
    let holds = prob.is_positive();
    SymmetryReport {
        symmetric: true,
        second_moment,
        tail_probability: Some(prob),
        holds: Some(holds),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailReport {
    pub b: BigRational,
    pub second_moment: BigRational,
    pub fourth_moment: BigRational,
    /// `Prob(X > σ/(4√b))`.
    pub tail_probability: BigRational,
    /// `(Prob·b)³·4⁴ ≥ 1`, i.e. `Prob ≥ 1/(4^{4/3}·b)`.
    pub holds: bool,
}

/// Checks the fourth-moment tail bound: if `E(X) = 0`, `E(X²) = σ² > 0` and
/// `E(X⁴) ≤ b·σ⁴`, then `Prob(X > σ/(4√b)) ≥ 4^{−4/3}/b`.
pub fn verify_tail_lemma(d: &ExactDistribution, b: &BigRational) -> Result<TailReport> {
    if !b.is_positive() {
        return Err(Error::Precondition(format!("b = {b} is not positive")));
    }
    let e1 = moment_p(d, 1);
    let e2 = moment_p(d, 2);
    let e4 = moment_p(d, 4);
    if !e1.is_zero() {
        return Err(Error::Precondition(format!("E(X) = {e1}, expected 0")));
    }
    if !e2.is_positive() {
        return Err(Error::Precondition("E(X^2) = 0".into()));
    }
    if e4 > b * &e2 * &e2 {
        return Err(Error::Precondition(format!(
            "E(X^4) = {e4} exceeds b·E(X^2)^2 = {}",
            b * &e2 * &e2
        )));
    }
    // X > σ/(4√b)  ⇔  X > 0 and 16·b·X² > σ², with X = v/scale
    let level = &e2 * int(d.scale) * int(d.scale);
    let sixteen_b = b * int(16);
    let prob = d.probability(|v| v > 0 && &sixteen_b * int(v) * int(v) > level);
    let pb = &prob * b;
    let holds = &pb * &pb * &pb * int(256) >= BigRational::one();
    Ok(TailReport {
        b: b.clone(),
        second_moment: e2,
        fourth_moment: e4,
        tail_probability: prob,
        holds,
    })
}

#[derive(Debug, Clone, Copy)]
pub enum MomentInstance<'a> {
    Linord(&'a WeightedDigraph),
    Lin2(&'a Lin2System),
    Rsat(&'a ExactCnfFormula),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondMomentReport {
    pub claim: &'static str,
    pub first_moment: BigRational,
    pub second_moment: BigRational,
    /// Right-hand side of the claimed identity or inequality.
    pub bound: BigRational,
    pub holds: bool,
    /// For r-SAT: `Σ E(X_Z²) + Σ_{Y≠Z} E(X_Y X_Z)` from the pair relations.
    pub pairwise: Option<BigRational>,
}

/// Computes `E(X²)` by enumeration and checks the instance's second-moment
/// claim: `E(X²) ≥ W⁽²⁾/12` for oriented graphs, `E(X²) = Σw²` for
/// merge-normalized Lin-2 systems, and `E(X²) ≥ m·4^{−r}` for formulas with
/// conflict number at most `(2^r − 2)m` (also cross-checked against the
/// pairwise decomposition). `holds` also requires `E(X) = 0`.
pub fn verify_second_moment_claims(instance: MomentInstance<'_>) -> Result<SecondMomentReport> {
    match instance {
        MomentInstance::Linord(g) => {
            let stats = digraph_stats(g)?;
            if !stats.oriented {
                return Err(Error::Precondition("digraph has a 2-cycle".into()));
            }
            let d = dist_linord(g, ORDER_CAP)?;
            let (e1, e2) = (moment_p(&d, 1), moment_p(&d, 2));
            let bound = ratio(BigInt::from(stats.squared_weight), BigInt::from(12));
            Ok(SecondMomentReport {
                claim: "E(X^2) >= W2/12",
                holds: e1.is_zero() && e2 >= bound,
                first_moment: e1,
                second_moment: e2,
                bound,
                pairwise: None,
            })
        }
        MomentInstance::Lin2(s) => {
            if !s.is_merge_normalized() {
                return Err(Error::Precondition(
                    "system has two equations over the same variables".into(),
                ));
            }
            let d = dist_lin2(s, ASSIGNMENT_CAP)?;
            let (e1, e2) = (moment_p(&d, 1), moment_p(&d, 2));
            let bound: BigInt = s
                .equations()
                .iter()
                .map(|e| BigInt::from(e.weight()).pow(2u32))
                .sum();
            let bound = BigRational::from_integer(bound);
            Ok(SecondMomentReport {
                claim: "E(X^2) = sum w_j^2",
                holds: e1.is_zero() && e2 == bound,
                first_moment: e1,
                second_moment: e2,
                bound,
                pairwise: None,
            })
        }
        MomentInstance::Rsat(f) => {
            let cn = rsat::conflict_number(f);
            let allowed = rsat::conflict_bound(f);
            if cn.conflict_number > allowed {
                return Err(Error::Precondition(format!(
                    "conflict number {} exceeds (2^r-2)m = {allowed}",
                    cn.conflict_number
                )));
            }
            let d = dist_rsat(f, ASSIGNMENT_CAP)?;
            let (e1, e2) = (moment_p(&d, 1), moment_p(&d, 2));
            let four_r = BigInt::from(1u8) << (2 * f.width());
            let bound = ratio(BigInt::from(f.clauses().len()), four_r);
            let pairwise = rsat_pairwise_second_moment(f);
            Ok(SecondMomentReport {
                claim: "E(X^2) >= m/4^r",
                holds: e1.is_zero() && e2 >= bound && e2 == pairwise,
                first_moment: e1,
                second_moment: e2,
                bound,
                pairwise: Some(pairwise),
            })
        }
    }
}

/// `E(X²) = m(2^{−r} − 4^{−r}) + Σ_{Y≠Z} E(X_Y X_Z)` with each pair term
/// read off the pair's relation.
pub fn rsat_pairwise_second_moment(f: &ExactCnfFormula) -> BigRational {
    let r = f.width();
    let m = f.clauses().len() as i64;
    let mut scaled = BigInt::from(((1i64 << r) - 1) * m);
    for (i, y) in f.clauses().iter().enumerate() {
        for z in &f.clauses()[i + 1..] {
            scaled += 2 * rsat::pairwise_term_scaled(rsat::pair_relation(y, z));
        }
    }
    ratio(scaled, BigInt::from(1u8) << (2 * r))
}

/// `E(X_Y·X_Z)` by enumerating the variables of the two clauses. Passing the
/// same clause twice gives `E(X_Z²)`.
pub fn pair_expectation(y: &Clause, z: &Clause) -> BigRational {
    let r = y.width();
    let mut vars: Vec<usize> = y
        .literals()
        .iter()
        .chain(z.literals())
        .map(|l| l.var)
        .collect();
    vars.sort_unstable();
    vars.dedup();
    let clause_value = |c: &Clause, x: &[bool]| -> i64 {
        if c.is_satisfied(x) {
            1
        } else {
            1 - (1i64 << c.width())
        }
    };
    let max_var = vars.last().map_or(0, |&v| v + 1);
    let mut x = vec![false; max_var];
    let mut sum = BigInt::zero();
    for bits in 0u64..1 << vars.len() {
        for (i, &v) in vars.iter().enumerate() {
            x[v] = bits >> i & 1 == 1;
        }
        sum += clause_value(y, &x) * clause_value(z, &x);
    }
    ratio(
        sum,
        (BigInt::from(1u8) << vars.len()) * (BigInt::from(1u8) << (2 * r)),
    )
}

/// The system `Σ_{i∈I} z_i = 1` for every nonempty `I ⊆ {1..n}`, unit
/// weights, `m = 2^n − 1`. Its fourth moment grows like the cube of the
/// second.
pub fn gen_remark2(n: usize) -> Result<Lin2System> {
    if !(3..=6).contains(&n) {
        return Err(Error::InvalidParameter(format!("n = {n} outside 3..=6")));
    }
    let equations = (1u32..1 << n)
        .map(|mask| {
            let vars = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            Equation::new(vars, true, 1)
        })
        .collect::<Result<Vec<_>>>()?;
    Lin2System::new(n, equations)
}

/// Sampled moments for instances too large to enumerate. These are
/// estimates and are never used to confirm a bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub samples: usize,
    pub mean: f64,
    pub second: f64,
    pub fourth: f64,
}

fn estimate(samples: usize, scale: f64, mut draw: impl FnMut() -> i64) -> MonteCarloEstimate {
    let (mut s1, mut s2, mut s4) = (0.0, 0.0, 0.0);
    for _ in 0..samples {
        let x = draw() as f64 / scale;
        s1 += x;
        s2 += x * x;
        s4 += x * x * x * x;
    }
    let n = samples.max(1) as f64;
    MonteCarloEstimate {
        samples,
        mean: s1 / n,
        second: s2 / n,
        fourth: s4 / n,
    }
}

pub fn estimate_linord(g: &WeightedDigraph, samples: usize, seed: u64) -> MonteCarloEstimate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq: Vec<usize> = (0..g.vertex_count()).collect();
    estimate(samples, 2.0, || {
        seq.shuffle(&mut rng);
        let order = crate::linord::LinearOrder::from_sequence(&seq).expect("shuffled permutation");
        crate::linord::x_value(g, &order)
    })
}

pub fn estimate_lin2(s: &Lin2System, samples: usize, seed: u64) -> MonteCarloEstimate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut z = vec![false; s.var_count()];
    estimate(samples, 1.0, || {
        z.iter_mut().for_each(|b| *b = rng.gen());
        crate::maxlin::evaluate_x(s, &z)
    })
}

pub fn estimate_rsat(f: &ExactCnfFormula, samples: usize, seed: u64) -> MonteCarloEstimate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![false; f.var_count()];
    estimate(samples, f.scale() as f64, || {
        x.iter_mut().for_each(|b| *b = rng.gen());
        rsat::x_value_scaled(f, &x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(pairs: &[(i64, u64)]) -> BTreeMap<i64, u64> {
        pairs.iter().copied().collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        ratio(BigInt::from(n), BigInt::from(d))
    }

    fn three_cycle() -> WeightedDigraph {
        WeightedDigraph::new(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()
    }

    fn two_eq() -> Lin2System {
        Lin2System::from_triples(2, [(vec![0], true, 1), (vec![0, 1], true, 2)]).unwrap()
    }

    #[test]
    fn linord_distributions() {
        let single = WeightedDigraph::new(2, [(0, 1, 2)]).unwrap();
        assert_eq!(
            dist_linord(&single, ORDER_CAP).unwrap().mass(),
            &[(-2, 1), (2, 1)]
        );
        let d = dist_linord(&three_cycle(), ORDER_CAP).unwrap();
        assert_eq!((d.mass(), d.total()), (&[(-1, 3), (1, 3)][..], 6));
        let empty = dist_linord(&WeightedDigraph::empty(4), ORDER_CAP).unwrap();
        assert_eq!(empty.mass(), &[(0, 24)]);
        assert!(dist_linord(&WeightedDigraph::empty(10), ORDER_CAP).is_err());
    }

    #[test]
    fn lin2_distributions() {
        let single = Lin2System::from_triples(1, [(vec![0], false, 2)]).unwrap();
        assert_eq!(
            dist_lin2(&single, ASSIGNMENT_CAP).unwrap().mass(),
            &[(-2, 1), (2, 1)]
        );
        assert_eq!(
            dist_lin2(&two_eq(), ASSIGNMENT_CAP).unwrap().mass(),
            &[(-3, 1), (-1, 1), (1, 1), (3, 1)]
        );
        assert_eq!(
            dist_lin2(&Lin2System::empty(0), ASSIGNMENT_CAP)
                .unwrap()
                .mass(),
            &[(0, 1)]
        );
    }

    #[test]
    fn rsat_distributions() {
        let single = ExactCnfFormula::from_dimacs(2, 2, &[vec![1, 2]]).unwrap();
        assert_eq!(
            dist_rsat(&single, ASSIGNMENT_CAP).unwrap().mass(),
            &[(-3, 1), (1, 3)]
        );
        let complete = ExactCnfFormula::from_dimacs(
            2,
            2,
            &[vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2]],
        )
        .unwrap();
        assert_eq!(
            dist_rsat(&complete, ASSIGNMENT_CAP).unwrap().mass(),
            &[(0, 4)]
        );
        let disjoint = ExactCnfFormula::from_dimacs(4, 2, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(
            dist_rsat(&disjoint, ASSIGNMENT_CAP).unwrap().mass(),
            &[(-6, 1), (-2, 6), (2, 9)]
        );
    }

    #[test]
    fn moments() {
        let d = dist_linord(&three_cycle(), ORDER_CAP).unwrap();
        assert_eq!(moment_p(&d, 2), q(1, 4));
        let single = dist_lin2(
            &Lin2System::from_triples(1, [(vec![0], false, 2)]).unwrap(),
            ASSIGNMENT_CAP,
        )
        .unwrap();
        assert_eq!(moment_p(&single, 1), q(0, 1));
        assert_eq!(
            moment_p(&dist_lin2(&two_eq(), ASSIGNMENT_CAP).unwrap(), 2),
            q(5, 1)
        );
        let report = moment_report(&d);
        assert!(report.symmetric);
        assert!(report.e4 >= &report.e2 * &report.e2);
    }

    #[test]
    fn symmetric_lemma() {
        let report = verify_symmetric_lemma(&dist_linord(&three_cycle(), ORDER_CAP).unwrap());
        assert_eq!(report.holds, Some(true));
        assert_eq!(report.tail_probability, Some(q(1, 2)));
        let clause = ExactDistribution::new(4, counts(&[(1, 3), (-3, 1)])).unwrap();
        let report = verify_symmetric_lemma(&clause);
        assert!(!report.symmetric);
        assert_eq!(report.holds, None);
        let degenerate = ExactDistribution::new(1, counts(&[(0, 5)])).unwrap();
        assert_eq!(verify_symmetric_lemma(&degenerate).holds, Some(true));
    }

    #[test]
    fn tail_lemma() {
        let two_point = ExactDistribution::new(1, counts(&[(2, 1), (-2, 1)])).unwrap();
        let report = verify_tail_lemma(&two_point, &q(1, 1)).unwrap();
        assert_eq!(report.tail_probability, q(1, 2));
        assert!(report.holds);
        // E(X^4) = 16 > b·σ⁴ = 0.5·16
        assert!(matches!(
            verify_tail_lemma(&two_point, &q(1, 2)),
            Err(Error::Precondition(_))
        ));
        let skewed = ExactDistribution::new(4, counts(&[(1, 3), (-1, 1)])).unwrap();
        assert!(verify_tail_lemma(&skewed, &q(1, 1)).is_err());
    }

    #[test]
    fn second_moment_claims() {
        let report = verify_second_moment_claims(MomentInstance::Linord(&three_cycle())).unwrap();
        assert_eq!(
            (report.second_moment.clone(), report.bound.clone()),
            (q(1, 4), q(1, 4))
        );
        assert!(report.holds);
        let report = verify_second_moment_claims(MomentInstance::Lin2(&two_eq())).unwrap();
        assert_eq!(report.second_moment, q(5, 1));
        assert!(report.holds);
        let disjoint = ExactCnfFormula::from_dimacs(4, 2, &[vec![1, 2], vec![3, 4]]).unwrap();
        let report = verify_second_moment_claims(MomentInstance::Rsat(&disjoint)).unwrap();
        assert_eq!(report.second_moment, q(3, 8));
        assert_eq!(report.bound, q(2, 16));
        assert!(report.holds);

        let sym = WeightedDigraph::new(2, [(0, 1, 1), (1, 0, 1)]).unwrap();
        assert!(verify_second_moment_claims(MomentInstance::Linord(&sym)).is_err());
        let dup = Lin2System::from_triples(1, [(vec![0], true, 1), (vec![0], false, 1)]).unwrap();
        assert!(verify_second_moment_claims(MomentInstance::Lin2(&dup)).is_err());
    }

    #[test]
    fn pair_expectations() {
        let f =
            ExactCnfFormula::from_dimacs(5, 2, &[vec![1, 2], vec![-1, 3], vec![1, 4], vec![4, 5]])
                .unwrap();
        let c = f.clauses();
        assert_eq!(pair_expectation(&c[0], &c[1]), q(-1, 16));
        assert_eq!(pair_expectation(&c[0], &c[2]), q(1, 16));
        assert_eq!(pair_expectation(&c[0], &c[3]), q(0, 1));
        assert_eq!(pair_expectation(&c[0], &c[0]), q(3, 16));
    }

    #[test]
    fn remark2_family() {
        let s = gen_remark2(3).unwrap();
        assert_eq!(s.equations().len(), 7);
        let d = dist_lin2(&s, ASSIGNMENT_CAP).unwrap();
        assert_eq!(d.mass(), &[(-7, 1), (1, 7)]);
        let (e2, e4) = (moment_p(&d, 2), moment_p(&d, 4));
        assert_eq!(e2, q(7, 1));
        assert_eq!(e4, q(301, 1));
        assert!(e4 * int(512) > &e2 * &e2 * &e2);
        let s4 = gen_remark2(4).unwrap();
        assert_eq!(s4.equations().len(), 15);
        assert!(s4.occurrences().iter().all(|&o| o == 8));
        assert!(gen_remark2(2).is_err());
        assert!(gen_remark2(7).is_err());
    }

    #[test]
    fn estimates_are_deterministic() {
        let a = estimate_lin2(&two_eq(), 500, 7);
        let b = estimate_lin2(&two_eq(), 500, 7);
        assert_eq!(a, b);
        assert!((1.0..=9.0).contains(&a.second));
        assert!(a.mean.abs() <= 3.0);
        let e = estimate_linord(&three_cycle(), 200, 1);
        assert!((e.second - 0.25).abs() < 1e-9);
        let f = ExactCnfFormula::from_dimacs(2, 2, &[vec![1, 2]]).unwrap();
        assert_eq!(estimate_rsat(&f, 10, 3).samples, 10);
    }
}
