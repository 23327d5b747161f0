use num_bigint::BigUint;
use num_traits::One;

use super::{
    find_odd_set, merge_duplicates, occurrence_reduce, rank_reduce, solve_exact, system_stats,
    Lin2System,
};
use crate::error::{Error, Result};
use crate::gf2::{self, BitVec};
use crate::outcome::{
    DecisionOutcome, KernelInstance, SolveConfig, ThresholdCheck, Verdict, Witness,
};

/// Which tractable special case a system is decided under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseTag {
    /// `U` meets every equation in an odd number of variables.
    OddSet(Vec<usize>),
    /// Every equation has at most `r` variables.
    BoundedArity(usize),
    /// Every variable occurs in at most `ρ` equations.
    BoundedOccurrence(usize),
    General,
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::OddSet(_) => "odd-set",
            CaseTag::BoundedArity(_) => "arity",
            CaseTag::BoundedOccurrence(_) => "occurrence",
            CaseTag::General => "general",
        }
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn odd_factor(k: u64) -> BigUint {
    big(2) * big(k) - BigUint::one()
}

/// `4k²`.
pub fn odd_set_threshold(k: u64) -> BigUint {
    big(4) * big(k) * big(k)
}

/// `f(k, r) = 16(2k−1)²·64^r`.
pub fn arity_threshold(k: u64, r: usize) -> BigUint {
    let t = odd_factor(k);
    big(16) * &t * &t * big(64).pow(r as u32)
}

/// `32ρ²(2k−1)²`: the tail bound with fourth-moment ratio `b = 2ρ²`.
pub fn occurrence_threshold(k: u64, rho: usize) -> BigUint {
    let t = odd_factor(k);
    let rho = big(rho as u64);
    big(32) * &rho * &rho * &t * &t
}

/// Checks that `tag` describes `s`; the error names the violated condition.
pub fn check_case(s: &Lin2System, tag: &CaseTag) -> Result<()> {
    let stats = system_stats(s);
    match tag {
        CaseTag::OddSet(u) => {
            if let Some(&v) = u.iter().find(|&&v| v >= s.var_count()) {
                return Err(Error::Refused(format!(
                    "odd set names unknown variable {v}"
                )));
            }
            let mut in_u = vec![false; s.var_count()];
            for &v in u {
                in_u[v] = true;
            }
            if let Some(j) = s
                .equations()
                .iter()
                .position(|e| e.vars().iter().filter(|&&v| in_u[v]).count() % 2 == 0)
            {
                return Err(Error::Refused(format!(
                    "odd-set condition fails: equation {j} meets U in an even number of variables"
                )));
            }
        }
        CaseTag::BoundedArity(r) => {
            if *r == 0 || stats.max_arity > *r {
                return Err(Error::Refused(format!(
                    "arity condition fails: r(S) = {} exceeds r = {r}",
                    stats.max_arity
                )));
            }
        }
        CaseTag::BoundedOccurrence(rho) => {
            if *rho == 0 || stats.max_occurrence > *rho {
                return Err(Error::Refused(format!(
                    "occurrence condition fails: a variable occurs {} times, bound is {rho}",
                    stats.max_occurrence
                )));
            }
        }
        CaseTag::General => {}
    }
    Ok(())
}

/// Picks the case with the smallest kernel threshold for the merged system;
/// ties go to odd-set, then arity, then occurrence.
pub fn auto_case(s: &Lin2System, k: u64) -> CaseTag {
    let merged = merge_duplicates(s);
    let stats = system_stats(&merged);
    let mut candidates: Vec<(BigUint, CaseTag)> = Vec::new();
    if let Some(u) = find_odd_set(&merged) {
        candidates.push((odd_set_threshold(k), CaseTag::OddSet(u)));
    }
    if stats.max_arity >= 1 {
        candidates.push((
            arity_threshold(k, stats.max_arity),
            CaseTag::BoundedArity(stats.max_arity),
        ));
    }
    if stats.max_occurrence >= 1 {
        let rho = stats.max_occurrence;
        let t = if rho == 1 {
            BigUint::from(0u32)
        } else {
            occurrence_threshold(k, rho)
        };
        candidates.push((t, CaseTag::BoundedOccurrence(rho)));
    }
    candidates
        .into_iter()
        .reduce(|best, c| if c.0 < best.0 { c } else { best })
        .map_or(CaseTag::General, |(_, tag)| tag)
}

/// The size test that answers YES without search for `tag`, if the case has
/// one: `m ≥ 4k²` (odd set), `m ≥ 16(2k−1)²·64^r` (arity) or
/// `m ≥ 32ρ²(2k−1)²` (occurrence, `ρ ≥ 2`).
pub fn linalb_bound_check(m: usize, k: u64, tag: &CaseTag) -> Option<ThresholdCheck> {
    match tag {
        CaseTag::OddSet(_) => Some(ThresholdCheck::new("m>=4k^2", m, odd_set_threshold(k))),
        CaseTag::BoundedArity(r) => Some(ThresholdCheck::new(
            "m>=16(2k-1)^2*64^r",
            m,
            arity_threshold(k, *r),
        )),
        CaseTag::BoundedOccurrence(rho) if *rho >= 2 => Some(ThresholdCheck::new(
            "m>=32rho^2(2k-1)^2",
            m,
            occurrence_threshold(k, *rho),
        )),
        _ => None,
    }
}

/// Decides whether some assignment satisfies weight at least `W/2 + k`.
///
/// The system is merged under Rule 4 first and the tag is checked against
/// the merged system. Above the case threshold the answer is YES by the
/// moment bound; below it the rank-reduced kernel is solved exactly and the
/// witness is lifted back to the input's variables.
pub fn decide_linalb(
    s: &Lin2System,
    k: u64,
    tag: &CaseTag,
    cfg: &SolveConfig,
) -> Result<DecisionOutcome> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "k must be a positive integer".into(),
        ));
    }
    let merged = merge_duplicates(s);
    check_case(&merged, tag)?;
    let m = merged.equations().len();

    let bound = match tag {
        CaseTag::BoundedOccurrence(rho) if *rho <= 1 => return Ok(decide_disjoint(&merged, k)),
        _ => linalb_bound_check(m, k, tag),
    };
    if let Some(check) = &bound {
        if check.holds() {
            let mut out = DecisionOutcome::new(Verdict::YesByBound);
            out.thresholds.push(check.clone());
            return Ok(out);
        }
    }

    let rr = rank_reduce(&merged);
    let mut out = match solve_exact(&rr.reduced, cfg) {
        Ok((best, y)) => {
            let mut out = if best >= 2 * k as i64 {
                let mut out = DecisionOutcome::new(Verdict::YesWitness);
                out.witness = Some(Witness::Assignment(rr.lift(&y)));
                out
            } else {
                DecisionOutcome::new(Verdict::No)
            };
            out.best_value = Some(best);
            out
        }
        Err(Error::CapExceeded { size, cap, .. }) => {
            let mut out = DecisionOutcome::new(Verdict::Kernel);
            out.notes
                .push(format!("kernel has {size} variables, cap is {cap}"));
            out.kernel = Some(KernelInstance::Lin2(rr.reduced.clone()));
            out
        }
        Err(e) => return Err(e),
    };
    if matches!(tag, CaseTag::General) {
        out.notes
            .push("no moment bound applies to the general case".into());
    }
    out.thresholds.extend(bound);
    out.notes.push(format!(
        "kernel rank {} of {} variables",
        rr.basis.len(),
        merged.var_count()
    ));
    Ok(out)
}

/// Every variable occurs at most once, so all equations hold together and
/// `X = W`.
fn decide_disjoint(s: &Lin2System, k: u64) -> DecisionOutcome {
    let rhs = BitVec::from_bools(&s.equations().iter().map(|e| e.rhs()).collect::<Vec<_>>());
    let z = gf2::solve_affine(&s.coefficient_matrix(), &rhs)
        .expect("right side sized to the equation count")
        .expect("variable-disjoint equations are simultaneously satisfiable")
        .to_bools();
    let w = s.total_weight() as i64;
    let mut out = if w >= 2 * k as i64 {
        let mut out = DecisionOutcome::new(Verdict::YesWitness);
        out.witness = Some(Witness::Assignment(z));
        out
    } else {
        DecisionOutcome::new(Verdict::No)
    };
    out.best_value = Some(w);
    out.thresholds.push(ThresholdCheck::new(
        "W>=2k",
        s.total_weight(),
        big(2) * big(k),
    ));
    out.notes
        .push("occurrence bound 1: all equations satisfiable at once".into());
    out
}

/// Finds an assignment with `X ≥ 2k` for a system of arity at most `r`, or
/// `None` when the instance is NO.
///
/// Merges (Rule 4), rank-reduces (Rule 3) and applies Rule 5, solves the
/// residual exactly, then lifts back through both reductions.
pub fn solve_linalb_faithful(
    s: &Lin2System,
    k: u64,
    r: usize,
    cfg: &SolveConfig,
) -> Result<Option<Vec<bool>>> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "k must be a positive integer".into(),
        ));
    }
    let merged = merge_duplicates(s);
    check_case(&merged, &CaseTag::BoundedArity(r))?;
    let rr = rank_reduce(&merged);
    let occ = occurrence_reduce(&rr.reduced, k, r);
    let (best, y) = solve_exact(&occ.reduced, cfg)?;
    if best < 2 * k as i64 {
        debug_assert!(
            occ.removed.is_empty(),
            "Rule 5 residual must stay a YES instance"
        );
        return Ok(None);
    }
    Ok(Some(rr.lift(&occ.lift(&y))))
}
