//! Command dispatch for the `tightbound` binary.

pub mod args;
pub mod report;

use std::path::Path;
use std::time::Instant;

use num_traits::Zero;

use tightbound_core::format::{parse_instance, write_instance};
use tightbound_core::generate::Family;
use tightbound_core::linord::{decide_fas_below, decide_loalb, reduce_two_cycles};
use tightbound_core::maxlin::{
    auto_case, decide_linalb, find_odd_set, merge_duplicates, system_stats,
};
use tightbound_core::moments::{
    dist_lin2, dist_linord, dist_rsat, moment_report, verify_second_moment_claims,
    verify_symmetric_lemma, verify_tail_lemma, MomentInstance, ASSIGNMENT_CAP, ORDER_CAP,
};
use tightbound_core::rsat::{decide_rsatalb, diagnose_rsatalb};
use tightbound_core::{
    CaseTag, Error, ExactDistribution, Instance, RationalParameterK, SolveConfig,
};

use args::{CaseArg, Command, GenKind, SolveOpts, MAX_CAP};
use report::{RunResult, ERROR, REFUSED};

/// Runs one command. Failures are reported inside the result, never as a
/// panic, so the caller only has to print and pick the exit status.
pub fn run(command: &Command) -> RunResult {
    let start = Instant::now();
    let name = command_name(command);
    let mut result = dispatch(command).unwrap_or_else(|e| {
        let verdict = if matches!(e, Error::Refused(_)) {
            REFUSED
        } else {
            ERROR
        };
        RunResult::failed(name, verdict, e.to_string())
    });
    result.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    result
}

pub fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Loalb { .. } => "loalb",
        Command::Fas { .. } => "fas",
        Command::Linalb { .. } => "linalb",
        Command::Rsat { .. } => "rsat",
        Command::Moments { .. } => "moments",
        Command::Gen { .. } => "gen",
    }
}

fn solve_config(opts: &SolveOpts) -> Result<SolveConfig, Error> {
    if opts.cap == 0 || opts.cap > MAX_CAP {
        return Err(Error::InvalidParameter(format!(
            "--cap {} outside 1..={MAX_CAP}",
            opts.cap
        )));
    }
    Ok(SolveConfig {
        cap: opts.cap,
        workers: opts.workers,
    })
}

fn load(path: &Path) -> Result<Instance, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInstance(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text)
}

fn wrong_kind(expected: &str, got: &Instance) -> Error {
    Error::InvalidInstance(format!(
        "expected a {expected} instance, found {}",
        got.kind()
    ))
}

fn dispatch(command: &Command) -> Result<RunResult, Error> {
    let name = command_name(command);
    match command {
        Command::Loalb { k, file, opts } | Command::Fas { k, file, opts } => {
            let cfg = solve_config(opts)?;
            let g = match load(file)? {
                Instance::Digraph(g) => g,
                other => return Err(wrong_kind("digraph", &other)),
            };
            let out = if name == "fas" {
                decide_fas_below(&g, *k, &cfg)?
            } else {
                decide_loalb(&g, *k, &cfg)?
            };
            Ok(RunResult::from_outcome(name, &out))
        }
        Command::Linalb {
            k,
            case,
            file,
            opts,
        } => {
            let cfg = solve_config(opts)?;
            let s = match load(file)? {
                Instance::Lin2(s) => s,
                other => return Err(wrong_kind("lin2", &other)),
            };
            let tag = case_tag(&s, *k, *case)?;
            let out = decide_linalb(&s, *k, &tag, &cfg)?;
            let mut r = RunResult::from_outcome(name, &out);
            r.values.insert(0, ("case".into(), describe_case(&tag)));
            Ok(r)
        }
        Command::Rsat { k_num, file, opts } => {
            let cfg = solve_config(opts)?;
            let f = match load(file)? {
                Instance::Cnf(f) => f,
                other => return Err(wrong_kind("ecnf", &other)),
            };
            let k = RationalParameterK::new(*k_num)?;
            match decide_rsatalb(&f, k, &cfg) {
                Ok(out) => Ok(RunResult::from_outcome(name, &out)),
                Err(Error::Refused(reason)) => {
                    let mut r = RunResult::failed(name, REFUSED, format!("refused: {reason}"));
                    r.diagnostic = Some(Box::new(match diagnose_rsatalb(&f, k, &cfg) {
                        Ok(d) => RunResult::from_outcome(name, &d),
                        Err(e) => RunResult::failed(name, ERROR, e.to_string()),
                    }));
                    Ok(r)
                }
                Err(e) => Err(e),
            }
        }
        Command::Moments { file, cap, emit: _ } => moments(&load(file)?, *cap),
        Command::Gen {
            kind,
            seed,
            n,
            r,
            pairs,
            copies,
            arcs,
            m,
            max_arity,
            max_weight,
            out,
            emit: _,
        } => {
            let family = match kind {
                GenKind::SymmetricDigraph => Family::SymmetricDigraph { n: *n },
                GenKind::RandomOriented => Family::RandomOriented {
                    n: *n,
                    arcs: arcs.unwrap_or(n * n.saturating_sub(1) / 4),
                    max_weight: *max_weight,
                },
                GenKind::CancellingPairsLin2 => Family::CancellingPairsLin2 {
                    n: *n,
                    pairs: *pairs,
                },
                GenKind::RandomLin2 => Family::RandomLin2 {
                    n: *n,
                    m: *m,
                    max_arity: *max_arity,
                    max_weight: *max_weight,
                },
                GenKind::CompleteRcnf => Family::CompleteRcnf { r: *r },
                GenKind::DisjointCompleteRcnf => Family::DisjointCompleteRcnf {
                    r: *r,
                    copies: *copies,
                },
                GenKind::Remark2 => Family::Remark2 { n: *n },
            };
            let text = write_instance(&family.generate(*seed)?);
            let mut res = RunResult::new(name);
            res.push("kind", family.name());
            res.push("seed", seed);
            res.push("tight", family.is_tight());
            if let Some(path) = out {
                std::fs::write(path, &text).map_err(|e| {
                    Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
                })?;
                res.push("out", path.display());
            }
            res.instance = Some(text);
            Ok(res)
        }
    }
}

/// Resolves `--case` on the merged system. Explicit cases use the system's
/// own odd set, arity or occurrence bound.
fn case_tag(s: &tightbound_core::Lin2System, k: u64, case: CaseArg) -> Result<CaseTag, Error> {
    let merged = merge_duplicates(s);
    let stats = system_stats(&merged);
    Ok(match case {
        CaseArg::Auto => auto_case(s, k),
        CaseArg::OddSet => CaseTag::OddSet(find_odd_set(&merged).ok_or_else(|| {
            Error::Refused("odd-set condition fails: no set meets every equation oddly".into())
        })?),
        CaseArg::Arity => CaseTag::BoundedArity(stats.max_arity.max(1)),
        CaseArg::Occurrence => CaseTag::BoundedOccurrence(stats.max_occurrence.max(1)),
        CaseArg::General => CaseTag::General,
    })
}

fn describe_case(tag: &CaseTag) -> String {
    match tag {
        CaseTag::OddSet(u) => format!(
            "{} U={}",
            tag.name(),
            u.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        CaseTag::BoundedArity(r) => format!("{} r={r}", tag.name()),
        CaseTag::BoundedOccurrence(rho) => format!("{} rho={rho}", tag.name()),
        CaseTag::General => tag.name().to_string(),
    }
}

fn moments(instance: &Instance, cap: Option<usize>) -> Result<RunResult, Error> {
    let mut res = RunResult::new("moments");
    res.push("kind", instance.kind());
    let (dist, claim): (ExactDistribution, Result<_, Error>) = match instance {
        Instance::Digraph(g) => {
            let reduced = reduce_two_cycles(g);
            if reduced != *g {
                res.notes
                    .push("2-cycles cancelled before computing moments".into());
            }
            let g = reduced;
            let d = dist_linord(&g, cap.unwrap_or(ORDER_CAP))?;
            (d, verify_second_moment_claims(MomentInstance::Linord(&g)))
        }
        Instance::Lin2(s) => {
            let merged = merge_duplicates(s);
            if merged != *s {
                res.notes
                    .push("duplicate equations merged before computing moments".into());
            }
            let d = dist_lin2(&merged, cap.unwrap_or(ASSIGNMENT_CAP))?;
            (
                d,
                verify_second_moment_claims(MomentInstance::Lin2(&merged)),
            )
        }
        Instance::Cnf(f) => {
            let d = dist_rsat(f, cap.unwrap_or(ASSIGNMENT_CAP))?;
            (d, verify_second_moment_claims(MomentInstance::Rsat(f)))
        }
    };
    let m = moment_report(&dist);
    res.push("scale", dist.scale());
    res.push("sample_space", dist.total());
    res.push("support", dist.mass().len());
    res.push("e1", &m.e1);
    res.push("e2", &m.e2);
    res.push("e4", &m.e4);
    res.push("symmetric", m.symmetric);
    let sym = verify_symmetric_lemma(&dist);
    if let (Some(p), Some(h)) = (&sym.tail_probability, sym.holds) {
        res.push("symmetric_tail.prob", p);
        res.push("symmetric_tail.holds", h);
    }
    match claim {
        Ok(c) => {
            res.push("second_moment.claim", c.claim);
            res.push("second_moment.bound", &c.bound);
            res.push("second_moment.holds", c.holds);
        }
        Err(e) => res.push("second_moment.skipped", e),
    }
    if !m.e2.is_zero() {
        let b = &m.e4 / (&m.e2 * &m.e2);
        match verify_tail_lemma(&dist, &b) {
            Ok(t) => {
                res.push("tail.b", &t.b);
                res.push("tail.prob", &t.tail_probability);
                res.push("tail.holds", t.holds);
            }
            Err(e) => res.push("tail.skipped", e),
        }
    }
    Ok(res)
}
