//! Plain-text instance formats.
//!
//! ```text
//! p digraph <n> <m>      a <u> <v> <w>
//! p lin2 <n> <m>         e <w> <b> <i1> ... <it>
//! p ecnf <n> <m> <r>     <l1> ... <lr> 0
//! ```
//!
//! Vertices, variables and literals are 1-based in files and 0-based in
//! memory. Lines starting with `c` and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linord::WeightedDigraph;
use crate::maxlin::{Equation, Lin2System};
use crate::rsat::{Clause, ExactCnfFormula, Literal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Digraph(WeightedDigraph),
    Lin2(Lin2System),
    Cnf(ExactCnfFormula),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Digraph(_) => "digraph",
            Instance::Lin2(_) => "lin2",
            Instance::Cnf(_) => "ecnf",
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| err(line, e.to_string())
}

fn num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| err(line, format!("expected {what}, found `{tok}`")))
}

fn index(tok: &str, line: usize, n: usize, what: &str) -> Result<usize> {
    let i: usize = num(tok, line, what)?;
    if i == 0 || i > n {
        return Err(err(line, format!("{what} {i} outside 1..={n}")));
    }
    Ok(i - 1)
}

fn positive_weight(tok: &str, line: usize) -> Result<u64> {
    let w: i128 = num(tok, line, "weight")?;
    if w <= 0 {
        return Err(err(line, format!("weight {w} is not positive")));
    }
    u64::try_from(w).map_err(|_| err(line, "weight too large"))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut records = text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('c')).then_some((i + 1, l))
    });
    let (hline, header) = records
        .next()
        .ok_or_else(|| err(0, "missing problem line"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.first() != Some(&"p") {
        return Err(err(hline, "expected problem line `p <format> ...`"));
    }
    let body: Vec<(usize, Vec<&str>)> = records
        .map(|(i, l)| (i, l.split_whitespace().collect()))
        .collect();
    let check_count = |m: usize| {
        if body.len() != m {
            Err(err(
                hline,
                format!("header declares {m} records, body has {}", body.len()),
            ))
        } else {
            Ok(())
        }
    };
    match head.get(1).copied() {
        Some("digraph") => {
            if head.len() != 4 {
                return Err(err(hline, "expected `p digraph <n> <m>`"));
            }
            let n: usize = num(head[2], hline, "vertex count")?;
            check_count(num(head[3], hline, "arc count")?)?;
            let mut arcs = Vec::with_capacity(body.len());
            for (line, toks) in &body {
                let line = *line;
                if toks.len() != 4 || toks[0] != "a" {
                    return Err(err(line, "expected `a <u> <v> <w>`"));
                }
                let u = index(toks[1], line, n, "vertex")?;
                let v = index(toks[2], line, n, "vertex")?;
                if u == v {
                    return Err(err(line, format!("loop at vertex {}", u + 1)));
                }
                arcs.push((u, v, positive_weight(toks[3], line)?));
            }
            WeightedDigraph::new(n, arcs)
                .map(Instance::Digraph)
                .map_err(at_line(hline))
        }
        Some("lin2") => {
            if head.len() != 4 {
                return Err(err(hline, "expected `p lin2 <n> <m>`"));
            }
            let n: usize = num(head[2], hline, "variable count")?;
            check_count(num(head[3], hline, "equation count")?)?;
            let mut equations = Vec::with_capacity(body.len());
            for (line, toks) in &body {
                let line = *line;
                if toks.len() < 4 || toks[0] != "e" {
                    return Err(err(line, "expected `e <w> <b> <i1> ... <it>`"));
                }
                let w = positive_weight(toks[1], line)?;
                let rhs = match toks[2] {
                    "0" => false,
                    "1" => true,
                    other => {
                        return Err(err(
                            line,
                            format!("right-hand side `{other}` is not 0 or 1"),
                        ))
                    }
                };
                let vars = toks[3..]
                    .iter()
                    .map(|t| index(t, line, n, "variable"))
                    .collect::<Result<Vec<_>>>()?;
                equations.push(Equation::new(vars, rhs, w).map_err(at_line(line))?);
            }
            Lin2System::new(n, equations)
                .map(Instance::Lin2)
                .map_err(at_line(hline))
        }
        Some("ecnf") => {
            if head.len() != 5 {
                return Err(err(hline, "expected `p ecnf <n> <m> <r>`"));
            }
            let n: usize = num(head[2], hline, "variable count")?;
            check_count(num(head[3], hline, "clause count")?)?;
            let r: usize = num(head[4], hline, "clause width")?;
            let mut clauses = Vec::with_capacity(body.len());
            for (line, toks) in &body {
                let line = *line;
                if toks.last() != Some(&"0") {
                    return Err(err(line, "clause must end with 0"));
                }
                let lits = toks[..toks.len() - 1]
                    .iter()
                    .map(|t| {
                        let l: i64 = num(t, line, "literal")?;
                        if l == 0 {
                            return Err(err(line, "0 inside clause"));
                        }
                        index(&l.unsigned_abs().to_string(), line, n, "variable")?;
                        Ok(Literal::from_dimacs(l).expect("nonzero literal"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if lits.len() != r {
                    return Err(err(
                        line,
                        format!("clause width {} differs from r = {r}", lits.len()),
                    ));
                }
                clauses.push(Clause::new(lits).map_err(at_line(line))?);
            }
            ExactCnfFormula::new(n, r, clauses)
                .map(Instance::Cnf)
                .map_err(at_line(hline))
        }
        _ => Err(err(hline, "unknown format; expected digraph, lin2 or ecnf")),
    }
}

pub fn write_digraph(g: &WeightedDigraph) -> String {
    let mut out = format!("p digraph {} {}\n", g.vertex_count(), g.arc_count());
    for a in g.arcs() {
        let _ = writeln!(out, "a {} {} {}", a.tail + 1, a.head + 1, a.weight);
    }
    out
}

pub fn write_lin2(s: &Lin2System) -> String {
    let mut out = format!("p lin2 {} {}\n", s.var_count(), s.equations().len());
    for e in s.equations() {
        let _ = write!(out, "e {} {}", e.weight(), u8::from(e.rhs()));
        for v in e.vars() {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

pub fn write_cnf(f: &ExactCnfFormula) -> String {
    let mut out = format!(
        "p ecnf {} {} {}\n",
        f.var_count(),
        f.clauses().len(),
        f.width()
    );
    for c in f.clauses() {
        for l in c.literals() {
            let _ = write!(out, "{} ", l.to_dimacs());
        }
        out.push_str("0\n");
    }
    out
}

pub fn write_instance(instance: &Instance) -> String {
    match instance {
        Instance::Digraph(g) => write_digraph(g),
        Instance::Lin2(s) => write_lin2(s),
        Instance::Cnf(f) => write_cnf(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err_line(text: &str) -> usize {
        match parse_instance(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn examples() {
        let Instance::Digraph(g) = parse_instance("p digraph 2 1\na 1 2 2\n").unwrap() else {
            panic!()
        };
        assert_eq!((g.vertex_count(), g.weight(0, 1)), (2, Some(2)));

        let Instance::Lin2(s) = parse_instance("p lin2 2 2\ne 1 1 1\ne 2 1 1 2\n").unwrap() else {
            panic!()
        };
        let expected =
            Lin2System::from_triples(2, [(vec![0], true, 1), (vec![0, 1], true, 2)]).unwrap();
        assert_eq!(s, expected);

        let Instance::Cnf(f) = parse_instance("p ecnf 3 2 2\n1 2 0\n-1 3 0\n").unwrap() else {
            panic!()
        };
        assert_eq!(
            f,
            ExactCnfFormula::from_dimacs(3, 2, &[vec![1, 2], vec![-1, 3]]).unwrap()
        );
    }

    #[test]
    fn comments_and_parallel_arcs() {
        let text = "c hello\np digraph 3 3\nc arc list\na 1 2 1\n\na 1 2 4\na 2 3 1\n";
        let Instance::Digraph(g) = parse_instance(text).unwrap() else {
            panic!()
        };
        assert_eq!(g.weight(0, 1), Some(5));
        assert_eq!(g.arc_count(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_err_line("p digraph 2 1\na 1 1 2\n"), 2);
        assert_eq!(parse_err_line("p digraph 2 1\na 1 2 0\n"), 2);
        assert_eq!(parse_err_line("p digraph 2 1\na 1 2 -3\n"), 2);
        assert_eq!(parse_err_line("c x\np digraph 2 2\na 1 2 1\n"), 2);
        assert_eq!(parse_err_line("p lin2 2 1\ne 1 2 1\n"), 2);
        assert_eq!(parse_err_line("p lin2 2 2\ne 1 1 1\ne 1 1 1 1\n"), 3);
        assert_eq!(parse_err_line("p lin2 2 1\ne 1 1 3\n"), 2);
        assert_eq!(parse_err_line("p ecnf 3 1 2\n1 2 3 0\n"), 2);
        assert_eq!(parse_err_line("p ecnf 3 1 2\n1 -1 0\n"), 2);
        assert_eq!(parse_err_line("p ecnf 3 1 2\n1 2\n"), 2);
        assert_eq!(parse_err_line("p graph 3 1\n"), 1);
        assert_eq!(parse_err_line("a 1 2 1\n"), 1);
        assert!(parse_instance("c only\n").is_err());
    }

    #[test]
    fn round_trip() {
        let instances = [
            Instance::Digraph(WeightedDigraph::new(4, [(0, 1, 3), (2, 1, 1), (3, 0, 7)]).unwrap()),
            Instance::Lin2(
                Lin2System::from_triples(5, [(vec![4, 0], false, 3), (vec![2], true, 1)]).unwrap(),
            ),
            Instance::Cnf(
                ExactCnfFormula::from_dimacs(4, 3, &[vec![1, -2, 4], vec![-3, -1, 2]]).unwrap(),
            ),
        ];
        for inst in instances {
            assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
        }
    }
}
