use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use tightbound_core::format::{write_cnf, write_digraph, write_lin2};
use tightbound_core::{DecisionOutcome, KernelInstance, ThresholdCheck, Witness};

pub const REFUSED: &str = "REFUSED";
pub const ERROR: &str = "ERROR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdOut {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl From<&ThresholdCheck> for ThresholdOut {
    fn from(t: &ThresholdCheck) -> Self {
        Self {
            name: t.name.to_string(),
            lhs: t.lhs.to_string(),
            rhs: t.rhs.to_string(),
            holds: t.holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessOut {
    /// 1-based vertices from first to last.
    Order(Vec<usize>),
    /// One character per variable, `1` for true.
    Assignment(String),
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Order(o) => WitnessOut::Order(o.sequence().iter().map(|v| v + 1).collect()),
            Witness::Assignment(z) => {
                WitnessOut::Assignment(z.iter().map(|&b| if b { '1' } else { '0' }).collect())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelOut {
    pub stats: BTreeMap<String, usize>,
    /// The kernel in the instance text format.
    pub instance: String,
}

impl From<&KernelInstance> for KernelOut {
    fn from(k: &KernelInstance) -> Self {
        let instance = match k {
            KernelInstance::Digraph(g) => write_digraph(g),
            KernelInstance::Lin2(s) => write_lin2(s),
            KernelInstance::Cnf(f) => write_cnf(f),
        };
        Self {
            stats: k
                .size_stats()
                .into_iter()
                .map(|(n, v)| (n.to_string(), v))
                .collect(),
            instance,
        }
    }
}

/// Outcome of one command. `verdict` is absent for `moments` and `gen`,
/// which report values instead of deciding.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunResult {
    pub command: String,
    pub verdict: Option<String>,
    pub thresholds: Vec<ThresholdOut>,
    pub witness: Option<WitnessOut>,
    pub best_value: Option<i64>,
    pub kernel: Option<KernelOut>,
    /// Command-specific values in output order.
    pub values: Vec<(String, String)>,
    pub notes: Vec<String>,
    pub error: Option<String>,
    /// Generated instance text (`gen` only); not part of the text record.
    pub instance: Option<String>,
    /// Exact solve run after a refusal, for information only.
    pub diagnostic: Option<Box<RunResult>>,
    pub elapsed_ms: f64,
}

impl RunResult {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            verdict: None,
            thresholds: Vec::new(),
            witness: None,
            best_value: None,
            kernel: None,
            values: Vec::new(),
            notes: Vec::new(),
            error: None,
            instance: None,
            diagnostic: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn from_outcome(command: &str, out: &DecisionOutcome) -> Self {
        let mut r = Self::new(command);
        r.verdict = Some(out.verdict.as_str().to_string());
        r.thresholds = out.thresholds.iter().map(ThresholdOut::from).collect();
        r.witness = out.witness.as_ref().map(WitnessOut::from);
        r.best_value = out.best_value;
        r.kernel = out.kernel.as_ref().map(KernelOut::from);
        r.notes = out.notes.clone();
        r
    }

    pub fn failed(command: &str, verdict: &str, message: String) -> Self {
        let mut r = Self::new(command);
        r.verdict = Some(verdict.to_string());
        r.error = Some(message);
        r
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.values.push((key.into(), value.to_string()));
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict.as_deref() {
            Some(REFUSED) | Some(ERROR) => 2,
            _ if self.error.is_some() => 2,
            _ => 0,
        }
    }

    /// Line-oriented `key=value` record.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, "");
        out
    }

    fn render_into(&self, out: &mut String, prefix: &str) {
        let mut line = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(out, "{prefix}{k}={v}");
        };
        line("command", &self.command);
        if let Some(v) = &self.verdict {
            line("verdict", v);
        }
        if let Some(e) = &self.error {
            line("error", e);
        }
        for t in &self.thresholds {
            line(
                "threshold",
                &format!("{} lhs={} rhs={} holds={}", t.name, t.lhs, t.rhs, t.holds),
            );
        }
        if let Some(b) = self.best_value {
            line("best_value", &b);
        }
        match &self.witness {
            Some(WitnessOut::Order(o)) => line(
                "witness.order",
                &o.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            Some(WitnessOut::Assignment(a)) => line("witness.assignment", a),
            None => {}
        }
        if let Some(k) = &self.kernel {
            for (name, v) in &k.stats {
                line(&format!("kernel.{name}"), v);
            }
        }
        for (k, v) in &self.values {
            line(k, v);
        }
        for n in &self.notes {
            line("note", n);
        }
        line("time_ms", &format!("{:.3}", self.elapsed_ms));
        if let Some(d) = &self.diagnostic {
            d.render_into(out, &format!("{prefix}diagnostic."));
        }
    }
}
