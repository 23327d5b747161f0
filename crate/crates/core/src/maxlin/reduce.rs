use super::{Equation, Lin2System};
use crate::gf2;

/// Rule 3: the system restricted to a maximal independent set of columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReduction {
    /// Over `basis.len()` variables; variable `i` stands for `basis[i]`.
    /// Equation `j` corresponds to equation `j` of the input.
    pub reduced: Lin2System,
    /// Original indices of the kept variables, increasing.
    pub basis: Vec<usize>,
    /// For every eliminated variable, the basis variables whose columns sum
    /// to its column.
    pub recipe: Vec<(usize, Vec<usize>)>,
    original_vars: usize,
}

impl RankReduction {
    pub fn original_var_count(&self) -> usize {
        self.original_vars
    }

    /// Copies `y` onto the basis variables and sets every other variable to
    /// 0. The result satisfies exactly the equations `y` satisfies in
    /// `reduced`.
    pub fn lift(&self, y: &[bool]) -> Vec<bool> {
        assert_eq!(y.len(), self.basis.len(), "assignment must cover the basis");
        let mut z = vec![false; self.original_vars];
        for (slot, &v) in self.basis.iter().enumerate() {
            z[v] = y[slot];
        }
        z
    }
}

/// Deletes every variable outside a greedy-leftmost column basis of the
/// coefficient matrix. The column space, and so the set of achievable
/// satisfaction patterns, is unchanged.
pub fn rank_reduce(s: &Lin2System) -> RankReduction {
    let matrix = s.coefficient_matrix();
    let basis = gf2::independent_columns(&matrix);
    let mut slot = vec![usize::MAX; s.var_count()];
    for (i, &v) in basis.iter().enumerate() {
        slot[v] = i;
    }
    let recipe = (0..s.var_count())
        .filter(|&v| slot[v] == usize::MAX)
        .map(|v| {
            let combo = gf2::express_in_basis(&matrix, &basis, v)
                .expect("every column lies in the span of a maximal independent set");
            (v, combo)
        })
        .collect();
    let equations = s
        .equations()
        .iter()
        .map(|e| {
            let vars: Vec<usize> = e
                .vars()
                .iter()
                .filter(|&&v| slot[v] != usize::MAX)
                .map(|&v| slot[v])
                .collect();
            // A row whose basis part vanished would make every column zero in
            // that row, which a nonempty equation rules out.
            Equation::new(vars, e.rhs(), e.weight()).expect("basis meets every equation")
        })
        .collect();
    RankReduction {
        reduced: Lin2System::new(basis.len(), equations).expect("weights unchanged"),
        basis,
        recipe,
        original_vars: s.var_count(),
    }
}

pub fn lift_assignment(red: &RankReduction, y: &[bool]) -> Vec<bool> {
    red.lift(y)
}

/// Equations dropped together when `var` was removed by Rule 5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovedBatch {
    pub var: usize,
    pub equations: Vec<Equation>,
}

/// Rule 5 applied as long as possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceReduction {
    /// Same variable numbering as the input.
    pub reduced: Lin2System,
    /// In removal order.
    pub removed: Vec<RemovedBatch>,
}

impl OccurrenceReduction {
    /// Extends an assignment for `reduced` to the input system without
    /// lowering `X`.
    ///
    /// Variables that only occurred in removed equations start at 0. Batches
    /// are then revisited in reverse removal order; at that point every other
    /// variable of a batch is fixed (a variable removed earlier cannot occur
    /// in a later batch), so the batch variable is set to whichever value
    /// makes the batch's own `X` nonnegative, preferring 0.
    pub fn lift(&self, z: &[bool]) -> Vec<bool> {
        let n = self.reduced.var_count();
        assert_eq!(z.len(), n, "assignment length differs from variable count");
        let mut keep = vec![false; n];
        for v in self.reduced.occurring_vars() {
            keep[v] = true;
        }
        let mut out: Vec<bool> = (0..n).map(|v| keep[v] && z[v]).collect();
        for batch in self.removed.iter().rev() {
            out[batch.var] = false;
            let with_zero: i64 = batch.equations.iter().map(|e| e.signed_value(&out)).sum();
            if with_zero < 0 {
                // every batch equation contains the variable, so flipping it
                // negates the batch value
                out[batch.var] = true;
            }
        }
        out
    }
}

/// Rule 5 with `f(k, r) = 16(2k−1)²·64^r`.
pub fn occurrence_reduce(s: &Lin2System, k: u64, r: usize) -> OccurrenceReduction {
    let f = super::arity_threshold(k, r);
    match u128::try_from(&f) {
        Ok(f) => occurrence_reduce_with_threshold(s, f),
        // m can never reach a threshold this large
        Err(_) => OccurrenceReduction {
            reduced: s.clone(),
            removed: Vec::new(),
        },
    }
}

/// While some variable occurs in at most `m − threshold` equations, removes
/// all equations containing it. The least-occurring variable is picked first,
/// lowest index on ties.
pub fn occurrence_reduce_with_threshold(s: &Lin2System, threshold: u128) -> OccurrenceReduction {
    let mut equations: Vec<Equation> = s.equations().to_vec();
    let mut removed = Vec::new();
    loop {
        let m = equations.len() as u128;
        if m < threshold {
            break;
        }
        let mut occ = vec![0usize; s.var_count()];
        for e in &equations {
            for &v in e.vars() {
                occ[v] += 1;
            }
        }
        let pick = (0..s.var_count())
            .filter(|&v| occ[v] > 0 && occ[v] as u128 <= m - threshold)
            .min_by_key(|&v| (occ[v], v));
        let Some(var) = pick else { break };
        let (gone, kept): (Vec<Equation>, Vec<Equation>) =
            equations.into_iter().partition(|e| e.vars().contains(&var));
        equations = kept;
        removed.push(RemovedBatch {
            var,
            equations: gone,
        });
    }
    OccurrenceReduction {
        reduced: Lin2System::new(s.var_count(), equations).expect("subset of a valid system"),
        removed,
    }
}
