//! Maximum-weight acyclic subdigraph above the `W/2` bound.
//!
//! An acyclic subdigraph is the set of forward arcs of some vertex order, so
//! everything here works with orders. The objective is tracked as the integer
//! `2X = 2·(forward weight) − W`, which is positive exactly when an order
//! beats half the total weight.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::outcome::{
    DecisionOutcome, KernelInstance, SolveConfig, ThresholdCheck, Verdict, Witness,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub weight: u64,
}

/// Loop-free digraph with positive integer arc weights and at most one arc
/// per ordered vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    /// Sorted by `(tail, head)`.
    arcs: Vec<Arc>,
    total_weight: u64,
}

impl WeightedDigraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            arcs: Vec::new(),
            total_weight: 0,
        }
    }

    /// Builds a digraph on vertices `0..n`. Parallel arcs in the same
    /// direction are merged by summing their weights.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let mut merged: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (tail, head, weight) in arcs {
            if tail >= n || head >= n {
                return Err(Error::InvalidInstance(format!(
                    "arc {tail}->{head} references a vertex outside 0..{n}"
                )));
            }
            if tail == head {
                return Err(Error::InvalidInstance(format!("loop at vertex {tail}")));
            }
            if weight == 0 {
                return Err(Error::InvalidInstance(format!(
                    "arc {tail}->{head} has zero weight"
                )));
            }
            let slot = merged.entry((tail, head)).or_insert(0);
            *slot = slot
                .checked_add(weight)
                .ok_or(Error::Overflow("arc weight"))?;
        }
        let arcs: Vec<Arc> = merged
            .into_iter()
            .map(|((tail, head), weight)| Arc { tail, head, weight })
            .collect();
        let total_weight = arcs
            .iter()
            .try_fold(0u64, |acc, a| acc.checked_add(a.weight))
            .filter(|&w| w <= (i64::MAX / 2) as u64)
            .ok_or(Error::Overflow("total weight"))?;
        Ok(Self {
            n,
            arcs,
            total_weight,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn weight(&self, tail: usize, head: usize) -> Option<u64> {
        self.arcs
            .binary_search_by(|a| (a.tail, a.head).cmp(&(tail, head)))
            .ok()
            .map(|i| self.arcs[i].weight)
    }

    pub fn is_unit_weight(&self) -> bool {
        self.arcs.iter().all(|a| a.weight == 1)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for a in &self.arcs {
            deg[a.tail] += 1;
            deg[a.head] += 1;
        }
        deg
    }

    /// Vertices incident with at least one arc, in increasing order.
    pub fn active_vertices(&self) -> Vec<usize> {
        let deg = self.degrees();
        (0..self.n).filter(|&v| deg[v] > 0).collect()
    }

    fn without_vertex(&self, v: usize) -> Self {
        let arcs: Vec<Arc> = self
            .arcs
            .iter()
            .copied()
            .filter(|a| a.tail != v && a.head != v)
            .collect();
        let total_weight = arcs.iter().map(|a| a.weight).sum();
        Self {
            n: self.n,
            arcs,
            total_weight,
        }
    }

    /// Forward weight of `order`.
    pub fn forward_weight(&self, order: &LinearOrder) -> u64 {
        self.arcs
            .iter()
            .filter(|a| order.position(a.tail) < order.position(a.head))
            .map(|a| a.weight)
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigraphStats {
    pub total_weight: u64,
    pub squared_weight: u128,
    pub arc_count: usize,
    /// No pair of opposite arcs.
    pub oriented: bool,
}

pub fn digraph_stats(g: &WeightedDigraph) -> Result<DigraphStats> {
    let squared_weight = g
        .arcs
        .iter()
        .try_fold(0u128, |acc, a| {
            let w = u128::from(a.weight);
            acc.checked_add(w * w)
        })
        .ok_or(Error::Overflow("sum of squared weights"))?;
    let oriented = g.arcs.iter().all(|a| g.weight(a.head, a.tail).is_none());
    Ok(DigraphStats {
        total_weight: g.total_weight,
        squared_weight,
        arc_count: g.arcs.len(),
        oriented,
    })
}

/// Bijection from vertices to positions `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    positions: Vec<usize>,
}

impl LinearOrder {
    pub fn identity(n: usize) -> Self {
        Self {
            positions: (0..n).collect(),
        }
    }

    /// Order that lists `sequence[0]` first.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self> {
        let n = sequence.len();
        let mut positions = vec![usize::MAX; n];
        for (pos, &v) in sequence.iter().enumerate() {
            if v >= n || positions[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "sequence is not a permutation of 0..{n}"
                )));
            }
            positions[v] = pos;
        }
        Ok(Self { positions })
    }

    pub fn from_positions(positions: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; positions.len()];
        for &p in &positions {
            if p >= positions.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter(
                    "positions do not form a permutation".into(),
                ));
            }
        }
        Ok(Self { positions })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, v: usize) -> usize {
        self.positions[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Vertices listed from first to last.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.positions.len()];
        for (v, &p) in self.positions.iter().enumerate() {
            seq[p] = v;
        }
        seq
    }

    pub fn reversed(&self) -> Self {
        let n = self.positions.len();
        Self {
            positions: self.positions.iter().map(|&p| n - 1 - p).collect(),
        }
    }
}

/// Rule 1: cancel every directed 2-cycle against itself.
pub fn reduce_two_cycles(g: &WeightedDigraph) -> WeightedDigraph {
    let arcs = g
        .arcs
        .iter()
        .filter_map(|a| match g.weight(a.head, a.tail) {
            None => Some((a.tail, a.head, a.weight)),
            Some(back) if a.weight > back => Some((a.tail, a.head, a.weight - back)),
            Some(_) => None,
        });
    WeightedDigraph::new(g.n, arcs.collect::<Vec<_>>())
        .expect("cancelling 2-cycles keeps a valid digraph")
}

/// Returns `2X = 2·forward − W` for `order`.
pub fn x_value(g: &WeightedDigraph, order: &LinearOrder) -> i64 {
    assert_eq!(order.len(), g.n, "order size differs from vertex count");
    2 * g.forward_weight(order) as i64 - g.total_weight as i64
}

/// Maximum forward weight over all orders, with an order attaining it.
///
/// Dynamic programming over subsets of the non-isolated vertices: the best
/// value for a prefix set `S` extended by `v` gains the weight of arcs from
/// `S` into `v`. Isolated vertices are appended at the end of the order.
pub fn exact_max_acyclic(g: &WeightedDigraph, cfg: &SolveConfig) -> Result<(u64, LinearOrder)> {
    let active = g.active_vertices();
    let a = active.len();
    if a > cfg.cap || a >= usize::BITS as usize {
        return Err(Error::CapExceeded {
            what: "vertex",
            size: a,
            cap: cfg.cap,
        });
    }
    let mut local = vec![usize::MAX; g.n];
    for (i, &v) in active.iter().enumerate() {
        local[v] = i;
    }
    // in_arcs[v] = (mask bit of tail, weight)
    let mut in_arcs: Vec<Vec<(usize, u64)>> = vec![Vec::new(); a];
    for arc in &g.arcs {
        in_arcs[local[arc.head]].push((1usize << local[arc.tail], arc.weight));
    }
    let gain = |set: usize, v: usize| -> u64 {
        in_arcs[v]
            .iter()
            .filter(|(bit, _)| set & bit != 0)
            .map(|&(_, w)| w)
            .sum()
    };

    let full = (1usize << a) - 1;
    let mut best = vec![0u64; full + 1];
    for set in 1..=full {
        let mut rest = set;
        let mut top = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prefix = set & !(1 << v);
            top = top.max(best[prefix] + gain(prefix, v));
        }
        best[set] = top;
    }

    let mut sequence = Vec::with_capacity(g.n);
    let mut set = full;
    while set != 0 {
        let v = (0..a)
            .find(|&v| {
                set >> v & 1 == 1 && {
                    let prefix = set & !(1 << v);
                    best[prefix] + gain(prefix, v) == best[set]
                }
            })
            .expect("some vertex attains the subset optimum");
        sequence.push(active[v]);
        set &= !(1 << v);
    }
    sequence.reverse();
    sequence.extend((0..g.n).filter(|&v| local[v] == usize::MAX));
    let order = LinearOrder::from_sequence(&sequence)?;
    Ok((best[full], order))
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "k must be a positive integer".into(),
        ));
    }
    Ok(())
}

/// `12k²`, the squared-weight level above which the bound alone answers YES.
pub fn loalb_threshold(k: u64) -> BigUint {
    BigUint::from(12u32) * BigUint::from(k) * BigUint::from(k)
}

/// `W⁽²⁾ ≥ 12k²`.
pub fn loalb_bound_check(squared_weight: u128, k: u64) -> ThresholdCheck {
    ThresholdCheck::new("squared_weight>=12k^2", squared_weight, loalb_threshold(k))
}

/// Decides whether some acyclic subdigraph has weight at least `W/2 + k`.
///
/// A YES_WITNESS order is valid for `g` itself: cancelling 2-cycles leaves
/// `X` unchanged for every order.
pub fn decide_loalb(g: &WeightedDigraph, k: u64, cfg: &SolveConfig) -> Result<DecisionOutcome> {
    check_k(k)?;
    let reduced = reduce_two_cycles(g);
    let stats = digraph_stats(&reduced)?;
    let bound = loalb_bound_check(stats.squared_weight, k);
    if bound.holds() {
        let mut out = DecisionOutcome::new(Verdict::YesByBound);
        out.thresholds.push(bound);
        return Ok(out);
    }

    let mut thresholds = vec![bound];
    thresholds.push(ThresholdCheck::new(
        "12k^2>=kernel_arcs+1",
        loalb_threshold(k),
        BigUint::from(stats.arc_count + 1),
    ));
    let mut out = match exact_max_acyclic(&reduced, cfg) {
        Ok((forward, order)) => {
            let two_x = 2 * forward as i64 - reduced.total_weight() as i64;
            let mut out = if two_x >= 2 * k as i64 {
                let mut out = DecisionOutcome::new(Verdict::YesWitness);
                out.witness = Some(Witness::Order(order));
                out
            } else {
                DecisionOutcome::new(Verdict::No)
            };
            out.best_value = Some(two_x);
            out
        }
        Err(Error::CapExceeded { size, cap, .. }) => {
            let mut out = DecisionOutcome::new(Verdict::Kernel);
            out.notes
                .push(format!("kernel has {size} active vertices, cap is {cap}"));
            out.kernel = Some(KernelInstance::Digraph(reduced));
            out
        }
        Err(e) => return Err(e),
    };
    out.thresholds = thresholds;
    Ok(out)
}

/// A vertex removed by Rule 2, with its weights towards the vertices that
/// were still present when it was removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrunedVertex {
    pub vertex: usize,
    pub out_weight: u64,
    pub in_weight: u64,
}

/// Result of applying Rule 2 as long as possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule2Reduction {
    /// Remaining digraph on the same vertex numbering; pruned vertices are
    /// isolated in it.
    pub residual: WeightedDigraph,
    /// In deletion order.
    pub pruned: Vec<PrunedVertex>,
}

impl Rule2Reduction {
    /// Applies Rule 2 to an oriented graph: while some vertex `i` has
    /// `arc_count − 12k² ≥ degree(i)`, delete the one of smallest degree
    /// (lowest index on ties).
    pub fn apply(g: &WeightedDigraph, k: u64) -> Self {
        let floor = 12u128 * u128::from(k) * u128::from(k);
        let mut residual = g.clone();
        let mut alive = vec![true; g.n];
        let mut pruned = Vec::new();
        loop {
            let arcs = residual.arc_count() as u128;
            if arcs < floor {
                break;
            }
            let deg = residual.degrees();
            let pick = (0..g.n)
                .filter(|&v| alive[v] && arcs - floor >= deg[v] as u128)
                .min_by_key(|&v| (deg[v], v));
            let Some(vertex) = pick else { break };
            let (mut out_weight, mut in_weight) = (0, 0);
            for a in residual.arcs() {
                if a.tail == vertex {
                    out_weight += a.weight;
                } else if a.head == vertex {
                    in_weight += a.weight;
                }
            }
            pruned.push(PrunedVertex {
                vertex,
                out_weight,
                in_weight,
            });
            alive[vertex] = false;
            residual = residual.without_vertex(vertex);
        }
        Self { residual, pruned }
    }

    /// Turns an order of the residual into an order of the original graph
    /// whose `X` is at least as large: pruned vertices go back in reverse
    /// deletion order, in front when their outgoing weight is at least their
    /// incoming weight and at the back otherwise.
    pub fn lift(&self, residual_order: &LinearOrder) -> LinearOrder {
        lift_pruned(residual_order, &self.pruned)
    }
}

/// See [`Rule2Reduction::lift`]. `pruned` is in deletion order; those vertices
/// are dropped from `base` before being reinserted.
pub fn lift_pruned(base: &LinearOrder, pruned: &[PrunedVertex]) -> LinearOrder {
    let mut is_pruned = vec![false; base.len()];
    for p in pruned {
        is_pruned[p.vertex] = true;
    }
    let mut sequence: VecDeque<usize> = base
        .sequence()
        .into_iter()
        .filter(|&v| !is_pruned[v])
        .collect();
    for p in pruned.iter().rev() {
        if p.out_weight >= p.in_weight {
            sequence.push_front(p.vertex);
        } else {
            sequence.push_back(p.vertex);
        }
    }
    LinearOrder::from_sequence(&Vec::from(sequence)).expect("lifting keeps a permutation")
}

/// Finds an order with forward weight at least `W/2 + k` on the 2-cycle
/// reduced graph, or `None` when the instance is NO.
///
/// Rule 2 shrinks the instance to fewer than `3·12k²` arcs, the residual is
/// solved exactly and the result is lifted back. Because cancelling 2-cycles
/// preserves `X`, the order is also a solution for `g`.
pub fn solve_loalb_faithful(
    g: &WeightedDigraph,
    k: u64,
    cfg: &SolveConfig,
) -> Result<Option<LinearOrder>> {
    check_k(k)?;
    let reduced = reduce_two_cycles(g);
    let rule2 = Rule2Reduction::apply(&reduced, k);
    let (forward, residual_order) = exact_max_acyclic(&rule2.residual, cfg)?;
    let two_x = 2 * forward as i64 - rule2.residual.total_weight() as i64;
    if two_x < 2 * k as i64 {
        debug_assert!(
            rule2.pruned.is_empty(),
            "Rule 2 residual must stay a YES instance"
        );
        return Ok(None);
    }
    let order = rule2.lift(&residual_order);
    debug_assert!(x_value(&reduced, &order) >= 2 * k as i64);
    Ok(Some(order))
}

/// Decides whether a unit-weight digraph has a feedback arc set of at most
/// `|A|/2 − k` arcs. The backward arcs of any order form a feedback arc set,
/// so this is the unit-weight case of [`decide_loalb`].
pub fn decide_fas_below(g: &WeightedDigraph, k: u64, cfg: &SolveConfig) -> Result<DecisionOutcome> {
    if !g.is_unit_weight() {
        return Err(Error::InvalidParameter(
            "feedback arc set decision needs unit arc weights".into(),
        ));
    }
    decide_loalb(g, k, cfg)
}

/// Arcs that point backwards in `order`; removing them leaves `g` acyclic.
pub fn feedback_arcs(g: &WeightedDigraph, order: &LinearOrder) -> Vec<Arc> {
    g.arcs
        .iter()
        .copied()
        .filter(|a| order.position(a.tail) > order.position(a.head))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, arcs: &[(usize, usize, u64)]) -> WeightedDigraph {
        WeightedDigraph::new(n, arcs.iter().copied()).unwrap()
    }

    fn three_cycle() -> WeightedDigraph {
        graph(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    }

    fn cfg() -> SolveConfig {
        SolveConfig::default()
    }

    #[test]
    fn construction_rejects_bad_arcs() {
        assert!(WeightedDigraph::new(2, [(0, 0, 1)]).is_err());
        assert!(WeightedDigraph::new(2, [(0, 1, 0)]).is_err());
        assert!(WeightedDigraph::new(2, [(0, 2, 1)]).is_err());
        let merged = graph(2, &[(0, 1, 2), (0, 1, 3)]);
        assert_eq!(
            merged.arcs(),
            &[Arc {
                tail: 0,
                head: 1,
                weight: 5
            }]
        );
    }

    #[test]
    fn two_cycle_reduction() {
        assert_eq!(
            reduce_two_cycles(&graph(2, &[(0, 1, 3), (1, 0, 3)])).arc_count(),
            0
        );
        assert_eq!(
            reduce_two_cycles(&graph(2, &[(0, 1, 5), (1, 0, 2)])).arcs(),
            &[Arc {
                tail: 0,
                head: 1,
                weight: 3
            }]
        );
        let path = graph(3, &[(0, 1, 1), (1, 2, 1)]);
        assert_eq!(reduce_two_cycles(&path), path);
    }

    #[test]
    fn stats_examples() {
        let s = digraph_stats(&graph(2, &[(0, 1, 2)])).unwrap();
        assert_eq!((s.total_weight, s.squared_weight, s.oriented), (2, 4, true));
        let s = digraph_stats(&three_cycle()).unwrap();
        assert_eq!((s.total_weight, s.squared_weight, s.oriented), (3, 3, true));
        let s = digraph_stats(&graph(2, &[(0, 1, 3), (1, 0, 3)])).unwrap();
        assert_eq!(
            (s.total_weight, s.squared_weight, s.oriented),
            (6, 18, false)
        );
    }

    #[test]
    fn exact_examples() {
        assert_eq!(
            exact_max_acyclic(&graph(2, &[(0, 1, 2)]), &cfg())
                .unwrap()
                .0,
            2
        );
        let (value, order) = exact_max_acyclic(&three_cycle(), &cfg()).unwrap();
        assert_eq!(value, 2);
        assert_eq!(three_cycle().forward_weight(&order), 2);
        assert_eq!(
            exact_max_acyclic(&WeightedDigraph::empty(4), &cfg())
                .unwrap()
                .0,
            0
        );
    }

    #[test]
    fn exact_respects_cap() {
        let g = graph(4, &[(0, 1, 1), (2, 3, 1)]);
        assert_eq!(
            exact_max_acyclic(&g, &SolveConfig::with_cap(3)),
            Err(Error::CapExceeded {
                what: "vertex",
                size: 4,
                cap: 3
            })
        );
    }

    #[test]
    fn x_value_examples() {
        let g = graph(2, &[(0, 1, 2)]);
        assert_eq!(x_value(&g, &LinearOrder::identity(2)), 2);
        for seq in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            let order = LinearOrder::from_sequence(&seq).unwrap();
            let x = x_value(&three_cycle(), &order);
            assert!(x == 1 || x == -1);
            assert_eq!(x_value(&three_cycle(), &order.reversed()), -x);
        }
    }

    #[test]
    fn decide_examples() {
        let sym = graph(2, &[(0, 1, 3), (1, 0, 3)]);
        assert_eq!(decide_loalb(&sym, 1, &cfg()).unwrap().verdict, Verdict::No);
        let single = graph(2, &[(0, 1, 2)]);
        let out = decide_loalb(&single, 1, &cfg()).unwrap();
        assert_eq!(out.verdict, Verdict::YesWitness);
        assert!(matches!(out.witness, Some(Witness::Order(_))));
        let out = decide_loalb(&three_cycle(), 1, &cfg()).unwrap();
        assert_eq!(out.verdict, Verdict::No);
        assert_eq!(out.best_value, Some(1));
        assert!(decide_loalb(&single, 0, &cfg()).is_err());
    }

    #[test]
    fn decide_by_bound_and_kernel() {
        // W2 = 16 >= 12
        let heavy = graph(2, &[(0, 1, 4)]);
        assert_eq!(
            decide_loalb(&heavy, 1, &cfg()).unwrap().verdict,
            Verdict::YesByBound
        );
        // 11 unit arcs on a path of 12 vertices: below 12, but over a cap of 5
        let path = graph(12, &(0..11).map(|i| (i, i + 1, 1)).collect::<Vec<_>>());
        let out = decide_loalb(&path, 1, &SolveConfig::with_cap(5)).unwrap();
        assert_eq!(out.verdict, Verdict::Kernel);
        assert!(matches!(out.kernel, Some(KernelInstance::Digraph(_))));
    }

    #[test]
    fn faithful_star() {
        let star = graph(41, &(1..=40).map(|i| (0, i, 1)).collect::<Vec<_>>());
        let order = solve_loalb_faithful(&star, 1, &cfg()).unwrap().unwrap();
        assert_eq!(star.forward_weight(&order), 40);
        assert!((1..=40).all(|leaf| order.position(0) < order.position(leaf)));
    }

    #[test]
    fn reinsertion_side_follows_weights() {
        let base = LinearOrder::from_sequence(&[1, 0, 2]).unwrap();
        let heavy_out = PrunedVertex {
            vertex: 0,
            out_weight: 5,
            in_weight: 3,
        };
        assert_eq!(lift_pruned(&base, &[heavy_out]).sequence(), vec![0, 1, 2]);
        let heavy_in = PrunedVertex {
            vertex: 0,
            out_weight: 3,
            in_weight: 5,
        };
        assert_eq!(lift_pruned(&base, &[heavy_in]).sequence(), vec![1, 2, 0]);
    }

    #[test]
    fn rule2_stops_at_floor() {
        let star = graph(41, &(1..=40).map(|i| (0, i, 1)).collect::<Vec<_>>());
        let rule2 = Rule2Reduction::apply(&star, 1);
        assert_eq!(rule2.residual.arc_count(), 12);
        // nothing fires below the floor
        let small = Rule2Reduction::apply(&three_cycle(), 1);
        assert!(small.pruned.is_empty());
    }

    #[test]
    fn faithful_no_instance() {
        assert_eq!(
            solve_loalb_faithful(&three_cycle(), 1, &cfg()).unwrap(),
            None
        );
    }

    #[test]
    fn fas_examples() {
        let single = graph(2, &[(0, 1, 1)]);
        assert_eq!(
            decide_fas_below(&single, 1, &cfg()).unwrap().verdict,
            decide_loalb(&single, 1, &cfg()).unwrap().verdict
        );
        let sym = graph(2, &[(0, 1, 1), (1, 0, 1)]);
        assert_eq!(
            decide_fas_below(&sym, 1, &cfg()).unwrap().verdict,
            Verdict::No
        );
        assert_eq!(
            decide_fas_below(&three_cycle(), 1, &cfg()).unwrap().verdict,
            Verdict::No
        );
        assert!(decide_fas_below(&graph(2, &[(0, 1, 2)]), 1, &cfg()).is_err());
    }

    #[test]
    fn feedback_arcs_are_backward() {
        let order = LinearOrder::identity(3);
        let fb = feedback_arcs(&three_cycle(), &order);
        assert_eq!(
            fb,
            vec![Arc {
                tail: 2,
                head: 0,
                weight: 1
            }]
        );
    }
}
