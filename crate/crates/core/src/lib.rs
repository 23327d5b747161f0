//! Kernelization, exact solving and moment verification for three problems
//! parameterized above a tight lower bound: maximum-weight acyclic
//! subdigraph above `W/2`, Max Lin-2 above `W/2`, and Max Exact r-SAT above
//! `(1 − 2^{-r})m`.

pub mod error;
pub mod format;
pub mod generate;
pub mod gf2;
pub mod linord;
pub mod maxlin;
pub mod moments;
pub mod outcome;
pub mod rsat;

pub use error::{Error, Result};
pub use format::Instance;
pub use generate::Family;
pub use gf2::{BitMatrix, BitVec};
pub use linord::{DigraphStats, LinearOrder, WeightedDigraph};
pub use maxlin::{CaseTag, Equation, Lin2System, RankReduction, SystemStats};
pub use moments::{ExactDistribution, MomentReport};
pub use outcome::{DecisionOutcome, KernelInstance, SolveConfig, ThresholdCheck, Verdict, Witness};
pub use rsat::{ConflictStats, ExactCnfFormula, Literal, RationalParameterK};
