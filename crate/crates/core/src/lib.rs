//! Fuzzy multi-criteria group decision making.
//!
//! Given a decision problem with several decision makers who each state
//! criteria-weight preferences in one of three formats (utility intervals,
//! fuzzy preference relations, multiplicative preference relations) and a
//! triangular-fuzzy satisfaction matrix, this crate
//!
//! 1. elicits a consensus criteria-weight vector by minimizing the
//!    DM-weighted preference deviations over the weight simplex, iteratively
//!    relaxing violated bounds until all deviations vanish ([`weights`]),
//! 2. analyzes cooperative/conflicting relationships between criteria and
//!    partitions the criteria set into mutually cooperative subsets
//!    ([`relations`]),
//! 3. aggregates satisfaction degrees over the dominant criteria subset and
//!    ranks the alternatives by a crisp score ([`ranking`]).
//!
//! The crate is `no_std` compatible (`alloc` required); file formats and the
//! command-line front end live in the companion `fgdm-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod problem;
pub mod ranking;
pub mod relations;
pub mod tfn;
pub mod weights;

pub use error::Error;
pub use problem::{
    DecisionMaker, DecisionProblem, Preference, Severity, TfnMatrix, ValidationReport, Violation,
};
pub use ranking::{rank_alternatives, rank_problem, RankingResult};
pub use relations::{
    analyze_dm, classify_pair, pair_diff, partition_criteria, relation_degrees, CriteriaPartition,
    DmAnalysis, PairClass, RelationDegrees, RelationTable,
};
pub use tfn::{weighted_sum, Tfn};
pub use weights::{
    adjust_preferences, elicit_weights, evaluate_objective, solve_weights, DeviationKind,
    DeviationRecord, RelaxationRound, SolverConfig, WeightSolution,
};
