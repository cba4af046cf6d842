//! Consensus weight elicitation.
//!
//! The preference conditions of all decision makers are folded into a single
//! penalty objective over the weight simplex: every interval bound
//! contributes its hinge violation (the optimal value of the corresponding
//! slack variable) and every mode contributes a quadratic term. The
//! objective is minimized by multi-start Nelder–Mead descent in the
//! `(n−1)`-dimensional simplex parameterization, and the relaxation loop
//! widens every violated bound by exactly its deviation until no hinge
//! deviation remains.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::problem::{DecisionProblem, Preference};
use crate::tfn::Tfn;
use crate::Error;

/// Positivity floor for consensus weights (the model requires `w_j > 0`).
pub const WEIGHT_FLOOR: f64 = 1e-6;
/// Floor for relaxed multiplicative lower bounds.
pub const MULTIPLICATIVE_BOUND_FLOOR: f64 = 1e-6;

/// Returned objective values at or above this level mark infeasible points
/// of the penalized simplex parameterization.
const INFEASIBLE_PENALTY: f64 = 1e18;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolverConfig {
    /// Seed for the multi-start sampler; fixed seed means fixed result.
    pub seed: u64,
    /// Number of descent starts (the first is always the uniform vector).
    pub starts: usize,
    /// Iteration cap per start.
    pub max_iterations: usize,
    /// Hinge deviations below this threshold count as zero.
    pub zero_tol: f64,
    /// Cap on relaxation rounds.
    pub max_rounds: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            seed: 0,
            starts: 32,
            max_iterations: 2000,
            zero_tol: 1e-3,
            max_rounds: 20,
        }
    }
}

/// Which bound of which preference term a deviation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "kebab-case")
)]
pub enum DeviationKind {
    UtilityLower,
    UtilityUpper,
    PreferenceLower,
    PreferenceUpper,
    MultiplicativeLower,
    MultiplicativeUpper,
}

impl DeviationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DeviationKind::UtilityLower => "utility-lower",
            DeviationKind::UtilityUpper => "utility-upper",
            DeviationKind::PreferenceLower => "preference-lower",
            DeviationKind::PreferenceUpper => "preference-upper",
            DeviationKind::MultiplicativeLower => "multiplicative-lower",
            DeviationKind::MultiplicativeUpper => "multiplicative-upper",
        }
    }

    fn is_lower(self) -> bool {
        matches!(
            self,
            DeviationKind::UtilityLower
                | DeviationKind::PreferenceLower
                | DeviationKind::MultiplicativeLower
        )
    }
}

/// A nonzero hinge deviation of one decision maker's preference term.
///
/// For utility terms `i` is the criterion index and `j` is `None`; for
/// relation terms `(i, j)` is the upper-triangle criteria pair.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DeviationRecord {
    pub dm: String,
    pub kind: DeviationKind,
    pub i: usize,
    pub j: Option<usize>,
    pub value: f64,
}

/// One pass of the relaxation loop: the weights found on the round's
/// problem, the hinge deviations at those weights, and the problem after
/// widening the violated bounds.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RelaxationRound {
    pub weights: Vec<f64>,
    pub objective: f64,
    pub deviations: Vec<DeviationRecord>,
    pub adjusted_problem: DecisionProblem,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WeightSolution {
    /// Consensus weight vector on the simplex.
    pub weights: Vec<f64>,
    /// Hinge deviations at `weights` (empty once converged).
    pub deviations: Vec<DeviationRecord>,
    /// Penalty objective at `weights` on the (final) problem.
    pub objective: f64,
    /// Relaxation history; empty for a single `solve_weights` round.
    pub rounds: Vec<RelaxationRound>,
    /// True iff every hinge deviation fell below `zero_tol`.
    pub converged: bool,
}

impl WeightSolution {
    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().fold(0.0, |m, d| m.max(d.value))
    }
}

/// Walk every preference term of every decision maker at the weight vector
/// `w`, feeding each nonzero hinge deviation to `sink` and returning the
/// accumulated DM-weighted objective (hinges plus quadratic mode terms).
///
/// Relation terms run over both orders `(i, j)` and `(j, i)` — the model
/// sums all ordered pairs — but only upper-triangle deviations are reported,
/// since the mirror violations are determined by reciprocity.
fn objective_terms<F>(w: &[f64], p: &DecisionProblem, mut sink: F) -> f64
where
    F: FnMut(&str, DeviationKind, usize, Option<usize>, f64),
{
    let n = w.len();
    let mut objective = 0.0;
    for dm in &p.dms {
        let mut dm_sum = 0.0;
        match &dm.preference {
            Preference::Utility(entries) => {
                for (j, bound) in entries.iter().enumerate().take(n) {
                    let lower_gap = (bound.lower - w[j]).max(0.0);
                    let upper_gap = (w[j] - bound.upper).max(0.0);
                    let mode_gap = w[j] - bound.mode;
                    dm_sum += lower_gap + mode_gap * mode_gap + upper_gap;
                    if lower_gap > 0.0 {
                        sink(&dm.id, DeviationKind::UtilityLower, j, None, lower_gap);
                    }
                    if upper_gap > 0.0 {
                        sink(&dm.id, DeviationKind::UtilityUpper, j, None, upper_gap);
                    }
                }
            }
            Preference::FuzzyRelation(rel) => {
                for i in 0..n {
                    for j in 0..n {
                        let bound = rel.get(i, j);
                        let value = 0.5 * (w[i] - w[j] + 1.0);
                        dm_sum += hinge_and_mode(
                            &dm.id,
                            DeviationKind::PreferenceLower,
                            DeviationKind::PreferenceUpper,
                            i,
                            j,
                            value,
                            bound,
                            &mut sink,
                        );
                    }
                }
            }
            Preference::MultiplicativeRelation(rel) => {
                for i in 0..n {
                    for j in 0..n {
                        let bound = rel.get(i, j);
                        let value = w[i] / w[j];
                        dm_sum += hinge_and_mode(
                            &dm.id,
                            DeviationKind::MultiplicativeLower,
                            DeviationKind::MultiplicativeUpper,
                            i,
                            j,
                            value,
                            bound,
                            &mut sink,
                        );
                    }
                }
            }
        }
        objective += dm.weight * dm_sum;
    }
    objective
}

#[allow(clippy::too_many_arguments)]
fn hinge_and_mode<F>(
    dm: &str,
    lower_kind: DeviationKind,
    upper_kind: DeviationKind,
    i: usize,
    j: usize,
    value: f64,
    bound: Tfn,
    sink: &mut F,
) -> f64
where
    F: FnMut(&str, DeviationKind, usize, Option<usize>, f64),
{
    let lower_gap = (bound.lower - value).max(0.0);
    let upper_gap = (value - bound.upper).max(0.0);
    let mode_gap = value - bound.mode;
    if i < j {
        if lower_gap > 0.0 {
            sink(dm, lower_kind, i, Some(j), lower_gap);
        }
        if upper_gap > 0.0 {
            sink(dm, upper_kind, i, Some(j), upper_gap);
        }
    }
    lower_gap + mode_gap * mode_gap + upper_gap
}

/// Evaluate the penalty objective at `w` and collect every nonzero hinge
/// deviation (upper-triangle indices for relation terms).
///
/// `w` must have one strictly positive entry per criterion; components below
/// [`WEIGHT_FLOOR`] are rejected because ratio terms would blow up.
pub fn evaluate_objective(
    w: &[f64],
    p: &DecisionProblem,
) -> Result<(f64, Vec<DeviationRecord>), Error> {
    let n = p.criteria.len();
    if w.len() != n {
        return Err(Error::LengthMismatch {
            what: "weight vector",
            expected: n,
            actual: w.len(),
        });
    }
    for (index, &value) in w.iter().enumerate() {
        if !(value >= WEIGHT_FLOOR && value.is_finite()) {
            return Err(Error::WeightBelowFloor { index, value });
        }
    }
    let mut deviations = Vec::new();
    let objective = objective_terms(w, p, |dm, kind, i, j, value| {
        deviations.push(DeviationRecord {
            dm: String::from(dm),
            kind,
            i,
            j,
            value,
        });
    });
    Ok((objective, deviations))
}

/// Objective over the free parameters `x = (w_1, …, w_{n−1})` with
/// `w_n = 1 − Σx`; infeasible points get a graded penalty so descent is
/// steered back onto the simplex.
fn penalized_objective(x: &[f64], p: &DecisionProblem) -> f64 {
    let mut w = Vec::with_capacity(x.len() + 1);
    let mut sum = 0.0;
    for &v in x {
        if !v.is_finite() {
            return f64::INFINITY;
        }
        w.push(v);
        sum += v;
    }
    w.push(1.0 - sum);
    let mut violation = 0.0;
    for &wj in &w {
        if wj < WEIGHT_FLOOR {
            violation += WEIGHT_FLOOR - wj;
        }
    }
    if violation > 0.0 {
        return INFEASIBLE_PENALTY * (1.0 + violation);
    }
    objective_terms(&w, p, |_, _, _, _, _| {})
}

/// Uniform sample from the weight simplex by sorted-spacings, nudged away
/// from the boundary so every start is feasible.
fn random_simplex_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut cuts: Vec<f64> = (0..n - 1).map(|_| rng.random::<f64>()).collect();
    cuts.sort_unstable_by(f64::total_cmp);
    let mut weights = Vec::with_capacity(n);
    let mut previous = 0.0;
    for &cut in &cuts {
        weights.push(cut - previous);
        previous = cut;
    }
    weights.push(1.0 - previous);
    let floor = 16.0 * WEIGHT_FLOOR;
    for w in &mut weights {
        if *w < floor {
            *w = floor;
        }
    }
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    weights
}

/// Derivative-free Nelder–Mead descent (reflection / expansion /
/// contraction / shrink) with standard coefficients.
fn nelder_mead<F>(f: &F, x0: &[f64], max_iterations: usize) -> (Vec<f64>, f64)
where
    F: Fn(&[f64]) -> f64,
{
    const REFLECT: f64 = 1.0;
    const EXPAND: f64 = 2.0;
    const CONTRACT: f64 = 0.5;
    const SHRINK: f64 = 0.5;
    const STEP: f64 = 0.05;
    const F_TOL: f64 = 1e-12;
    const X_TOL: f64 = 1e-10;

    let dim = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    simplex.push(x0.to_vec());
    for axis in 0..dim {
        let mut point = x0.to_vec();
        point[axis] += STEP;
        simplex.push(point);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| f(p)).collect();

    for _ in 0..max_iterations {
        // order best..worst
        let mut order: Vec<usize> = (0..=dim).collect();
        order.sort_unstable_by(|&a, &b| values[a].total_cmp(&values[b]));
        let best = order[0];
        let second_worst = order[dim - 1];
        let worst = order[dim];

        let f_spread = values[worst] - values[best];
        let x_spread = simplex
            .iter()
            .flat_map(|p| p.iter().zip(&simplex[best]).map(|(a, b)| (a - b).abs()))
            .fold(0.0_f64, f64::max);
        if f_spread <= F_TOL * (1.0 + values[best].abs()) && x_spread <= X_TOL {
            break;
        }

        // centroid of all but the worst point
        let mut centroid = vec![0.0; dim];
        for &index in order.iter().take(dim) {
            for (c, v) in centroid.iter_mut().zip(&simplex[index]) {
                *c += v / dim as f64;
            }
        }

        let reflected: Vec<f64> = centroid
            .iter()
            .zip(&simplex[worst])
            .map(|(c, w)| c + REFLECT * (c - w))
            .collect();
        let f_reflected = f(&reflected);

        if f_reflected < values[best] {
            let expanded: Vec<f64> = centroid
                .iter()
                .zip(&simplex[worst])
                .map(|(c, w)| c + EXPAND * (c - w))
                .collect();
            let f_expanded = f(&expanded);
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
        } else if f_reflected < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
        } else {
            // contract toward the better of worst/reflected
            let (anchor, f_anchor) = if f_reflected < values[worst] {
                (&reflected, f_reflected)
            } else {
                (&simplex[worst], values[worst])
            };
            let contracted: Vec<f64> = centroid
                .iter()
                .zip(anchor)
                .map(|(c, a)| c + CONTRACT * (a - c))
                .collect();
            let f_contracted = f(&contracted);
            if f_contracted < f_anchor {
                simplex[worst] = contracted;
                values[worst] = f_contracted;
            } else {
                // shrink everything toward the best point
                let anchor_point = simplex[best].clone();
                for index in 0..=dim {
                    if index == best {
                        continue;
                    }
                    for (v, a) in simplex[index].iter_mut().zip(&anchor_point) {
                        *v = a + SHRINK * (*v - a);
                    }
                    values[index] = f(&simplex[index]);
                }
            }
        }
    }

    let mut best = 0;
    for index in 1..values.len() {
        if values[index] < values[best] {
            best = index;
        }
    }
    (simplex.swap_remove(best), values[best])
}

/// Minimize the penalty objective over the weight simplex (single round).
///
/// Multi-start local descent: the uniform vector plus `starts − 1` seeded
/// random simplex points, best objective wins (ties go to the earliest
/// start). Deterministic for a fixed `cfg.seed`. The problem's relation
/// matrices are mirror-normalized before solving.
pub fn solve_weights(p: &DecisionProblem, cfg: &SolverConfig) -> Result<WeightSolution, Error> {
    let problem = p.solver_normalized();
    let n = problem.criteria.len();
    if n == 0 {
        return Err(Error::NoFeasiblePoint);
    }
    if n == 1 {
        let weights = vec![1.0];
        let (objective, deviations) = evaluate_objective(&weights, &problem)?;
        let converged = deviations.iter().all(|d| d.value < cfg.zero_tol);
        return Ok(WeightSolution {
            weights,
            deviations,
            objective,
            rounds: Vec::new(),
            converged,
        });
    }

    let objective_fn = |x: &[f64]| penalized_objective(x, &problem);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best: Option<(Vec<f64>, f64)> = None;
    for start in 0..cfg.starts.max(1) {
        let w0 = if start == 0 {
            vec![1.0 / n as f64; n]
        } else {
            random_simplex_point(&mut rng, n)
        };
        let (x, fx) = nelder_mead(&objective_fn, &w0[..n - 1], cfg.max_iterations);
        if best.as_ref().is_none_or(|(_, bf)| fx < *bf) {
            best = Some((x, fx));
        }
    }
    let (x, fx) = best.expect("at least one start ran");
    if fx >= INFEASIBLE_PENALTY {
        return Err(Error::NoFeasiblePoint);
    }

    let mut weights = x;
    let partial: f64 = weights.iter().sum();
    weights.push(1.0 - partial);
    let (objective, deviations) = evaluate_objective(&weights, &problem)?;
    let converged = deviations.iter().all(|d| d.value < cfg.zero_tol);
    Ok(WeightSolution {
        weights,
        deviations,
        objective,
        rounds: Vec::new(),
        converged,
    })
}

/// Widen every deviated bound by exactly its deviation value and recompute
/// the mirror entry so the relation stays reciprocal. Lower bounds are
/// clamped at 0 (utility, preference) or [`MULTIPLICATIVE_BOUND_FLOOR`];
/// upper bounds are clamped at 1 for the additive formats. Modes never
/// change. Returns a new problem; the input is untouched.
pub fn adjust_preferences(p: &DecisionProblem, deviations: &[DeviationRecord]) -> DecisionProblem {
    let mut out = p.clone();
    for record in deviations {
        let Some(dm) = out.dms.iter_mut().find(|dm| dm.id == record.dm) else {
            debug_assert!(false, "deviation for unknown decision maker {}", record.dm);
            continue;
        };
        match (&mut dm.preference, record.kind) {
            (Preference::Utility(entries), DeviationKind::UtilityLower) => {
                let entry = &mut entries[record.i];
                entry.lower = (entry.lower - record.value).max(0.0);
            }
            (Preference::Utility(entries), DeviationKind::UtilityUpper) => {
                let entry = &mut entries[record.i];
                entry.upper = (entry.upper + record.value).min(1.0);
            }
            (Preference::FuzzyRelation(rel), kind @ DeviationKind::PreferenceLower)
            | (Preference::FuzzyRelation(rel), kind @ DeviationKind::PreferenceUpper) => {
                let (i, j) = (record.i, record.j.expect("relation deviation needs a pair"));
                let mut entry = rel.get(i, j);
                if kind.is_lower() {
                    entry.lower = (entry.lower - record.value).max(0.0);
                } else {
                    entry.upper = (entry.upper + record.value).min(1.0);
                }
                rel.set(i, j, entry);
                rel.set(
                    j,
                    i,
                    Tfn::new(1.0 - entry.upper, 1.0 - entry.mode, 1.0 - entry.lower),
                );
            }
            (
                Preference::MultiplicativeRelation(rel),
                kind @ DeviationKind::MultiplicativeLower,
            )
            | (
                Preference::MultiplicativeRelation(rel),
                kind @ DeviationKind::MultiplicativeUpper,
            ) => {
                let (i, j) = (record.i, record.j.expect("relation deviation needs a pair"));
                let mut entry = rel.get(i, j);
                if kind.is_lower() {
                    entry.lower = (entry.lower - record.value).max(MULTIPLICATIVE_BOUND_FLOOR);
                } else {
                    entry.upper += record.value;
                }
                rel.set(i, j, entry);
                rel.set(
                    j,
                    i,
                    Tfn::new(1.0 / entry.upper, 1.0 / entry.mode, 1.0 / entry.lower),
                );
            }
            _ => debug_assert!(false, "deviation kind does not match preference format"),
        }
    }
    out
}

/// Full elicitation: alternate [`solve_weights`] and [`adjust_preferences`]
/// until every hinge deviation drops below `cfg.zero_tol` or `cfg.max_rounds`
/// is reached. Every round's snapshot is recorded; only deviations at or
/// above `zero_tol` trigger adjustments.
pub fn elicit_weights(p: &DecisionProblem, cfg: &SolverConfig) -> Result<WeightSolution, Error> {
    let mut current = p.solver_normalized();
    let mut rounds: Vec<RelaxationRound> = Vec::new();
    let mut last: Option<WeightSolution> = None;

    for _ in 0..cfg.max_rounds.max(1) {
        let solution = solve_weights(&current, cfg)?;
        let active: Vec<DeviationRecord> = solution
            .deviations
            .iter()
            .filter(|d| d.value >= cfg.zero_tol)
            .cloned()
            .collect();
        if active.is_empty() {
            rounds.push(RelaxationRound {
                weights: solution.weights.clone(),
                objective: solution.objective,
                deviations: solution.deviations.clone(),
                adjusted_problem: current,
            });
            return Ok(WeightSolution {
                rounds,
                converged: true,
                ..solution
            });
        }
        let adjusted = adjust_preferences(&current, &active);
        rounds.push(RelaxationRound {
            weights: solution.weights.clone(),
            objective: solution.objective,
            deviations: solution.deviations.clone(),
            adjusted_problem: adjusted.clone(),
        });
        current = adjusted;
        last = Some(solution);
    }

    let solution = last.expect("at least one round ran");
    Ok(WeightSolution {
        rounds,
        converged: false,
        ..solution
    })
}
