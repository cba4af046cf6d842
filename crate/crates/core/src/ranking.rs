//! Alternative ranking: per-DM final satisfaction degrees over the dominant
//! criteria subset, integration across decision makers, crisp scoring and
//! the total order.

use alloc::vec::Vec;

use crate::problem::{DecisionProblem, TfnMatrix};
use crate::relations::{analyze_dm, CriteriaPartition, DmAnalysis};
use crate::tfn::{weighted_sum, Tfn};
use crate::Error;

/// Default tie tolerance: half the resolution of three-decimal scores.
pub const DEFAULT_TIE_TOL: f64 = 0.005;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RankingResult {
    /// Final degree of satisfaction per decision maker per alternative.
    pub per_dm_final: Vec<Vec<Tfn>>,
    /// DM-weighted integration of the final degrees, per alternative.
    pub integrated: Vec<Tfn>,
    /// Crisp scores `(l + 2m + u) / 4` of the integrated degrees.
    pub scores: Vec<f64>,
    /// Alternative indices sorted by score, best first.
    pub order: Vec<usize>,
    /// Groups of alternatives whose consecutive scores differ by less than
    /// the tie tolerance (reported informationally; `order` stays strict).
    pub ties: Vec<Vec<usize>>,
}

/// The partition subset with the largest total consensus weight; ties break
/// toward the earliest-created subset.
pub fn select_dominant_subset<'a>(
    partition: &'a CriteriaPartition,
    weights: &[f64],
) -> &'a [usize] {
    let mut best: &[usize] = &[];
    let mut best_weight = f64::NEG_INFINITY;
    for subset in &partition.subsets {
        let total: f64 = subset.iter().map(|&c| weights[c]).sum();
        if total > best_weight {
            best_weight = total;
            best = subset;
        }
    }
    best
}

/// Weighted sum of each alternative's satisfaction degrees over the given
/// criteria subset, using the consensus weights as stated (no
/// renormalization within the subset).
pub fn final_degree(
    satisfaction: &TfnMatrix,
    subset: &[usize],
    weights: &[f64],
) -> Result<Vec<Tfn>, Error> {
    (0..satisfaction.rows())
        .map(|alternative| {
            weighted_sum(
                subset
                    .iter()
                    .map(|&c| (weights[c], satisfaction.get(alternative, c))),
            )
        })
        .collect()
}

/// Componentwise DM-weighted combination of per-DM final degrees.
pub fn integrate_final_degrees(per_dm: &[Vec<Tfn>], dm_weights: &[f64]) -> Result<Vec<Tfn>, Error> {
    if per_dm.is_empty() {
        return Err(Error::EmptyCombination);
    }
    if per_dm.len() != dm_weights.len() {
        return Err(Error::LengthMismatch {
            what: "decision maker weights",
            expected: per_dm.len(),
            actual: dm_weights.len(),
        });
    }
    let m = per_dm[0].len();
    for degrees in per_dm {
        if degrees.len() != m {
            return Err(Error::LengthMismatch {
                what: "per-DM final degrees",
                expected: m,
                actual: degrees.len(),
            });
        }
    }
    (0..m)
        .map(|alternative| {
            weighted_sum(
                per_dm
                    .iter()
                    .zip(dm_weights)
                    .map(|(degrees, &weight)| (weight, degrees[alternative])),
            )
        })
        .collect()
}

/// Score the integrated degrees, sort descending (stable), and report
/// chained groups of alternatives whose adjacent scores differ by less than
/// `tie_tol`.
pub fn rank_alternatives(
    integrated: &[Tfn],
    tie_tol: f64,
) -> (Vec<f64>, Vec<usize>, Vec<Vec<usize>>) {
    let scores: Vec<f64> = integrated.iter().map(|t| t.rank_score()).collect();
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));

    let mut ties: Vec<Vec<usize>> = Vec::new();
    let mut group: Vec<usize> = Vec::new();
    for &index in &order {
        match group.last() {
            Some(&previous) if scores[previous] - scores[index] < tie_tol => group.push(index),
            _ => {
                if group.len() > 1 {
                    ties.push(core::mem::take(&mut group));
                } else {
                    group.clear();
                }
                group.push(index);
            }
        }
    }
    if group.len() > 1 {
        ties.push(group);
    }
    (scores, order, ties)
}

/// Run the full post-elicitation pipeline: per-DM relation analysis and
/// partition, dominant-subset aggregation, DM-weighted integration, and the
/// crisp ranking. Analyses are computed once per decision maker and
/// returned alongside the ranking.
pub fn rank_problem(
    p: &DecisionProblem,
    weights: &[f64],
    tie_tol: f64,
) -> Result<(Vec<DmAnalysis>, RankingResult), Error> {
    let n = p.criteria.len();
    if weights.len() != n {
        return Err(Error::LengthMismatch {
            what: "weight vector",
            expected: n,
            actual: weights.len(),
        });
    }
    let analyses: Vec<DmAnalysis> = p
        .dms
        .iter()
        .map(|dm| analyze_dm(&dm.satisfaction))
        .collect::<Result<_, _>>()?;
    let per_dm_final: Vec<Vec<Tfn>> = p
        .dms
        .iter()
        .zip(&analyses)
        .map(|(dm, analysis)| {
            let subset = select_dominant_subset(&analysis.partition, weights);
            final_degree(&dm.satisfaction, subset, weights)
        })
        .collect::<Result<_, _>>()?;
    let dm_weights: Vec<f64> = p.dms.iter().map(|dm| dm.weight).collect();
    let integrated = integrate_final_degrees(&per_dm_final, &dm_weights)?;
    let (scores, order, ties) = rank_alternatives(&integrated, tie_tol);
    Ok((
        analyses,
        RankingResult {
            per_dm_final,
            integrated,
            scores,
            order,
            ties,
        },
    ))
}
