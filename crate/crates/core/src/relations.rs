//! Criteria relationship analysis: pairwise satisfaction differences, the
//! cooperative / conflictive / irrelevant classification by signed
//! membership areas, aggregate cooperation and conflict degrees, and the
//! greedy partitioning of the criteria set into mutually cooperative
//! subsets.

use alloc::vec::Vec;

use crate::problem::TfnMatrix;
use crate::tfn::Tfn;
use crate::Error;

/// Signed areas with magnitude below this threshold count as zero, making
/// the pair irrelevant.
pub const AREA_ZERO_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum PairClass {
    Cooperative,
    Conflictive,
    Irrelevant,
}

/// Difference of the satisfaction degrees of alternatives `i` and `j` on
/// one criterion (extended subtraction). Its mode is the weight magnitude
/// used by [`relation_degrees`].
pub fn pair_diff(
    satisfaction: &TfnMatrix,
    i: usize,
    j: usize,
    criterion: usize,
) -> Result<Tfn, Error> {
    if i == j {
        return Err(Error::SameAlternative { index: i });
    }
    Ok(satisfaction
        .get(i, criterion)
        .ext_sub(satisfaction.get(j, criterion)))
}

fn classify_areas(area_k: f64, area_l: f64) -> PairClass {
    if area_k.abs() < AREA_ZERO_TOL || area_l.abs() < AREA_ZERO_TOL {
        PairClass::Irrelevant
    } else if area_k * area_l > 0.0 {
        PairClass::Cooperative
    } else {
        PairClass::Conflictive
    }
}

/// Classify the criteria pair `(k, l)` on the alternative pair `(i, j)` by
/// the sign product of the signed areas of the two satisfaction differences.
pub fn classify_pair(
    satisfaction: &TfnMatrix,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<PairClass, Error> {
    debug_assert!(k != l, "criteria pair must be distinct");
    let area_k = pair_diff(satisfaction, i, j, k)?.signed_area();
    let area_l = pair_diff(satisfaction, i, j, l)?.signed_area();
    Ok(classify_areas(area_k, area_l))
}

/// Cooperation and conflict degrees of one criteria pair.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RelationDegrees {
    pub cp: f64,
    pub cf: f64,
    /// All difference modes vanished on both criteria, so the ratio
    /// denominator was zero and the degrees default to (0, 0).
    pub degenerate: bool,
}

/// Fraction of the mode-magnitude weight `|β_ijk| + |β_ijl|` carried by
/// cooperative (resp. conflictive) alternative pairs, over all unordered
/// pairs `i < j`. Orientation does not matter: flipping a pair negates both
/// signed areas and leaves the product and the weight unchanged.
pub fn relation_degrees(
    satisfaction: &TfnMatrix,
    k: usize,
    l: usize,
) -> Result<RelationDegrees, Error> {
    let m = satisfaction.rows();
    let mut cooperative = 0.0;
    let mut conflictive = 0.0;
    let mut all = 0.0;
    for i in 0..m {
        for j in (i + 1)..m {
            let diff_k = pair_diff(satisfaction, i, j, k)?;
            let diff_l = pair_diff(satisfaction, i, j, l)?;
            let weight = diff_k.mode.abs() + diff_l.mode.abs();
            all += weight;
            match classify_areas(diff_k.signed_area(), diff_l.signed_area()) {
                PairClass::Cooperative => cooperative += weight,
                PairClass::Conflictive => conflictive += weight,
                PairClass::Irrelevant => {}
            }
        }
    }
    if all <= 0.0 {
        return Ok(RelationDegrees {
            cp: 0.0,
            cf: 0.0,
            degenerate: true,
        });
    }
    Ok(RelationDegrees {
        cp: cooperative / all,
        cf: conflictive / all,
        degenerate: false,
    })
}

/// Degrees for one upper-triangle criteria pair.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairDegrees {
    pub k: usize,
    pub l: usize,
    pub cp: f64,
    pub cf: f64,
    pub degenerate: bool,
}

/// Cooperation/conflict degrees for every criteria pair `k < l` of one
/// satisfaction matrix.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RelationTable {
    pub pairs: Vec<PairDegrees>,
}

impl RelationTable {
    pub fn for_matrix(satisfaction: &TfnMatrix) -> Result<Self, Error> {
        let n = satisfaction.cols();
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for k in 0..n {
            for l in (k + 1)..n {
                let degrees = relation_degrees(satisfaction, k, l)?;
                pairs.push(PairDegrees {
                    k,
                    l,
                    cp: degrees.cp,
                    cf: degrees.cf,
                    degenerate: degrees.degenerate,
                });
            }
        }
        Ok(RelationTable { pairs })
    }

    /// Symmetric lookup.
    pub fn degrees(&self, k: usize, l: usize) -> Option<&PairDegrees> {
        let (a, b) = if k < l { (k, l) } else { (l, k) };
        self.pairs.iter().find(|p| p.k == a && p.l == b)
    }
}

/// Ordered list of disjoint criteria subsets covering the whole set.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CriteriaPartition {
    pub subsets: Vec<Vec<usize>>,
}

/// One step of the partition replay, for auditing insertion decisions.
#[derive(Debug, Clone, PartialEq)]
pub enum PartitionStep {
    /// Criterion opened a new subset (the first seed, or the argmax
    /// criterion after the affinity maximum dropped to zero or below).
    Seeded { criterion: usize },
    /// Criterion joined the current subset with strictly positive affinity.
    Inserted { criterion: usize, affinity: f64 },
}

/// Greedy partition of the criteria set from precomputed degrees.
///
/// Subset 1 is seeded with criterion 0. Repeatedly, every unassigned
/// criterion `j` gets the affinity `p_j = Σ_{i ∈ current} (cp(i,j) −
/// cf(i,j))`; the argmax joins the current subset if its affinity is
/// strictly positive, otherwise the current subset is closed and the argmax
/// seeds the next one. Ties break toward the lowest criterion index.
pub fn partition_from_table(
    table: &RelationTable,
    n: usize,
) -> (CriteriaPartition, Vec<PartitionStep>) {
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    let mut steps: Vec<PartitionStep> = Vec::new();
    if n == 0 {
        return (CriteriaPartition { subsets }, steps);
    }

    let mut remaining: Vec<usize> = (1..n).collect();
    let mut current = alloc::vec![0];
    steps.push(PartitionStep::Seeded { criterion: 0 });

    while !remaining.is_empty() {
        let mut best_index = 0;
        let mut best_affinity = f64::NEG_INFINITY;
        for (position, &candidate) in remaining.iter().enumerate() {
            let affinity: f64 = current
                .iter()
                .map(|&member| {
                    let degrees = table
                        .degrees(member, candidate)
                        .expect("table covers all pairs");
                    degrees.cp - degrees.cf
                })
                .sum();
            if affinity > best_affinity {
                best_affinity = affinity;
                best_index = position;
            }
        }
        let chosen = remaining.remove(best_index);
        if best_affinity > 0.0 {
            current.push(chosen);
            steps.push(PartitionStep::Inserted {
                criterion: chosen,
                affinity: best_affinity,
            });
        } else {
            subsets.push(core::mem::replace(&mut current, alloc::vec![chosen]));
            steps.push(PartitionStep::Seeded { criterion: chosen });
        }
    }
    subsets.push(current);
    (CriteriaPartition { subsets }, steps)
}

/// Partition the criteria of one satisfaction matrix into mutually
/// cooperative subsets.
pub fn partition_criteria(satisfaction: &TfnMatrix) -> Result<CriteriaPartition, Error> {
    let table = RelationTable::for_matrix(satisfaction)?;
    Ok(partition_from_table(&table, satisfaction.cols()).0)
}

/// Relation table and criteria partition of one decision maker.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DmAnalysis {
    pub table: RelationTable,
    pub partition: CriteriaPartition,
}

/// Analyze one decision maker's satisfaction matrix: degrees for every
/// criteria pair plus the induced partition (computed from the same table).
pub fn analyze_dm(satisfaction: &TfnMatrix) -> Result<DmAnalysis, Error> {
    let table = RelationTable::for_matrix(satisfaction)?;
    let partition = partition_from_table(&table, satisfaction.cols()).0;
    Ok(DmAnalysis { table, partition })
}
