//! Versioned file formats: the problem document read by every subcommand
//! and the machine-readable report the stages emit and compose through.

use serde::{Deserialize, Serialize};

use fgdm_core::{
    CriteriaPartition, DecisionProblem, RankingResult, RelationTable, ValidationReport,
    WeightSolution,
};

pub const FORMAT_VERSION: &str = "1";

/// Problem document: labels, decision makers with a tagged preference block
/// (`utility` | `fuzzy_relation` | `multiplicative_relation`) and a
/// satisfaction matrix, all fuzzy numbers as `[lower, mode, upper]` triples.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemFile {
    pub format_version: String,
    #[serde(flatten)]
    pub problem: DecisionProblem,
}

/// Flags the run was configured with, echoed into the report so identical
/// inputs are recognizable from the output alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub seed: u64,
    pub starts: usize,
    pub max_iterations: usize,
    pub zero_tol: f64,
    pub max_rounds: usize,
    pub tie_tol: f64,
    pub strict: bool,
    pub injected_weights: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemSummary {
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    pub decision_makers: Vec<String>,
}

/// Relation analysis of one decision maker. `dominant_subset` is filled
/// once consensus weights are known.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DmRelations {
    pub dm: String,
    pub table: RelationTable,
    pub partition: CriteriaPartition,
    pub dominant_subset: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RankingSection {
    #[serde(flatten)]
    pub result: RankingResult,
    /// Alternative labels in ranked order, best first.
    pub order_labels: Vec<String>,
}

/// Machine-readable result document. Stages fill the sections they own and
/// carry earlier sections through unchanged, so composing `weights`,
/// `analyze` and `rank` over intermediate files equals one `pipeline` run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub format_version: String,
    pub generated_at_unix_ms: u64,
    pub config: ConfigEcho,
    pub problem: ProblemSummary,
    pub validation: ValidationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightSolution>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<DmRelations>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ranking: Option<RankingSection>,
}

impl Report {
    pub fn new(
        problem: &DecisionProblem,
        validation: ValidationReport,
        config: ConfigEcho,
    ) -> Self {
        Report {
            format_version: FORMAT_VERSION.into(),
            generated_at_unix_ms: now_unix_ms(),
            config,
            problem: ProblemSummary {
                alternatives: problem.alternatives.clone(),
                criteria: problem.criteria.clone(),
                decision_makers: problem.dms.iter().map(|dm| dm.id.clone()).collect(),
            },
            validation,
            weights: None,
            relations: None,
            ranking: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

fn now_unix_ms() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}
