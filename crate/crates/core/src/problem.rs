//! Decision-problem data model: alternatives, criteria, decision makers with
//! their weights, preference information in one of three formats, and
//! triangular-fuzzy satisfaction matrices — plus the validation pass that
//! checks every structural and reciprocity condition.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::tfn::Tfn;
use crate::Error;

/// Absolute tolerance for additive reciprocity `pl_ij + pu_ji = 1` and for
/// the decision-maker weight simplex.
pub const ADDITIVE_RECIPROCITY_TOL: f64 = 1e-9;
/// Relative tolerance for multiplicative reciprocity `bl_ij · bu_ji = 1`.
pub const MULTIPLICATIVE_RECIPROCITY_TOL: f64 = 1e-6;

/// Dense row-major matrix of fuzzy numbers.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(into = "Vec<Vec<Tfn>>", try_from = "Vec<Vec<Tfn>>")
)]
pub struct TfnMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Tfn>,
}

impl TfnMatrix {
    pub fn from_rows(rows: Vec<Vec<Tfn>>) -> Result<Self, Error> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (index, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::RaggedMatrix { row: index });
            }
            data.extend(row);
        }
        Ok(TfnMatrix {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    pub fn filled(rows: usize, cols: usize, value: Tfn) -> Self {
        TfnMatrix {
            rows,
            cols,
            data: alloc::vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Tfn {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Tfn) {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Tfn] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }
}

impl From<TfnMatrix> for Vec<Vec<Tfn>> {
    fn from(m: TfnMatrix) -> Self {
        (0..m.rows).map(|i| m.row(i).to_vec()).collect()
    }
}

impl TryFrom<Vec<Vec<Tfn>>> for TfnMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<Tfn>>) -> Result<Self, Error> {
        TfnMatrix::from_rows(rows)
    }
}

/// One decision maker's criteria-weight preference information.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum Preference {
    /// Per-criterion utility intervals `(ul_j, um_j, uu_j)`, each bounding
    /// the weight of criterion `j` within `[0, 1]`.
    Utility(Vec<Tfn>),
    /// Reciprocal fuzzy preference relation around
    /// `p_ij = 0.5 (w_i − w_j + 1)`.
    FuzzyRelation(TfnMatrix),
    /// Reciprocal multiplicative preference relation around ratios
    /// `b_ij = w_i / w_j`.
    MultiplicativeRelation(TfnMatrix),
}

impl Preference {
    pub fn format_name(&self) -> &'static str {
        match self {
            Preference::Utility(_) => "utility",
            Preference::FuzzyRelation(_) => "fuzzy_relation",
            Preference::MultiplicativeRelation(_) => "multiplicative_relation",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DecisionMaker {
    pub id: String,
    /// Relative weight of this decision maker; all weights sum to 1.
    pub weight: f64,
    pub preference: Preference,
    /// Alternatives × criteria matrix of satisfaction degrees.
    pub satisfaction: TfnMatrix,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DecisionProblem {
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    #[cfg_attr(feature = "serde", serde(rename = "decision_makers"))]
    pub dms: Vec<DecisionMaker>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum Severity {
    /// Structural defect; downstream computation refuses the problem.
    Error,
    /// Advisory finding (reciprocity residuals from rounded input data).
    Warning,
}

/// One violated condition, naming where it was measured.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Violation {
    pub severity: Severity,
    /// Decision maker the finding belongs to, if any.
    pub dm: Option<String>,
    /// Location inside the problem, e.g. `preference[1][2]`.
    pub site: String,
    pub condition: String,
    /// Measured residual, where meaningful.
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// True if any violation is a hard error (as opposed to a warning).
    pub fn has_hard_errors(&self) -> bool {
        self.violations
            .iter()
            .any(|v| v.severity == Severity::Error)
    }

    pub fn hard_errors(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Warning)
    }

    fn push(
        &mut self,
        severity: Severity,
        dm: Option<&str>,
        site: String,
        condition: String,
        residual: Option<f64>,
    ) {
        self.violations.push(Violation {
            severity,
            dm: dm.map(String::from),
            site,
            condition,
            residual,
        });
    }
}

impl DecisionProblem {
    /// Check every structural and reciprocity condition.
    ///
    /// Shape mismatches, non-TFN triples and out-of-range entries are hard
    /// errors; reciprocity and diagonal residuals are warnings, since
    /// published relation data routinely carry rounded reciprocals. The
    /// check is deterministic and side-effect free; violations are data.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.criteria.len();
        let m = self.alternatives.len();

        if m < 2 {
            report.push(
                Severity::Error,
                None,
                String::from("alternatives"),
                format!("at least 2 alternatives required, got {m}"),
                None,
            );
        }
        if n < 2 {
            report.push(
                Severity::Error,
                None,
                String::from("criteria"),
                format!("at least 2 criteria required, got {n}"),
                None,
            );
        }
        if self.dms.is_empty() {
            report.push(
                Severity::Error,
                None,
                String::from("decision_makers"),
                String::from("at least 1 decision maker required"),
                None,
            );
            return report;
        }

        for (index, dm) in self.dms.iter().enumerate() {
            if self.dms[..index].iter().any(|other| other.id == dm.id) {
                report.push(
                    Severity::Error,
                    Some(&dm.id),
                    format!("decision_makers[{index}]"),
                    String::from("duplicate decision maker id"),
                    None,
                );
            }
        }

        let weight_sum: f64 = self.dms.iter().map(|dm| dm.weight).sum();
        if (weight_sum - 1.0).abs() > ADDITIVE_RECIPROCITY_TOL {
            report.push(
                Severity::Error,
                None,
                String::from("decision_makers"),
                format!("decision maker weights must sum to 1, got {weight_sum}"),
                Some((weight_sum - 1.0).abs()),
            );
        }

        for dm in &self.dms {
            self.validate_dm(dm, m, n, &mut report);
        }
        report
    }

    fn validate_dm(&self, dm: &DecisionMaker, m: usize, n: usize, report: &mut ValidationReport) {
        let id = dm.id.as_str();
        if !(dm.weight > 0.0 && dm.weight <= 1.0) {
            report.push(
                Severity::Error,
                Some(id),
                String::from("weight"),
                format!(
                    "decision maker weight must lie in (0, 1], got {}",
                    dm.weight
                ),
                None,
            );
        }

        let sm = &dm.satisfaction;
        if sm.rows() != m || sm.cols() != n {
            report.push(
                Severity::Error,
                Some(id),
                String::from("satisfaction"),
                format!(
                    "satisfaction matrix must be {m}x{n}, got {}x{}",
                    sm.rows(),
                    sm.cols()
                ),
                None,
            );
        } else {
            for i in 0..m {
                for j in 0..n {
                    check_unit_tfn(sm.get(i, j), id, format!("satisfaction[{i}][{j}]"), report);
                }
            }
        }

        match &dm.preference {
            Preference::Utility(entries) => {
                if entries.len() != n {
                    report.push(
                        Severity::Error,
                        Some(id),
                        String::from("preference"),
                        format!(
                            "utility vector must have {n} entries, got {}",
                            entries.len()
                        ),
                        None,
                    );
                    return;
                }
                for (j, entry) in entries.iter().enumerate() {
                    check_unit_tfn(*entry, id, format!("preference[{j}]"), report);
                }
            }
            Preference::FuzzyRelation(rel) => {
                if rel.rows() != n || rel.cols() != n {
                    report.push(
                        Severity::Error,
                        Some(id),
                        String::from("preference"),
                        format!(
                            "fuzzy relation must be {n}x{n}, got {}x{}",
                            rel.rows(),
                            rel.cols()
                        ),
                        None,
                    );
                    return;
                }
                for i in 0..n {
                    for j in 0..n {
                        check_unit_tfn(rel.get(i, j), id, format!("preference[{i}][{j}]"), report);
                    }
                }
                check_additive_reciprocity(rel, id, report);
            }
            Preference::MultiplicativeRelation(rel) => {
                if rel.rows() != n || rel.cols() != n {
                    report.push(
                        Severity::Error,
                        Some(id),
                        String::from("preference"),
                        format!(
                            "multiplicative relation must be {n}x{n}, got {}x{}",
                            rel.rows(),
                            rel.cols()
                        ),
                        None,
                    );
                    return;
                }
                for i in 0..n {
                    for j in 0..n {
                        let entry = rel.get(i, j);
                        let site = format!("preference[{i}][{j}]");
                        if !entry.is_valid() {
                            report.push(
                                Severity::Error,
                                Some(id),
                                site,
                                String::from("entry is not an ordered fuzzy triple"),
                                None,
                            );
                        } else if entry.lower <= 0.0 {
                            report.push(
                                Severity::Error,
                                Some(id),
                                site,
                                format!(
                                    "multiplicative entry must be positive, lower = {}",
                                    entry.lower
                                ),
                                None,
                            );
                        }
                    }
                }
                check_multiplicative_reciprocity(rel, id, report);
            }
        }
    }

    /// Copy with the lower triangle of every relation recomputed from the
    /// authoritative upper triangle and diagonals pinned, so rounded
    /// reciprocals in source data cannot skew the solver.
    pub fn solver_normalized(&self) -> DecisionProblem {
        let mut out = self.clone();
        for dm in &mut out.dms {
            match &mut dm.preference {
                Preference::Utility(_) => {}
                Preference::FuzzyRelation(rel) => {
                    let n = rel.rows().min(rel.cols());
                    for i in 0..n {
                        rel.set(i, i, Tfn::crisp(0.5));
                        for j in (i + 1)..n {
                            let e = rel.get(i, j);
                            rel.set(j, i, Tfn::new(1.0 - e.upper, 1.0 - e.mode, 1.0 - e.lower));
                        }
                    }
                }
                Preference::MultiplicativeRelation(rel) => {
                    let n = rel.rows().min(rel.cols());
                    for i in 0..n {
                        rel.set(i, i, Tfn::crisp(1.0));
                        for j in (i + 1)..n {
                            let e = rel.get(i, j);
                            rel.set(j, i, Tfn::new(1.0 / e.upper, 1.0 / e.mode, 1.0 / e.lower));
                        }
                    }
                }
            }
        }
        out
    }
}

fn check_unit_tfn(entry: Tfn, dm: &str, site: String, report: &mut ValidationReport) {
    if !entry.is_valid() {
        report.push(
            Severity::Error,
            Some(dm),
            site,
            String::from("entry is not an ordered fuzzy triple"),
            None,
        );
    } else if entry.lower < 0.0 || entry.upper > 1.0 {
        report.push(
            Severity::Error,
            Some(dm),
            site,
            format!(
                "entry must lie within [0, 1], got ({}, {}, {})",
                entry.lower, entry.mode, entry.upper
            ),
            None,
        );
    }
}

fn check_additive_reciprocity(rel: &TfnMatrix, dm: &str, report: &mut ValidationReport) {
    let n = rel.rows();
    for i in 0..n {
        let diag = rel.get(i, i);
        for (component, value) in [
            ("lower", diag.lower),
            ("mode", diag.mode),
            ("upper", diag.upper),
        ] {
            let residual = (value - 0.5).abs();
            if residual > ADDITIVE_RECIPROCITY_TOL {
                report.push(
                    Severity::Warning,
                    Some(dm),
                    format!("preference[{i}][{i}]"),
                    format!("diagonal {component} must equal 0.5, got {value}"),
                    Some(residual),
                );
            }
        }
        for j in (i + 1)..n {
            let a = rel.get(i, j);
            let b = rel.get(j, i);
            let checks = [
                ("pl_ij + pu_ji", a.lower + b.upper),
                ("pm_ij + pm_ji", a.mode + b.mode),
                ("pu_ij + pl_ji", a.upper + b.lower),
            ];
            for (condition, sum) in checks {
                let residual = (sum - 1.0).abs();
                if residual > ADDITIVE_RECIPROCITY_TOL {
                    report.push(
                        Severity::Warning,
                        Some(dm),
                        format!("preference[{i}][{j}]/[{j}][{i}]"),
                        format!("reciprocity {condition} = 1 violated"),
                        Some(residual),
                    );
                }
            }
        }
    }
}

fn check_multiplicative_reciprocity(rel: &TfnMatrix, dm: &str, report: &mut ValidationReport) {
    let n = rel.rows();
    for i in 0..n {
        let diag = rel.get(i, i);
        for (component, value) in [
            ("lower", diag.lower),
            ("mode", diag.mode),
            ("upper", diag.upper),
        ] {
            let residual = (value - 1.0).abs();
            if residual > MULTIPLICATIVE_RECIPROCITY_TOL {
                report.push(
                    Severity::Warning,
                    Some(dm),
                    format!("preference[{i}][{i}]"),
                    format!("diagonal {component} must equal 1, got {value}"),
                    Some(residual),
                );
            }
        }
        for j in (i + 1)..n {
            let a = rel.get(i, j);
            let b = rel.get(j, i);
            let checks = [
                ("bl_ij * bu_ji", a.lower * b.upper),
                ("bm_ij * bm_ji", a.mode * b.mode),
                ("bu_ij * bl_ji", a.upper * b.lower),
            ];
            for (condition, product) in checks {
                let residual = (product - 1.0).abs();
                if residual > MULTIPLICATIVE_RECIPROCITY_TOL {
                    report.push(
                        Severity::Warning,
                        Some(dm),
                        format!("preference[{i}][{j}]/[{j}][{i}]"),
                        format!("reciprocity {condition} = 1 violated"),
                        Some(residual),
                    );
                }
            }
        }
    }
}
