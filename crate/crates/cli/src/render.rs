//! Plain-text tables mirroring the usual presentation of these analyses:
//! three decimals, criteria pairs as rows, decision makers as columns.

use std::fmt::Write;

use fgdm_core::{
    DecisionProblem, DeviationRecord, Severity, Tfn, ValidationReport, WeightSolution,
};

use crate::report::{DmRelations, RankingSection};

fn tfn(t: Tfn) -> String {
    format!("({:.3}, {:.3}, {:.3})", t.lower, t.mode, t.upper)
}

pub fn validation(report: &ValidationReport) -> String {
    let mut out = String::new();
    if report.is_clean() {
        out.push_str("validation: ok\n");
        return out;
    }
    let errors = report.hard_errors().count();
    let warnings = report.warnings().count();
    writeln!(out, "validation: {errors} error(s), {warnings} warning(s)").unwrap();
    for v in &report.violations {
        let severity = match v.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        let dm = v.dm.as_deref().unwrap_or("-");
        match v.residual {
            Some(r) => writeln!(
                out,
                "  {severity:7} {dm:6} {site:28} {cond} (residual {r:.4})",
                site = v.site,
                cond = v.condition
            )
            .unwrap(),
            None => writeln!(
                out,
                "  {severity:7} {dm:6} {site:28} {cond}",
                site = v.site,
                cond = v.condition
            )
            .unwrap(),
        }
    }
    out
}

fn deviation_line(problem: &DecisionProblem, record: &DeviationRecord) -> String {
    let term = match record.j {
        Some(j) => format!("({}, {})", problem.criteria[record.i], problem.criteria[j]),
        None => problem.criteria[record.i].clone(),
    };
    format!(
        "  {dm:6} {kind:22} {term:12} {value:.4}",
        dm = record.dm,
        kind = record.kind.as_str(),
        value = record.value
    )
}

pub fn weights(problem: &DecisionProblem, solution: &WeightSolution, injected: bool) -> String {
    let mut out = String::new();
    let status = if injected {
        if solution.deviations.is_empty() {
            "injected, no deviations"
        } else {
            "injected, deviations remain"
        }
    } else if solution.converged {
        "converged"
    } else {
        "NOT converged"
    };
    writeln!(out, "consensus weights ({status}):").unwrap();
    for (label, w) in problem.criteria.iter().zip(&solution.weights) {
        writeln!(out, "  {label:6} {w:.3}").unwrap();
    }
    writeln!(out, "objective: {:.6}", solution.objective).unwrap();
    for (index, round) in solution.rounds.iter().enumerate() {
        let weights: Vec<String> = round.weights.iter().map(|w| format!("{w:.3}")).collect();
        writeln!(
            out,
            "round {}: weights ({}), objective {:.6}, {} deviation(s)",
            index + 1,
            weights.join(", "),
            round.objective,
            round.deviations.len()
        )
        .unwrap();
        for record in &round.deviations {
            writeln!(out, "{}", deviation_line(problem, record)).unwrap();
        }
    }
    out
}

pub fn relations(problem: &DecisionProblem, analyses: &[DmRelations]) -> String {
    let mut out = String::new();
    out.push_str("cooperation (cp) / conflict (cf) degrees:\n");
    let mut header = format!("  {:<12}", "pair");
    for analysis in analyses {
        header.push_str(&format!(
            " {:>9} {:>9}",
            format!("{}.cp", analysis.dm),
            format!("{}.cf", analysis.dm)
        ));
    }
    writeln!(out, "{header}").unwrap();
    if let Some(first) = analyses.first() {
        for (row, pair) in first.table.pairs.iter().enumerate() {
            let label = format!(
                "({}, {})",
                problem.criteria[pair.k], problem.criteria[pair.l]
            );
            let mut line = format!("  {label:<12}");
            for analysis in analyses {
                let p = &analysis.table.pairs[row];
                line.push_str(&format!(" {:>9.3} {:>9.3}", p.cp, p.cf));
            }
            writeln!(out, "{line}").unwrap();
        }
    }
    out.push_str("criteria partitions:\n");
    for analysis in analyses {
        let subsets: Vec<String> = analysis
            .partition
            .subsets
            .iter()
            .map(|s| {
                let labels: Vec<&str> = s.iter().map(|&c| problem.criteria[c].as_str()).collect();
                format!("{{{}}}", labels.join(", "))
            })
            .collect();
        let dominant = analysis
            .dominant_subset
            .as_ref()
            .map(|s| {
                let labels: Vec<&str> = s.iter().map(|&c| problem.criteria[c].as_str()).collect();
                format!("  dominant {{{}}}", labels.join(", "))
            })
            .unwrap_or_default();
        writeln!(out, "  {:6} {}{}", analysis.dm, subsets.join(" "), dominant).unwrap();
    }
    out
}

pub fn ranking(problem: &DecisionProblem, section: &RankingSection) -> String {
    let mut out = String::new();
    out.push_str("final degrees of satisfaction:\n");
    let mut header = format!("  {:<6}", "");
    for dm in &problem.dms {
        header.push_str(&format!(" {:>23}", dm.id));
    }
    writeln!(out, "{header}").unwrap();
    for (alt, label) in problem.alternatives.iter().enumerate() {
        let mut line = format!("  {label:<6}");
        for per_dm in &section.result.per_dm_final {
            line.push_str(&format!(" {:>23}", tfn(per_dm[alt])));
        }
        writeln!(out, "{line}").unwrap();
    }
    out.push_str("integrated degrees and scores:\n");
    for (alt, label) in problem.alternatives.iter().enumerate() {
        writeln!(
            out,
            "  {label:<6} {:>23}  score {:.3}",
            tfn(section.result.integrated[alt]),
            section.result.scores[alt]
        )
        .unwrap();
    }
    writeln!(out, "order: {}", section.order_labels.join(" > ")).unwrap();
    if !section.result.ties.is_empty() {
        for group in &section.result.ties {
            let labels: Vec<&str> = group
                .iter()
                .map(|&a| problem.alternatives[a].as_str())
                .collect();
            writeln!(out, "near-tie: {}", labels.join(" ~ ")).unwrap();
        }
    }
    out
}
