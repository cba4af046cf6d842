//! `fgdm` — fuzzy group decision making from the command line.
//!
//! Reads a JSON problem file (alternatives, criteria, decision makers with
//! preference information and satisfaction matrices), elicits consensus
//! criteria weights, analyzes criteria relationships, and ranks the
//! alternatives. Subcommands mirror the pipeline stages and compose through
//! report files.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fgdm_core::ranking::select_dominant_subset;
use fgdm_core::{
    elicit_weights, evaluate_objective, rank_problem, DecisionProblem, SolverConfig,
    ValidationReport, WeightSolution,
};

mod render;
mod report;

use report::{ConfigEcho, DmRelations, ProblemFile, RankingSection, Report, FORMAT_VERSION};

#[derive(Parser)]
#[command(
    name = "fgdm",
    version,
    about = "Fuzzy group decision making: consensus criteria weights, criteria relationship analysis, alternative ranking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a problem file against all structural and reciprocity conditions
    Validate {
        /// Problem file (JSON)
        problem: PathBuf,
    },
    /// Elicit consensus criteria weights via the deviation relaxation loop
    Weights(StageArgs),
    /// Cooperation/conflict degrees and criteria partition per decision maker
    Analyze(StageArgs),
    /// Rank the alternatives (runs weight elicitation unless weights are given)
    Rank(StageArgs),
    /// Run weights, analyze and rank in one pass
    Pipeline(StageArgs),
}

#[derive(Args)]
struct StageArgs {
    /// Problem file (JSON)
    problem: PathBuf,

    /// Reuse the weights section of a previously written report
    #[arg(long)]
    from: Option<PathBuf>,

    /// Seed for the multi-start weight solver
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Number of solver starts per round
    #[arg(long, default_value_t = 32)]
    starts: usize,

    /// Iteration cap per solver start
    #[arg(long, default_value_t = 2000)]
    max_iterations: usize,

    /// Hinge deviations below this threshold count as zero
    #[arg(long, default_value_t = 1e-3)]
    zero_tol: f64,

    /// Cap on relaxation rounds
    #[arg(long, default_value_t = 20)]
    max_rounds: usize,

    /// Scores closer than this are reported as near-ties
    #[arg(long, default_value_t = 0.005)]
    tie_tol: f64,

    /// Exit with status 4 if the relaxation loop does not converge
    #[arg(long)]
    strict: bool,

    /// Skip weight elicitation (requires --weights)
    #[arg(long, requires = "weights")]
    skip_elicitation: bool,

    /// Comma-separated criteria weights to inject instead of elicitation
    #[arg(long, value_delimiter = ',', requires = "skip_elicitation")]
    weights: Option<Vec<f64>>,

    /// Write the machine-readable report here
    #[arg(long)]
    out: Option<PathBuf>,
}

impl StageArgs {
    fn solver_config(&self) -> SolverConfig {
        SolverConfig {
            seed: self.seed,
            starts: self.starts,
            max_iterations: self.max_iterations,
            zero_tol: self.zero_tol,
            max_rounds: self.max_rounds,
        }
    }

    fn config_echo(&self) -> ConfigEcho {
        ConfigEcho {
            seed: self.seed,
            starts: self.starts,
            max_iterations: self.max_iterations,
            zero_tol: self.zero_tol,
            max_rounds: self.max_rounds,
            tie_tol: self.tie_tol,
            strict: self.strict,
            injected_weights: self.weights.clone(),
        }
    }
}

enum Failure {
    /// Unreadable or malformed input document (exit 3).
    Parse(String),
    /// Hard validation violations (exit 2); the listing was already printed.
    Validation,
    /// Relaxation loop did not converge under --strict (exit 4).
    NonConvergence,
    /// Anything else, e.g. failing to write the report (exit 1).
    Other(String),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Other(_) => ExitCode::from(1),
            Failure::Validation => ExitCode::from(2),
            Failure::Parse(_) => ExitCode::from(3),
            Failure::NonConvergence => ExitCode::from(4),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Parse(message) => eprintln!("error: {message}"),
                Failure::Validation => eprintln!("error: problem failed validation"),
                Failure::NonConvergence => {
                    eprintln!("error: weight elicitation did not converge (--strict)")
                }
                Failure::Other(message) => eprintln!("error: {message}"),
            }
            failure.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { problem } => {
            let (_, validation) = load_problem(&problem)?;
            print!("{}", render::validation(&validation));
            if validation.has_hard_errors() {
                return Err(Failure::Validation);
            }
            Ok(())
        }
        Command::Weights(args) => stage(args, Stage::Weights),
        Command::Analyze(args) => stage(args, Stage::Analyze),
        Command::Rank(args) => stage(args, Stage::Rank),
        Command::Pipeline(args) => stage(args, Stage::Pipeline),
    }
}

#[derive(PartialEq, Clone, Copy)]
enum Stage {
    Weights,
    Analyze,
    Rank,
    Pipeline,
}

fn stage(args: StageArgs, stage: Stage) -> Result<(), Failure> {
    let (problem, validation) = load_problem(&args.problem)?;
    print!("{}", render::validation(&validation));
    if validation.has_hard_errors() {
        return Err(Failure::Validation);
    }
    let carried = args
        .from
        .as_ref()
        .map(|path| load_report(path))
        .transpose()?;
    let mut report = Report::new(&problem, validation, args.config_echo());

    // weights: injected, carried from a previous report, or elicited
    let needs_weights = matches!(stage, Stage::Weights | Stage::Rank | Stage::Pipeline);
    let solution: Option<WeightSolution> = if let Some(injected) = &args.weights {
        Some(injected_solution(injected, &problem, &args)?)
    } else if let Some(carried_weights) = carried.as_ref().and_then(|r| r.weights.clone()) {
        Some(carried_weights)
    } else if needs_weights {
        let solution = elicit_weights(&problem, &args.solver_config())
            .map_err(|e| Failure::Other(format!("weight elicitation failed: {e}")))?;
        Some(solution)
    } else {
        None
    };

    let injected = args.weights.is_some();
    if let Some(solution) = &solution {
        print!("{}", render::weights(&problem, solution, injected));
        report.weights = Some(solution.clone());
    }

    // relation analysis and ranking
    if matches!(stage, Stage::Analyze | Stage::Rank | Stage::Pipeline) {
        let weights = solution.as_ref().map(|s| s.weights.as_slice());
        let analyses = analyze(&problem, weights)
            .map_err(|e| Failure::Other(format!("relation analysis failed: {e}")))?;
        print!("{}", render::relations(&problem, &analyses));
        report.relations = Some(analyses);

        if matches!(stage, Stage::Rank | Stage::Pipeline) {
            let weights = solution.as_ref().expect("ranking stages have weights");
            let (_, result) = rank_problem(&problem, &weights.weights, args.tie_tol)
                .map_err(|e| Failure::Other(format!("ranking failed: {e}")))?;
            let order_labels = result
                .order
                .iter()
                .map(|&a| problem.alternatives[a].clone())
                .collect();
            let section = RankingSection {
                result,
                order_labels,
            };
            print!("{}", render::ranking(&problem, &section));
            report.ranking = Some(section);
        }
    }

    if let Some(path) = &args.out {
        std::fs::write(path, report.to_json())
            .map_err(|e| Failure::Other(format!("writing {}: {e}", path.display())))?;
    }

    // --strict gates on the elicitation loop; injected weights are exempt
    if args.strict && !injected && solution.as_ref().is_some_and(|s| !s.converged) {
        return Err(Failure::NonConvergence);
    }
    Ok(())
}

/// A fixed weight vector standing in for the elicitation result; deviations
/// and the objective are still evaluated so the report stays informative.
fn injected_solution(
    weights: &[f64],
    problem: &DecisionProblem,
    args: &StageArgs,
) -> Result<WeightSolution, Failure> {
    if weights.len() != problem.criteria.len() {
        return Err(Failure::Other(format!(
            "--weights needs {} components, got {}",
            problem.criteria.len(),
            weights.len()
        )));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-6 {
        return Err(Failure::Other(format!(
            "--weights must sum to 1, got {total}"
        )));
    }
    let normalized = problem.solver_normalized();
    let (objective, deviations) = evaluate_objective(weights, &normalized)
        .map_err(|e| Failure::Other(format!("--weights rejected: {e}")))?;
    let converged = deviations.iter().all(|d| d.value < args.zero_tol);
    Ok(WeightSolution {
        weights: weights.to_vec(),
        deviations,
        objective,
        rounds: Vec::new(),
        converged,
    })
}

fn analyze(
    problem: &DecisionProblem,
    weights: Option<&[f64]>,
) -> Result<Vec<DmRelations>, fgdm_core::Error> {
    problem
        .dms
        .iter()
        .map(|dm| {
            let analysis = fgdm_core::analyze_dm(&dm.satisfaction)?;
            let dominant_subset =
                weights.map(|w| select_dominant_subset(&analysis.partition, w).to_vec());
            Ok(DmRelations {
                dm: dm.id.clone(),
                table: analysis.table,
                partition: analysis.partition,
                dominant_subset,
            })
        })
        .collect()
}

fn load_problem(path: &Path) -> Result<(DecisionProblem, ValidationReport), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("reading {}: {e}", path.display())))?;
    let file: ProblemFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Parse(format!("parsing {}: {e}", path.display())))?;
    if file.format_version != FORMAT_VERSION {
        return Err(Failure::Parse(format!(
            "unsupported problem format version {:?} (expected {FORMAT_VERSION:?})",
            file.format_version
        )));
    }
    let validation = file.problem.validate();
    Ok((file.problem, validation))
}

fn load_report(path: &Path) -> Result<Report, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("reading {}: {e}", path.display())))?;
    let report: Report = serde_json::from_str(&text)
        .map_err(|e| Failure::Parse(format!("parsing {}: {e}", path.display())))?;
    if report.format_version != FORMAT_VERSION {
        return Err(Failure::Parse(format!(
            "unsupported report format version {:?} (expected {FORMAT_VERSION:?})",
            report.format_version
        )));
    }
    Ok(report)
}
