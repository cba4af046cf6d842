use core::fmt;

/// Errors produced by the computational layers.
///
/// Data-quality problems (broken reciprocity, out-of-range entries, shape
/// mismatches in user input) are not errors; they are reported as
/// [`Violation`](crate::problem::Violation)s by
/// [`DecisionProblem::validate`](crate::problem::DecisionProblem::validate).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A weighted combination was requested over an empty term list.
    EmptyCombination,
    /// A pairwise satisfaction difference was requested for one and the
    /// same alternative.
    SameAlternative { index: usize },
    /// A weight component is below the positivity floor, so ratio terms
    /// would divide by (near) zero.
    WeightBelowFloor { index: usize, value: f64 },
    /// A vector or matrix does not have the expected length.
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    /// Rows of differing lengths were supplied for a matrix.
    RaggedMatrix { row: usize },
    /// The weight solver could not produce a feasible point.
    NoFeasiblePoint,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyCombination => write!(f, "weighted combination of an empty term list"),
            Error::SameAlternative { index } => {
                write!(f, "pairwise difference of alternative {index} with itself")
            }
            Error::WeightBelowFloor { index, value } => {
                write!(f, "weight {index} = {value} is below the positivity floor")
            }
            Error::LengthMismatch {
                what,
                expected,
                actual,
            } => write!(f, "{what}: expected length {expected}, got {actual}"),
            Error::RaggedMatrix { row } => {
                write!(f, "matrix row {row} differs in length from row 0")
            }
            Error::NoFeasiblePoint => write!(f, "solver produced no feasible weight vector"),
        }
    }
}

impl core::error::Error for Error {}
