//! Shared test data: the five-decision-maker reference problem (five
//! alternatives, four criteria) with one utility DM, two fuzzy-relation DMs
//! and two multiplicative-relation DMs, plus the published consensus weight
//! vector used to pin downstream values.

// each integration test binary uses its own subset of these helpers
#![allow(dead_code)]

use fgdm_core::{DecisionMaker, DecisionProblem, Preference, Tfn, TfnMatrix};

/// Published consensus weight vector for [`sample_problem`].
pub const CONSENSUS_WEIGHTS: [f64; 4] = [0.189, 0.257, 0.333, 0.221];

/// Decision maker weights.
pub const DM_WEIGHTS: [f64; 5] = [0.2, 0.25, 0.2, 0.2, 0.15];

pub fn triples(values: &[[f64; 3]]) -> Vec<Tfn> {
    values.iter().map(|v| Tfn::new(v[0], v[1], v[2])).collect()
}

pub fn matrix(rows: &[&[[f64; 3]]]) -> TfnMatrix {
    TfnMatrix::from_rows(rows.iter().map(|r| triples(r)).collect()).unwrap()
}

pub fn satisfaction_1() -> TfnMatrix {
    matrix(&[
        &[
            [0.3, 0.5, 0.6],
            [0.4, 0.5, 0.7],
            [0.5, 0.7, 0.8],
            [0.4, 0.6, 0.7],
        ],
        &[
            [0.2, 0.3, 0.5],
            [0.3, 0.4, 0.5],
            [0.4, 0.5, 0.7],
            [0.3, 0.5, 0.6],
        ],
        &[
            [0.2, 0.3, 0.4],
            [0.4, 0.5, 0.6],
            [0.4, 0.5, 0.6],
            [0.3, 0.4, 0.5],
        ],
        &[
            [0.4, 0.6, 0.7],
            [0.4, 0.5, 0.6],
            [0.3, 0.4, 0.6],
            [0.5, 0.6, 0.7],
        ],
        &[
            [0.6, 0.7, 0.8],
            [0.5, 0.6, 0.7],
            [0.3, 0.5, 0.6],
            [0.6, 0.7, 0.8],
        ],
    ])
}

pub fn satisfaction_2() -> TfnMatrix {
    matrix(&[
        &[
            [0.4, 0.5, 0.6],
            [0.5, 0.6, 0.7],
            [0.6, 0.7, 0.8],
            [0.4, 0.5, 0.6],
        ],
        &[
            [0.3, 0.4, 0.5],
            [0.4, 0.5, 0.6],
            [0.3, 0.5, 0.7],
            [0.4, 0.6, 0.7],
        ],
        &[
            [0.3, 0.5, 0.6],
            [0.4, 0.6, 0.7],
            [0.4, 0.6, 0.7],
            [0.3, 0.4, 0.6],
        ],
        &[
            [0.6, 0.7, 0.8],
            [0.3, 0.4, 0.6],
            [0.3, 0.4, 0.5],
            [0.5, 0.7, 0.8],
        ],
        &[
            [0.6, 0.7, 0.8],
            [0.6, 0.7, 0.8],
            [0.3, 0.4, 0.5],
            [0.7, 0.8, 0.9],
        ],
    ])
}

pub fn satisfaction_3() -> TfnMatrix {
    matrix(&[
        &[
            [0.4, 0.5, 0.6],
            [0.5, 0.7, 0.8],
            [0.5, 0.6, 0.7],
            [0.5, 0.6, 0.7],
        ],
        &[
            [0.3, 0.4, 0.5],
            [0.4, 0.6, 0.7],
            [0.4, 0.5, 0.6],
            [0.4, 0.6, 0.7],
        ],
        &[
            [0.2, 0.3, 0.5],
            [0.6, 0.7, 0.8],
            [0.4, 0.6, 0.7],
            [0.3, 0.5, 0.6],
        ],
        &[
            [0.6, 0.8, 0.9],
            [0.3, 0.4, 0.5],
            [0.3, 0.4, 0.5],
            [0.6, 0.7, 0.8],
        ],
        &[
            [0.7, 0.8, 0.9],
            [0.6, 0.8, 0.9],
            [0.3, 0.5, 0.7],
            [0.6, 0.8, 0.9],
        ],
    ])
}

pub fn satisfaction_4() -> TfnMatrix {
    matrix(&[
        &[
            [0.4, 0.6, 0.7],
            [0.6, 0.7, 0.8],
            [0.6, 0.7, 0.9],
            [0.6, 0.7, 0.8],
        ],
        &[
            [0.4, 0.6, 0.8],
            [0.4, 0.5, 0.7],
            [0.3, 0.4, 0.5],
            [0.3, 0.5, 0.7],
        ],
        &[
            [0.3, 0.5, 0.7],
            [0.7, 0.8, 0.9],
            [0.5, 0.6, 0.7],
            [0.2, 0.4, 0.5],
        ],
        &[
            [0.7, 0.8, 0.9],
            [0.3, 0.5, 0.6],
            [0.2, 0.3, 0.4],
            [0.7, 0.8, 0.9],
        ],
        &[
            [0.7, 0.8, 0.9],
            [0.6, 0.7, 0.9],
            [0.3, 0.5, 0.6],
            [0.7, 0.8, 0.9],
        ],
    ])
}

pub fn satisfaction_5() -> TfnMatrix {
    matrix(&[
        &[
            [0.3, 0.4, 0.5],
            [0.5, 0.6, 0.7],
            [0.6, 0.7, 0.8],
            [0.5, 0.6, 0.7],
        ],
        &[
            [0.2, 0.3, 0.4],
            [0.2, 0.3, 0.4],
            [0.2, 0.4, 0.5],
            [0.3, 0.4, 0.5],
        ],
        &[
            [0.2, 0.3, 0.4],
            [0.5, 0.7, 0.9],
            [0.6, 0.7, 0.8],
            [0.2, 0.3, 0.4],
        ],
        &[
            [0.4, 0.6, 0.8],
            [0.5, 0.6, 0.7],
            [0.6, 0.7, 0.8],
            [0.4, 0.6, 0.7],
        ],
        &[
            [0.7, 0.8, 0.9],
            [0.2, 0.4, 0.6],
            [0.2, 0.3, 0.4],
            [0.3, 0.4, 0.5],
        ],
    ])
}

pub fn utility_dm1() -> Preference {
    Preference::Utility(triples(&[
        [0.15, 0.20, 0.30],
        [0.05, 0.15, 0.20],
        [0.30, 0.35, 0.40],
        [0.20, 0.30, 0.35],
    ]))
}

pub fn fuzzy_dm2() -> Preference {
    Preference::FuzzyRelation(matrix(&[
        &[
            [0.50, 0.50, 0.50],
            [0.20, 0.30, 0.35],
            [0.25, 0.30, 0.40],
            [0.50, 0.55, 0.60],
        ],
        &[
            [0.65, 0.70, 0.80],
            [0.50, 0.50, 0.50],
            [0.50, 0.65, 0.75],
            [0.80, 0.85, 0.95],
        ],
        &[
            [0.60, 0.70, 0.75],
            [0.25, 0.35, 0.50],
            [0.50, 0.50, 0.50],
            [0.65, 0.70, 0.80],
        ],
        &[
            [0.40, 0.45, 0.50],
            [0.05, 0.15, 0.20],
            [0.20, 0.30, 0.35],
            [0.50, 0.50, 0.50],
        ],
    ]))
}

pub fn fuzzy_dm3() -> Preference {
    Preference::FuzzyRelation(matrix(&[
        &[
            [0.50, 0.50, 0.50],
            [0.25, 0.25, 0.30],
            [0.30, 0.35, 0.40],
            [0.15, 0.20, 0.25],
        ],
        &[
            [0.70, 0.75, 0.75],
            [0.50, 0.50, 0.50],
            [0.55, 0.60, 0.65],
            [0.40, 0.45, 0.50],
        ],
        &[
            [0.60, 0.65, 0.70],
            [0.35, 0.40, 0.45],
            [0.50, 0.50, 0.50],
            [0.25, 0.30, 0.40],
        ],
        &[
            [0.75, 0.80, 0.85],
            [0.50, 0.55, 0.60],
            [0.60, 0.70, 0.75],
            [0.50, 0.50, 0.50],
        ],
    ]))
}

pub fn multiplicative_dm4() -> Preference {
    Preference::MultiplicativeRelation(matrix(&[
        &[
            [1.00, 1.00, 1.00],
            [0.38, 0.40, 0.42],
            [0.33, 0.34, 0.36],
            [0.42, 0.43, 0.45],
        ],
        &[
            [2.40, 2.50, 2.60],
            [1.00, 1.00, 1.00],
            [0.55, 0.59, 0.62],
            [2.20, 2.30, 2.40],
        ],
        &[
            [2.80, 2.90, 3.00],
            [1.60, 1.70, 1.80],
            [1.00, 1.00, 1.00],
            [2.50, 2.60, 2.70],
        ],
        &[
            [2.20, 2.30, 2.40],
            [0.42, 0.43, 0.45],
            [0.37, 0.38, 0.40],
            [1.00, 1.00, 1.00],
        ],
    ]))
}

pub fn multiplicative_dm5() -> Preference {
    Preference::MultiplicativeRelation(matrix(&[
        &[
            [1.00, 1.00, 1.00],
            [1.60, 1.70, 1.80],
            [1.00, 1.10, 1.30],
            [2.00, 2.10, 2.20],
        ],
        &[
            [0.50, 0.60, 0.63],
            [1.00, 1.00, 1.00],
            [0.60, 0.63, 0.67],
            [1.70, 1.80, 1.90],
        ],
        &[
            [0.77, 0.90, 1.00],
            [1.50, 1.60, 1.70],
            [1.00, 1.00, 1.00],
            [1.80, 1.90, 2.00],
        ],
        &[
            [0.45, 0.48, 0.50],
            [0.53, 0.56, 0.60],
            [0.50, 0.53, 0.56],
            [1.00, 1.00, 1.00],
        ],
    ]))
}

pub fn sample_problem() -> DecisionProblem {
    let labels = |prefix: &str, count: usize| -> Vec<String> {
        (1..=count).map(|i| format!("{prefix}{i}")).collect()
    };
    let preferences = [
        utility_dm1(),
        fuzzy_dm2(),
        fuzzy_dm3(),
        multiplicative_dm4(),
        multiplicative_dm5(),
    ];
    let satisfactions = [
        satisfaction_1(),
        satisfaction_2(),
        satisfaction_3(),
        satisfaction_4(),
        satisfaction_5(),
    ];
    DecisionProblem {
        alternatives: labels("a", 5),
        criteria: labels("c", 4),
        dms: preferences
            .into_iter()
            .zip(satisfactions)
            .zip(DM_WEIGHTS)
            .enumerate()
            .map(
                |(index, ((preference, satisfaction), weight))| DecisionMaker {
                    id: format!("J{}", index + 1),
                    weight,
                    preference,
                    satisfaction,
                },
            )
            .collect(),
    }
}
