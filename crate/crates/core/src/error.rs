use thiserror::Error;

use crate::grading::Sdim;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic must be an odd prime, got {0}")]
    BadCharacteristic(u64),
    #[error("extension degree must be between 1 and {max}, got {k}")]
    BadDegree { k: usize, max: usize },
    #[error("field of order {p}^{k} does not fit in 64 bits")]
    FieldTooLarge { p: u32, k: usize },
    #[error("coefficient vector of length {got} does not match extension degree {k}")]
    CoefficientLength { got: usize, k: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace is not contained in the quotiented space")]
    NotASubspace,

    #[error("bracket [{x}, {y}] leaves the span of the basis matrices")]
    BracketOutsideSpan { x: String, y: String },
    #[error("super Jacobi identity fails on ({0}, {1}, {2})")]
    Jacobi(String, String, String),

    #[error("weight ({0}, {1}) is not in Lambda_chi")]
    WeightNotAllowed(String, String),
    #[error("no square root mu of {0} exists in the field; a degree-2 extension is required")]
    MissingMu(String),
    #[error("module axiom fails for [{x}, {y}] (action table {formula})")]
    ModuleAxiom { x: String, y: String, formula: String },
    #[error("p-character identity fails for x = {0}")]
    PCharacter(String),
    #[error("module action does not respect the {0} grading of {1}")]
    Grading(String, String),
    #[error("hypotheses of the submodule {which} do not hold: {reason}")]
    SubmoduleHypothesis { which: String, reason: String },
    #[error("span of {0} is not closed under the action (fails for {1} applied to basis vector {2})")]
    NotActionClosed(String, String, usize),
    #[error("enumeration budget {budget} exceeded by weight component {component} ({points} projective points)")]
    BudgetExceeded { component: String, points: u128, budget: u128 },
    #[error("quotient is not simple: homogeneous vector {0} generates a proper submodule")]
    NotSimple(String),
    #[error("unsupported route: {0}")]
    UnsupportedRoute(String),
    #[error("routes disagree on the maximal submodule: {0}")]
    RouteDisagreement(String),

    #[error("H1 methods disagree: {first} gives {a}, {second} gives {b}")]
    MethodDisagreement { first: String, second: String, a: Sdim, b: Sdim },
    #[error("unknown {kind} `{name}` (known: {known})")]
    UnknownStrategy { kind: &'static str, name: String, known: String },

    #[error("cochain parity violated at generator {0}")]
    CochainParity(String),
    #[error("{0}")]
    Invalid(String),
}
