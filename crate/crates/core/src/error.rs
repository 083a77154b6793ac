use thiserror::Error;

use crate::syntax::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown operator `{name}` (registered: {known})")]
    UnknownOperator { name: String, known: String },

    #[error("invalid term for the {profile} calculus: {}", render_violations(.violations))]
    Invalid {
        profile: String,
        violations: Vec<Violation>,
    },

    #[error("path {0} does not address a subterm")]
    InvalidPath(String),

    #[error("leftmost-outermost reduction is not defined for the bang calculus")]
    LeftmostOnBang,

    #[error("{what} requires the {expected} calculus, got {got}")]
    ProfileMismatch {
        what: &'static str,
        expected: &'static str,
        got: String,
    },

    #[error("expected exactly one hole, found {0}")]
    HoleCount(usize),

    #[error("term contains a bang and is not a λ-term")]
    BangInLambdaTerm,

    #[error("term is not in the image of the call-by-name translation")]
    NotCbnImage,

    #[error("term is outside the domain of the forgetful map: {0}")]
    ForgetfulDomain(String),

    #[error("term has {0} redexes, parallel enumeration is limited to 16")]
    TooManyRedexes(usize),

    #[error("target term is not reachable from the source")]
    Unreachable,

    #[error("inconsistent trace at step {0}")]
    InconsistentTrace(usize),

    #[error("operator registry: {0}")]
    Registry(String),

    #[error("{0}")]
    Io(String),
}

fn render_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
