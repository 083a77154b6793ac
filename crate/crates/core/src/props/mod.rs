//! Term generation and the executable property suites.

mod gen;
mod report;
mod search;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

pub use gen::{count_by_size, gen_terms, pool_names, GenMode, GenSpec};
pub use report::{CaseResult, CheckReport, Failure};
pub use search::{factorization_witness, SearchOutcome, Witness};

use crate::error::{Error, Result};
use crate::reduction::StepFilter;
use crate::syntax::{Term, OPLUS};

/// The relation whose peaks a quasi-diamond check closes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdRelation {
    LeastLevel,
    /// Least-level steps together with leftmost-outermost steps (λ-calculi only).
    LeastLevelOrLeftmost,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteId {
    Factorization,
    Completeness,
    GoodLeastLevel,
    QuasiDiamond(QdRelation),
    SimulationCbn,
    SimulationCbv,
    NormalFormPreservation,
    LevelPreservation,
    LlStepPreservation,
    ModularTest(String),
    /// `StrongPostponement(e, i)`: `i · e ⊆ e* · i=`.
    StrongPostponement(StepFilter, StepFilter),
    MergeSplit,
    SurfaceInLl,
    ShapePreservation,
}

impl SuiteId {
    pub const NAMES: &'static [&'static str] = &[
        "factorization",
        "completeness",
        "good-ll",
        "quasi-diamond",
        "quasi-diamond-lo",
        "sim-cbn",
        "sim-cbv",
        "nf-preservation",
        "level-preservation",
        "ll-step-preservation",
        "modular",
        "postponement",
        "merge-split",
        "surface-in-ll",
        "shape",
    ];

    pub(crate) fn static_name(&self) -> &'static str {
        match self {
            SuiteId::Factorization => "factorization",
            SuiteId::Completeness => "completeness",
            SuiteId::GoodLeastLevel => "good-ll",
            SuiteId::QuasiDiamond(QdRelation::LeastLevel) => "quasi-diamond",
            SuiteId::QuasiDiamond(QdRelation::LeastLevelOrLeftmost) => "quasi-diamond-lo",
            SuiteId::SimulationCbn => "sim-cbn",
            SuiteId::SimulationCbv => "sim-cbv",
            SuiteId::NormalFormPreservation => "nf-preservation",
            SuiteId::LevelPreservation => "level-preservation",
            SuiteId::LlStepPreservation => "ll-step-preservation",
            SuiteId::ModularTest(_) => "modular",
            SuiteId::StrongPostponement(..) => "postponement",
            SuiteId::MergeSplit => "merge-split",
            SuiteId::SurfaceInLl => "surface-in-ll",
            SuiteId::ShapePreservation => "shape",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteId::ModularTest(op) => write!(f, "modular:{op}"),
            SuiteId::StrongPostponement(e, i) => write!(f, "postponement:{e},{i}"),
            other => f.write_str(other.static_name()),
        }
    }
}

/// Accepts the names in [`SuiteId::NAMES`]; `modular:OP` picks the operator
/// (default `oplus`) and `postponement:E,I` the two step filters (default `ll,int`).
impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SuiteId> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let unknown = || Error::Registry(format!("unknown suite `{s}` (known: {})", SuiteId::NAMES.join(", ")));
        let suite = match (name, arg) {
            ("modular", arg) => SuiteId::ModularTest(arg.unwrap_or(OPLUS).to_string()),
            ("postponement", None) => SuiteId::StrongPostponement(StepFilter::LeastLevel, StepFilter::Internal),
            ("postponement", Some(arg)) => {
                let (e, i) = arg.split_once(',').ok_or_else(unknown)?;
                SuiteId::StrongPostponement(e.parse()?, i.parse()?)
            }
            (_, Some(_)) => return Err(unknown()),
            ("factorization", None) => SuiteId::Factorization,
            ("completeness", None) => SuiteId::Completeness,
            ("good-ll", None) => SuiteId::GoodLeastLevel,
            ("quasi-diamond", None) => SuiteId::QuasiDiamond(QdRelation::LeastLevel),
            ("quasi-diamond-lo", None) => SuiteId::QuasiDiamond(QdRelation::LeastLevelOrLeftmost),
            ("sim-cbn", None) => SuiteId::SimulationCbn,
            ("sim-cbv", None) => SuiteId::SimulationCbv,
            ("nf-preservation", None) => SuiteId::NormalFormPreservation,
            ("level-preservation", None) => SuiteId::LevelPreservation,
            ("ll-step-preservation", None) => SuiteId::LlStepPreservation,
            ("merge-split", None) => SuiteId::MergeSplit,
            ("surface-in-ll", None) => SuiteId::SurfaceInLl,
            ("shape", None) => SuiteId::ShapePreservation,
            _ => return Err(unknown()),
        };
        Ok(suite)
    }
}

/// Generates the corpus of `spec` and checks `suite` on every term.
pub fn run_suite(suite: &SuiteId, spec: &GenSpec, fuel: usize, cap: usize) -> Result<CheckReport> {
    let corpus = gen_terms(spec);
    run_suite_on(suite, &corpus, spec, fuel, cap)
}

/// As [`run_suite`] on an explicit corpus; `spec` supplies the profile and
/// the pool for auxiliary terms.
pub fn run_suite_on(suite: &SuiteId, corpus: &[Term], spec: &GenSpec, fuel: usize, cap: usize) -> Result<CheckReport> {
    let start = Instant::now();
    suites::validate_corpus(corpus, &spec.profile)?;
    let substitutes = match suite {
        SuiteId::ModularTest(_) => gen_terms(&GenSpec {
            mode: GenMode::Exhaustive { max_size: 3 },
            ..spec.clone()
        }),
        _ => Vec::new(),
    };
    let check = suites::checker(suite, &spec.profile, suites::Bounds { fuel, cap }, substitutes)?;
    let results: Vec<CaseResult> = corpus.par_iter().map(&check).collect();
    let mut total = CaseResult::default();
    for r in results {
        total.merge(r);
    }
    Ok(CheckReport {
        suite: suite.clone(),
        profile: spec.profile.to_string(),
        cases_run: corpus.len(),
        obligations: total.obligations,
        failures: total.failures,
        inconclusive: total.inconclusive,
        wall_time: start.elapsed(),
    })
}
