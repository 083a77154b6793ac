//! One-step reduction, strategies, bounded reduction graphs and traces.

mod graph;
mod strategy;
mod trace;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::redex::{self, LeastLevel, Redex};
use crate::syntax::{to_canonical, Calculus, CalculusProfile, Rule, Term};

pub use graph::{reachable_graph, Edge, ReductionGraph, DEFAULT_CAP};
pub(crate) use graph::build as graph_build;
pub use strategy::{reduce, reduce_seeded, ReduceOutcome, Strategy};
pub use trace::{format_step, format_trace};

/// How a step relates to the least level of its source.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct StepClass {
    pub least_level: bool,
    pub internal: bool,
    pub surface: bool,
}

impl StepClass {
    pub fn of(level: usize, ll: LeastLevel) -> StepClass {
        let at = LeastLevel::Finite(level);
        StepClass {
            least_level: at == ll,
            internal: at > ll,
            surface: level == 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StepRecord {
    pub from: Term,
    pub redex: Redex,
    pub to: Term,
    pub class: StepClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepFilter {
    All,
    LeastLevel,
    Internal,
    Surface,
    AtLevel(usize),
    /// Only for the CbN and CbV calculi.
    LeftmostOutermost,
    Rule(Rule),
    DOnly,
}

impl StepFilter {
    /// Whether a step is admitted. Leftmost-outermost depends on the other
    /// redexes of the source and is accepted here unconditionally.
    pub fn admits(&self, r: &Redex, class: StepClass) -> bool {
        match self {
            StepFilter::All | StepFilter::LeftmostOutermost => true,
            StepFilter::LeastLevel => class.least_level,
            StepFilter::Internal => class.internal,
            StepFilter::Surface => class.surface,
            StepFilter::AtLevel(k) => r.level == *k,
            StepFilter::Rule(rule) => r.rule == *rule,
            StepFilter::DOnly => r.is_d,
        }
    }
}

impl fmt::Display for StepFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepFilter::All => f.write_str("all"),
            StepFilter::LeastLevel => f.write_str("ll"),
            StepFilter::Internal => f.write_str("int"),
            StepFilter::Surface => f.write_str("surf"),
            StepFilter::AtLevel(k) => write!(f, "level{k}"),
            StepFilter::LeftmostOutermost => f.write_str("lo"),
            StepFilter::Rule(r) => write!(f, "rule:{r}"),
            StepFilter::DOnly => f.write_str("d"),
        }
    }
}

/// Parses the names printed by `Display`; rules are `beta`, `betav`, `!beta`
/// or an operator name.
impl FromStr for StepFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<StepFilter> {
        Ok(match s {
            "all" => StepFilter::All,
            "ll" => StepFilter::LeastLevel,
            "int" => StepFilter::Internal,
            "surf" => StepFilter::Surface,
            "lo" => StepFilter::LeftmostOutermost,
            "d" => StepFilter::DOnly,
            _ => {
                if let Some(k) = s.strip_prefix("level").and_then(|k| k.parse().ok()) {
                    StepFilter::AtLevel(k)
                } else if let Some(r) = s.strip_prefix("rule:") {
                    StepFilter::Rule(match r {
                        "beta" => Rule::Beta,
                        "betav" => Rule::BetaV,
                        "!beta" => Rule::BangBeta,
                        op => Rule::Op(op.to_string()),
                    })
                } else {
                    return Err(Error::Registry(format!("unknown step filter `{s}`")));
                }
            }
        })
    }
}

/// All one-step reducts of `t` admitted by `filter`. Operator redexes yield
/// one record per distinct contraction.
pub fn successors(t: &Term, profile: &CalculusProfile, filter: &StepFilter) -> Result<Vec<StepRecord>> {
    if *filter == StepFilter::LeftmostOutermost && profile.calculus == Calculus::Bang {
        return Err(Error::LeftmostOnBang);
    }
    let redexes = redex::enumerate_redexes(t, profile)?;
    Ok(steps_from(t, &redexes, profile, filter))
}

/// [`successors`] without validation, for terms already known to be valid.
pub(crate) fn successors_unchecked(t: &Term, profile: &CalculusProfile, filter: &StepFilter) -> Vec<StepRecord> {
    let redexes = redex::enumerate_unchecked(t, profile);
    steps_from(t, &redexes, profile, filter)
}

fn steps_from(t: &Term, redexes: &[Redex], profile: &CalculusProfile, filter: &StepFilter) -> Vec<StepRecord> {
    let ll = redex::min_level(redexes);
    let chosen: &[Redex] = if *filter == StepFilter::LeftmostOutermost {
        &redexes[..redexes.len().min(1)]
    } else {
        redexes
    };
    let mut out = Vec::new();
    for r in chosen {
        let class = StepClass::of(r.level, ll);
        if !filter.admits(r, class) {
            continue;
        }
        let mut seen = HashSet::new();
        for to in redex::contract(t, r, profile).expect("enumerated redex contracts") {
            if seen.insert(to_canonical(&to)) {
                out.push(StepRecord {
                    from: t.clone(),
                    redex: r.clone(),
                    to,
                    class,
                });
            }
        }
    }
    out
}

pub fn is_normal(t: &Term, profile: &CalculusProfile) -> bool {
    redex::enumerate_unchecked(t, profile).is_empty()
}

/// Contracts d-redexes leftmost-outermost until none is left.
pub fn d_normalize(t: &Term) -> Term {
    d_normalize_counting(t).0
}

/// [`d_normalize`] plus the number of d-steps taken.
pub fn d_normalize_counting(t: &Term) -> (Term, usize) {
    let profile = CalculusProfile::bang();
    let mut cur = t.clone();
    let mut n = 0;
    while let Some(r) = redex::enumerate_unchecked(&cur, &profile).into_iter().find(|r| r.is_d) {
        cur = redex::contract(&cur, &r, &profile).expect("d-redex contracts").remove(0);
        n += 1;
    }
    (cur, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    const R: &str = r"(\x.x) !z";
    const DD: &str = r"(\x.x !x) !(\x.x !x)";

    #[test]
    fn delta_delta_steps_to_itself() {
        let s = successors(&p(DD), &CalculusProfile::bang(), &StepFilter::All).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].to, p(DD));
    }

    #[test]
    fn two_least_level_steps() {
        let t = p(&format!(r"(\z.{R}) !({R})"));
        let s = successors(&t, &CalculusProfile::bang(), &StepFilter::LeastLevel).unwrap();
        let tos: Vec<Term> = s.into_iter().map(|r| r.to).collect();
        assert_eq!(tos, vec![p(&format!(r"(\x.x) !({R})")), p(&format!(r"(\z.z) !({R})"))]);
    }

    #[test]
    fn leftmost_outermost_sees_oplus() {
        let t = p(r"#oplus(x, y) ((\x.x) \x.x)");
        let with = CalculusProfile::with_oplus(Calculus::CbN);
        let tos: Vec<Term> = successors(&t, &with, &StepFilter::LeftmostOutermost)
            .unwrap()
            .into_iter()
            .map(|r| r.to)
            .collect();
        assert_eq!(tos, vec![p(r"x ((\x.x) \x.x)"), p(r"y ((\x.x) \x.x)")]);
        let pure = successors(&t, &CalculusProfile::cbn(), &StepFilter::LeftmostOutermost).unwrap();
        assert_eq!(pure.len(), 1);
        assert_eq!(pure[0].to, p(r"#oplus(x, y) \x.x"));
    }

    #[test]
    fn leftmost_outermost_refused_on_bang() {
        let r = successors(&p("x"), &CalculusProfile::bang(), &StepFilter::LeftmostOutermost);
        assert!(matches!(r, Err(Error::LeftmostOnBang)));
    }

    #[test]
    fn normal_forms() {
        assert!(is_normal(&p("x !y"), &CalculusProfile::bang()));
        assert!(!is_normal(&p(R), &CalculusProfile::bang()));
        assert!(!is_normal(&p(r"(\x.x) y z"), &CalculusProfile::cbv()));
    }

    #[test]
    fn d_normal_forms() {
        assert_eq!(d_normalize(&p(r"(\x.x) !x !y")), p("x !y"));
        assert_eq!(d_normalize(&p("x")), p("x"));
        assert_eq!(d_normalize_counting(&p(r"(\x.x) !((\x.x) !z)")), (p("z"), 2));
    }
}
