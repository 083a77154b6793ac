use std::collections::HashSet;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{StepClass, StepRecord};
use crate::error::{Error, Result};
use crate::redex::{self, Redex};
use crate::syntax::{to_canonical, Calculus, CalculusProfile, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Leftmost among the redexes at minimal level.
    LeastLevel,
    /// CbN and CbV only.
    LeftmostOutermost,
    /// Leftmost level-0 redex, else the leftmost-outermost redex.
    SurfaceFirst,
    /// Leftmost-innermost.
    FullLeftmost,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::LeastLevel => "ll",
            Strategy::LeftmostOutermost => "lo",
            Strategy::SurfaceFirst => "surface",
            Strategy::FullLeftmost => "full",
        })
    }
}

impl Strategy {
    fn pick(self, redexes: &[Redex]) -> Option<&Redex> {
        match self {
            Strategy::LeastLevel => {
                let ll = redexes.iter().map(|r| r.level).min()?;
                redexes.iter().find(|r| r.level == ll)
            }
            Strategy::LeftmostOutermost => redexes.first(),
            Strategy::SurfaceFirst => redexes.iter().find(|r| r.level == 0).or(redexes.first()),
            Strategy::FullLeftmost => redexes.iter().find(|r| {
                !redexes
                    .iter()
                    .any(|o| o.path != r.path && r.path.is_prefix_of(&o.path))
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub enum ReduceOutcome {
    NormalForm {
        term: Term,
        trace: Vec<StepRecord>,
    },
    FuelExhausted {
        last: Term,
        trace: Vec<StepRecord>,
        cycle_detected: bool,
    },
}

impl ReduceOutcome {
    pub fn term(&self) -> &Term {
        match self {
            ReduceOutcome::NormalForm { term, .. } => term,
            ReduceOutcome::FuelExhausted { last, .. } => last,
        }
    }

    pub fn trace(&self) -> &[StepRecord] {
        match self {
            ReduceOutcome::NormalForm { trace, .. } | ReduceOutcome::FuelExhausted { trace, .. } => trace,
        }
    }

    pub fn is_normal_form(&self) -> bool {
        matches!(self, ReduceOutcome::NormalForm { .. })
    }

    pub fn cycle_detected(&self) -> bool {
        matches!(self, ReduceOutcome::FuelExhausted { cycle_detected: true, .. })
    }

    /// Number of α-distinct terms visited, the start term included.
    pub fn distinct_states(&self) -> usize {
        let mut seen = HashSet::new();
        if let Some(first) = self.trace().first() {
            seen.insert(to_canonical(&first.from));
        }
        for s in self.trace() {
            seen.insert(to_canonical(&s.to));
        }
        seen.len().max(1)
    }
}

/// Runs `strategy` for at most `fuel` steps. Operator redexes take their
/// first contraction (project-left for `⊕`).
pub fn reduce(t: &Term, profile: &CalculusProfile, strategy: Strategy, fuel: usize) -> Result<ReduceOutcome> {
    reduce_seeded(t, profile, strategy, fuel, None)
}

/// As [`reduce`]; with a seed, operator contractions are chosen uniformly at random.
pub fn reduce_seeded(
    t: &Term,
    profile: &CalculusProfile,
    strategy: Strategy,
    fuel: usize,
    seed: Option<u64>,
) -> Result<ReduceOutcome> {
    if strategy == Strategy::LeftmostOutermost && profile.calculus == Calculus::Bang {
        return Err(Error::LeftmostOnBang);
    }
    redex::enumerate_redexes(t, profile)?;
    let mut rng = seed.map(StdRng::seed_from_u64);
    let mut seen = HashSet::new();
    seen.insert(to_canonical(t));
    let mut cycle = false;
    let mut cur = t.clone();
    let mut trace = Vec::new();
    for _ in 0..fuel {
        let redexes = redex::enumerate_unchecked(&cur, profile);
        let Some(r) = strategy.pick(&redexes) else {
            return Ok(ReduceOutcome::NormalForm { term: cur, trace });
        };
        let mut reducts = redex::contract(&cur, r, profile)?;
        let i = match rng.as_mut() {
            Some(rng) if reducts.len() > 1 => rng.random_range(0..reducts.len()),
            _ => 0,
        };
        let to = reducts.swap_remove(i);
        cycle |= !seen.insert(to_canonical(&to));
        trace.push(StepRecord {
            from: cur,
            redex: r.clone(),
            to: to.clone(),
            class: StepClass::of(r.level, redex::min_level(&redexes)),
        });
        cur = to;
    }
    if super::is_normal(&cur, profile) {
        return Ok(ReduceOutcome::NormalForm { term: cur, trace });
    }
    Ok(ReduceOutcome::FuelExhausted {
        last: cur,
        trace,
        cycle_detected: cycle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, OPLUS};

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn cbn_example_normalizes_in_one_step() {
        let out = reduce(&p(r"(\z.z) x y"), &CalculusProfile::cbn(), Strategy::LeastLevel, 10).unwrap();
        assert!(out.is_normal_form());
        assert_eq!(out.term(), &p("x y"));
        assert_eq!(out.trace().len(), 1);
    }

    #[test]
    fn delta_delta_diverges_in_place() {
        let out = reduce(&p(r"(\x.x !x) !(\x.x !x)"), &CalculusProfile::bang(), Strategy::LeastLevel, 50).unwrap();
        assert!(out.cycle_detected());
        assert_eq!(out.trace().len(), 50);
        assert_eq!(out.distinct_states(), 1);
    }

    #[test]
    fn cbv_translation_route() {
        let t = p(r"(\x.x) ((\z.!z) !x) !y");
        let out = reduce(&t, &CalculusProfile::bang(), Strategy::LeastLevel, 10).unwrap();
        assert_eq!(out.term(), &p("x !y"));
        let tr = out.trace();
        assert_eq!(tr.len(), 2);
        assert!(!tr[0].redex.is_d);
        assert!(tr[1].redex.is_d);
    }

    #[test]
    fn cbv_value_redex() {
        let out = reduce(&p(r"(\x.x) y z"), &CalculusProfile::cbv(), Strategy::LeastLevel, 10).unwrap();
        assert_eq!(out.trace().len(), 1);
        assert!(out.is_normal_form());
    }

    #[test]
    fn seeded_choice_is_reproducible() {
        let prof = CalculusProfile::with_oplus(Calculus::Bang);
        let t = Term::op(OPLUS, vec![p("x"), p("y")]);
        let left = reduce(&t, &prof, Strategy::LeastLevel, 5).unwrap();
        assert_eq!(left.term(), &p("x"));
        let a = reduce_seeded(&t, &prof, Strategy::LeastLevel, 5, Some(7)).unwrap();
        let b = reduce_seeded(&t, &prof, Strategy::LeastLevel, 5, Some(7)).unwrap();
        assert_eq!(a.term(), b.term());
    }

    #[test]
    fn strategies_differ_on_position() {
        let t = p(r"(\x.y) ((\z.z) w)");
        let lo = reduce(&t, &CalculusProfile::cbn(), Strategy::LeftmostOutermost, 1).unwrap();
        assert_eq!(lo.term(), &p("y"));
        let li = reduce(&t, &CalculusProfile::cbn(), Strategy::FullLeftmost, 1).unwrap();
        assert_eq!(li.term(), &p(r"(\x.y) w"));
        assert!(reduce(&t, &CalculusProfile::bang(), Strategy::LeftmostOutermost, 1).is_err());
    }
}
