//! Redex occurrences, levels and least levels.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{substitute, validate, Calculus, CalculusProfile, Rule, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    AbsBody,
    AppLeft,
    AppRight,
    BangBody,
    OpArg(usize),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::AbsBody => f.write_str("body"),
            Step::AppLeft => f.write_str("left"),
            Step::AppRight => f.write_str("right"),
            Step::BangBody => f.write_str("bang"),
            Step::OpArg(i) => write!(f, "arg{i}"),
        }
    }
}

/// Position of a subterm, as the steps taken from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Path(pub Vec<Step>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Path) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Path) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Document order: a prefix comes first, then left before right.
impl Ord for Path {
    fn cmp(&self, other: &Path) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub path: Path,
    pub rule: Rule,
    pub level: usize,
    /// A `!β`-redex whose function part is `λx.x`.
    pub is_d: bool,
}

/// A level or `∞`. `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LeastLevel {
    Finite(usize),
    Infinite,
}

impl LeastLevel {
    pub fn is_infinite(self) -> bool {
        self == LeastLevel::Infinite
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            LeastLevel::Finite(n) => Some(n),
            LeastLevel::Infinite => None,
        }
    }

    pub fn succ(self) -> LeastLevel {
        match self {
            LeastLevel::Finite(n) => LeastLevel::Finite(n + 1),
            LeastLevel::Infinite => LeastLevel::Infinite,
        }
    }
}

impl fmt::Display for LeastLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeastLevel::Finite(n) => write!(f, "{n}"),
            LeastLevel::Infinite => f.write_str("inf"),
        }
    }
}

fn counts(calculus: Calculus, step: Step, prev: Option<Step>) -> bool {
    match (calculus, step) {
        (_, Step::OpArg(_)) => true,
        (Calculus::Bang, Step::BangBody) => true,
        (Calculus::CbN, Step::AppRight) => true,
        (Calculus::CbV, Step::AbsBody) => prev != Some(Step::AppLeft),
        _ => false,
    }
}

/// Level of the position `path` in `enclosing`.
pub fn level_of_path(path: &Path, profile: &CalculusProfile, enclosing: &Term) -> Result<usize> {
    subterm_at(enclosing, path)?;
    let mut level = 0;
    let mut prev = None;
    for &s in path.steps() {
        if counts(profile.calculus, s, prev) {
            level += 1;
        }
        prev = Some(s);
    }
    Ok(level)
}

pub fn subterm_at<'a>(t: &'a Term, path: &Path) -> Result<&'a Term> {
    let mut cur = t;
    for &s in path.steps() {
        cur = child(cur, s).ok_or_else(|| Error::InvalidPath(path.to_string()))?;
    }
    Ok(cur)
}

fn child(t: &Term, s: Step) -> Option<&Term> {
    match (t, s) {
        (Term::Abs(_, b), Step::AbsBody) | (Term::Bang(b), Step::BangBody) => Some(b),
        (Term::App(f, _), Step::AppLeft) => Some(f),
        (Term::App(_, a), Step::AppRight) => Some(a),
        (Term::Op(_, args), Step::OpArg(i)) => args.get(i),
        _ => None,
    }
}

/// Replaces the subterm at `path` (capture is allowed, as in context plugging).
pub fn replace_at(t: &Term, path: &Path, new: Term) -> Result<Term> {
    fn go(t: &Term, steps: &[Step], new: Term) -> Option<Term> {
        let Some((&s, rest)) = steps.split_first() else {
            return Some(new);
        };
        Some(match (t, s) {
            (Term::Abs(x, b), Step::AbsBody) => Term::Abs(x.clone(), Box::new(go(b, rest, new)?)),
            (Term::Bang(b), Step::BangBody) => Term::Bang(Box::new(go(b, rest, new)?)),
            (Term::App(f, a), Step::AppLeft) => Term::App(Box::new(go(f, rest, new)?), a.clone()),
            (Term::App(f, a), Step::AppRight) => Term::App(f.clone(), Box::new(go(a, rest, new)?)),
            (Term::Op(name, args), Step::OpArg(i)) if i < args.len() => {
                let mut args = args.clone();
                args[i] = go(&args[i], rest, new)?;
                Term::Op(name.clone(), args)
            }
            _ => return None,
        })
    }
    go(t, path.steps(), new).ok_or_else(|| Error::InvalidPath(path.to_string()))
}

/// Every position in `t`, in document order.
pub fn all_paths(t: &Term) -> Vec<Path> {
    fn go(t: &Term, path: &mut Vec<Step>, out: &mut Vec<Path>) {
        out.push(Path(path.clone()));
        let mut visit = |sub: &Term, s: Step, out: &mut Vec<Path>| {
            path.push(s);
            go(sub, path, out);
            path.pop();
        };
        match t {
            Term::Var(_) | Term::Hole => {}
            Term::Abs(_, b) => visit(b, Step::AbsBody, out),
            Term::Bang(b) => visit(b, Step::BangBody, out),
            Term::App(f, a) => {
                visit(f, Step::AppLeft, out);
                visit(a, Step::AppRight, out);
            }
            Term::Op(_, args) => {
                for (i, a) in args.iter().enumerate() {
                    visit(a, Step::OpArg(i), out);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// Path to the hole of a context, if any (the first one in document order).
pub fn hole_path(c: &Term) -> Option<Path> {
    fn go(t: &Term, path: &mut Vec<Step>) -> bool {
        match t {
            Term::Hole => true,
            Term::Var(_) => false,
            Term::Abs(_, b) => descend(b, Step::AbsBody, path),
            Term::Bang(b) => descend(b, Step::BangBody, path),
            Term::App(f, a) => descend(f, Step::AppLeft, path) || descend(a, Step::AppRight, path),
            Term::Op(_, args) => args
                .iter()
                .enumerate()
                .any(|(i, a)| descend(a, Step::OpArg(i), path)),
        }
    }
    fn descend(t: &Term, s: Step, path: &mut Vec<Step>) -> bool {
        path.push(s);
        if go(t, path) {
            return true;
        }
        path.pop();
        false
    }
    let mut path = Vec::new();
    go(c, &mut path).then_some(Path(path))
}

/// Level of the hole of a one-hole context.
pub fn context_level(c: &Term, profile: &CalculusProfile) -> Result<usize> {
    match c.hole_count() {
        1 => level_of_path(&hole_path(c).expect("one hole"), profile, c),
        n => Err(Error::HoleCount(n)),
    }
}

/// The rule whose root pattern `t` matches under `profile`, if any.
pub fn root_rule(t: &Term, profile: &CalculusProfile) -> Option<Rule> {
    match t {
        Term::App(f, a) if matches!(**f, Term::Abs(..)) => match profile.calculus {
            Calculus::CbN => Some(Rule::Beta),
            Calculus::CbV if a.is_value() => Some(Rule::BetaV),
            Calculus::Bang if matches!(**a, Term::Bang(_)) => Some(Rule::BangBeta),
            _ => None,
        },
        Term::Op(name, _) if profile.op_is_active(name) => Some(Rule::Op(name.clone())),
        _ => None,
    }
}

/// All redex occurrences in document order (pre-order, left to right).
pub fn enumerate_redexes(t: &Term, profile: &CalculusProfile) -> Result<Vec<Redex>> {
    validate(t, profile).map_err(|violations| Error::Invalid {
        profile: profile.to_string(),
        violations,
    })?;
    Ok(enumerate_unchecked(t, profile))
}

/// [`enumerate_redexes`] without the validity check.
pub(crate) fn enumerate_unchecked(t: &Term, profile: &CalculusProfile) -> Vec<Redex> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    collect(t, profile, &mut path, 0, None, &mut out);
    out
}

fn collect(
    t: &Term,
    profile: &CalculusProfile,
    path: &mut Vec<Step>,
    level: usize,
    prev: Option<Step>,
    out: &mut Vec<Redex>,
) {
    if let Some(rule) = root_rule(t, profile) {
        let is_d = rule == Rule::BangBeta && matches!(t, Term::App(f, _) if f.is_der());
        out.push(Redex {
            path: Path(path.clone()),
            rule,
            level,
            is_d,
        });
    }
    let visit = |sub: &Term, s: Step, path: &mut Vec<Step>, out: &mut Vec<Redex>| {
        let next = level + usize::from(counts(profile.calculus, s, prev));
        path.push(s);
        collect(sub, profile, path, next, Some(s), out);
        path.pop();
    };
    match t {
        Term::Var(_) | Term::Hole => {}
        Term::Abs(_, b) => visit(b, Step::AbsBody, path, out),
        Term::Bang(b) => visit(b, Step::BangBody, path, out),
        Term::App(f, a) => {
            visit(f, Step::AppLeft, path, out);
            visit(a, Step::AppRight, path, out);
        }
        Term::Op(_, args) => {
            for (i, a) in args.iter().enumerate() {
                visit(a, Step::OpArg(i), path, out);
            }
        }
    }
}

pub fn least_level(t: &Term, profile: &CalculusProfile) -> LeastLevel {
    min_level(&enumerate_unchecked(t, profile))
}

pub(crate) fn min_level(redexes: &[Redex]) -> LeastLevel {
    redexes
        .iter()
        .map(|r| LeastLevel::Finite(r.level))
        .min()
        .unwrap_or(LeastLevel::Infinite)
}

/// Least level by structural recursion, independent of redex enumeration.
/// Only defined for the bang calculus.
pub fn least_level_inductive(t: &Term, profile: &CalculusProfile) -> Result<LeastLevel> {
    if profile.calculus != Calculus::Bang {
        return Err(Error::ProfileMismatch {
            what: "inductive least level",
            expected: "bang",
            got: profile.calculus.to_string(),
        });
    }
    Ok(ll_ind(t, profile))
}

fn ll_ind(t: &Term, profile: &CalculusProfile) -> LeastLevel {
    if root_rule(t, profile).is_some() {
        return LeastLevel::Finite(0);
    }
    match t {
        Term::Var(_) | Term::Hole => LeastLevel::Infinite,
        Term::Abs(_, b) => ll_ind(b, profile),
        Term::Bang(b) => ll_ind(b, profile).succ(),
        Term::App(f, a) => ll_ind(f, profile).min(ll_ind(a, profile)),
        Term::Op(_, args) => args
            .iter()
            .map(|a| ll_ind(a, profile))
            .min()
            .unwrap_or(LeastLevel::Infinite)
            .succ(),
    }
}

/// The reducts of the redex `r` in `t`: one term for `β`-like rules, one per
/// contraction for operators.
pub fn contract(t: &Term, r: &Redex, profile: &CalculusProfile) -> Result<Vec<Term>> {
    let sub = subterm_at(t, &r.path)?;
    let reducts = contract_root(sub, &r.rule, profile)
        .ok_or_else(|| Error::InvalidPath(r.path.to_string()))?;
    reducts
        .into_iter()
        .map(|new| replace_at(t, &r.path, new))
        .collect()
}

/// Contracts a root redex of `rule`; `None` if `t` does not match.
pub fn contract_root(t: &Term, rule: &Rule, profile: &CalculusProfile) -> Option<Vec<Term>> {
    if root_rule(t, profile).as_ref() != Some(rule) {
        return None;
    }
    match (t, rule) {
        (Term::App(f, a), Rule::Beta | Rule::BetaV | Rule::BangBeta) => {
            let Term::Abs(x, body) = &**f else {
                return None;
            };
            let arg = match (&**a, rule) {
                (Term::Bang(s), Rule::BangBeta) => &**s,
                (a, _) => a,
            };
            Some(vec![substitute(body, x, arg)])
        }
        (Term::Op(name, args), Rule::Op(_)) => Some(profile.registry().get(name)?.contract(args)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    const R: &str = r"(\x.x) !z";

    #[test]
    fn hole_levels() {
        let bang = CalculusProfile::bang();
        assert_eq!(context_level(&p("![]"), &bang).unwrap(), 1);
        let lam = p(r"\x.[]");
        assert_eq!(context_level(&lam, &CalculusProfile::cbv()).unwrap(), 1);
        assert_eq!(context_level(&lam, &CalculusProfile::cbn()).unwrap(), 0);
        let applied = p(r"(\x.[]) t");
        assert_eq!(context_level(&applied, &CalculusProfile::cbv()).unwrap(), 0);
        assert_eq!(context_level(&p("t []"), &CalculusProfile::cbn()).unwrap(), 1);
        assert!(matches!(context_level(&p("x"), &bang), Err(Error::HoleCount(0))));
    }

    #[test]
    fn der_redex_at_root() {
        let rs = enumerate_redexes(&p(R), &CalculusProfile::bang()).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].level, 0);
        assert!(rs[0].is_d);
        assert!(rs[0].path.is_root());
    }

    #[test]
    fn redex_in_box() {
        let t = p(&format!("x !({R})"));
        let rs = enumerate_redexes(&t, &CalculusProfile::bang()).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].level, 1);
    }

    #[test]
    fn oplus_redex_is_seen_when_active() {
        let t = p(&format!("#oplus(x, y) !({R})"));
        let prof = CalculusProfile::with_oplus(Calculus::Bang);
        let rs = enumerate_redexes(&t, &prof).unwrap();
        let summary: Vec<_> = rs.iter().map(|r| (r.rule.clone(), r.level)).collect();
        assert_eq!(summary, vec![(Rule::Op("oplus".into()), 0), (Rule::BangBeta, 1)]);
        assert_eq!(least_level(&t, &prof), LeastLevel::Finite(0));
        assert_eq!(least_level(&t, &CalculusProfile::bang()), LeastLevel::Finite(1));
    }

    #[test]
    fn least_levels_of_examples() {
        let bang = CalculusProfile::bang();
        assert_eq!(least_level(&p(r"\x.x"), &bang), LeastLevel::Infinite);
        assert_eq!(least_level(&p(&format!("x !({R})")), &bang), LeastLevel::Finite(1));
        assert_eq!(least_level(&p(&format!(r"(\z.{R}) !({R})")), &bang), LeastLevel::Finite(0));
    }

    #[test]
    fn inductive_least_level() {
        let bang = CalculusProfile::bang();
        let ind = |s: &str| least_level_inductive(&p(s), &bang).unwrap();
        assert_eq!(ind(r"\x.x"), LeastLevel::Infinite);
        assert_eq!(ind(&format!("!(x !({R}))")), LeastLevel::Finite(2));
        assert_eq!(ind(&format!("({R}) !({R})")), LeastLevel::Finite(0));
        assert!(least_level_inductive(&p("x"), &CalculusProfile::cbn()).is_err());
    }

    #[test]
    fn cbv_redexes_need_values() {
        let cbv = CalculusProfile::cbv();
        assert_eq!(enumerate_redexes(&p(r"(\x.x) y z"), &cbv).unwrap().len(), 1);
        assert!(enumerate_redexes(&p(r"(\x.x) (y z)"), &cbv).unwrap().is_empty());
    }

    #[test]
    fn invalid_path_is_an_error() {
        let t = p("x");
        assert!(subterm_at(&t, &Path(vec![Step::AbsBody])).is_err());
        assert!(level_of_path(&Path(vec![Step::AppLeft]), &CalculusProfile::bang(), &t).is_err());
    }

    #[test]
    fn contraction_of_bang_beta() {
        let t = p(r"y ((\x.x !x) !w)");
        let prof = CalculusProfile::bang();
        let r = &enumerate_redexes(&t, &prof).unwrap()[0];
        assert_eq!(contract(&t, r, &prof).unwrap(), vec![p("y (w !w)")]);
    }
}
