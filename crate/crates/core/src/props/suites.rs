//! One checker per suite: each maps an input term to the obligations it
//! discharged, its failures and its undecided cases.

use std::collections::{HashMap, HashSet, VecDeque};

use super::report::{CaseResult, Failure};
use super::search::{any_path, edge_record, search, SearchOutcome, TwoPhase};
use super::{QdRelation, SuiteId};
use crate::error::{Error, Result};
use crate::parallel::{self, is_internal};
use crate::redex::{self, all_paths, context_level, level_of_path, least_level, replace_at, LeastLevel};
use crate::reduction::{
    d_normalize_counting, graph_build, successors_unchecked, StepFilter, StepRecord,
};
use crate::syntax::{
    substitute, to_canonical, validate, Calculus, CalculusProfile, CanonicalTerm, Rule, Shape, Term,
};
use crate::translate::{cbn_inverse, cbv_translate, forgetful, translate, translate_context, Mode};

pub(crate) type Checker = Box<dyn Fn(&Term) -> CaseResult + Send + Sync>;

pub(crate) struct Bounds {
    pub fuel: usize,
    pub cap: usize,
}

fn mismatch(suite: &SuiteId, expected: &'static str, p: &CalculusProfile) -> Error {
    Error::ProfileMismatch {
        what: suite.static_name(),
        expected,
        got: p.to_string(),
    }
}

/// Builds the checker for `suite`; `substitutes` feeds the substitutivity test.
pub(crate) fn checker(suite: &SuiteId, p: &CalculusProfile, b: Bounds, substitutes: Vec<Term>) -> Result<Checker> {
    let p = p.clone();
    let Bounds { fuel, cap } = b;
    let need_lambda = |p: &CalculusProfile| {
        if p.is_lambda() {
            Ok(())
        } else {
            Err(mismatch(suite, "cbn or cbv", p))
        }
    };
    let need_bang = |p: &CalculusProfile| {
        if p.calculus == Calculus::Bang {
            Ok(())
        } else {
            Err(mismatch(suite, "bang", p))
        }
    };
    Ok(match suite.clone() {
        SuiteId::Factorization => Box::new(move |t| factorization(t, &p, fuel, cap)),
        SuiteId::Completeness => Box::new(move |t| completeness(t, &p, fuel, cap)),
        SuiteId::GoodLeastLevel => Box::new(move |t| good_least_level(t, &p, fuel, cap)),
        SuiteId::QuasiDiamond(rel) => {
            if rel == QdRelation::LeastLevelOrLeftmost {
                need_lambda(&p)?;
            }
            Box::new(move |t| quasi_diamond(t, &p, rel))
        }
        SuiteId::SimulationCbn | SuiteId::SimulationCbv => {
            need_lambda(&p)?;
            let mode = if *suite == SuiteId::SimulationCbn { Mode::CbN } else { Mode::CbV };
            let sim = Sim::new(mode, &p);
            Box::new(move |t| sim.simulation(t))
        }
        SuiteId::NormalFormPreservation => {
            need_lambda(&p)?;
            let sims = [Sim::new(Mode::CbN, &p), Sim::new(Mode::CbV, &p)];
            Box::new(move |t| {
                let mut r = CaseResult::default();
                for s in &sims {
                    r.merge(s.normal_forms(t));
                }
                r
            })
        }
        SuiteId::LevelPreservation => {
            need_lambda(&p)?;
            let sims = [Sim::new(Mode::CbN, &p), Sim::new(Mode::CbV, &p)];
            Box::new(move |t| {
                let mut r = CaseResult::default();
                for s in &sims {
                    r.merge(s.levels(t));
                    r.merge(s.annotated(t, "level", &|st| st.redex.level));
                }
                r
            })
        }
        SuiteId::LlStepPreservation => {
            need_lambda(&p)?;
            let sims = [Sim::new(Mode::CbN, &p), Sim::new(Mode::CbV, &p)];
            Box::new(move |t| {
                let mut r = CaseResult::default();
                for s in &sims {
                    r.merge(s.annotated(t, "least-level", &|st| usize::from(st.class.least_level)));
                }
                r
            })
        }
        SuiteId::ModularTest(op) => {
            need_bang(&p)?;
            if !p.op_is_active(&op) {
                return Err(mismatch(suite, "bang with the tested operator active", &p));
            }
            Box::new(move |t| modular(t, &p, &op, &substitutes, fuel, cap))
        }
        SuiteId::StrongPostponement(e, i) => {
            if e == StepFilter::LeftmostOutermost || i == StepFilter::LeftmostOutermost {
                return Err(mismatch(suite, "positional filters other than leftmost-outermost", &p));
            }
            Box::new(move |t| postponement(t, &p, &e, &i, fuel, cap))
        }
        SuiteId::MergeSplit => {
            need_bang(&p)?;
            let pure = p.without_op_rules();
            Box::new(move |t| merge_split(t, &pure, fuel, cap))
        }
        SuiteId::SurfaceInLl => Box::new(move |t| surface_in_ll(t, &p)),
        SuiteId::ShapePreservation => Box::new(move |t| shape(t, &p)),
    })
}

fn factorization(t: &Term, p: &CalculusProfile, fuel: usize, cap: usize) -> CaseResult {
    let g = graph_build(t, p, fuel, cap);
    let tp = TwoPhase::run(&g);
    let mut r = CaseResult::default();
    for j in 0..g.node_count() {
        if tp.reaches(j) {
            r.pass();
        } else if g.truncated {
            r.undecided();
        } else {
            r.check(false, || {
                Failure::new(t, format!("no least-level then internal path to {}", g.nodes[j]))
                    .with_trace(any_path(&g, j))
            });
        }
    }
    r
}

fn completeness(t: &Term, p: &CalculusProfile, fuel: usize, cap: usize) -> CaseResult {
    let g = graph_build(t, p, fuel, cap);
    let out = g.out_edges();
    let mut seen = vec![false; g.node_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for &e in &out[i] {
            let edge = &g.edges[e];
            if edge.class.least_level && !seen[edge.target] {
                seen[edge.target] = true;
                queue.push_back(edge.target);
            }
        }
    }
    let mut r = CaseResult::default();
    for j in g.normal_forms() {
        if seen[j] {
            r.pass();
        } else if g.truncated {
            r.undecided();
        } else {
            r.check(false, || {
                Failure::new(t, format!("normal form {} not reached by least-level steps", g.nodes[j]))
                    .with_trace(any_path(&g, j))
            });
        }
    }
    r
}

fn good_least_level(t: &Term, p: &CalculusProfile, fuel: usize, cap: usize) -> CaseResult {
    let g = graph_build(t, p, fuel, cap);
    let lls: Vec<LeastLevel> = g.nodes.iter().map(|n| least_level(n, p)).collect();
    let mut r = CaseResult::default();
    for e in &g.edges {
        let (a, b) = (lls[e.source], lls[e.target]);
        let fail = |what: &str| {
            Failure::new(t, format!("{what}: ll {a} then {b}")).with_trace(vec![edge_record(&g, e)])
        };
        r.check(a <= b, || fail("monotonicity"));
        if e.class.internal {
            r.check(a == b, || fail("internal invariance"));
            r.check(!b.is_infinite(), || fail("persistence"));
        }
    }
    r
}

fn qd_steps(t: &Term, p: &CalculusProfile, rel: QdRelation) -> Vec<StepRecord> {
    let mut steps = successors_unchecked(t, p, &StepFilter::LeastLevel);
    if rel == QdRelation::LeastLevelOrLeftmost {
        for s in successors_unchecked(t, p, &StepFilter::LeftmostOutermost) {
            if !steps.iter().any(|o| o.redex.path == s.redex.path && o.to == s.to) {
                steps.push(s);
            }
        }
    }
    steps
}

fn quasi_diamond(t: &Term, p: &CalculusProfile, rel: QdRelation) -> CaseResult {
    let steps = qd_steps(t, p, rel);
    let mut distinct: Vec<(CanonicalTerm, &StepRecord)> = Vec::new();
    for s in &steps {
        let c = to_canonical(&s.to);
        if !distinct.iter().any(|(d, _)| *d == c) {
            distinct.push((c, s));
        }
    }
    let next: Vec<HashSet<CanonicalTerm>> = distinct
        .iter()
        .map(|(_, s)| qd_steps(&s.to, p, rel).iter().map(|n| to_canonical(&n.to)).collect())
        .collect();
    let mut r = CaseResult::default();
    for i in 0..distinct.len() {
        for j in i + 1..distinct.len() {
            r.check(!next[i].is_disjoint(&next[j]), || {
                Failure::new(t, "peak without a one-step join")
                    .with_trace(vec![distinct[i].1.clone()])
                    .with_secondary(vec![distinct[j].1.clone()])
            });
        }
    }
    r
}

/// Rule family: the base rule of each calculus, or an operator.
fn kind(rule: &Rule) -> Option<&str> {
    match rule {
        Rule::Op(o) => Some(o),
        _ => None,
    }
}

struct Sim {
    mode: Mode,
    lam: CalculusProfile,
    bang: CalculusProfile,
}

impl Sim {
    fn new(mode: Mode, p: &CalculusProfile) -> Sim {
        let calculus = match mode {
            Mode::CbN => Calculus::CbN,
            Mode::CbV => Calculus::CbV,
        };
        Sim {
            mode,
            lam: p.with_calculus(calculus),
            bang: p.with_calculus(Calculus::Bang),
        }
    }

    fn tr(&self, t: &Term) -> Term {
        translate(t, self.mode).expect("λ-term")
    }

    /// The λ-term translated to `t`, if any.
    fn back(&self, t: &Term) -> Option<Term> {
        match self.mode {
            Mode::CbN => cbn_inverse(t).ok(),
            Mode::CbV => forgetful(t).ok().filter(|s| cbv_translate(s).ok().as_ref() == Some(t)),
        }
    }

    fn name(&self) -> &'static str {
        match self.mode {
            Mode::CbN => "cbn",
            Mode::CbV => "cbv",
        }
    }

    fn simulation(&self, t: &Term) -> CaseResult {
        let big = self.tr(t);
        let l_steps = successors_unchecked(t, &self.lam, &StepFilter::All);
        let b_steps = successors_unchecked(&big, &self.bang, &StepFilter::All);
        let mut r = CaseResult::default();
        if self.mode == Mode::CbV {
            let d_normal = !redex::enumerate_unchecked(&big, &self.bang).iter().any(|x| x.is_d);
            r.check(d_normal, || Failure::new(t, format!("translation {big} has a d-redex")));
        }
        for s in &l_steps {
            let target = self.tr(&s.to);
            let mut witness = None;
            for b in b_steps.iter().filter(|b| kind(&b.redex.rule) == kind(&s.redex.rule)) {
                if b.to == target {
                    witness = Some(vec![b.clone()]);
                } else if self.mode == Mode::CbV {
                    let d = successors_unchecked(&b.to, &self.bang, &StepFilter::DOnly);
                    if let Some(d) = d.into_iter().find(|d| d.to == target) {
                        witness = Some(vec![b.clone(), d]);
                    }
                }
                if witness.is_some() {
                    break;
                }
            }
            r.check(witness.is_some(), || {
                Failure::new(t, format!("{} soundness: step not simulated", self.name()))
                    .with_trace(vec![s.clone()])
                    .with_secondary(b_steps.clone())
            });
        }
        for b in &b_steps {
            let (normal, d_steps) = match self.mode {
                Mode::CbN => (b.to.clone(), 0),
                Mode::CbV => d_normalize_counting(&b.to),
            };
            r.check(d_steps <= 1, || {
                Failure::new(t, format!("{} needs {d_steps} d-steps after the step", self.name()))
                    .with_trace(vec![b.clone()])
            });
            let ok = self.back(&normal).is_some_and(|u| {
                l_steps
                    .iter()
                    .any(|s| kind(&s.redex.rule) == kind(&b.redex.rule) && s.to == u)
            });
            r.check(ok, || {
                Failure::new(t, format!("{} completeness: step has no source counterpart", self.name()))
                    .with_trace(vec![b.clone()])
                    .with_secondary(l_steps.clone())
            });
        }
        r
    }

    fn normal_forms(&self, t: &Term) -> CaseResult {
        let big = self.tr(t);
        let l = redex::enumerate_unchecked(t, &self.lam);
        let b = redex::enumerate_unchecked(&big, &self.bang);
        let mut r = CaseResult::default();
        r.check(l.is_empty() == b.is_empty(), || {
            Failure::new(t, format!("{}: normal {} but translation {big} normal {}", self.name(), l.is_empty(), b.is_empty()))
        });
        for rule in self.lam.rules() {
            let has_l = l.iter().any(|x| x.rule == rule);
            let has_b = b.iter().any(|x| kind(&x.rule) == kind(&rule));
            r.check(has_l == has_b, || {
                Failure::new(t, format!("{}: {rule}-normality differs from the translation {big}", self.name()))
            });
        }
        r
    }

    fn levels(&self, t: &Term) -> CaseResult {
        let big = self.tr(t);
        let mut r = CaseResult::default();
        let (a, b) = (least_level(t, &self.lam), least_level(&big, &self.bang));
        r.check(a == b, || {
            Failure::new(t, format!("{}: least level {a} but translation {big} has {b}", self.name()))
        });
        for path in all_paths(t) {
            let c = replace_at(t, &path, Term::Hole).expect("valid path");
            let lev = level_of_path(&path, &self.lam, t).expect("valid path");
            let tc = translate_context(&c, self.mode).expect("one hole");
            let tlev = context_level(&tc, &self.bang).expect("one hole");
            r.check(lev == tlev, || {
                Failure::new(t, format!("{}: context {c} at level {lev}, translation {tc} at level {tlev}", self.name()))
            });
        }
        r
    }

    /// `t → t'` with annotation `k` iff `tᵗ → ·(→d with annotation k)= t'ᵗ`
    /// with annotation `k`, where the d-step is only allowed in CbV.
    fn annotated(&self, t: &Term, what: &str, key: &dyn Fn(&StepRecord) -> usize) -> CaseResult {
        let big = self.tr(t);
        let l_steps = successors_unchecked(t, &self.lam, &StepFilter::All);
        let b_steps = successors_unchecked(&big, &self.bang, &StepFilter::All);
        let d_after = |b: &StepRecord| -> Vec<StepRecord> {
            if self.mode == Mode::CbN {
                return Vec::new();
            }
            successors_unchecked(&b.to, &self.bang, &StepFilter::DOnly)
                .into_iter()
                .filter(|d| key(d) == key(b))
                .collect()
        };
        let mut r = CaseResult::default();
        for s in &l_steps {
            let target = self.tr(&s.to);
            let ok = b_steps
                .iter()
                .filter(|b| kind(&b.redex.rule) == kind(&s.redex.rule) && key(b) == key(s))
                .any(|b| b.to == target || d_after(b).iter().any(|d| d.to == target));
            r.check(ok, || {
                Failure::new(t, format!("{}: {what} {} step not matched", self.name(), key(s)))
                    .with_trace(vec![s.clone()])
                    .with_secondary(b_steps.clone())
            });
        }
        for b in &b_steps {
            let mut candidates = vec![vec![b.clone()]];
            candidates.extend(d_after(b).into_iter().map(|d| vec![b.clone(), d]));
            for steps in candidates {
                let end = &steps.last().expect("non-empty").to;
                let Some(u) = self.back(end) else { continue };
                let ok = l_steps
                    .iter()
                    .any(|s| kind(&s.redex.rule) == kind(&b.redex.rule) && key(s) == key(b) && s.to == u);
                r.check(ok, || {
                    Failure::new(t, format!("{}: {what} {} translated step not reflected", self.name(), key(b)))
                        .with_trace(steps)
                        .with_secondary(l_steps.clone())
                });
            }
        }
        r
    }
}

fn modular(t: &Term, p: &CalculusProfile, op: &str, substitutes: &[Term], fuel: usize, cap: usize) -> CaseResult {
    let rule = Rule::Op(op.to_string());
    let mut r = CaseResult::default();
    let root_reducts = redex::contract_root(t, &rule, p);

    // Substitutivity of the root rule.
    if let Some(reducts) = &root_reducts {
        for x in t.free_vars() {
            for q in substitutes {
                let inst = substitute(t, &x, q);
                let got = redex::contract_root(&inst, &rule, p).unwrap_or_default();
                for red in reducts {
                    let want = substitute(red, &x, q);
                    r.check(got.contains(&want), || {
                        Failure::new(t, format!("not substitutive: {{{q}/{x}}} loses the reduct {want}"))
                    });
                }
            }
        }
    }

    for step in successors_unchecked(t, p, &StepFilter::Internal) {
        let Some(targets) = redex::contract_root(&step.to, &rule, p) else {
            continue;
        };
        for s in targets {
            let root = root_reducts.clone().unwrap_or_default();
            // Roots: T ¬ll→γ P ↦o S implies T ↦o · →γ= S.
            let same_rule: Vec<StepRecord> = root
                .iter()
                .flat_map(|u| successors_unchecked(u, p, &StepFilter::Rule(step.redex.rule.clone())))
                .collect();
            let ok = root.contains(&s) || same_rule.iter().any(|n| n.to == s);
            r.check(ok, || {
                Failure::new(t, format!("roots: {} then root {op} to {s} cannot be swapped", step.redex.rule))
                    .with_trace(vec![step.clone()])
            });
            // Root linear swap: T ¬ll→!β P ↦o S implies T ↦o · →!β* S.
            if step.redex.rule != Rule::BangBeta {
                continue;
            }
            let mut outcome = SearchOutcome::NotFound;
            for u in &root {
                let found = search(u, p, |n| n.redex.rule == Rule::BangBeta, |v| *v == s, fuel, cap);
                match found {
                    SearchOutcome::Found(_) => {
                        outcome = found;
                        break;
                    }
                    SearchOutcome::Truncated => outcome = SearchOutcome::Truncated,
                    SearchOutcome::NotFound => {}
                }
            }
            match outcome {
                SearchOutcome::Truncated => r.undecided(),
                o => r.check(matches!(o, SearchOutcome::Found(_)), || {
                    Failure::new(t, format!("root linear swap: no root {op} step then !beta steps to {s}"))
                        .with_trace(vec![step.clone()])
                }),
            }
        }
    }
    r
}

fn postponement(t: &Term, p: &CalculusProfile, e: &StepFilter, i: &StepFilter, fuel: usize, cap: usize) -> CaseResult {
    let mut r = CaseResult::default();
    for first in successors_unchecked(t, p, i) {
        for second in successors_unchecked(&first.to, p, e) {
            let s = &second.to;
            let goal = |u: &Term| u == s || successors_unchecked(u, p, i).iter().any(|n| n.to == *s);
            match search(t, p, |n| e.admits(&n.redex, n.class), goal, fuel, cap) {
                SearchOutcome::Found(_) => r.pass(),
                SearchOutcome::Truncated => r.undecided(),
                SearchOutcome::NotFound => r.check(false, || {
                    Failure::new(t, format!("{i} then {e} cannot be reordered"))
                        .with_trace(vec![first.clone(), second.clone()])
                }),
            }
        }
    }
    r
}

fn merge_split(t: &Term, p: &CalculusProfile, fuel: usize, cap: usize) -> CaseResult {
    let mut r = CaseResult::default();
    let Ok(derivations) = parallel::parallel_derivations(t) else {
        r.undecided();
        return r;
    };
    let ll = least_level(t, p);
    let par: HashSet<CanonicalTerm> = derivations.iter().map(|d| to_canonical(&d.to)).collect();
    let internal_par: Vec<Term> = {
        let mut seen = HashSet::new();
        derivations
            .iter()
            .filter(|d| is_internal(d.level_index, ll) && seen.insert(to_canonical(&d.to)))
            .map(|d| d.to.clone())
            .collect()
    };
    let internal_set: HashSet<CanonicalTerm> = internal_par.iter().map(to_canonical).collect();
    let steps = successors_unchecked(t, p, &StepFilter::All);

    // Sandwiches: → ⊆ ⇛ ⊆ →*, and int ⊆ ⇛¬ll ⊆ int*.
    for s in &steps {
        r.check(par.contains(&to_canonical(&s.to)), || {
            Failure::new(t, "one step is not a parallel step").with_trace(vec![s.clone()])
        });
        if s.class.internal {
            r.check(internal_set.contains(&to_canonical(&s.to)), || {
                Failure::new(t, "internal step is not an internal parallel step").with_trace(vec![s.clone()])
            });
        }
    }
    let g = graph_build(t, p, fuel, cap);
    for d in parallel::parallel_successors(t).expect("checked above") {
        match g.find(&d.to) {
            Some(_) => r.pass(),
            None if g.truncated => r.undecided(),
            None => r.check(false, || Failure::new(t, format!("parallel reduct {} not reachable", d.to))),
        }
    }
    for u in &internal_par {
        match search(t, p, |n| n.class.internal, |v| v == u, fuel, cap) {
            SearchOutcome::Found(_) => r.pass(),
            SearchOutcome::Truncated => r.undecided(),
            SearchOutcome::NotFound => r.check(false, || {
                Failure::new(t, format!("internal parallel reduct {u} not reachable by internal steps"))
            }),
        }
    }

    // Merge by level: T ⇛@n R →@m S with n > m implies T ⇛ S.
    let mut done = HashSet::new();
    for d in &derivations {
        if !done.insert((to_canonical(&d.to), d.level_index)) {
            continue;
        }
        for s in successors_unchecked(&d.to, p, &StepFilter::All) {
            if d.level_index > LeastLevel::Finite(s.redex.level) {
                r.check(par.contains(&to_canonical(&s.to)), || {
                    Failure::new(t, format!("merge: ⇛@{} then step @{} leaves ⇛", d.level_index, s.redex.level))
                        .with_trace(vec![s.clone()])
                });
            }
        }
    }
    // T ⇛¬ll · ⊸ll S implies T ⇛ S.
    for u in &internal_par {
        for s in successors_unchecked(u, p, &StepFilter::LeastLevel) {
            r.check(par.contains(&to_canonical(&s.to)), || {
                Failure::new(t, "merge: internal parallel step then least-level step leaves ⇛").with_trace(vec![s.clone()])
            });
        }
    }

    // Indexed split: T ⇛^n S implies T ⇛¬ll S, or n > 0 and T ⊸ll · ⇛^(n-1) S.
    let ll_steps = successors_unchecked(t, p, &StepFilter::LeastLevel);
    let mut indexed: HashMap<usize, HashSet<(CanonicalTerm, usize)>> = HashMap::new();
    let mut split_done = HashSet::new();
    for d in &derivations {
        let c = to_canonical(&d.to);
        if !split_done.insert((c.clone(), d.count_index, d.level_index)) {
            continue;
        }
        if internal_set.contains(&c) {
            r.pass();
            continue;
        }
        let ok = d.count_index > 0
            && ll_steps.iter().enumerate().any(|(k, s)| {
                let set = indexed.entry(k).or_insert_with(|| {
                    parallel::parallel_derivations(&s.to)
                        .map(|v| v.iter().map(|e| (to_canonical(&e.to), e.count_index)).collect())
                        .unwrap_or_default()
                });
                set.contains(&(c.clone(), d.count_index - 1))
            });
        r.check(ok, || {
            Failure::new(t, format!("split: ⇛^{} to {} does not split", d.count_index, d.to))
                .with_secondary(ll_steps.clone())
        });
    }
    // T ⇛ S implies T ⊸ll* · ⇛¬ll S.
    for target in parallel::parallel_successors(t).expect("checked above") {
        let goal = |u: &Term| {
            parallel::internal_parallel_successors(u)
                .map(|v| v.contains(&target.to))
                .unwrap_or(false)
        };
        match search(t, p, |n| n.class.least_level, goal, fuel, cap) {
            SearchOutcome::Found(_) => r.pass(),
            SearchOutcome::Truncated => r.undecided(),
            SearchOutcome::NotFound => r.check(false, || {
                Failure::new(t, format!("split corollary fails for {}", target.to))
            }),
        }
    }
    r
}

fn surface_in_ll(t: &Term, p: &CalculusProfile) -> CaseResult {
    let mut r = CaseResult::default();
    let steps = successors_unchecked(t, p, &StepFilter::Surface);
    for s in &steps {
        r.check(s.class.least_level, || {
            Failure::new(t, "surface step not least-level").with_trace(vec![s.clone()])
        });
    }
    if !steps.is_empty() {
        r.check(least_level(t, p) == LeastLevel::Finite(0), || Failure::new(t, "surface redex but ll > 0"));
    }
    r
}

fn shape(t: &Term, p: &CalculusProfile) -> CaseResult {
    let mut r = CaseResult::default();
    let top: Shape = t.shape();
    for s in successors_unchecked(t, p, &StepFilter::All) {
        if s.redex.path.is_root() {
            continue;
        }
        r.check(s.to.shape() == top, || {
            Failure::new(t, "non-root step changed the top constructor").with_trace(vec![s.clone()])
        });
    }
    r
}

/// Validates the corpus against the profile before any suite runs.
pub(crate) fn validate_corpus(corpus: &[Term], p: &CalculusProfile) -> Result<()> {
    for t in corpus {
        validate(t, p).map_err(|violations| Error::Invalid {
            profile: p.to_string(),
            violations,
        })?;
    }
    Ok(())
}
