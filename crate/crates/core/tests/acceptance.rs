//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use bang_core::props::{gen_terms, run_suite, run_suite_on, CheckReport, GenSpec, QdRelation, SuiteId};
use bang_core::redex::{least_level, least_level_inductive};
use bang_core::reduction::{format_trace, reduce, successors, ReduceOutcome, StepFilter, Strategy};
use bang_core::syntax::{parse, OPLUS};
use bang_core::translate::{cbn_inverse, cbn_translate, cbv_translate, forgetful};
use bang_core::{Calculus, CalculusProfile, LeastLevel, Term};

const FUEL: usize = 25;
const CAP: usize = 500;
const DENSE: usize = 2000;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn reports(rs: &[CheckReport]) -> Verdict {
    let ok = rs.iter().all(CheckReport::passed);
    let detail = rs
        .iter()
        .map(|r| {
            format!(
                "{}[{}{}] cases={} obligations={} failures={} inconclusive={}",
                r.suite,
                r.profile,
                if r.cases_run == DENSE { ",dense" } else { "" },
                r.cases_run,
                r.obligations,
                r.failures.len(),
                r.inconclusive
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    for r in rs.iter().filter(|r| !r.passed()) {
        for line in r.render().lines().take(12) {
            eprintln!("    {line}");
        }
    }
    Verdict { ok, detail }
}

fn suite(s: SuiteId, spec: &GenSpec) -> CheckReport {
    run_suite(&s, spec, FUEL, CAP).expect("suite runs")
}

fn ex(profile: CalculusProfile, size: usize) -> GenSpec {
    GenSpec::exhaustive(profile, size)
}

fn ops(c: Calculus) -> CalculusProfile {
    CalculusProfile::with_oplus(c)
}

fn p(s: &str) -> Term {
    parse(s).unwrap()
}

/// Seeded random terms of depth at most `depth` in which about a third of the
/// nodes are redexes, so that peaks and duplications actually occur.
fn redex_dense(bang: bool, count: usize, depth: usize, seed: u64) -> Vec<Term> {
    fn go(rng: &mut StdRng, bang: bool, depth: usize, scope: &mut Vec<String>) -> Term {
        let pick_var = |rng: &mut StdRng, scope: &Vec<String>| {
            let i = rng.random_range(0..scope.len() + 2);
            Term::var(scope.get(i).cloned().unwrap_or_else(|| ["x", "y"][i - scope.len()].to_string()))
        };
        if depth == 0 {
            return pick_var(rng, scope);
        }
        let arg = |rng: &mut StdRng, scope: &mut Vec<String>| {
            let a = go(rng, bang, depth - 1, scope);
            if bang {
                Term::bang(a)
            } else {
                a
            }
        };
        match rng.random_range(0..10) {
            0 => pick_var(rng, scope),
            1 | 2 => {
                let b = format!("v{}", scope.len());
                scope.push(b.clone());
                let body = go(rng, bang, depth - 1, scope);
                scope.pop();
                Term::abs(b, body)
            }
            3 | 4 if bang => Term::bang(go(rng, bang, depth - 1, scope)),
            3..=6 => Term::app(go(rng, bang, depth - 1, scope), arg(rng, scope)),
            _ => {
                let b = format!("v{}", scope.len());
                scope.push(b.clone());
                let body = go(rng, bang, depth - 1, scope);
                scope.pop();
                Term::app(Term::abs(b, body), arg(rng, scope))
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| go(&mut rng, bang, depth, &mut Vec::new())).collect()
}

fn dense(s: SuiteId, profile: CalculusProfile) -> CheckReport {
    let depth = if s == SuiteId::MergeSplit { 3 } else { 4 };
    let corpus = redex_dense(profile.calculus == Calculus::Bang, DENSE, depth, 42);
    run_suite_on(&s, &corpus, &ex(profile, 1), FUEL, CAP).expect("suite runs")
}

fn factorization_pure() -> Verdict {
    reports(&[
        suite(SuiteId::Factorization, &ex(CalculusProfile::bang(), 7)),
        dense(SuiteId::Factorization, CalculusProfile::bang()),
    ])
}

fn factorization_ops() -> Verdict {
    reports(&[
        suite(SuiteId::Factorization, &ex(ops(Calculus::Bang), 6)),
        suite(SuiteId::Factorization, &ex(ops(Calculus::CbN), 6)),
        suite(SuiteId::Factorization, &ex(ops(Calculus::CbV), 6)),
    ])
}

/// Exhaustive λ-terms with `⊕` up to size 6 and 5000 random ones up to size 12.
fn lambda_corpus() -> Vec<Term> {
    let profile = ops(Calculus::CbN);
    let mut corpus = gen_terms(&ex(profile.clone(), 6));
    corpus.extend(gen_terms(&GenSpec::random(profile, 5000, 12, 42)));
    corpus
}

fn on_lambda_corpus(suites: &[(SuiteId, Calculus)]) -> Verdict {
    let corpus = lambda_corpus();
    let rs: Vec<CheckReport> = suites
        .iter()
        .map(|(s, c)| run_suite_on(s, &corpus, &ex(ops(*c), 6), FUEL, CAP).expect("suite runs"))
        .collect();
    reports(&rs)
}

fn simulation() -> Verdict {
    on_lambda_corpus(&[(SuiteId::SimulationCbn, Calculus::CbN), (SuiteId::SimulationCbv, Calculus::CbV)])
}

fn preservation() -> Verdict {
    on_lambda_corpus(&[
        (SuiteId::NormalFormPreservation, Calculus::CbN),
        (SuiteId::LevelPreservation, Calculus::CbN),
    ])
}

fn good_least_level() -> Verdict {
    reports(&[
        suite(SuiteId::GoodLeastLevel, &ex(CalculusProfile::bang(), 7)),
        suite(SuiteId::GoodLeastLevel, &ex(ops(Calculus::Bang), 7)),
        suite(SuiteId::GoodLeastLevel, &ex(ops(Calculus::CbN), 7)),
        suite(SuiteId::GoodLeastLevel, &ex(ops(Calculus::CbV), 7)),
        dense(SuiteId::GoodLeastLevel, CalculusProfile::bang()),
    ])
}

fn quasi_diamond() -> Verdict {
    reports(&[
        suite(SuiteId::QuasiDiamond(QdRelation::LeastLevel), &ex(CalculusProfile::bang(), 7)),
        suite(SuiteId::QuasiDiamond(QdRelation::LeastLevelOrLeftmost), &ex(CalculusProfile::cbn(), 7)),
        dense(SuiteId::QuasiDiamond(QdRelation::LeastLevel), CalculusProfile::bang()),
        dense(SuiteId::QuasiDiamond(QdRelation::LeastLevelOrLeftmost), CalculusProfile::cbn()),
    ])
}

fn modular() -> Verdict {
    reports(&[suite(SuiteId::ModularTest(OPLUS.to_string()), &ex(ops(Calculus::Bang), 6))])
}

fn merge_split() -> Verdict {
    reports(&[
        suite(SuiteId::MergeSplit, &ex(CalculusProfile::bang(), 6)),
        dense(SuiteId::MergeSplit, CalculusProfile::bang()),
    ])
}

fn golden() -> Verdict {
    let mut bad = Vec::new();
    let mut expect = |name: &str, ok: bool| {
        if !ok {
            bad.push(name.to_string());
        }
    };
    let bang = CalculusProfile::bang();
    let lam = p(r"(\z.z) x y");

    let cbn = cbn_translate(&lam).unwrap();
    let out = reduce(&cbn, &bang, Strategy::LeastLevel, 10).unwrap();
    expect(
        "cbn route",
        out.is_normal_form()
            && format_trace(out.trace()).unwrap() == "0: (\\z.z) !x !y --!beta@0,ll,surf--> x !y\n",
    );

    let cbv = cbv_translate(&lam).unwrap();
    let out = reduce(&cbv, &bang, Strategy::LeastLevel, 10).unwrap();
    expect(
        "cbv route",
        out.is_normal_form()
            && format_trace(out.trace()).unwrap()
                == "0: (\\x.x) ((\\z.!z) !x) !y --!beta@0,ll,surf--> (\\x.x) !x !y\n\
                    1: (\\x.x) !x !y --!beta@0,ll,surf--> x !y\n"
            && out.trace()[1].redex.is_d,
    );

    let dd = p(r"(\x.x !x) !(\x.x !x)");
    let out = reduce(&dd, &bang, Strategy::LeastLevel, 50).unwrap();
    expect(
        "diverging term",
        matches!(out, ReduceOutcome::FuelExhausted { cycle_detected: true, .. }) && out.distinct_states() == 1,
    );

    let with_ops = ops(Calculus::Bang);
    let r = r"((\x.x) !z)";
    let lls: Vec<LeastLevel> = [format!("x !{r}"), format!("{r} !{r}"), format!("#oplus(x, y) !{r}")]
        .iter()
        .map(|s| least_level(&p(s), &with_ops))
        .collect();
    expect("least levels", lls == [LeastLevel::Finite(1), LeastLevel::Finite(0), LeastLevel::Finite(0)]);

    let t = p(r"#oplus(x, y) ((\x.x) (\x.x))");
    let reducts = |profile: &CalculusProfile| -> Vec<Term> {
        successors(&t, profile, &StepFilter::LeftmostOutermost)
            .unwrap()
            .into_iter()
            .map(|s| s.to)
            .collect()
    };
    expect(
        "leftmost-outermost sees the operator",
        reducts(&ops(Calculus::CbN)) == [p(r"x ((\x.x) (\x.x))"), p(r"y ((\x.x) (\x.x))")],
    );
    expect(
        "leftmost-outermost without operator rules",
        reducts(&CalculusProfile::cbn()) == [p(r"#oplus(x, y) (\x.x)")],
    );

    Verdict {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            "all golden cases reproduce".to_string()
        } else {
            format!("mismatch: {}", bad.join(", "))
        },
    }
}

fn oracles() -> Verdict {
    let mut bang_terms = gen_terms(&ex(CalculusProfile::bang(), 7));
    bang_terms.extend(gen_terms(&ex(ops(Calculus::Bang), 6)));
    let profile = ops(Calculus::Bang);
    let ll_bad = bang_terms
        .iter()
        .filter(|t| least_level_inductive(t, &profile).ok() != Some(least_level(t, &profile)))
        .count();
    let lam = gen_terms(&ex(ops(Calculus::CbN), 7));
    let inv_bad = lam
        .iter()
        .filter(|t| {
            cbn_inverse(&cbn_translate(t).unwrap()).ok().as_ref() != Some(*t)
                || forgetful(&cbv_translate(t).unwrap()).ok().as_ref() != Some(*t)
        })
        .count();
    Verdict {
        ok: ll_bad == 0 && inv_bad == 0,
        detail: format!(
            "least-level disagreements={ll_bad}/{} inverse failures={inv_bad}/{}",
            bang_terms.len(),
            lam.len()
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("factorization, pure bang, size <= 7", factorization_pure),
        ("factorization with oplus, bang/cbn/cbv, size <= 6", factorization_ops),
        ("simulation cbn and cbv", simulation),
        ("normal form and level preservation", preservation),
        ("good least level", good_least_level),
        ("quasi-diamond", quasi_diamond),
        ("modular test for oplus", modular),
        ("merge and split", merge_split),
        ("golden traces", golden),
        ("oracle agreement", oracles),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        all &= v.ok;
        println!(
            "{} {}: {name}: {} ({:.1}s)",
            if v.ok { "PASS" } else { "FAIL" },
            i + 1,
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
