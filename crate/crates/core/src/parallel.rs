//! Parallel `!β`-reduction, indexed by level (`⇛@n`) and by redex count (`⇛^n`).
//!
//! Every derivation of the inference rules is enumerated, so the number of
//! results is exponential in the number of redexes; terms with more than
//! [`MAX_REDEXES`] redexes are refused. Operators are congruences only.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::redex::{self, LeastLevel};
use crate::syntax::{substitute, to_canonical, CalculusProfile, Term};

pub const MAX_REDEXES: usize = 16;

#[derive(Clone, Debug)]
pub struct ParallelStep {
    pub from: Term,
    pub to: Term,
    /// `n` of `⇛@n`: the least level of a fired redex, `∞` if none fired.
    pub level_index: LeastLevel,
    /// `n` of `⇛^n`.
    pub count_index: usize,
}

#[derive(Clone, Debug)]
struct Derivation {
    to: Term,
    level: LeastLevel,
    count: usize,
}

fn check(t: &Term) -> Result<CalculusProfile> {
    let profile = CalculusProfile::bang();
    let k = redex::enumerate_redexes(t, &profile)?.len();
    if k > MAX_REDEXES {
        return Err(Error::TooManyRedexes(k));
    }
    Ok(profile)
}

/// One entry per derivation, duplicates included.
pub fn parallel_derivations(t: &Term) -> Result<Vec<ParallelStep>> {
    check(t)?;
    Ok(derive(t)
        .into_iter()
        .map(|d| ParallelStep {
            from: t.clone(),
            to: d.to,
            level_index: d.level,
            count_index: d.count,
        })
        .collect())
}

/// One entry per reduct up to α, with the largest level index and the
/// smallest count index over its derivations. The identity step comes first.
pub fn parallel_successors(t: &Term) -> Result<Vec<ParallelStep>> {
    let mut out: Vec<ParallelStep> = Vec::new();
    let mut index = HashMap::new();
    for s in parallel_derivations(t)? {
        match index.get(&to_canonical(&s.to)) {
            Some(&i) => {
                let e: &mut ParallelStep = &mut out[i];
                e.level_index = e.level_index.max(s.level_index);
                e.count_index = e.count_index.min(s.count_index);
            }
            None => {
                index.insert(to_canonical(&s.to), out.len());
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Reducts by `⇛@n` with `n = ∞` or `n > ll(t)`.
pub fn internal_parallel_successors(t: &Term) -> Result<Vec<Term>> {
    let profile = check(t)?;
    let ll = redex::least_level(t, &profile);
    Ok(parallel_successors(t)?
        .into_iter()
        .filter(|s| is_internal(s.level_index, ll))
        .map(|s| s.to)
        .collect())
}

pub fn is_internal(level_index: LeastLevel, ll: LeastLevel) -> bool {
    level_index.is_infinite() || level_index > ll
}

fn derive(t: &Term) -> Vec<Derivation> {
    match t {
        Term::Var(_) | Term::Hole => vec![Derivation {
            to: t.clone(),
            level: LeastLevel::Infinite,
            count: 0,
        }],
        Term::Abs(x, b) => derive(b)
            .into_iter()
            .map(|d| Derivation {
                to: Term::Abs(x.clone(), Box::new(d.to)),
                ..d
            })
            .collect(),
        Term::Bang(b) => derive(b)
            .into_iter()
            .map(|d| Derivation {
                to: Term::bang(d.to),
                level: d.level.succ(),
                count: d.count,
            })
            .collect(),
        Term::App(f, a) => {
            let fs = derive(f);
            let as_ = derive(a);
            let mut out = Vec::with_capacity(fs.len() * as_.len());
            for df in &fs {
                for da in &as_ {
                    out.push(Derivation {
                        to: Term::app(df.to.clone(), da.to.clone()),
                        level: df.level.min(da.level),
                        count: df.count + da.count,
                    });
                }
            }
            if let (Term::Abs(x, body), Term::Bang(s)) = (&**f, &**a) {
                let ss = derive(s);
                for db in derive(body) {
                    let occ = db.to.free_occurrences(x);
                    for ds in &ss {
                        out.push(Derivation {
                            to: substitute(&db.to, x, &ds.to),
                            level: LeastLevel::Finite(0),
                            count: db.count + occ * ds.count + 1,
                        });
                    }
                }
            }
            out
        }
        Term::Op(name, args) => {
            let mut acc = vec![Derivation {
                to: Term::Op(name.clone(), Vec::new()),
                level: LeastLevel::Infinite,
                count: 0,
            }];
            for a in args {
                let ds = derive(a);
                let mut next = Vec::with_capacity(acc.len() * ds.len());
                for prefix in &acc {
                    for d in &ds {
                        let Term::Op(_, mut v) = prefix.to.clone() else {
                            unreachable!()
                        };
                        v.push(d.to.clone());
                        next.push(Derivation {
                            to: Term::Op(name.clone(), v),
                            level: prefix.level.min(d.level),
                            count: prefix.count + d.count,
                        });
                    }
                }
                acc = next;
            }
            for d in &mut acc {
                d.level = d.level.succ();
            }
            acc
        }
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

    fn contains(steps: &[ParallelStep], to: &Term, level: LeastLevel, count: usize) -> bool {
        steps
            .iter()
            .any(|s| &s.to == to && s.level_index == level && s.count_index == count)
    }

    #[test]
    fn variable_only_has_identity() {
        let s = parallel_successors(&p("x")).unwrap();
        assert_eq!(s.len(), 1);
        assert!(contains(&s, &p("x"), LeastLevel::Infinite, 0));
    }

    #[test]
    fn fire_or_not() {
        let s = parallel_successors(&p(R)).unwrap();
        assert_eq!(s.len(), 2);
        assert!(contains(&s, &p(R), LeastLevel::Infinite, 0));
        assert!(contains(&s, &p("z"), LeastLevel::Finite(0), 1));
    }

    #[test]
    fn all_three_redexes_at_once() {
        // (λz.R) !R: firing the root, the R in the body and the R in the box.
        let t = p(&format!(r"(\z.{R}) !({R})"));
        let d = parallel_derivations(&t).unwrap();
        assert!(d.iter().any(|s| s.to == p("z") && s.count_index == 3));
        let s = parallel_successors(&t).unwrap();
        assert!(s.iter().any(|s| s.to == p("z") && s.level_index == LeastLevel::Finite(0)));
    }

    #[test]
    fn internal_parallel_examples() {
        assert_eq!(internal_parallel_successors(&p(r"\x.x")).unwrap(), vec![p(r"\x.x")]);
        assert_eq!(internal_parallel_successors(&p(&format!("x !({R})"))).unwrap(), vec![p(&format!("x !({R})"))]);
        let rr = internal_parallel_successors(&p(&format!("({R}) !({R})"))).unwrap();
        assert!(rr.contains(&p(&format!("({R}) !z"))));
        assert!(!rr.contains(&p(&format!("z !({R})"))));
    }

    #[test]
    fn too_many_redexes() {
        let mut t = p("x");
        for _ in 0..17 {
            t = Term::app(t, Term::bang(p(R)));
        }
        assert!(matches!(parallel_successors(&t), Err(Error::TooManyRedexes(17))));
    }
}
