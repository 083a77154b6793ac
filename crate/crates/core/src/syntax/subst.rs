use std::collections::BTreeSet;

use super::canonical::to_canonical;
use super::Term;

/// Capture-avoiding substitution `t{s/x}`.
///
/// Binders that would capture a free variable of `s` are renamed with
/// [`fresh_name`], so the result is a deterministic function of the inputs.
pub fn substitute(t: &Term, x: &str, s: &Term) -> Term {
    let fv_s = s.free_vars();
    subst(t, x, s, &fv_s)
}

fn subst(t: &Term, x: &str, s: &Term, fv_s: &BTreeSet<String>) -> Term {
    match t {
        Term::Var(y) => {
            if y == x {
                s.clone()
            } else {
                t.clone()
            }
        }
        Term::Hole => Term::Hole,
        Term::Abs(y, body) => {
            if y == x || !body.occurs_free(x) {
                return t.clone();
            }
            if fv_s.contains(y) {
                let mut avoid = body.free_vars();
                avoid.extend(fv_s.iter().cloned());
                avoid.insert(x.to_string());
                let z = fresh_name(y, &avoid);
                let renamed = substitute(body, y, &Term::Var(z.clone()));
                Term::Abs(z, Box::new(subst(&renamed, x, s, fv_s)))
            } else {
                Term::Abs(y.clone(), Box::new(subst(body, x, s, fv_s)))
            }
        }
        Term::App(f, a) => Term::App(Box::new(subst(f, x, s, fv_s)), Box::new(subst(a, x, s, fv_s))),
        Term::Bang(b) => Term::Bang(Box::new(subst(b, x, s, fv_s))),
        Term::Op(name, args) => {
            Term::Op(name.clone(), args.iter().map(|a| subst(a, x, s, fv_s)).collect())
        }
    }
}

/// First of `base_1`, `base_2`, ... not in `avoid`; a numeric suffix already on
/// `base` is stripped first.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let stem = match base.rsplit_once('_') {
        Some((stem, digits)) if !stem.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) => {
            stem
        }
        _ => base,
    };
    (1..)
        .map(|i| format!("{stem}_{i}"))
        .find(|n| !avoid.contains(n))
        .expect("infinite name supply")
}

pub fn alpha_eq(t: &Term, s: &Term) -> bool {
    to_canonical(t) == to_canonical(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn variable_hit() {
        assert_eq!(substitute(&p("x"), "x", &p(r"\y.y")), p(r"\y.y"));
    }

    #[test]
    fn shadowed_binder_is_untouched() {
        assert_eq!(substitute(&p(r"\x.x"), "x", &p("s")), p(r"\x.x"));
    }

    #[test]
    fn delta_self_application() {
        let delta = p(r"\x.x !x");
        let got = substitute(&p("x !x"), "x", &delta);
        assert_eq!(got, Term::app(delta.clone(), Term::bang(delta)));
    }

    #[test]
    fn renames_to_avoid_capture() {
        // (λy.x y){y/x} = λy'.y y'
        let got = substitute(&p(r"\y.x y"), "x", &p("y"));
        assert_eq!(got, p(r"\z.y z"));
        assert!(got.free_vars().contains("y"));
    }

    #[test]
    fn fresh_name_strips_suffix() {
        let avoid: BTreeSet<String> = ["y_1".to_string()].into_iter().collect();
        assert_eq!(fresh_name("y_1", &avoid), "y_2");
        assert_eq!(fresh_name("y", &BTreeSet::new()), "y_1");
    }

    #[test]
    fn alpha_examples() {
        assert!(alpha_eq(&p(r"\x.x"), &p(r"\y.y")));
        assert!(!alpha_eq(&p(r"\x.\y.x"), &p(r"\x.\y.y")));
        assert!(alpha_eq(
            &p(r"(\x.x !x) !(\x.x !x)"),
            &p(r"(\z.z !z) !(\x.x !x)")
        ));
    }
}
