use std::fmt;

use super::{CalculusProfile, Term};
use crate::redex::{Path, Step};

/// One reason a term is outside the grammar of a calculus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub path: Path,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.message, self.path)
    }
}

/// Checks grammar membership: no `!` in λ-calculus terms, registered operators
/// with the right arity, no holes.
pub fn validate(t: &Term, profile: &CalculusProfile) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    walk(t, profile, &mut path, &mut out);
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn walk(t: &Term, p: &CalculusProfile, path: &mut Vec<Step>, out: &mut Vec<Violation>) {
    let mut report = |path: &Vec<Step>, message: String| {
        out.push(Violation {
            path: Path(path.clone()),
            message,
        })
    };
    match t {
        Term::Var(_) => {}
        Term::Hole => report(path, "hole in term".to_string()),
        Term::Abs(_, b) => {
            path.push(Step::AbsBody);
            walk(b, p, path, out);
            path.pop();
        }
        Term::App(f, a) => {
            path.push(Step::AppLeft);
            walk(f, p, path, out);
            path.pop();
            path.push(Step::AppRight);
            walk(a, p, path, out);
            path.pop();
        }
        Term::Bang(b) => {
            if p.is_lambda() {
                report(path, "Bang in λ-calculus term".to_string());
            }
            path.push(Step::BangBody);
            walk(b, p, path, out);
            path.pop();
        }
        Term::Op(name, args) => {
            match p.registry().arity(name) {
                None => report(path, format!("unknown operator `{name}`")),
                Some(k) if k != args.len() => report(
                    path,
                    format!("arity mismatch: `{name}` takes {k} arguments, got {}", args.len()),
                ),
                Some(_) => {}
            }
            for (i, a) in args.iter().enumerate() {
                path.push(Step::OpArg(i));
                walk(a, p, path, out);
                path.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, Calculus, OPLUS};

    #[test]
    fn bang_rejected_in_lambda_calculi() {
        let v = validate(&parse("!x").unwrap(), &CalculusProfile::cbn()).unwrap_err();
        assert_eq!(v[0].message, "Bang in λ-calculus term");
        assert!(validate(&parse("!x").unwrap(), &CalculusProfile::bang()).is_ok());
    }

    #[test]
    fn arity_mismatch_names_the_path() {
        let t = Term::app(Term::var("y"), Term::op(OPLUS, vec![Term::var("x")]));
        for c in [Calculus::CbN, Calculus::CbV, Calculus::Bang] {
            let v = validate(&t, &CalculusProfile::with_oplus(c)).unwrap_err();
            assert!(v[0].message.starts_with("arity mismatch"));
            assert_eq!(v[0].path, Path(vec![Step::AppRight]));
        }
    }

    #[test]
    fn delta_delta_is_a_bang_term() {
        let t = parse(r"(\x.x !x) !(\x.x !x)").unwrap();
        assert!(validate(&t, &CalculusProfile::bang()).is_ok());
    }

    #[test]
    fn holes_are_rejected() {
        let c = parse("x []").unwrap();
        assert_eq!(validate(&c, &CalculusProfile::cbn()).unwrap_err()[0].message, "hole in term");
    }
}
