use std::collections::BTreeSet;
use std::fmt;

use super::canonical::to_canonical;

/// Unified abstract syntax for λ-terms, bang terms and contexts.
///
/// Equality is α-equivalence. Use [`super::CanonicalTerm`] when a hashable
/// key is needed.
#[derive(Clone, Debug)]
pub enum Term {
    Var(String),
    Abs(String, Box<Term>),
    App(Box<Term>, Box<Term>),
    Bang(Box<Term>),
    Op(String, Vec<Term>),
    /// Context marker.
    Hole,
}

/// Top constructor of a term, used by shape-preservation checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Var(String),
    Abs,
    App,
    Bang,
    Op(String),
    Hole,
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn abs(binder: impl Into<String>, body: Term) -> Term {
        Term::Abs(binder.into(), Box::new(body))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn bang(body: Term) -> Term {
        Term::Bang(Box::new(body))
    }

    pub fn op(name: impl Into<String>, args: Vec<Term>) -> Term {
        Term::Op(name.into(), args)
    }

    /// `λx.x`, which opens a box when applied to it.
    pub fn der() -> Term {
        Term::abs("x", Term::var("x"))
    }

    pub fn is_der(&self) -> bool {
        matches!(self, Term::Abs(x, body) if matches!(&**body, Term::Var(y) if y == x))
    }

    pub fn is_value(&self) -> bool {
        matches!(self, Term::Var(_) | Term::Abs(..))
    }

    pub fn shape(&self) -> Shape {
        match self {
            Term::Var(x) => Shape::Var(x.clone()),
            Term::Abs(..) => Shape::Abs,
            Term::App(..) => Shape::App,
            Term::Bang(_) => Shape::Bang,
            Term::Op(name, _) => Shape::Op(name.clone()),
            Term::Hole => Shape::Hole,
        }
    }

    /// Constructor count.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Hole => 1,
            Term::Abs(_, b) | Term::Bang(b) => 1 + b.size(),
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::Op(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn hole_count(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Hole => 1,
            Term::Abs(_, b) | Term::Bang(b) => b.hole_count(),
            Term::App(f, a) => f.hole_count() + a.hole_count(),
            Term::Op(_, args) => args.iter().map(Term::hole_count).sum(),
        }
    }

    pub fn contains_bang(&self) -> bool {
        match self {
            Term::Var(_) | Term::Hole => false,
            Term::Bang(_) => true,
            Term::Abs(_, b) => b.contains_bang(),
            Term::App(f, a) => f.contains_bang() || a.contains_bang(),
            Term::Op(_, args) => args.iter().any(Term::contains_bang),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        collect_free(self, &mut bound, &mut out);
        out
    }

    pub fn occurs_free(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => y == x,
            Term::Hole => false,
            Term::Abs(y, b) => y != x && b.occurs_free(x),
            Term::Bang(b) => b.occurs_free(x),
            Term::App(f, a) => f.occurs_free(x) || a.occurs_free(x),
            Term::Op(_, args) => args.iter().any(|t| t.occurs_free(x)),
        }
    }

    /// Number of free occurrences of `x`.
    pub fn free_occurrences(&self, x: &str) -> usize {
        match self {
            Term::Var(y) => usize::from(y == x),
            Term::Hole => 0,
            Term::Abs(y, b) => {
                if y == x {
                    0
                } else {
                    b.free_occurrences(x)
                }
            }
            Term::Bang(b) => b.free_occurrences(x),
            Term::App(f, a) => f.free_occurrences(x) + a.free_occurrences(x),
            Term::Op(_, args) => args.iter().map(|t| t.free_occurrences(x)).sum(),
        }
    }

    /// Plug `t` into the hole of a context (capture is allowed).
    pub fn plug(&self, t: &Term) -> Term {
        match self {
            Term::Hole => t.clone(),
            Term::Var(_) => self.clone(),
            Term::Abs(x, b) => Term::Abs(x.clone(), Box::new(b.plug(t))),
            Term::Bang(b) => Term::Bang(Box::new(b.plug(t))),
            Term::App(f, a) => Term::App(Box::new(f.plug(t)), Box::new(a.plug(t))),
            Term::Op(name, args) => Term::Op(name.clone(), args.iter().map(|a| a.plug(t)).collect()),
        }
    }
}

fn collect_free(t: &Term, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
    match t {
        Term::Var(x) => {
            if !bound.iter().any(|b| b == x) {
                out.insert(x.clone());
            }
        }
        Term::Hole => {}
        Term::Abs(x, b) => {
            bound.push(x.clone());
            collect_free(b, bound, out);
            bound.pop();
        }
        Term::Bang(b) => collect_free(b, bound, out),
        Term::App(f, a) => {
            collect_free(f, bound, out);
            collect_free(a, bound, out);
        }
        Term::Op(_, args) => {
            for a in args {
                collect_free(a, bound, out);
            }
        }
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Term) -> bool {
        to_canonical(self) == to_canonical(other)
    }
}

impl Eq for Term {}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::print(self))
    }
}
