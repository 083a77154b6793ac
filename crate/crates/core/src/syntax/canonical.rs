use std::collections::BTreeSet;

use super::Term;

/// Nameless form: bound variables are binder indices, free variables keep
/// their names. Two terms are α-equivalent iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalTerm {
    Free(String),
    Index(usize),
    Abs(Box<CanonicalTerm>),
    App(Box<CanonicalTerm>, Box<CanonicalTerm>),
    Bang(Box<CanonicalTerm>),
    Op(String, Vec<CanonicalTerm>),
    Hole,
}

pub fn to_canonical(t: &Term) -> CanonicalTerm {
    let mut scope: Vec<&str> = Vec::new();
    go(t, &mut scope)
}

fn go<'a>(t: &'a Term, scope: &mut Vec<&'a str>) -> CanonicalTerm {
    match t {
        Term::Var(x) => match scope.iter().rev().position(|b| *b == x) {
            Some(i) => CanonicalTerm::Index(i),
            None => CanonicalTerm::Free(x.clone()),
        },
        Term::Hole => CanonicalTerm::Hole,
        Term::Abs(x, b) => {
            scope.push(x);
            let body = go(b, scope);
            scope.pop();
            CanonicalTerm::Abs(Box::new(body))
        }
        Term::App(f, a) => CanonicalTerm::App(Box::new(go(f, scope)), Box::new(go(a, scope))),
        Term::Bang(b) => CanonicalTerm::Bang(Box::new(go(b, scope))),
        Term::Op(name, args) => {
            CanonicalTerm::Op(name.clone(), args.iter().map(|a| go(a, scope)).collect())
        }
    }
}

const BINDER_NAMES: &[&str] = &[
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p", "q", "r", "s",
    "t",
];

/// Reads a canonical term back, naming binders by depth (`a`, `b`, ...)
/// while avoiding the free names of the term.
pub fn from_canonical(c: &CanonicalTerm) -> Term {
    let mut free = BTreeSet::new();
    c.collect_free(&mut free);
    let mut names = Vec::new();
    back(c, &free, &mut names)
}

fn binder_name(free: &BTreeSet<String>, taken: &[String]) -> String {
    BINDER_NAMES
        .iter()
        .map(|s| s.to_string())
        .chain((1..).map(|i| format!("a{i}")))
        .find(|name| !free.contains(name) && !taken.contains(name))
        .expect("infinite name supply")
}

fn back(c: &CanonicalTerm, free: &BTreeSet<String>, names: &mut Vec<String>) -> Term {
    match c {
        CanonicalTerm::Free(x) => Term::Var(x.clone()),
        CanonicalTerm::Index(i) => Term::Var(names[names.len() - 1 - i].clone()),
        CanonicalTerm::Hole => Term::Hole,
        CanonicalTerm::Abs(b) => {
            let name = binder_name(free, names);
            names.push(name.clone());
            let body = back(b, free, names);
            names.pop();
            Term::Abs(name, Box::new(body))
        }
        CanonicalTerm::App(f, a) => Term::app(back(f, free, names), back(a, free, names)),
        CanonicalTerm::Bang(b) => Term::bang(back(b, free, names)),
        CanonicalTerm::Op(name, args) => {
            Term::Op(name.clone(), args.iter().map(|a| back(a, free, names)).collect())
        }
    }
}

impl CanonicalTerm {
    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            CanonicalTerm::Free(x) => {
                out.insert(x.clone());
            }
            CanonicalTerm::Index(_) | CanonicalTerm::Hole => {}
            CanonicalTerm::Abs(b) | CanonicalTerm::Bang(b) => b.collect_free(out),
            CanonicalTerm::App(f, a) => {
                f.collect_free(out);
                a.collect_free(out);
            }
            CanonicalTerm::Op(_, args) => args.iter().for_each(|a| a.collect_free(out)),
        }
    }

    pub fn to_term(&self) -> Term {
        from_canonical(self)
    }
}
