//! CbN and CbV translations into the bang calculus, their image grammars, the
//! CbN inverse and the CbV forgetful map.

use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    CbN,
    CbV,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::CbN => "cbn",
            Mode::CbV => "cbv",
        })
    }
}

pub fn translate(t: &Term, mode: Mode) -> Result<Term> {
    match mode {
        Mode::CbN => cbn_translate(t),
        Mode::CbV => cbv_translate(t),
    }
}

/// `x ↦ x`, `λx.t ↦ λx.tⁿ`, `t s ↦ tⁿ !sⁿ`. Holes are kept.
pub fn cbn_translate(t: &Term) -> Result<Term> {
    if t.contains_bang() {
        return Err(Error::BangInLambdaTerm);
    }
    Ok(cbn(t))
}

fn cbn(t: &Term) -> Term {
    match t {
        Term::Var(_) | Term::Hole => t.clone(),
        Term::Abs(x, b) => Term::Abs(x.clone(), Box::new(cbn(b))),
        Term::App(f, a) => Term::app(cbn(f), Term::bang(cbn(a))),
        Term::Bang(_) => unreachable!("checked by caller"),
        Term::Op(name, args) => Term::Op(name.clone(), args.iter().map(cbn).collect()),
    }
}

/// `x ↦ !x`, `λx.t ↦ !(λx.tᵛ)`; `t s ↦ T sᵛ` when `tᵛ = !T`, else `(λx.x) tᵛ sᵛ`.
pub fn cbv_translate(t: &Term) -> Result<Term> {
    if t.contains_bang() {
        return Err(Error::BangInLambdaTerm);
    }
    Ok(cbv(t))
}

fn cbv(t: &Term) -> Term {
    match t {
        Term::Var(_) => Term::bang(t.clone()),
        Term::Hole => Term::Hole,
        Term::Abs(x, b) => Term::bang(Term::Abs(x.clone(), Box::new(cbv(b)))),
        Term::App(f, a) => match cbv(f) {
            Term::Bang(inner) => Term::App(inner, Box::new(cbv(a))),
            other => Term::app(Term::app(Term::der(), other), cbv(a)),
        },
        Term::Bang(_) => unreachable!("checked by caller"),
        Term::Op(name, args) => Term::Op(name.clone(), args.iter().map(cbv).collect()),
    }
}

/// Translates a one-hole context.
pub fn translate_context(c: &Term, mode: Mode) -> Result<Term> {
    match c.hole_count() {
        1 => translate(c, mode),
        n => Err(Error::HoleCount(n)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageTag {
    CbnImage,
    CbvImage,
    CbvValueImage,
    Outside,
}

/// Membership in each image grammar; the grammars overlap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub cbn: bool,
    pub cbv: bool,
    pub cbv_value: bool,
}

impl Membership {
    pub fn of(t: &Term) -> Membership {
        Membership {
            cbn: in_cbn_image(t),
            cbv: in_cbv_image(t),
            cbv_value: in_cbv_value_image(t),
        }
    }

    /// CbN first, then CbV, then CbV values.
    pub fn tag(self) -> ImageTag {
        if self.cbn {
            ImageTag::CbnImage
        } else if self.cbv {
            ImageTag::CbvImage
        } else if self.cbv_value {
            ImageTag::CbvValueImage
        } else {
            ImageTag::Outside
        }
    }
}

pub fn in_image(t: &Term) -> ImageTag {
    Membership::of(t).tag()
}

/// `T ::= x | T !T | λx.T | o(T, ..., T)`
pub fn in_cbn_image(t: &Term) -> bool {
    match t {
        Term::Var(_) => true,
        Term::Abs(_, b) => in_cbn_image(b),
        Term::App(f, a) => matches!(&**a, Term::Bang(s) if in_cbn_image(s)) && in_cbn_image(f),
        Term::Op(_, args) => args.iter().all(in_cbn_image),
        Term::Bang(_) | Term::Hole => false,
    }
}

/// `M ::= !U | (λx.x) M N | U M | o(M, ..., M)`
pub fn in_cbv_image(t: &Term) -> bool {
    match t {
        Term::Bang(u) => in_cbv_value_image(u),
        Term::App(f, n) => match &**f {
            Term::App(d, m) if d.is_der() => in_cbv_image(m) && in_cbv_image(n),
            u => in_cbv_value_image(u) && in_cbv_image(n),
        },
        Term::Op(_, args) => args.iter().all(in_cbv_image),
        Term::Var(_) | Term::Abs(..) | Term::Hole => false,
    }
}

/// `U ::= x | λx.M`
pub fn in_cbv_value_image(t: &Term) -> bool {
    match t {
        Term::Var(_) => true,
        Term::Abs(_, m) => in_cbv_image(m),
        _ => false,
    }
}

/// The unique λ-term whose CbN translation is `t`.
pub fn cbn_inverse(t: &Term) -> Result<Term> {
    if !in_cbn_image(t) {
        return Err(Error::NotCbnImage);
    }
    Ok(cbn_back(t))
}

fn cbn_back(t: &Term) -> Term {
    match t {
        Term::Abs(x, b) => Term::Abs(x.clone(), Box::new(cbn_back(b))),
        Term::App(f, a) => match &**a {
            Term::Bang(s) => Term::app(cbn_back(f), cbn_back(s)),
            _ => unreachable!("checked by caller"),
        },
        Term::Op(name, args) => Term::Op(name.clone(), args.iter().map(cbn_back).collect()),
        _ => t.clone(),
    }
}

/// Erases bangs and `λx.x` wrappers on the CbV image grammar.
pub fn forgetful(t: &Term) -> Result<Term> {
    if in_cbv_image(t) {
        Ok(forget_m(t))
    } else if in_cbv_value_image(t) {
        Ok(forget_u(t))
    } else {
        Err(Error::ForgetfulDomain(t.to_string()))
    }
}

fn forget_m(t: &Term) -> Term {
    match t {
        Term::Bang(u) => forget_u(u),
        Term::App(f, n) => match &**f {
            Term::App(d, m) if d.is_der() => Term::app(forget_m(m), forget_m(n)),
            u => Term::app(forget_u(u), forget_m(n)),
        },
        Term::Op(name, args) => Term::Op(name.clone(), args.iter().map(forget_m).collect()),
        _ => unreachable!("checked by caller"),
    }
}

fn forget_u(t: &Term) -> Term {
    match t {
        Term::Abs(x, m) => Term::Abs(x.clone(), Box::new(forget_m(m))),
        _ => t.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::redex::context_level;
    use crate::syntax::{parse, CalculusProfile};

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    const DELTA: &str = r"\x.x !x";
    const SMALL_DELTA: &str = r"\x.x x";
    const EX: &str = r"(\z.z) x y";

    #[test]
    fn cbn_examples() {
        assert_eq!(cbn_translate(&p(SMALL_DELTA)).unwrap(), p(DELTA));
        assert_eq!(cbn_translate(&p("x")).unwrap(), p("x"));
        assert_eq!(cbn_translate(&p(EX)).unwrap(), p(r"(\z.z) !x !y"));
        assert!(matches!(cbn_translate(&p("!x")), Err(Error::BangInLambdaTerm)));
    }

    #[test]
    fn cbv_examples() {
        assert_eq!(cbv_translate(&p(SMALL_DELTA)).unwrap(), p(&format!("!({DELTA})")));
        let omega = p(&format!("({SMALL_DELTA}) {SMALL_DELTA}"));
        let dd = p(&format!("({DELTA}) !({DELTA})"));
        assert_eq!(cbv_translate(&omega).unwrap(), dd);
        assert_eq!(cbn_translate(&omega).unwrap(), dd);
        assert_eq!(cbv_translate(&p(EX)).unwrap(), p(r"(\x.x) ((\z.!z) !x) !y"));
    }

    #[test]
    fn contexts() {
        assert_eq!(translate_context(&p("[]"), Mode::CbN).unwrap(), p("[]"));
        assert_eq!(translate_context(&p("t []"), Mode::CbN).unwrap(), p("t ![]"));
        let c = translate_context(&p(r"\x.[]"), Mode::CbV).unwrap();
        assert_eq!(c, p(r"!\x.[]"));
        assert_eq!(context_level(&c, &CalculusProfile::bang()).unwrap(), 1);
        assert!(matches!(translate_context(&p("x"), Mode::CbN), Err(Error::HoleCount(0))));
    }

    #[test]
    fn image_membership() {
        assert_eq!(in_image(&p("x !y")), ImageTag::CbnImage);
        let m = p(r"(\x.x) !x !y");
        let both = Membership::of(&m);
        assert!(both.cbv && both.cbn);
        assert_eq!(in_image(&m), ImageTag::CbnImage);
        assert_eq!(in_image(&p(r"(\x.x) (x !y) !y")), ImageTag::CbvImage);
        let der = Membership::of(&Term::der());
        assert!(!der.cbv && !der.cbv_value);
        let dd = Membership::of(&p(&format!("({DELTA}) !({DELTA})")));
        assert!(dd.cbn && dd.cbv);
    }

    #[test]
    fn inverses() {
        assert_eq!(cbn_inverse(&p(DELTA)).unwrap(), p(SMALL_DELTA));
        assert_eq!(cbn_inverse(&p("x")).unwrap(), p("x"));
        assert_eq!(cbn_inverse(&p(r"(\z.z) !x !y")).unwrap(), p(EX));
        assert!(matches!(cbn_inverse(&p("!x")), Err(Error::NotCbnImage)));
    }

    #[test]
    fn forgetful_map() {
        assert_eq!(forgetful(&p("!x")).unwrap(), p("x"));
        let dd = p(&format!("({DELTA}) !({DELTA})"));
        assert_eq!(forgetful(&dd).unwrap(), p(&format!("({SMALL_DELTA}) {SMALL_DELTA}")));
        assert_eq!(forgetful(&p(r"(\x.x) !x !y")).unwrap(), p("x y"));
        assert!(matches!(forgetful(&Term::der()), Err(Error::ForgetfulDomain(_))));
    }
}
