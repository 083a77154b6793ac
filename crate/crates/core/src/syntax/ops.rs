use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::Term;
use crate::error::{Error, Result};

/// Name of the shipped non-deterministic choice operator.
pub const OPLUS: &str = "oplus";

/// One rewrite alternative of an operator rule: argument tuple to reduct.
pub type Contraction = Arc<dyn Fn(&[Term]) -> Term + Send + Sync>;

#[derive(Clone)]
pub struct OperatorSig {
    pub name: String,
    pub arity: usize,
    pub contractions: Vec<Contraction>,
}

impl OperatorSig {
    pub fn new(name: impl Into<String>, arity: usize, contractions: Vec<Contraction>) -> Self {
        OperatorSig {
            name: name.into(),
            arity,
            contractions,
        }
    }

    /// `⊕(t1, t2)` rewrites to either argument.
    pub fn oplus() -> Self {
        let left: Contraction = Arc::new(|args: &[Term]| args[0].clone());
        let right: Contraction = Arc::new(|args: &[Term]| args[1].clone());
        OperatorSig::new(OPLUS, 2, vec![left, right])
    }

    pub fn contract(&self, args: &[Term]) -> Vec<Term> {
        self.contractions.iter().map(|c| c(args)).collect()
    }
}

impl fmt::Debug for OperatorSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperatorSig")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .field("contractions", &self.contractions.len())
            .finish()
    }
}

/// Operators known to the syntax, with their arities and rules.
#[derive(Clone, Debug, Default)]
pub struct OpRegistry {
    ops: BTreeMap<String, OperatorSig>,
}

impl OpRegistry {
    pub fn empty() -> Self {
        OpRegistry::default()
    }

    /// The shipped registry: `⊕` only.
    pub fn standard() -> Self {
        let mut r = OpRegistry::empty();
        r.register(OperatorSig::oplus()).expect("fresh registry");
        r
    }

    pub fn register(&mut self, sig: OperatorSig) -> Result<()> {
        if self.ops.contains_key(&sig.name) {
            return Err(Error::Registry(format!("operator `{}` already registered", sig.name)));
        }
        if !is_identifier(&sig.name) {
            return Err(Error::Registry(format!("`{}` is not a valid operator name", sig.name)));
        }
        self.ops.insert(sig.name.clone(), sig);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&OperatorSig> {
        self.ops.get(name)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.ops.get(name).map(|s| s.arity)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.ops.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &OperatorSig> {
        self.ops.values()
    }

    pub fn listing(&self) -> String {
        if self.ops.is_empty() {
            return "none".to_string();
        }
        self.ops
            .values()
            .map(|s| format!("{}/{}", s.name, s.arity))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn unknown(&self, name: &str) -> Error {
        Error::UnknownOperator {
            name: name.to_string(),
            known: self.listing(),
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oplus_projects() {
        let sig = OperatorSig::oplus();
        let out = sig.contract(&[Term::var("x"), Term::var("y")]);
        assert_eq!(out, vec![Term::var("x"), Term::var("y")]);
        assert_eq!(sig.arity, 2);
    }

    #[test]
    fn duplicate_registration_is_rejected() {
        let mut r = OpRegistry::standard();
        assert!(r.register(OperatorSig::oplus()).is_err());
        assert_eq!(r.listing(), "oplus/2");
    }
}
