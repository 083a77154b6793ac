use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::OpRegistry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Calculus {
    CbN,
    CbV,
    Bang,
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Calculus::CbN => "cbn",
            Calculus::CbV => "cbv",
            Calculus::Bang => "bang",
        })
    }
}

/// Rule identifiers. `d` is not a separate rule: d-redexes are the `!β`-redexes
/// whose function part is `λx.x`, see [`crate::Redex::is_d`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Beta,
    BetaV,
    BangBeta,
    Op(String),
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Beta => f.write_str("beta"),
            Rule::BetaV => f.write_str("betav"),
            Rule::BangBeta => f.write_str("!beta"),
            Rule::Op(name) => f.write_str(name),
        }
    }
}

/// Rule set, level function and validity predicate of one calculus.
///
/// The operator registry fixes which operators are well-formed syntax;
/// `active_ops` selects which of them also contribute rewrite rules.
#[derive(Clone, Debug)]
pub struct CalculusProfile {
    pub calculus: Calculus,
    registry: Arc<OpRegistry>,
    active_ops: BTreeSet<String>,
}

impl CalculusProfile {
    /// All registered operators are active rules.
    pub fn new(calculus: Calculus, registry: Arc<OpRegistry>) -> Self {
        let active_ops = registry.names().map(str::to_string).collect();
        CalculusProfile {
            calculus,
            registry,
            active_ops,
        }
    }

    /// The standard registry with no operator rules: `⊕` parses but never fires.
    pub fn pure(calculus: Calculus) -> Self {
        CalculusProfile {
            calculus,
            registry: Arc::new(OpRegistry::standard()),
            active_ops: BTreeSet::new(),
        }
    }

    /// The standard registry with `⊕` active.
    pub fn with_oplus(calculus: Calculus) -> Self {
        CalculusProfile::new(calculus, Arc::new(OpRegistry::standard()))
    }

    pub fn bang() -> Self {
        CalculusProfile::pure(Calculus::Bang)
    }

    pub fn cbn() -> Self {
        CalculusProfile::pure(Calculus::CbN)
    }

    pub fn cbv() -> Self {
        CalculusProfile::pure(Calculus::CbV)
    }

    pub fn without_op_rules(&self) -> Self {
        CalculusProfile {
            active_ops: BTreeSet::new(),
            ..self.clone()
        }
    }

    /// Same registry and active operators, different base calculus.
    pub fn with_calculus(&self, calculus: Calculus) -> Self {
        CalculusProfile {
            calculus,
            ..self.clone()
        }
    }

    pub fn registry(&self) -> &OpRegistry {
        &self.registry
    }

    pub fn registry_arc(&self) -> Arc<OpRegistry> {
        Arc::clone(&self.registry)
    }

    pub fn op_is_active(&self, name: &str) -> bool {
        self.active_ops.contains(name)
    }

    pub fn active_ops(&self) -> impl Iterator<Item = &str> {
        self.active_ops.iter().map(String::as_str)
    }

    pub fn has_op_rules(&self) -> bool {
        !self.active_ops.is_empty()
    }

    /// The base rule of the calculus (`β`, `βv` or `!β`).
    pub fn base_rule(&self) -> Rule {
        match self.calculus {
            Calculus::CbN => Rule::Beta,
            Calculus::CbV => Rule::BetaV,
            Calculus::Bang => Rule::BangBeta,
        }
    }

    pub fn rules(&self) -> Vec<Rule> {
        std::iter::once(self.base_rule())
            .chain(self.active_ops.iter().map(|o| Rule::Op(o.clone())))
            .collect()
    }

    pub fn is_lambda(&self) -> bool {
        self.calculus != Calculus::Bang
    }
}

impl fmt::Display for CalculusProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.calculus)?;
        for op in &self.active_ops {
            write!(f, "+{op}")?;
        }
        Ok(())
    }
}

impl Default for CalculusProfile {
    fn default() -> Self {
        CalculusProfile::bang()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::OPLUS;

    #[test]
    fn rule_sets_contain_base_rule() {
        assert_eq!(CalculusProfile::cbn().rules(), vec![Rule::Beta]);
        assert_eq!(CalculusProfile::cbv().rules(), vec![Rule::BetaV]);
        assert_eq!(
            CalculusProfile::with_oplus(Calculus::Bang).rules(),
            vec![Rule::BangBeta, Rule::Op(OPLUS.into())]
        );
    }

    #[test]
    fn display_names_active_operators() {
        assert_eq!(CalculusProfile::with_oplus(Calculus::CbV).to_string(), "cbv+oplus");
        assert_eq!(CalculusProfile::bang().to_string(), "bang");
    }
}
