//! Term syntax shared by the three calculi.
//!
//! A single [`Term`] type covers λ-terms and bang terms; `!` is a dedicated
//! constructor and per-calculus membership is a predicate ([`validate`]).
//! Contexts are terms with exactly one [`Term::Hole`].

mod canonical;
mod ops;
mod parse;
mod print;
mod profile;
mod subst;
mod term;
mod validate;

pub use canonical::{from_canonical, to_canonical, CanonicalTerm};
pub use ops::{Contraction, OpRegistry, OperatorSig, OPLUS};
pub use parse::{parse, parse_with};
pub use profile::{Calculus, CalculusProfile, Rule};
pub use subst::{alpha_eq, fresh_name, substitute};
pub use term::{Shape, Term};
pub use validate::{validate, Violation};
