//! A rewriting workbench for the bang calculus and the call-by-name /
//! call-by-value λ-calculi.
//!
//! The crate is organised bottom-up:
//!
//! - [`syntax`]: terms, α-equivalence, substitution, operators, parsing and printing.
//! - [`redex`]: redex occurrences, levels and least levels.
//! - [`reduction`]: one-step reduction, strategies, reduction graphs and traces.
//! - [`translate`]: the CbN and CbV translations into the bang calculus and their inverses.
//! - [`parallel`]: parallel `!β`-reduction indexed by level and by redex count.
//! - [`props`]: term generation and the executable property suites.
//! - [`cli`]: the command dispatcher behind the `bang` binary.

pub mod cli;
pub mod error;
pub mod parallel;
pub mod props;
pub mod redex;
pub mod reduction;
pub mod syntax;
pub mod translate;

pub use error::{Error, Result};
pub use redex::{LeastLevel, Path, Redex, Step};
pub use syntax::{parse, CalculusProfile, Calculus, CanonicalTerm, OpRegistry, Rule, Term};
