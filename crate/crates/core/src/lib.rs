//! Qualitative Choice Logic (QCL) with ordered disjunction, its degree
//! semantics (QCL, PQCL-style negation, and the game-induced GCL), and the
//! two evaluation games that characterise them.
//!
//! * [`syntax`]: formulas, parser, printer, interpretations
//! * [`qcl`] / [`gcl`]: degree semantics and preferred models
//! * [`game`]: finite zero-sum game trees, backward induction, strategy oracle
//! * [`game_qcl`] / [`game_ng`]: the games **G** and **NG** over a formula
//! * [`dot`]: Graphviz export of game trees
//! * [`gen`] / [`check`]: seeded formula generation and the property suite

pub mod check;
pub mod dot;
pub mod game;
pub mod game_ng;
pub mod game_qcl;
pub mod gcl;
pub mod gen;
pub mod qcl;
pub mod syntax;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

pub use gcl::GclDegree;
pub use qcl::QclDegree;
pub use syntax::{parse, print, Formula, Interpretation, ParseError, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{vars} variables exceed the enumeration cap of {cap}")]
    CapExceeded { vars: usize, cap: usize },
    #[error("{count} strategies exceed the oracle cap of {cap}")]
    StrategyCapExceeded { count: usize, cap: usize },
    #[error("invalid interpretation entry {0:?}")]
    BadInterpretation(String),
    #[error("conclusion `{0}` is not classical (contains ><)")]
    NonClassicalConclusion(String),
    #[error("entailment is defined for a single premise, got {0}")]
    MultiplePremises(usize),
    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),
    #[error("invalid preference relation: {0}")]
    InvalidPreference(String),
    #[error("leaf {0} has no payoff")]
    MissingPayoff(usize),
    #[error("maxmin {maxmin} differs from minmax {minmax}")]
    NotZeroSum { maxmin: String, minmax: String },
}

/// A payoff domain: a total order where greater means better for Me,
/// split into winning and losing values (winning is upward closed).
pub trait Degree: Copy + Eq + Ord + fmt::Debug + fmt::Display {
    fn is_winning(&self) -> bool;
}

/// Comparator used by the game solver and oracle; `Ord::cmp` unless a
/// caller substitutes another order.
pub type Comparator<D> = fn(&D, &D) -> Ordering;
