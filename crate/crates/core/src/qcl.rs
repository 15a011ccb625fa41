//! QCL degree semantics.
//!
//! Degrees live in ℕ≥1 ∪ {∞}; lower numbers are better and ∞ means "not
//! satisfied". [`QclDegree`] orders them so that `Ord::max` picks the more
//! preferred degree (1 is the greatest element, ∞ the least).

use std::cmp::Ordering;
use std::fmt;

use crate::syntax::{interpretations_over, Formula, Interpretation};
use crate::{Degree, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QclDegree {
    Finite(u32),
    Infinity,
}

impl QclDegree {
    pub const ONE: QclDegree = QclDegree::Finite(1);

    /// Panics on `k == 0`; degrees start at 1.
    pub fn finite(k: u32) -> Self {
        assert!(k >= 1, "QCL degrees start at 1");
        QclDegree::Finite(k)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, QclDegree::Finite(_))
    }

    pub fn value(&self) -> Option<u32> {
        match self {
            QclDegree::Finite(k) => Some(*k),
            QclDegree::Infinity => None,
        }
    }
}

impl Ord for QclDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (QclDegree::Infinity, QclDegree::Infinity) => Ordering::Equal,
            (QclDegree::Infinity, _) => Ordering::Less,
            (_, QclDegree::Infinity) => Ordering::Greater,
            (QclDegree::Finite(a), QclDegree::Finite(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for QclDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QclDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QclDegree::Finite(k) => write!(f, "{k}"),
            QclDegree::Infinity => f.write_str("inf"),
        }
    }
}

impl Degree for QclDegree {
    fn is_winning(&self) -> bool {
        self.is_finite()
    }
}

/// `a ⪯ b`: `b` is at least as preferred as `a`.
pub fn leq(a: QclDegree, b: QclDegree) -> bool {
    a <= b
}

pub fn optionality(f: &Formula) -> u32 {
    match f {
        Formula::Var(_) | Formula::Not(_) => 1,
        Formula::And(l, r) | Formula::Or(l, r) => optionality(l).max(optionality(r)),
        Formula::OrdDisj(l, r) => optionality(l) + optionality(r),
    }
}

pub fn degree(f: &Formula, i: &Interpretation) -> QclDegree {
    match f {
        Formula::Var(v) => {
            if i.contains(v) {
                QclDegree::ONE
            } else {
                QclDegree::Infinity
            }
        }
        Formula::Not(g) => match degree(g, i) {
            QclDegree::Infinity => QclDegree::ONE,
            QclDegree::Finite(_) => QclDegree::Infinity,
        },
        // the worse of the two (numerically larger)
        Formula::And(l, r) => degree(l, i).min(degree(r, i)),
        Formula::Or(l, r) => degree(l, i).max(degree(r, i)),
        Formula::OrdDisj(l, r) => match (degree(l, i), degree(r, i)) {
            (d @ QclDegree::Finite(_), _) => d,
            (QclDegree::Infinity, QclDegree::Finite(k)) => QclDegree::Finite(optionality(l) + k),
            (QclDegree::Infinity, QclDegree::Infinity) => QclDegree::Infinity,
        },
    }
}

/// Best degree and the interpretations attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preferred<D> {
    pub degree: D,
    pub models: Vec<Interpretation>,
}

/// Preferred models over `vars(f)`, in enumeration order. An unsatisfiable
/// formula yields degree ∞ and no models.
pub fn preferred_models(f: &Formula, cap: usize) -> Result<Preferred<QclDegree>, Error> {
    let all = interpretations_over(&f.vars(), cap)?;
    Ok(preferred_among(f, all))
}

fn preferred_among(f: &Formula, candidates: Vec<Interpretation>) -> Preferred<QclDegree> {
    let scored: Vec<(QclDegree, Interpretation)> =
        candidates.into_iter().map(|i| (degree(f, &i), i)).collect();
    let best = scored
        .iter()
        .map(|(d, _)| *d)
        .max()
        .unwrap_or(QclDegree::Infinity);
    if !best.is_finite() {
        return Preferred {
            degree: QclDegree::Infinity,
            models: Vec::new(),
        };
    }
    Preferred {
        degree: best,
        models: scored
            .into_iter()
            .filter(|(d, _)| *d == best)
            .map(|(_, i)| i)
            .collect(),
    }
}

/// Rewrites negations down to the atoms: De Morgan for `&`/`|`,
/// `!(F >< G)` to `!F >< !G`, and double-negation elimination.
pub fn pqcl_push_negation(f: &Formula) -> Formula {
    push(f, false)
}

fn push(f: &Formula, negated: bool) -> Formula {
    match f {
        Formula::Var(_) if negated => Formula::not(f.clone()),
        Formula::Var(_) => f.clone(),
        Formula::Not(g) => push(g, !negated),
        Formula::And(l, r) if negated => Formula::or(push(l, true), push(r, true)),
        Formula::Or(l, r) if negated => Formula::and(push(l, true), push(r, true)),
        Formula::And(l, r) => Formula::and(push(l, false), push(r, false)),
        Formula::Or(l, r) => Formula::or(push(l, false), push(r, false)),
        Formula::OrdDisj(l, r) => Formula::ord(push(l, negated), push(r, negated)),
    }
}

pub fn pqcl_degree(f: &Formula, i: &Interpretation) -> QclDegree {
    degree(&pqcl_push_negation(f), i)
}

/// Preferred-model entailment for a single premise: `conclusion` holds in
/// every preferred model of `premise`, enumerating interpretations over the
/// variables of both.
pub fn entails(premise: &Formula, conclusion: &Formula, cap: usize) -> Result<bool, Error> {
    if !conclusion.is_classical() {
        return Err(Error::NonClassicalConclusion(conclusion.to_string()));
    }
    let mut vars = premise.vars();
    vars.extend(conclusion.vars());
    let preferred = preferred_among(premise, interpretations_over(&vars, cap)?);
    Ok(preferred
        .models
        .iter()
        .all(|m| degree(conclusion, m).is_finite()))
}

/// Entailment from a set of premises. Degrees of formula sets are not
/// defined, so anything but exactly one premise is rejected.
pub fn entails_theory(
    premises: &[Formula],
    conclusion: &Formula,
    cap: usize,
) -> Result<bool, Error> {
    match premises {
        [premise] => entails(premise, conclusion, cap),
        _ => Err(Error::MultiplePremises(premises.len())),
    }
}
