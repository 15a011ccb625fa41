//! Game-induced Choice Logic: degrees in ℤ∖{0} ordered by ⊴.
//!
//! Positive degrees are models; within them 1 is best. Negative degrees are
//! degrees of dissatisfaction; −1 is the worst value overall and larger
//! magnitudes are less bad. Equivalently `a ⊴ b` iff `1/a ≤ 1/b`.

use std::cmp::Ordering;
use std::fmt;

use crate::qcl::Preferred;
use crate::syntax::{interpretations_over, Formula, Interpretation};
use crate::{Degree, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GclDegree(i32);

impl GclDegree {
    pub const ONE: GclDegree = GclDegree(1);
    pub const MINUS_ONE: GclDegree = GclDegree(-1);

    /// Panics on zero.
    pub fn new(value: i32) -> Self {
        assert!(value != 0, "GCL degrees are nonzero");
        GclDegree(value)
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn magnitude(self) -> u32 {
        self.0.unsigned_abs()
    }
}

impl std::ops::Neg for GclDegree {
    type Output = GclDegree;

    fn neg(self) -> GclDegree {
        GclDegree(-self.0)
    }
}

impl Ord for GclDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_positive(), other.is_positive()) {
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            _ => other.0.cmp(&self.0),
        }
    }
}

impl PartialOrd for GclDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GclDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Degree for GclDegree {
    fn is_winning(&self) -> bool {
        self.is_positive()
    }
}

/// `a ⊴ b`
pub fn leq_g(a: GclDegree, b: GclDegree) -> bool {
    a <= b
}

/// Like QCL optionality, except negation keeps the optionality of its
/// operand.
pub fn optionality_g(f: &Formula) -> u32 {
    match f {
        Formula::Var(_) => 1,
        Formula::Not(g) => optionality_g(g),
        Formula::And(l, r) | Formula::Or(l, r) => optionality_g(l).max(optionality_g(r)),
        Formula::OrdDisj(l, r) => optionality_g(l) + optionality_g(r),
    }
}

pub fn degree_g(f: &Formula, i: &Interpretation) -> GclDegree {
    match f {
        Formula::Var(v) => {
            if i.contains(v) {
                GclDegree::ONE
            } else {
                GclDegree::MINUS_ONE
            }
        }
        Formula::Not(g) => -degree_g(g, i),
        Formula::And(l, r) => degree_g(l, i).min(degree_g(r, i)),
        Formula::Or(l, r) => degree_g(l, i).max(degree_g(r, i)),
        Formula::OrdDisj(l, r) => {
            let left = degree_g(l, i);
            if left.is_positive() {
                return left;
            }
            let right = degree_g(r, i);
            if right.is_positive() {
                GclDegree(optionality_g(l) as i32 + right.0)
            } else {
                GclDegree(left.0 - optionality_g(r) as i32)
            }
        }
    }
}

/// The ⊴-greatest positive degree and its interpretations over `vars(f)`;
/// `None` when no interpretation is a model.
pub fn preferred_models_g(f: &Formula, cap: usize) -> Result<Option<Preferred<GclDegree>>, Error> {
    let scored: Vec<(GclDegree, Interpretation)> = interpretations_over(&f.vars(), cap)?
        .into_iter()
        .map(|i| (degree_g(f, &i), i))
        .collect();
    let Some(best) = scored
        .iter()
        .map(|(d, _)| *d)
        .filter(|d| d.is_positive())
        .max()
    else {
        return Ok(None);
    };
    Ok(Some(Preferred {
        degree: best,
        models: scored
            .into_iter()
            .filter(|(d, _)| *d == best)
            .map(|(_, i)| i)
            .collect(),
    }))
}
