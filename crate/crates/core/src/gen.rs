//! Seeded random formulas over the variables `a`, `b`, `c`, `d`.
//!
//! ChaCha8 keeps corpora identical across platforms and `rand` releases, so
//! a seed printed in a report reproduces the counterexample.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::Formula;

pub const VARIABLES: [&str; 4] = ["a", "b", "c", "d"];

pub struct FormulaGen {
    rng: ChaCha8Rng,
}

impl FormulaGen {
    pub fn new(seed: u64) -> Self {
        FormulaGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn var(&mut self) -> Formula {
        Formula::var(*VARIABLES.choose(&mut self.rng).unwrap())
    }

    /// A formula with a uniformly drawn number of connectives in
    /// `0..=max_connectives`.
    pub fn formula(&mut self, max_connectives: usize) -> Formula {
        let n = self.rng.gen_range(0..=max_connectives);
        self.with_connectives(n)
    }

    /// A formula with exactly `n` connectives, each drawn uniformly from
    /// `! & | ><`.
    pub fn with_connectives(&mut self, n: usize) -> Formula {
        if n == 0 {
            return self.var();
        }
        let op = self.rng.gen_range(0..4);
        if op == 0 {
            return Formula::not(self.with_connectives(n - 1));
        }
        let left = self.rng.gen_range(0..n);
        let l = self.with_connectives(left);
        let r = self.with_connectives(n - 1 - left);
        match op {
            1 => Formula::and(l, r),
            2 => Formula::or(l, r),
            _ => Formula::ord(l, r),
        }
    }

    /// A formula of depth at most `max_depth`; every node is an atom or one
    /// of the four connectives with equal probability until the bound
    /// forces an atom.
    pub fn deep_formula(&mut self, max_depth: usize) -> Formula {
        if max_depth == 0 {
            return self.var();
        }
        match self.rng.gen_range(0..5) {
            0 => self.var(),
            1 => Formula::not(self.deep_formula(max_depth - 1)),
            op => {
                let l = self.deep_formula(max_depth - 1);
                let r = self.deep_formula(max_depth - 1);
                match op {
                    2 => Formula::and(l, r),
                    3 => Formula::or(l, r),
                    _ => Formula::ord(l, r),
                }
            }
        }
    }
}

/// `count` formulas with at most `max_connectives` connectives each.
pub fn corpus(seed: u64, count: usize, max_connectives: usize) -> Vec<Formula> {
    let mut gen = FormulaGen::new(seed);
    (0..count).map(|_| gen.formula(max_connectives)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        assert_eq!(corpus(7, 50, 8), corpus(7, 50, 8));
        assert_ne!(corpus(7, 50, 8), corpus(8, 50, 8));
    }

    #[test]
    fn bounds() {
        let mut gen = FormulaGen::new(1);
        for n in 0..12 {
            assert_eq!(gen.with_connectives(n).connectives(), n);
        }
        for f in corpus(3, 500, 8) {
            assert!(f.connectives() <= 8);
            assert!(f.vars().iter().all(|v| VARIABLES.contains(&v.as_str())));
        }
        for _ in 0..200 {
            assert!(gen.deep_formula(10).depth() <= 10);
        }
    }
}
