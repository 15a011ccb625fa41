//! Batch verification of the game/degree correspondences and degree laws over a seeded
//! random corpus.
//!
//! Every property is run on every formula (and, where it depends on one,
//! every interpretation over the formula's variables). The first
//! counterexample of each property is kept for the report.

use std::fmt;

use crate::game::{maxmin_minmax_by, solve_by, Role, DEFAULT_ORACLE_CAP};
use crate::game_ng::{build_ng_tree, payoff_ng};
use crate::game_qcl::{build_qcl_tree, payoff_qcl};
use crate::gcl::{degree_g, optionality_g, GclDegree};
use crate::gen::{corpus, FormulaGen};
use crate::qcl::{degree, optionality, pqcl_degree, QclDegree};
use crate::syntax::{all_interpretations, parse, Formula, Interpretation};
use crate::Comparator;

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub seed: u64,
    pub count: usize,
    pub max_connectives: usize,
    pub oracle_cap: usize,
    /// Order used when solving NG; `Ord::cmp` except in mutation tests.
    pub gcl_order: Comparator<GclDegree>,
}

impl CheckConfig {
    pub fn new(seed: u64, count: usize) -> Self {
        CheckConfig {
            seed,
            count,
            max_connectives: 8,
            oracle_cap: DEFAULT_ORACLE_CAP,
            gcl_order: GclDegree::cmp,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub formula: Formula,
    pub interpretation: Option<Interpretation>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub failure: Option<Counterexample>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub seed: u64,
    pub formulas: usize,
    pub properties: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| p.failure.is_some())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for p in &self.properties {
            match &p.failure {
                None => writeln!(f, "PASS {} ({} checks)", p.name, p.checked)?,
                Some(c) => {
                    write!(f, "FAIL {}: formula `{}`", p.name, c.formula)?;
                    if let Some(i) = &c.interpretation {
                        write!(f, " over {i}")?;
                    }
                    writeln!(f, ": {}", c.detail)?;
                }
            }
        }
        let failed = self.failures().count();
        if failed == 0 {
            writeln!(f, "all properties passed ({} formulas)", self.formulas)
        } else {
            writeln!(f, "{failed} properties failed ({} formulas)", self.formulas)
        }
    }
}

struct Tally {
    results: Vec<PropertyResult>,
}

impl Tally {
    fn new(names: &[&'static str]) -> Self {
        Tally {
            results: names
                .iter()
                .map(|&name| PropertyResult {
                    name,
                    checked: 0,
                    failure: None,
                })
                .collect(),
        }
    }

    fn record(
        &mut self,
        name: &'static str,
        formula: &Formula,
        interpretation: Option<&Interpretation>,
        outcome: Result<(), String>,
    ) {
        let slot = self
            .results
            .iter_mut()
            .find(|r| r.name == name)
            .expect("registered property");
        slot.checked += 1;
        if let (Err(detail), None) = (outcome, &slot.failure) {
            slot.failure = Some(Counterexample {
                formula: formula.clone(),
                interpretation: interpretation.cloned(),
                detail,
            });
        }
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

pub const PROPERTIES: [&str; 15] = [
    "g-value-is-degree",
    "ng-value-is-gcl-degree",
    "degree-within-optionality",
    "ord-assoc-qcl",
    "g-chain-is-optionality",
    "ng-chain-is-optionality",
    "ord-assoc-gcl",
    "gcl-negation",
    "g-opponent-value",
    "ng-role-symmetry",
    "oracle-g",
    "oracle-ng",
    "double-negation",
    "parser-roundtrip",
    "signed-degree-bound",
];

pub fn run(config: &CheckConfig) -> Report {
    let formulas = corpus(config.seed, config.count, config.max_connectives);
    let mut tally = Tally::new(&PROPERTIES);
    let gcl_order = config.gcl_order;

    for (idx, f) in formulas.iter().enumerate() {
        let printed = f.to_string();
        tally.record(
            "parser-roundtrip",
            f,
            None,
            match parse(&printed) {
                Ok(back) if back == *f => Ok(()),
                Ok(back) => Err(format!("reparsed as `{back:?}`")),
                Err(e) => Err(format!("`{printed}` does not parse: {e}")),
            },
        );

        let g_tree = build_qcl_tree(Role::P, f);
        let g_opp = build_qcl_tree(Role::O, f);
        let ng_tree = build_ng_tree(Role::P, f);
        let ng_opp = build_ng_tree(Role::O, f);

        tally.record(
            "g-chain-is-optionality",
            f,
            None,
            expect_eq("longest chain", g_tree.max_chain(), optionality(f) as usize),
        );
        for (role, t) in [("P", &ng_tree), ("O", &ng_opp)] {
            tally.record(
                "ng-chain-is-optionality",
                f,
                None,
                expect_eq(
                    &format!("longest chain ({role})"),
                    t.max_chain(),
                    optionality_g(f) as usize,
                ),
            );
        }

        // associativity triples: this formula with its two successors
        let b = &formulas[(idx + 1) % formulas.len()];
        let c = &formulas[(idx + 2) % formulas.len()];
        let left = Formula::ord(Formula::ord(f.clone(), b.clone()), c.clone());
        let right = Formula::ord(f.clone(), Formula::ord(b.clone(), c.clone()));
        tally.record(
            "ord-assoc-qcl",
            &left,
            None,
            expect_eq("optionality", optionality(&left), optionality(&right)),
        );
        tally.record(
            "ord-assoc-gcl",
            &left,
            None,
            expect_eq("optionality", optionality_g(&left), optionality_g(&right)),
        );
        if let Ok(interps) = all_interpretations(&left, 20) {
            for i in &interps {
                tally.record(
                    "ord-assoc-qcl",
                    &left,
                    Some(i),
                    expect_eq("degree", degree(&left, i), degree(&right, i)),
                );
                tally.record(
                    "ord-assoc-gcl",
                    &left,
                    Some(i),
                    expect_eq("degree", degree_g(&left, i), degree_g(&right, i)),
                );
            }
        }

        let not_f = Formula::not(f.clone());
        let not_not_f = Formula::not(not_f.clone());

        for i in &all_interpretations(f, 20).expect("generated formulas use four variables") {
            let deg = degree(f, i);
            let deg_g = degree_g(f, i);

            let g_payoff = payoff_qcl(&g_tree, i);
            let g_solved = solve_by(&g_tree, &g_payoff, QclDegree::cmp);
            tally.record(
                "g-value-is-degree",
                f,
                Some(i),
                expect_eq("game value", g_solved.value, deg),
            );

            let ng_payoff = payoff_ng(&ng_tree, i);
            let ng_solved = solve_by(&ng_tree, &ng_payoff, gcl_order);
            tally.record(
                "ng-value-is-gcl-degree",
                f,
                Some(i),
                expect_eq("game value", ng_solved.value, deg_g),
            );

            tally.record(
                "degree-within-optionality",
                f,
                Some(i),
                match deg {
                    QclDegree::Finite(k) if k > optionality(f) => {
                        Err(format!("degree {k} exceeds optionality {}", optionality(f)))
                    }
                    _ => Ok(()),
                },
            );

            let neg = degree_g(&not_f, i);
            let negation = if deg_g.is_positive() == neg.is_positive() {
                Err(format!(
                    "degree {deg_g} and negation {neg} have the same sign"
                ))
            } else if degree_g(&not_not_f, i) != deg_g {
                Err(format!("double negation gives {}", degree_g(&not_not_f, i)))
            } else {
                expect_eq("negated degree", neg, -deg_g)
            };
            tally.record("gcl-negation", f, Some(i), negation);

            tally.record(
                "signed-degree-bound",
                f,
                Some(i),
                if deg_g.magnitude() <= optionality_g(f) {
                    Ok(())
                } else {
                    Err(format!("|{deg_g}| exceeds {}", optionality_g(f)))
                },
            );

            let opp_value = solve_by(&g_opp, &payoff_qcl(&g_opp, i), QclDegree::cmp).value;
            let want = if deg.is_finite() {
                QclDegree::Infinity
            } else {
                QclDegree::ONE
            };
            tally.record(
                "g-opponent-value",
                f,
                Some(i),
                expect_eq("value of G(O:F)", opp_value, want),
            );

            let opp_value = solve_by(&ng_opp, &payoff_ng(&ng_opp, i), gcl_order).value;
            tally.record(
                "ng-role-symmetry",
                f,
                Some(i),
                expect_eq("value of NG(O:F)", opp_value, -deg_g),
            );

            if let Ok(v) = maxmin_minmax_by(&g_tree, &g_payoff, QclDegree::cmp, config.oracle_cap) {
                let outcome = expect_eq("maxmin", v.maxmin, g_solved.value).and(expect_eq(
                    "minmax",
                    v.minmax,
                    g_solved.value,
                ));
                tally.record("oracle-g", f, Some(i), outcome);
            }
            if let Ok(v) = maxmin_minmax_by(&ng_tree, &ng_payoff, gcl_order, config.oracle_cap) {
                let outcome = expect_eq("maxmin", v.maxmin, ng_solved.value).and(expect_eq(
                    "minmax",
                    v.minmax,
                    ng_solved.value,
                ));
                tally.record("oracle-ng", f, Some(i), outcome);
            }

            let dd = degree(&not_not_f, i);
            let qcl_ok = (dd == QclDegree::ONE || dd == QclDegree::Infinity)
                && (dd == QclDegree::ONE) == deg.is_finite();
            let outcome = if !qcl_ok {
                Err(format!("QCL: deg(!!F) = {dd} but deg(F) = {deg}"))
            } else if degree_g(&not_not_f, i) != deg_g {
                Err(format!("GCL: deg(!!F) = {}", degree_g(&not_not_f, i)))
            } else {
                expect_eq(
                    "PQCL deg(!!F)",
                    pqcl_degree(&not_not_f, i),
                    pqcl_degree(f, i),
                )
            };
            tally.record("double-negation", f, Some(i), outcome);
        }
    }

    Report {
        seed: config.seed,
        formulas: formulas.len(),
        properties: tally.results,
    }
}

/// Round-trips `count` formulas of depth at most `max_depth` through the
/// printer and parser; returns the first formula that fails.
pub fn deep_roundtrip(seed: u64, count: usize, max_depth: usize) -> Result<usize, Formula> {
    let mut gen = FormulaGen::new(seed);
    for _ in 0..count {
        let f = gen.deep_formula(max_depth);
        if parse(&f.to_string()).as_ref() != Ok(&f) {
            return Err(f);
        }
    }
    Ok(count)
}
