//! The symmetric evaluation game **NG**.
//!
//! Same moves as **G**, but negation only switches roles: the subgame keeps
//! its preferences, and a role-O tree carries the inverse of the role-P
//! order. Payoffs are signed, `+|π_≪(O)|` on true leaves and `−|π_≫(O)|` on
//! false ones, ordered by ⊴.

use crate::game::{solve, GameTree, Payoff, Role};
use crate::game_qcl::{build_tree, Negation};
use crate::gcl::GclDegree;
use crate::syntax::{Formula, Interpretation};

pub fn build_ng_tree(role: Role, f: &Formula) -> GameTree {
    build_tree(role, f, Negation::Preserving)
}

/// `δ_I` over the leaves of an NG tree.
pub fn payoff_ng(tree: &GameTree, i: &Interpretation) -> Payoff<GclDegree> {
    let up = tree.chain_lengths();
    let down = tree.inverse_chain_lengths();
    Payoff::from_leaves(tree, |id, state| {
        if state.is_true(i) {
            GclDegree::new(up[id] as i32)
        } else {
            GclDegree::new(-(down[id] as i32))
        }
    })
}

/// Value of `NG(Q:F, I)`.
pub fn game_value_ng_as(role: Role, f: &Formula, i: &Interpretation) -> GclDegree {
    let tree = build_ng_tree(role, f);
    solve(&tree, &payoff_ng(&tree, i)).value
}

/// Value of `NG(P:F, I)`; equals `gcl::degree_g(f, i)`.
pub fn game_value_ng(f: &Formula, i: &Interpretation) -> GclDegree {
    game_value_ng_as(Role::P, f, i)
}
