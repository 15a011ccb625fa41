//! The evaluation game **G** for QCL.
//!
//! At `P:F ∧ G` You choose, at `P:F ∨ G` and `P:F × G` I choose, and at
//! `P:¬G` play continues at `O:G` with the roles switched. Trees for role O
//! swap every label. Ordered disjunction makes every leaf of the left
//! subtree preferred over every leaf of the right one, but only under role
//! P: negation erases preferences for the rest of the game.

use crate::game::{solve, AtomicState, GameTree, Payoff, Player, Role};
use crate::qcl::QclDegree;
use crate::syntax::{Formula, Interpretation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Negation {
    /// Role switch with all preferences erased (game G).
    Erasing,
    /// Role switch keeping the subgame's preferences (game NG); role O
    /// trees carry the inverse order.
    Preserving,
}

pub(crate) fn build_tree(role: Role, f: &Formula, negation: Negation) -> GameTree {
    // owner of a node whose role-P owner is `p_owner`
    let owner = |p_owner: Player| match role {
        Role::P => p_owner,
        Role::O => p_owner.other(),
    };
    let caption = format!("{role}:{f}");
    match f {
        Formula::Var(v) => GameTree::leaf(AtomicState::new(role, v.clone())),
        Formula::Not(g) => {
            let child = build_tree(role.switch(), g, negation);
            let child = match negation {
                Negation::Erasing => child.without_preferences(),
                Negation::Preserving => child,
            };
            GameTree::choice(owner(Player::Me), caption, vec![child])
        }
        Formula::And(l, r) => GameTree::choice(
            owner(Player::You),
            caption,
            vec![build_tree(role, l, negation), build_tree(role, r, negation)],
        ),
        Formula::Or(l, r) => GameTree::choice(
            owner(Player::Me),
            caption,
            vec![build_tree(role, l, negation), build_tree(role, r, negation)],
        ),
        Formula::OrdDisj(l, r) => {
            let tree = GameTree::choice(
                owner(Player::Me),
                caption,
                vec![build_tree(role, l, negation), build_tree(role, r, negation)],
            );
            let kids = tree.node(tree.root()).children().to_vec();
            let (left, right) = (tree.leaves_under(kids[0]), tree.leaves_under(kids[1]));
            let pairs: Vec<_> = match (role, negation) {
                (Role::P, _) => right
                    .iter()
                    .flat_map(|&r| left.iter().map(move |&l| (r, l)))
                    .collect(),
                (Role::O, Negation::Preserving) => left
                    .iter()
                    .flat_map(|&l| right.iter().map(move |&r| (l, r)))
                    .collect(),
                (Role::O, Negation::Erasing) => Vec::new(),
            };
            tree.with_preferences(pairs)
                .expect("left/right leaves are disjoint, so the order stays strict")
        }
    }
}

/// The tree `T(Q:F)` of game G with its preference order.
pub fn build_qcl_tree(role: Role, f: &Formula) -> GameTree {
    build_tree(role, f, Negation::Erasing)
}

/// `d_I`: the longest `≪`-chain from a true leaf, ∞ for a false one.
pub fn payoff_qcl(tree: &GameTree, i: &Interpretation) -> Payoff<QclDegree> {
    let chains = tree.chain_lengths();
    Payoff::from_leaves(tree, |id, state| {
        if state.is_true(i) {
            QclDegree::finite(chains[id] as u32)
        } else {
            QclDegree::Infinity
        }
    })
}

/// Value of `G(Q:F, I)`.
pub fn game_value_qcl_as(role: Role, f: &Formula, i: &Interpretation) -> QclDegree {
    let tree = build_qcl_tree(role, f);
    solve(&tree, &payoff_qcl(&tree, i)).value
}

/// Value of `G(P:F, I)`; equals `qcl::degree(f, i)`.
pub fn game_value_qcl(f: &Formula, i: &Interpretation) -> QclDegree {
    game_value_qcl_as(Role::P, f, i)
}
