//! Finite two-player zero-sum game trees.
//!
//! Internal nodes are owned by Me (`I`) or You (`Y`); leaves are atomic game
//! states `P:a` / `O:a`. Nodes are numbered in preorder, root first, and a
//! subtree occupies a contiguous id range. The tree also carries a strict
//! preference order `≪` on leaves (from My point of view), kept transitively
//! closed.
//!
//! Payoffs are any [`Degree`]: greater is better for Me. [`solve`] runs
//! backward induction; [`maxmin_oracle`] enumerates every pair of
//! deterministic strategies and evaluates `max min` and `min max` literally.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::syntax::Interpretation;
use crate::{Comparator, Degree, Error};

pub type NodeId = usize;

/// Oracle refuses to enumerate more strategies than this per player.
pub const DEFAULT_ORACLE_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Me,
    You,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Me => Player::You,
            Player::You => Player::Me,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Me => "I",
            Player::You => "Y",
        })
    }
}

/// Proponent or Opponent: the role Me plays at a game state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    P,
    O,
}

impl Role {
    pub fn switch(self) -> Role {
        match self {
            Role::P => Role::O,
            Role::O => Role::P,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::P => "P",
            Role::O => "O",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtomicState {
    pub role: Role,
    pub var: String,
}

impl AtomicState {
    pub fn new(role: Role, var: impl Into<String>) -> Self {
        AtomicState {
            role,
            var: var.into(),
        }
    }

    /// `P:a` is true iff `a ∈ I`; `O:a` iff `a ∉ I`.
    pub fn is_true(&self, i: &Interpretation) -> bool {
        i.contains(&self.var) == (self.role == Role::P)
    }
}

impl fmt::Display for AtomicState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.role, self.var)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    Choice {
        owner: Player,
        children: Vec<NodeId>,
    },
    Leaf(AtomicState),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub kind: NodeKind,
    /// Game state text, e.g. `P:a >< b`.
    pub caption: String,
}

impl Node {
    pub fn children(&self) -> &[NodeId] {
        match &self.kind {
            NodeKind::Choice { children, .. } => children,
            NodeKind::Leaf(_) => &[],
        }
    }

    pub fn owner(&self) -> Option<Player> {
        match &self.kind {
            NodeKind::Choice { owner, .. } => Some(*owner),
            NodeKind::Leaf(_) => None,
        }
    }

    pub fn leaf(&self) -> Option<&AtomicState> {
        match &self.kind {
            NodeKind::Leaf(s) => Some(s),
            NodeKind::Choice { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameTree {
    nodes: Vec<Node>,
    parent: Vec<Option<NodeId>>,
    /// One past the last node of each subtree.
    end: Vec<NodeId>,
    /// `(x, y)` means `x ≪ y`; transitively closed.
    prefs: BTreeSet<(NodeId, NodeId)>,
}

impl GameTree {
    pub fn leaf(state: AtomicState) -> Self {
        GameTree {
            nodes: vec![Node {
                caption: state.to_string(),
                kind: NodeKind::Leaf(state),
            }],
            parent: vec![None],
            end: vec![1],
            prefs: BTreeSet::new(),
        }
    }

    /// A node owned by `owner` over `children`, keeping their preferences.
    /// Panics if `children` is empty.
    pub fn choice(owner: Player, caption: impl Into<String>, children: Vec<GameTree>) -> Self {
        assert!(!children.is_empty(), "internal nodes need a child");
        let size = 1 + children.iter().map(GameTree::len).sum::<usize>();
        let mut nodes = Vec::with_capacity(size);
        let mut parent = Vec::with_capacity(size);
        let mut end = Vec::with_capacity(size);
        let mut prefs = BTreeSet::new();
        let mut child_roots = Vec::with_capacity(children.len());

        nodes.push(Node {
            kind: NodeKind::Leaf(AtomicState::new(Role::P, "placeholder")),
            caption: caption.into(),
        });
        parent.push(None);
        end.push(size);

        for child in children {
            let offset = nodes.len();
            child_roots.push(offset);
            for (id, mut node) in child.nodes.into_iter().enumerate() {
                if let NodeKind::Choice { children, .. } = &mut node.kind {
                    children.iter_mut().for_each(|c| *c += offset);
                }
                nodes.push(node);
                parent.push(Some(child.parent[id].map_or(0, |p| p + offset)));
                end.push(child.end[id] + offset);
            }
            prefs.extend(
                child
                    .prefs
                    .into_iter()
                    .map(|(x, y)| (x + offset, y + offset)),
            );
        }
        nodes[0].kind = NodeKind::Choice {
            owner,
            children: child_roots,
        };
        GameTree {
            nodes,
            parent,
            end,
            prefs,
        }
    }

    /// Adds `x ≪ y` for every given pair and closes the relation. Fails if
    /// a pair mentions an internal node or the result is not strict.
    pub fn with_preferences(
        mut self,
        pairs: impl IntoIterator<Item = (NodeId, NodeId)>,
    ) -> Result<Self, Error> {
        for (x, y) in pairs {
            for n in [x, y] {
                if n >= self.len() || self.nodes[n].leaf().is_none() {
                    return Err(Error::InvalidPreference(format!("node {n} is not a leaf")));
                }
            }
            self.prefs.insert((x, y));
        }
        self.close_preferences()?;
        Ok(self)
    }

    pub fn without_preferences(mut self) -> Self {
        self.prefs.clear();
        self
    }

    /// Replaces `≪` by its inverse `≫`.
    pub fn with_inverted_preferences(mut self) -> Self {
        self.prefs = self.prefs.iter().map(|&(x, y)| (y, x)).collect();
        self
    }

    fn close_preferences(&mut self) -> Result<(), Error> {
        let succ = self.successor_lists(false);
        let mut closed = BTreeSet::new();
        for start in self.leaves() {
            let mut stack: Vec<NodeId> = succ[start].clone();
            let mut seen = BTreeSet::new();
            while let Some(n) = stack.pop() {
                if seen.insert(n) {
                    stack.extend(succ[n].iter().copied());
                }
            }
            if seen.contains(&start) {
                return Err(Error::InvalidPreference(format!(
                    "leaf {start} is preferred to itself"
                )));
            }
            closed.extend(seen.into_iter().map(|n| (start, n)));
        }
        self.prefs = closed;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.parent[id]
    }

    pub fn leaves(&self) -> Vec<NodeId> {
        self.leaves_under(0)
    }

    /// Leaves of the subtree rooted at `id`, left to right.
    pub fn leaves_under(&self, id: NodeId) -> Vec<NodeId> {
        (id..self.end[id])
            .filter(|&n| self.nodes[n].leaf().is_some())
            .collect()
    }

    /// The closed relation as `(x, y)` pairs meaning `x ≪ y`.
    pub fn preferences(&self) -> &BTreeSet<(NodeId, NodeId)> {
        &self.prefs
    }

    pub fn prefers(&self, worse: NodeId, better: NodeId) -> bool {
        self.prefs.contains(&(worse, better))
    }

    /// Pairs `x ≪ y` with nothing strictly between them.
    pub fn covering_preferences(&self) -> Vec<(NodeId, NodeId)> {
        let leaves = self.leaves();
        self.prefs
            .iter()
            .copied()
            .filter(|&(x, y)| {
                !leaves
                    .iter()
                    .any(|&z| self.prefers(x, z) && self.prefers(z, y))
            })
            .collect()
    }

    fn successor_lists(&self, inverse: bool) -> Vec<Vec<NodeId>> {
        let mut succ = vec![Vec::new(); self.len()];
        for &(x, y) in &self.prefs {
            if inverse {
                succ[y].push(x);
            } else {
                succ[x].push(y);
            }
        }
        succ
    }

    fn chains(&self, inverse: bool) -> Vec<usize> {
        fn visit(n: NodeId, succ: &[Vec<NodeId>], memo: &mut [usize]) -> usize {
            if memo[n] == 0 {
                memo[n] = 1 + succ[n]
                    .iter()
                    .map(|&m| visit(m, succ, memo))
                    .max()
                    .unwrap_or(0);
            }
            memo[n]
        }
        let succ = self.successor_lists(inverse);
        let mut memo = vec![0; self.len()];
        for leaf in self.leaves() {
            visit(leaf, &succ, &mut memo);
        }
        memo
    }

    /// `|π_≪(O)|` for every leaf (0 for internal nodes): the number of leaves
    /// on the longest strictly `≪`-increasing sequence starting at it.
    pub fn chain_lengths(&self) -> Vec<usize> {
        self.chains(false)
    }

    /// Same along the inverse relation `≫`.
    pub fn inverse_chain_lengths(&self) -> Vec<usize> {
        self.chains(true)
    }

    pub fn longest_chain(&self, leaf: NodeId) -> usize {
        self.chain_lengths()[leaf]
    }

    /// Length of the longest `≪`-chain among all leaves.
    pub fn max_chain(&self) -> usize {
        self.chain_lengths().into_iter().max().unwrap_or(0)
    }
}

/// A value for every leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Payoff<D> {
    values: Vec<Option<D>>,
}

impl<D: Degree> Payoff<D> {
    pub fn from_leaves(tree: &GameTree, mut f: impl FnMut(NodeId, &AtomicState) -> D) -> Self {
        Payoff {
            values: tree
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| n.leaf().map(|s| f(id, s)))
                .collect(),
        }
    }

    pub fn from_map(tree: &GameTree, map: &BTreeMap<NodeId, D>) -> Result<Self, Error> {
        let mut values = vec![None; tree.len()];
        for leaf in tree.leaves() {
            let Some(v) = map.get(&leaf) else {
                return Err(Error::MissingPayoff(leaf));
            };
            values[leaf] = Some(*v);
        }
        Ok(Payoff { values })
    }

    /// Panics if `leaf` is not a leaf of the tree the payoff was built for.
    pub fn get(&self, leaf: NodeId) -> D {
        self.values[leaf].expect("payoff queried at an internal node")
    }
}

/// A deterministic strategy: a subtree containing the root, one child at
/// each of the owner's nodes and every child at the other player's.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strategy {
    pub owner: Player,
    pub chosen: BTreeSet<NodeId>,
}

impl Strategy {
    pub fn validate(&self, tree: &GameTree) -> Result<(), Error> {
        let bad = |msg: String| Err(Error::InvalidStrategy(msg));
        if !self.chosen.contains(&tree.root()) {
            return bad("root not included".into());
        }
        for &n in &self.chosen {
            if n >= tree.len() {
                return bad(format!("node {n} out of range"));
            }
            if let Some(p) = tree.parent(n) {
                if !self.chosen.contains(&p) {
                    return bad(format!("node {n} included without its parent"));
                }
            }
            let node = tree.node(n);
            let included = node
                .children()
                .iter()
                .filter(|c| self.chosen.contains(c))
                .count();
            match node.owner() {
                Some(o) if o == self.owner && included != 1 => {
                    return bad(format!("{included} children chosen at node {n}"));
                }
                Some(o) if o != self.owner && included != node.children().len() => {
                    return bad(format!("opponent move missing below node {n}"));
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// The chosen child at one of the owner's nodes.
    pub fn move_at(&self, tree: &GameTree, node: NodeId) -> Option<NodeId> {
        tree.node(node)
            .children()
            .iter()
            .copied()
            .find(|c| self.chosen.contains(c))
    }
}

/// The leaf reached when both strategies are followed from the root.
pub fn outcome(tree: &GameTree, mine: &Strategy, yours: &Strategy) -> Result<NodeId, Error> {
    if mine.owner != Player::Me || yours.owner != Player::You {
        return Err(Error::InvalidStrategy(
            "expected one strategy for Me and one for You".into(),
        ));
    }
    mine.validate(tree)?;
    yours.validate(tree)?;
    Ok(follow(tree, mine, yours))
}

fn follow(tree: &GameTree, mine: &Strategy, yours: &Strategy) -> NodeId {
    let mut at = tree.root();
    while let Some(owner) = tree.node(at).owner() {
        let s = if owner == Player::Me { mine } else { yours };
        at = s.move_at(tree, at).expect("validated strategy");
    }
    at
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<D> {
    pub value: D,
    /// Backward-induction value of every node.
    pub values: Vec<D>,
    /// Optimal move for the owner of each internal node.
    pub best_move: Vec<Option<NodeId>>,
    pub my_strategy: Strategy,
    pub your_strategy: Strategy,
}

pub fn solve<D: Degree>(tree: &GameTree, payoff: &Payoff<D>) -> Solution<D> {
    solve_by(tree, payoff, D::cmp)
}

/// Backward induction under `cmp` (greater is better for Me). Ties go to
/// the leftmost child.
pub fn solve_by<D: Degree>(tree: &GameTree, payoff: &Payoff<D>, cmp: Comparator<D>) -> Solution<D> {
    let n = tree.len();
    let mut values: Vec<Option<D>> = vec![None; n];
    let mut best_move = vec![None; n];
    // children have larger ids than their parent
    for id in (0..n).rev() {
        let node = tree.node(id);
        match node.owner() {
            None => values[id] = Some(payoff.get(id)),
            Some(owner) => {
                let mut best = node.children()[0];
                for &c in &node.children()[1..] {
                    let ord = cmp(&values[c].unwrap(), &values[best].unwrap());
                    let better = match owner {
                        Player::Me => ord == Ordering::Greater,
                        Player::You => ord == Ordering::Less,
                    };
                    if better {
                        best = c;
                    }
                }
                values[id] = values[best];
                best_move[id] = Some(best);
            }
        }
    }
    let values: Vec<D> = values.into_iter().map(Option::unwrap).collect();
    let strategy = |owner: Player| {
        let mut chosen = BTreeSet::new();
        let mut stack = vec![tree.root()];
        while let Some(id) = stack.pop() {
            chosen.insert(id);
            match tree.node(id).owner() {
                Some(o) if o == owner => stack.push(best_move[id].unwrap()),
                Some(_) => stack.extend(tree.node(id).children()),
                None => {}
            }
        }
        Strategy { owner, chosen }
    };
    Solution {
        value: values[tree.root()],
        my_strategy: strategy(Player::Me),
        your_strategy: strategy(Player::You),
        values,
        best_move,
    }
}

/// Number of strategies `owner` has: a choice of one child at own nodes, a
/// plan for every child at the other player's.
pub fn count_strategies(tree: &GameTree, owner: Player) -> usize {
    fn count(tree: &GameTree, id: NodeId, owner: Player) -> usize {
        let node = tree.node(id);
        let sub = node.children().iter().map(|&c| count(tree, c, owner));
        match node.owner() {
            None => 1,
            Some(o) if o == owner => sub.fold(0usize, usize::saturating_add),
            Some(_) => sub.fold(1usize, usize::saturating_mul),
        }
    }
    count(tree, tree.root(), owner)
}

/// Every deterministic strategy of `owner`, leftmost choices first.
pub fn enumerate_strategies(
    tree: &GameTree,
    owner: Player,
    cap: usize,
) -> Result<Vec<Strategy>, Error> {
    let count = count_strategies(tree, owner);
    if count > cap {
        return Err(Error::StrategyCapExceeded { count, cap });
    }
    fn plans(tree: &GameTree, id: NodeId, owner: Player) -> Vec<Vec<NodeId>> {
        let node = tree.node(id);
        let mut out = match node.owner() {
            None => vec![Vec::new()],
            Some(o) if o == owner => node
                .children()
                .iter()
                .flat_map(|&c| plans(tree, c, owner))
                .collect(),
            Some(_) => node.children().iter().fold(vec![Vec::new()], |acc, &c| {
                let sub = plans(tree, c, owner);
                acc.iter()
                    .flat_map(|prefix| {
                        sub.iter().map(move |s| {
                            let mut v = prefix.clone();
                            v.extend_from_slice(s);
                            v
                        })
                    })
                    .collect()
            }),
        };
        out.iter_mut().for_each(|p| p.push(id));
        out
    }
    Ok(plans(tree, tree.root(), owner)
        .into_iter()
        .map(|p| Strategy {
            owner,
            chosen: p.into_iter().collect(),
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleValues<D> {
    pub maxmin: D,
    pub minmax: D,
}

/// `max_σI min_σY d(σI, σY)` and `min_σY max_σI d(σI, σY)` by exhaustive
/// enumeration.
pub fn maxmin_minmax_by<D: Degree>(
    tree: &GameTree,
    payoff: &Payoff<D>,
    cmp: Comparator<D>,
    cap: usize,
) -> Result<OracleValues<D>, Error> {
    let mine = enumerate_strategies(tree, Player::Me, cap)?;
    let yours = enumerate_strategies(tree, Player::You, cap)?;
    let matrix: Vec<Vec<D>> = mine
        .iter()
        .map(|m| {
            yours
                .iter()
                .map(|y| payoff.get(follow(tree, m, y)))
                .collect()
        })
        .collect();
    let pick = |xs: &mut dyn Iterator<Item = D>, want: Ordering| {
        xs.reduce(|a, b| if cmp(&b, &a) == want { b } else { a })
            .expect("every player has a strategy")
    };
    let maxmin = pick(
        &mut matrix
            .iter()
            .map(|row| pick(&mut row.iter().copied(), Ordering::Less)),
        Ordering::Greater,
    );
    let minmax = pick(
        &mut (0..yours.len())
            .map(|j| pick(&mut matrix.iter().map(|row| row[j]), Ordering::Greater)),
        Ordering::Less,
    );
    Ok(OracleValues { maxmin, minmax })
}

/// The maxmin value by strategy enumeration, checked against minmax.
pub fn maxmin_oracle<D: Degree>(tree: &GameTree, payoff: &Payoff<D>) -> Result<D, Error> {
    let v = maxmin_minmax_by(tree, payoff, D::cmp, DEFAULT_ORACLE_CAP)?;
    if v.maxmin != v.minmax {
        return Err(Error::NotZeroSum {
            maxmin: v.maxmin.to_string(),
            minmax: v.minmax.to_string(),
        });
    }
    Ok(v.maxmin)
}
