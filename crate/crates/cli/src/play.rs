//! Interactive play against the backward-induction engine.

use std::io::{self, BufRead, Write};

use choice_games::game::{solve, GameTree, NodeId, Payoff, Player};
use choice_games::Degree;

#[derive(Debug)]
pub enum PlayError {
    /// Input ended before the game did.
    Eof,
    Io(io::Error),
}

impl From<io::Error> for PlayError {
    fn from(e: io::Error) -> Self {
        PlayError::Io(e)
    }
}

/// Plays from the root to a leaf and returns that leaf. The `human` player
/// picks moves from `input`; the other player (or both, when `human` is
/// `None`) follows the optimal strategy. Forced moves are made for everyone.
pub fn play<D: Degree>(
    tree: &GameTree,
    payoff: &Payoff<D>,
    human: Option<Player>,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<NodeId, PlayError> {
    let solution = solve(tree, payoff);
    writeln!(out, "game value {}", solution.value)?;
    let mut at = tree.root();
    loop {
        let node = tree.node(at);
        let Some(owner) = node.owner() else {
            let d = payoff.get(at);
            let verdict = if d.is_winning() { "I win" } else { "You win" };
            writeln!(out, "end at {} with payoff {d}: {verdict}", node.caption)?;
            return Ok(at);
        };
        let children = node.children();
        writeln!(out, "at {} [{owner}]", node.caption)?;
        let next = if children.len() == 1 {
            writeln!(out, "  forced: {}", tree.node(children[0]).caption)?;
            children[0]
        } else if human == Some(owner) {
            for (k, &c) in children.iter().enumerate() {
                writeln!(out, "  {}) {}", k + 1, tree.node(c).caption)?;
            }
            children[read_choice(children.len(), input, out)? - 1]
        } else {
            let to = solution.best_move[at].expect("decision node has a move");
            writeln!(out, "  [{owner}] -> {}", tree.node(to).caption)?;
            to
        };
        at = next;
    }
}

fn read_choice(
    options: usize,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<usize, PlayError> {
    let mut line = String::new();
    loop {
        write!(out, "choice> ")?;
        out.flush()?;
        line.clear();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Err(PlayError::Eof);
        }
        match line.trim().parse::<usize>() {
            Ok(k) if (1..=options).contains(&k) => return Ok(k),
            _ => writeln!(out, "enter a number from 1 to {options}")?,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use choice_games::game::Role;
    use choice_games::game_qcl::{build_qcl_tree, payoff_qcl};
    use choice_games::{parse, Interpretation};

    fn run(
        formula: &str,
        interp: &str,
        human: Option<Player>,
        input: &str,
    ) -> (Result<NodeId, PlayError>, String, GameTree) {
        let tree = build_qcl_tree(Role::P, &parse(formula).unwrap());
        let payoff = payoff_qcl(&tree, &Interpretation::parse_list(interp).unwrap());
        let mut out = Vec::new();
        let r = play(&tree, &payoff, human, &mut input.as_bytes(), &mut out);
        (r, String::from_utf8(out).unwrap(), tree)
    }

    #[test]
    fn auto_play_reaches_optimal_leaf() {
        let (r, text, tree) = run("((a><b)><c) & !(a><d)", "b", None, "");
        assert_eq!(tree.node(r.unwrap()).caption, "P:b");
        assert!(text.starts_with("game value 2\n"));
        assert!(text.contains("payoff 2: I win"));
    }

    #[test]
    fn human_choices_and_reprompt() {
        let (r, text, tree) = run("a >< b", "a", Some(Player::Me), "x\n7\n2\n");
        assert_eq!(tree.node(r.unwrap()).caption, "P:b");
        assert_eq!(text.matches("enter a number from 1 to 2").count(), 2);
        assert!(text.contains("payoff inf: You win"));
    }

    #[test]
    fn eof_aborts() {
        let (r, _, _) = run("a | b", "", Some(Player::Me), "");
        assert!(matches!(r, Err(PlayError::Eof)));
    }

    #[test]
    fn engine_plays_the_other_side() {
        // You control the conjunction; the engine answers at the disjunction.
        let (r, text, tree) = run("(a | b) & c", "b,c", Some(Player::You), "1\n");
        assert_eq!(tree.node(r.unwrap()).caption, "P:b");
        assert!(text.contains("[I] -> P:b"));
    }
}
