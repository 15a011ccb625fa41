//! `qclg`: evaluate QCL formulas, tabulate degrees, list preferred models,
//! inspect and play the evaluation games, and run the property suite.

mod play;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use choice_games::check::{self, CheckConfig};
use choice_games::dot::to_dot;
use choice_games::game::{solve, GameTree, Payoff, Player, Role, Solution};
use choice_games::game_ng::{build_ng_tree, payoff_ng};
use choice_games::game_qcl::{build_qcl_tree, payoff_qcl};
use choice_games::syntax::all_interpretations;
use choice_games::{gcl, qcl, Degree, Error, Formula, Interpretation};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_NOT_ENTAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_ABORT: u8 = 130;

#[derive(Parser)]
#[command(
    name = "qclg",
    version,
    about = "Qualitative Choice Logic and its evaluation games"
)]
struct Cli {
    /// Maximum number of variables for brute-force enumeration.
    #[arg(long, global = true, default_value_t = choice_games::DEFAULT_CAP)]
    cap: usize,
    /// Seed for random formula generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Semantics {
    Qcl,
    Pqcl,
    Gcl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PreferredSemantics {
    Qcl,
    Gcl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// The QCL game with preference-erasing negation.
    G,
    /// The symmetric game with role-switching negation.
    Ng,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Me,
    You,
}

#[derive(Subcommand)]
enum Command {
    /// Print the degree of a formula under an interpretation.
    Eval {
        formula: String,
        /// Comma-separated true variables, e.g. `a,b`.
        #[arg(long, default_value = "")]
        interp: String,
        #[arg(long = "sem", value_enum, default_value = "qcl")]
        semantics: Semantics,
    },
    /// Degrees for every interpretation over the formula's variables.
    Table {
        formula: String,
        #[arg(long = "sem", value_enum, value_delimiter = ',', default_value = "qcl")]
        semantics: Vec<Semantics>,
    },
    /// Best degree and the interpretations attaining it.
    Preferred {
        formula: String,
        #[arg(long = "sem", value_enum, default_value = "qcl")]
        semantics: PreferredSemantics,
    },
    /// Build and solve an evaluation game.
    Game {
        formula: String,
        #[arg(long, default_value = "")]
        interp: String,
        #[arg(long, value_enum, default_value = "g")]
        variant: Variant,
        /// Print the game value (the default when no output is selected).
        #[arg(long)]
        value: bool,
        /// Print the annotated tree in Graphviz format.
        #[arg(long)]
        dot: bool,
        /// Print the optimal move at each node of the solving strategies.
        #[arg(long)]
        strategy: bool,
        /// Write DOT output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property checks on random formulas.
    Check {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_connectives: usize,
    },
    /// Preferred-model entailment of a classical conclusion.
    Entail {
        premise: String,
        conclusion: String,
        /// Further premises; sets of premises are not supported and rejected.
        #[arg(long)]
        also: Vec<String>,
    },
    /// Play a game against the optimal engine.
    Play {
        formula: String,
        #[arg(long, default_value = "")]
        interp: String,
        #[arg(long, value_enum, default_value = "g")]
        variant: Variant,
        /// Which player you control.
        #[arg(long, value_enum, default_value = "me")]
        side: Side,
        /// Let the engine play both sides.
        #[arg(long)]
        auto: bool,
    },
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Aborted,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse_formula(text: &str) -> Result<Formula, Error> {
    Ok(choice_games::parse(text)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Lib(e)) => {
            let _ = out.flush();
            let code = match e {
                Error::CapExceeded { .. } | Error::StrategyCapExceeded { .. } => EXIT_CAP,
                _ => EXIT_USAGE,
            };
            match e {
                Error::Parse(p) => eprintln!("error: parse error at {p}"),
                e => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Aborted) => {
            let _ = out.flush();
            eprintln!("aborted");
            ExitCode::from(EXIT_ABORT)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, Failure> {
    match &cli.command {
        Command::Eval {
            formula,
            interp,
            semantics,
        } => {
            let f = parse_formula(formula)?;
            let i = Interpretation::parse_list(interp)?;
            match semantics {
                Semantics::Qcl => writeln!(out, "{}", qcl::degree(&f, &i))?,
                Semantics::Pqcl => writeln!(out, "{}", qcl::pqcl_degree(&f, &i))?,
                Semantics::Gcl => writeln!(out, "{}", gcl::degree_g(&f, &i))?,
            }
        }
        Command::Table { formula, semantics } => {
            let f = parse_formula(formula)?;
            let rows = all_interpretations(&f, cli.cap)?;
            let names: Vec<&str> = semantics
                .iter()
                .map(|s| match s {
                    Semantics::Qcl => "qcl",
                    Semantics::Pqcl => "pqcl",
                    Semantics::Gcl => "gcl",
                })
                .collect();
            writeln!(out, "I\t{}", names.join("\t"))?;
            for i in &rows {
                let cells: Vec<String> = semantics
                    .iter()
                    .map(|s| match s {
                        Semantics::Qcl => qcl::degree(&f, i).to_string(),
                        Semantics::Pqcl => qcl::pqcl_degree(&f, i).to_string(),
                        Semantics::Gcl => gcl::degree_g(&f, i).to_string(),
                    })
                    .collect();
                writeln!(out, "{i}\t{}", cells.join("\t"))?;
            }
        }
        Command::Preferred { formula, semantics } => {
            let f = parse_formula(formula)?;
            let best = match semantics {
                PreferredSemantics::Qcl => {
                    let pm = qcl::preferred_models(&f, cli.cap)?;
                    pm.degree
                        .is_finite()
                        .then(|| (pm.degree.to_string(), pm.models))
                }
                PreferredSemantics::Gcl => gcl::preferred_models_g(&f, cli.cap)?
                    .map(|pm| (pm.degree.to_string(), pm.models)),
            };
            match best {
                None => writeln!(out, "unsatisfiable")?,
                Some((degree, models)) => {
                    writeln!(out, "degree {degree}")?;
                    for m in models {
                        writeln!(out, "{m}")?;
                    }
                }
            }
        }
        Command::Game {
            formula,
            interp,
            variant,
            value,
            dot,
            strategy,
            out: path,
        } => {
            let f = parse_formula(formula)?;
            let i = Interpretation::parse_list(interp)?;
            let show_value = *value || !(*dot || *strategy);
            match variant {
                Variant::G => {
                    let tree = build_qcl_tree(Role::P, &f);
                    let payoff = payoff_qcl(&tree, &i);
                    report_game(
                        out,
                        &tree,
                        &payoff,
                        show_value,
                        *strategy,
                        *dot,
                        path.as_ref(),
                    )?;
                }
                Variant::Ng => {
                    let tree = build_ng_tree(Role::P, &f);
                    let payoff = payoff_ng(&tree, &i);
                    report_game(
                        out,
                        &tree,
                        &payoff,
                        show_value,
                        *strategy,
                        *dot,
                        path.as_ref(),
                    )?;
                }
            }
        }
        Command::Check {
            count,
            max_connectives,
        } => {
            let mut config = CheckConfig::new(cli.seed, *count);
            config.max_connectives = *max_connectives;
            let report = check::run(&config);
            write!(out, "{report}")?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Entail {
            premise,
            conclusion,
            also,
        } => {
            let mut premises = vec![parse_formula(premise)?];
            for p in also {
                premises.push(parse_formula(p)?);
            }
            let conclusion = parse_formula(conclusion)?;
            if qcl::entails_theory(&premises, &conclusion, cli.cap)? {
                writeln!(out, "entailed")?;
            } else {
                writeln!(out, "not entailed")?;
                return Ok(EXIT_NOT_ENTAILED);
            }
        }
        Command::Play {
            formula,
            interp,
            variant,
            side,
            auto,
        } => {
            let f = parse_formula(formula)?;
            let i = Interpretation::parse_list(interp)?;
            let human = match (auto, side) {
                (true, _) => None,
                (false, Side::Me) => Some(Player::Me),
                (false, Side::You) => Some(Player::You),
            };
            let stdin = io::stdin();
            let mut input = stdin.lock();
            let result = match variant {
                Variant::G => {
                    let tree = build_qcl_tree(Role::P, &f);
                    let payoff = payoff_qcl(&tree, &i);
                    play::play(&tree, &payoff, human, &mut input, out)
                }
                Variant::Ng => {
                    let tree = build_ng_tree(Role::P, &f);
                    let payoff = payoff_ng(&tree, &i);
                    play::play(&tree, &payoff, human, &mut input, out)
                }
            };
            match result {
                Ok(_) => {}
                Err(play::PlayError::Eof) => return Err(Failure::Aborted),
                Err(play::PlayError::Io(e)) => return Err(Failure::Io(e)),
            }
        }
    }
    Ok(0)
}

fn report_game<D: Degree>(
    out: &mut impl Write,
    tree: &GameTree,
    payoff: &Payoff<D>,
    value: bool,
    strategy: bool,
    dot: bool,
    path: Option<&PathBuf>,
) -> Result<(), Failure> {
    let solution = solve(tree, payoff);
    if value {
        writeln!(out, "{}", solution.value)?;
    }
    if strategy {
        write_strategy(out, tree, &solution)?;
    }
    if dot {
        let text = to_dot(tree, Some(payoff));
        match path {
            Some(p) => fs::write(p, text)?,
            None => write!(out, "{text}")?,
        }
    }
    Ok(())
}

/// One line per decision node on either solving strategy, in preorder.
fn write_strategy<D: Degree>(
    out: &mut impl Write,
    tree: &GameTree,
    solution: &Solution<D>,
) -> io::Result<()> {
    for (id, node) in tree.nodes().iter().enumerate() {
        let Some(owner) = node.owner() else { continue };
        let strategy = match owner {
            Player::Me => &solution.my_strategy,
            Player::You => &solution.your_strategy,
        };
        if !strategy.chosen.contains(&id) {
            continue;
        }
        let to = solution.best_move[id].expect("internal node");
        writeln!(
            out,
            "n{id} [{owner}] {} => n{to} {} (value {})",
            node.caption,
            tree.node(to).caption,
            solution.values[id]
        )?;
    }
    Ok(())
}
