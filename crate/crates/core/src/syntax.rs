//! Formula language: AST, lexer, recursive-descent parser, printer, and
//! interpretation enumeration.
//!
//! ```text
//! formula := ord
//! ord     := or ( "><" ord )?
//! or      := and ( "|" or )?
//! and     := not ( "&" and )?
//! not     := "!" not | atom
//! atom    := ident | "(" formula ")"
//! ```
//!
//! `¬ ∧ ∨ ×` are accepted as aliases of `! & | ><`. All binary connectives
//! associate to the right.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error as ThisError;

use crate::Error;

/// Default bound on the number of variables for brute-force enumeration.
pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// Ordered disjunction: the left operand is preferred.
    OrdDisj(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Builds a variable. Panics if `name` is not a valid identifier.
    pub fn var(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(is_identifier(&name), "invalid identifier {name:?}");
        Formula::Var(name)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn ord(l: Formula, r: Formula) -> Self {
        Formula::OrdDisj(Box::new(l), Box::new(r))
    }

    /// Variables occurring in the formula.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Not(f) => f.collect_vars(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::OrdDisj(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// True when the formula contains no ordered disjunction.
    pub fn is_classical(&self) -> bool {
        match self {
            Formula::Var(_) => true,
            Formula::Not(f) => f.is_classical(),
            Formula::And(l, r) | Formula::Or(l, r) => l.is_classical() && r.is_classical(),
            Formula::OrdDisj(..) => false,
        }
    }

    /// Number of connective occurrences.
    pub fn connectives(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Not(f) => 1 + f.connectives(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::OrdDisj(l, r) => {
                1 + l.connectives() + r.connectives()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::OrdDisj(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::OrdDisj(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) => 4,
            Formula::Var(_) => 5,
        }
    }
}

/// Canonical text with minimal parentheses.
pub fn print(f: &Formula) -> String {
    f.to_string()
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(out: &mut fmt::Formatter<'_>, f: &Formula, parens: bool) -> fmt::Result {
            if parens {
                write!(out, "({f})")
            } else {
                write!(out, "{f}")
            }
        }

        match self {
            Formula::Var(v) => out.write_str(v),
            Formula::Not(f) => {
                out.write_str("!")?;
                operand(out, f, f.precedence() < 4)
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::OrdDisj(l, r) => {
                let prec = self.precedence();
                let op = match self {
                    Formula::And(..) => "&",
                    Formula::Or(..) => "|",
                    _ => "><",
                };
                // right-associative: an equal-precedence left operand needs parens
                operand(out, l, l.precedence() <= prec)?;
                write!(out, " {op} ")?;
                operand(out, r, r.precedence() < prec)
            }
        }
    }
}

/// `[a-z][a-zA-Z0-9_]*`
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    BadCharacter(char),
    #[error("expected {expected}, found {found}")]
    Unexpected {
        expected: &'static str,
        found: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    OrdDisj,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "identifier `{s}`"),
            Token::Not => f.write_str("`!`"),
            Token::And => f.write_str("`&`"),
            Token::Or => f.write_str("`|`"),
            Token::OrdDisj => f.write_str("`><`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(&c) = chars.peek() {
        let (start_line, start_column) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let token = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '!' | '¬' => {
                bump(&mut chars);
                Token::Not
            }
            '&' | '∧' => {
                bump(&mut chars);
                Token::And
            }
            '|' | '∨' => {
                bump(&mut chars);
                Token::Or
            }
            '×' => {
                bump(&mut chars);
                Token::OrdDisj
            }
            '(' => {
                bump(&mut chars);
                Token::LParen
            }
            ')' => {
                bump(&mut chars);
                Token::RParen
            }
            '>' => {
                bump(&mut chars);
                if chars.peek() == Some(&'<') {
                    bump(&mut chars);
                    Token::OrdDisj
                } else {
                    return Err(ParseError {
                        line: start_line,
                        column: start_column,
                        kind: ParseErrorKind::BadCharacter('>'),
                    });
                }
            }
            c if c.is_ascii_lowercase() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                Token::Ident(name)
            }
            other => {
                return Err(ParseError {
                    line: start_line,
                    column: start_column,
                    kind: ParseErrorKind::BadCharacter(other),
                })
            }
        };
        tokens.push(Spanned {
            token,
            line: start_line,
            column: start_column,
        });
    }
    tokens.push(Spanned {
        token: Token::End,
        line,
        column,
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].token
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].token.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &'static str) -> ParseError {
        let here = &self.tokens[self.pos];
        ParseError {
            line: here.line,
            column: here.column,
            kind: ParseErrorKind::Unexpected {
                expected,
                found: here.token.to_string(),
            },
        }
    }

    fn binary(
        &mut self,
        op: Token,
        operand: fn(&mut Self) -> Result<Formula, ParseError>,
        rest: fn(&mut Self) -> Result<Formula, ParseError>,
        build: fn(Formula, Formula) -> Formula,
    ) -> Result<Formula, ParseError> {
        let left = operand(self)?;
        if *self.peek() == op {
            self.advance();
            let right = rest(self)?;
            Ok(build(left, right))
        } else {
            Ok(left)
        }
    }

    fn ord(&mut self) -> Result<Formula, ParseError> {
        self.binary(Token::OrdDisj, Self::or, Self::ord, Formula::ord)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        self.binary(Token::Or, Self::and, Self::or, Formula::or)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        self.binary(Token::And, Self::negation, Self::and, Formula::and)
    }

    fn negation(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Token::Not {
            self.advance();
            Ok(Formula::not(self.negation()?))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Token::Ident(name) => {
                self.advance();
                Ok(Formula::Var(name))
            }
            Token::LParen => {
                self.advance();
                let inner = self.ord()?;
                if *self.peek() != Token::RParen {
                    return Err(self.error("`)`"));
                }
                self.advance();
                Ok(inner)
            }
            _ => Err(self.error("identifier, `!` or `(`")),
        }
    }
}

/// Parses a formula; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let f = parser.ord()?;
    if *parser.peek() != Token::End {
        return Err(parser.error("binary connective or end of input"));
    }
    Ok(f)
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// A finite set of true variables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interpretation(BTreeSet<String>);

impl Interpretation {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn contains(&self, var: &str) -> bool {
        self.0.contains(var)
    }

    pub fn vars(&self) -> &BTreeSet<String> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn restrict(&self, vars: &BTreeSet<String>) -> Self {
        Interpretation(self.0.intersection(vars).cloned().collect())
    }

    /// Parses a comma-separated identifier list such as `a,b`; the empty
    /// string is the empty interpretation.
    pub fn parse_list(text: &str) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for item in text.split(',').map(str::trim) {
            if item.is_empty() {
                continue;
            }
            if !is_identifier(item) {
                return Err(Error::BadInterpretation(item.to_string()));
            }
            set.insert(item.to_string());
        }
        Ok(Interpretation(set))
    }
}

impl<S: Into<String>> FromIterator<S> for Interpretation {
    fn from_iter<T: IntoIterator<Item = S>>(iter: T) -> Self {
        Interpretation(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(v)?;
        }
        f.write_str("}")
    }
}

/// All subsets of `vars` by binary counting; the alphabetically first
/// variable is the most significant bit, so `{a,b}` yields
/// `{}`, `{b}`, `{a}`, `{a,b}`.
pub fn interpretations_over(
    vars: &BTreeSet<String>,
    cap: usize,
) -> Result<Vec<Interpretation>, Error> {
    let n = vars.len();
    if n > cap {
        return Err(Error::CapExceeded { vars: n, cap });
    }
    let names: Vec<&String> = vars.iter().collect();
    Ok((0u64..1 << n)
        .map(|bits| {
            Interpretation(
                names
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| bits >> (n - 1 - j) & 1 == 1)
                    .map(|(_, v)| (*v).clone())
                    .collect(),
            )
        })
        .collect())
}

pub fn all_interpretations(f: &Formula, cap: usize) -> Result<Vec<Interpretation>, Error> {
    interpretations_over(&f.vars(), cap)
}
