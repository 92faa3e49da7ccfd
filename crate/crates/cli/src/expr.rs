//! Expression syntax: tokens, parser and canonical printer.
//!
//! ```text
//! expr    := sum (("obprod" | "⊙" | "hprod" | "∗") sum)*
//! sum     := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary | unary)*      juxtaposition multiplies
//! unary   := "-" unary | power
//! power   := primary ("^" exponent)?
//! exponent:= "-"? INT | "(" "-"? INT ")"
//! primary := INT | "x" | NAME ("(" expr ("," expr)* ")")? | "(" expr ")"
//! ```
//!
//! All binary operators are left-associative. `a/b` with integer literals is
//! an ordinary division, which is how rational constants are written.

use std::collections::BTreeSet;
use std::fmt;

use binconv_core::seqlib;
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    BProd,
    HProd,
}

impl BinOp {
    fn precedence(self) -> u8 {
        match self {
            BinOp::BProd | BinOp::HProd => 1,
            BinOp::Add | BinOp::Sub => 2,
            BinOp::Mul | BinOp::Div => 3,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::BProd => " obprod ",
            BinOp::HProd => " hprod ",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var,
    Named { name: String, args: Vec<Expr> },
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn bin(op: BinOp, l: Expr, r: Expr) -> Expr {
        Expr::Bin(op, Box::new(l), Box::new(r))
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Bin(op, ..) => op.precedence(),
            Expr::Neg(_) => 4,
            Expr::Pow(..) => 5,
            Expr::Int(_) | Expr::Var | Expr::Named { .. } => 6,
        }
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Canonical form: explicit `*`, minimal parentheses; parsing it back gives
/// the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var => f.write_str("x"),
            Expr::Named { name, args } => {
                f.write_str(name)?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
            Expr::Neg(e) => {
                f.write_str("-")?;
                write_child(f, e, 4)
            }
            Expr::Pow(b, k) => {
                write_child(f, b, 6)?;
                write!(f, "^{k}")
            }
            Expr::Bin(op, l, r) => {
                let p = op.precedence();
                write_child(f, l, p)?;
                f.write_str(op.symbol())?;
                write_child(f, r, p + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    BProd,
    HProd,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Name(s) => format!("`{s}`"),
            Tok::End => "end of input".into(),
            other => format!("`{}`", other.expected_name()),
        }
    }

    fn expected_name(&self) -> &'static str {
        match self {
            Tok::Int(_) => "integer",
            Tok::Name(_) => "name",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::BProd => "obprod",
            Tok::HProd => "hprod",
            Tok::End => "end of input",
        }
    }
}

/// Syntax error at a character position (0-based), with the set of tokens
/// that would have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {pos}: {message}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
    pub expected: Vec<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!("; expected one of {}", expected.join(", "))
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = match word.as_str() {
                    "obprod" => Tok::BProd,
                    "hprod" => Tok::HProd,
                    _ => Tok::Name(word),
                };
                out.push((start, tok));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{00b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '\u{2299}' => Tok::BProd,
            '\u{2217}' => Tok::HProd,
            other => {
                return Err(ParseError {
                    pos: start,
                    message: format!("unexpected character `{other}`"),
                    expected: Vec::new(),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    /// Tokens tried at the furthest position reached, for error messages.
    expected: BTreeSet<&'static str>,
    furthest: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn note(&mut self, what: &'static str) {
        if self.at > self.furthest {
            self.furthest = self.at;
            self.expected.clear();
        }
        if self.at == self.furthest {
            self.expected.insert(what);
        }
    }

    /// Consumes `t` if it is next; records it as expected otherwise.
    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.at += 1;
            true
        } else {
            self.note(t.expected_name());
            false
        }
    }

    fn error(&self, message: String) -> ParseError {
        let expected = if self.furthest == self.at { self.expected.iter().map(|s| s.to_string()).collect() } else { Vec::new() };
        ParseError { pos: self.pos(), message, expected }
    }

    fn unexpected(&self) -> ParseError {
        self.error(format!("unexpected {}", self.peek().describe()))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.sum()?;
        loop {
            let op = if self.eat(&Tok::BProd) {
                BinOp::BProd
            } else if self.eat(&Tok::HProd) {
                BinOp::HProd
            } else {
                return Ok(lhs);
            };
            lhs = Expr::bin(op, lhs, self.sum()?);
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat(&Tok::Plus) {
                BinOp::Add
            } else if self.eat(&Tok::Minus) {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Expr::bin(op, lhs, self.term()?);
        }
    }

    fn starts_primary(&mut self) -> bool {
        let yes = matches!(self.peek(), Tok::Int(_) | Tok::Name(_) | Tok::LParen);
        if !yes {
            self.note("integer");
            self.note("name");
            self.note("(");
        }
        yes
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let (op, rhs) = if self.eat(&Tok::Star) {
                (BinOp::Mul, self.unary()?)
            } else if self.eat(&Tok::Slash) {
                (BinOp::Div, self.unary()?)
            } else if self.starts_primary() {
                (BinOp::Mul, self.power()?)
            } else {
                return Ok(lhs);
            };
            lhs = Expr::bin(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let paren = self.eat(&Tok::LParen);
        let negative = self.eat(&Tok::Minus);
        let Tok::Int(n) = self.peek().clone() else {
            self.note("integer");
            return Err(self.error(format!("exponent must be an integer, found {}", self.peek().describe())));
        };
        let pos = self.pos();
        self.at += 1;
        let k = i64::try_from(&n).map_err(|_| ParseError {
            pos,
            message: format!("exponent {n} is too large"),
            expected: Vec::new(),
        })?;
        if paren && !self.eat(&Tok::RParen) {
            return Err(self.unexpected());
        }
        Ok(Expr::Pow(Box::new(base), if negative { -k } else { k }))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.at += 1;
                Ok(Expr::Int(n))
            }
            Tok::Name(name) if name == "x" => {
                self.at += 1;
                Ok(Expr::Var)
            }
            Tok::Name(name) => {
                if !seqlib::SEQUENCES.iter().any(|s| s.name == name) {
                    let names: Vec<String> =
                        seqlib::SEQUENCES.iter().map(|s| s.name.to_string()).chain(["x".to_string()]).collect();
                    return Err(ParseError {
                        pos: self.pos(),
                        message: format!("unknown name `{name}`"),
                        expected: names,
                    });
                }
                self.at += 1;
                let mut args = Vec::new();
                if self.eat(&Tok::LParen) {
                    loop {
                        args.push(self.expr()?);
                        if self.eat(&Tok::RParen) {
                            break;
                        }
                        if !self.eat(&Tok::Comma) {
                            return Err(self.unexpected());
                        }
                    }
                }
                Ok(Expr::Named { name, args })
            }
            Tok::LParen => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                Ok(e)
            }
            _ => {
                self.note("integer");
                self.note("x");
                self.note("name");
                self.note("(");
                self.note("-");
                Err(self.unexpected())
            }
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, at: 0, expected: BTreeSet::new(), furthest: 0 };
    let e = p.expr()?;
    if !p.eat(&Tok::End) {
        return Err(p.unexpected());
    }
    Ok(e)
}
