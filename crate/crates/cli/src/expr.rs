//! Infix expressions over typed OFN literals.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | primary
//! primary := literal | '(' expr ')'
//! literal := name '(' number (',' number)* ')'
//! ```
//!
//! Literal names: `trap`, `gauss`, `expo`, `sqrtb` take a full tuple;
//! `rect(b1, b2)` and `crisp(v)` build rectangular OFNs.

use ofn_core::base::{EXPONENTIAL, GAUSSIAN, IDENTITY, SQRT};
use ofn_core::{Bases, Ofn};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Literal { base: &'static str, tuple: [f64; 4] },
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(char),
    End,
}

fn tokenize(src: &str) -> CliResult<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && matches!(chars[i], 'e' | 'E') {
                let mut j = i + 1;
                if j < chars.len() && matches!(chars[j], '+' | '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            let v = text.parse().map_err(|_| CliError::Parse {
                column: col,
                message: format!("malformed number {text:?}"),
            })?;
            out.push((Tok::Num(v), col));
        } else if "+-*/(),".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(CliError::Parse {
                column: col,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn column(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> CliResult<T> {
        Err(CliError::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> CliResult<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> CliResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> CliResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> CliResult<Expr> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> CliResult<Expr> {
        match self.peek().clone() {
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => self.literal(&name),
            Tok::End => self.fail("unexpected end of expression"),
            _ => self.fail("expected a literal or '('"),
        }
    }

    fn number(&mut self) -> CliResult<f64> {
        let sign = if *self.peek() == Tok::Sym('-') {
            self.bump();
            -1.0
        } else {
            1.0
        };
        match self.peek() {
            Tok::Num(v) => {
                let v = *v;
                self.bump();
                Ok(sign * v)
            }
            _ => self.fail("expected a number"),
        }
    }

    fn literal(&mut self, name: &str) -> CliResult<Expr> {
        let column = self.column();
        let (base, arity) = match name {
            "trap" => (IDENTITY, 4),
            "gauss" => (GAUSSIAN, 4),
            "expo" => (EXPONENTIAL, 4),
            "sqrtb" => (SQRT, 4),
            "rect" => (IDENTITY, 2),
            "crisp" => (IDENTITY, 1),
            _ => return self.fail(format!("unknown literal {name:?}")),
        };
        self.bump();
        self.expect('(')?;
        let mut args = vec![self.number()?];
        while *self.peek() == Tok::Sym(',') {
            self.bump();
            args.push(self.number()?);
        }
        self.expect(')')?;
        if args.len() != arity {
            return Err(CliError::Parse {
                column,
                message: format!("{name} takes {arity} argument(s), got {}", args.len()),
            });
        }
        let tuple = match args[..] {
            [v] => [0.0, v, 0.0, v],
            [b1, b2] => [0.0, b1, 0.0, b2],
            [a, b, c, d] => [a, b, c, d],
            _ => unreachable!("arity checked above"),
        };
        Ok(Expr::Literal { base, tuple })
    }
}

pub fn parse(src: &str) -> CliResult<Expr> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("unexpected trailing input");
    }
    Ok(e)
}

pub fn eval(e: &Expr, bases: &Bases) -> CliResult<Ofn> {
    Ok(match e {
        Expr::Literal { base, tuple } => {
            let b = bases.get(base).ok_or_else(|| CliError::UnknownBase(base.to_string()))?;
            Ofn::new(b, ofn_core::Tuple::from_array(*tuple))?
        }
        Expr::Neg(inner) => eval(inner, bases)?.neg(),
        Expr::Binary(op, l, r) => {
            let (x, y) = (eval(l, bases)?, eval(r, bases)?);
            match op {
                BinOp::Add => x.add(&y)?,
                BinOp::Sub => x.sub(&y)?,
                BinOp::Mul => x.mul(&y)?,
                BinOp::Div => x.div(&y)?,
            }
        }
    })
}

pub fn evaluate(src: &str, bases: &Bases) -> CliResult<Ofn> {
    eval(&parse(src)?, bases)
}
