//! Recursive-descent parser with precedence climbing for binary operators.

use num_traits::ToPrimitive;

use super::lexer::{tokenize, Tok, Token};
use super::TransferMatrix;
use crate::error::{Error, Position, Result};
use crate::ratfunc::{Polynomial, RationalFunction};

/// Intermediate results above this degree are rejected.
pub const MAX_DEGREE: usize = 256;

/// Largest literal exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

// Binding power of (+,-) and (*,/).
const ADDITIVE: u8 = 1;
const MULTIPLICATIVE: u8 = 2;

struct Parser {
    tokens: Vec<Token>,
    cursor: usize,
    depth: usize,
}

const MAX_NESTING: usize = 200;

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.cursor].clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        t
    }

    fn expected(&self, what: &str) -> Error {
        let t = self.peek();
        Error::Syntax { position: t.pos, message: format!("expected {what}, found {}", t.tok.describe()) }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.expected(what))
        }
    }

    fn matrix(&mut self) -> Result<TransferMatrix> {
        let open = self.expect(Tok::LBracket, "'['")?;
        let mut rows = vec![self.row()?];
        let mut row_starts = vec![open.pos];
        while self.peek().tok == Tok::Semicolon {
            let semi = self.bump();
            row_starts.push(semi.pos);
            rows.push(self.row()?);
        }
        self.expect(Tok::RBracket, "',', ';' or ']'")?;
        self.expect(Tok::Eof, "end of input after ']'")?;
        let width = rows[0].len();
        if let Some(i) = rows.iter().position(|r| r.len() != width) {
            return Err(Error::Shape(format!(
                "row {} (starting at {}) has {} entries, row 1 has {width}",
                i + 1,
                row_starts[i],
                rows[i].len()
            )));
        }
        TransferMatrix::from_rows(rows)
    }

    fn row(&mut self) -> Result<Vec<RationalFunction>> {
        let mut entries = vec![self.expr(0)?];
        while self.peek().tok == Tok::Comma {
            self.bump();
            entries.push(self.expr(0)?);
        }
        Ok(entries)
    }

    fn expr(&mut self, min_power: u8) -> Result<RationalFunction> {
        let mut lhs = self.unary()?;
        loop {
            let power = match self.peek().tok {
                Tok::Plus | Tok::Minus => ADDITIVE,
                Tok::Star | Tok::Slash => MULTIPLICATIVE,
                _ => break,
            };
            if power <= min_power {
                break;
            }
            let op = self.bump();
            let rhs = self.expr(power)?;
            lhs = match op.tok {
                Tok::Plus => lhs.add(&rhs),
                Tok::Minus => lhs.sub(&rhs),
                Tok::Star => lhs.mul(&rhs),
                Tok::Slash => lhs.div(&rhs).map_err(|_| Error::InvalidEntry {
                    position: op.pos,
                    message: "division by an expression that reduces to zero".into(),
                })?,
                _ => unreachable!(),
            };
            check_degree(&lhs, op.pos)?;
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                self.nested(|p| p.unary()).map(|f| f.neg())
            }
            Tok::Plus => {
                self.bump();
                self.nested(|p| p.unary())
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let exp_tok = self.peek().clone();
        let exp = match &exp_tok.tok {
            Tok::Number(q) if q.is_integer() && !exp_tok.text.contains('.') => q.to_integer().to_u32(),
            _ => return Err(self.expected("a nonnegative integer exponent")),
        };
        let exp = exp.filter(|&e| e <= MAX_EXPONENT).ok_or_else(|| Error::InvalidEntry {
            position: exp_tok.pos,
            message: format!("exponent exceeds the limit of {MAX_EXPONENT}"),
        })?;
        self.bump();
        let degree = |p: &Polynomial| p.degree().unwrap_or(0);
        if (degree(base.num()).max(degree(base.den()))) * exp as usize > MAX_DEGREE {
            return Err(degree_error(caret.pos));
        }
        Ok(base.pow(exp))
    }

    fn primary(&mut self) -> Result<RationalFunction> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Number(q) => {
                self.bump();
                Ok(RationalFunction::constant(q))
            }
            Tok::Var => {
                self.bump();
                Ok(RationalFunction::from_poly(Polynomial::s()))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.nested(|p| p.expr(0))?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.expected("a number, 's', '(' or unary sign")),
        }
    }

    fn nested<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        if self.depth >= MAX_NESTING {
            let pos = self.peek().pos;
            return Err(Error::Syntax { position: pos, message: "expression nested too deeply".into() });
        }
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }
}

fn degree_error(position: Position) -> Error {
    Error::InvalidEntry { position, message: format!("degree exceeds the limit of {MAX_DEGREE}") }
}

fn check_degree(f: &RationalFunction, pos: Position) -> Result<()> {
    let d = f.num().degree().unwrap_or(0).max(f.den().degree().unwrap_or(0));
    if d > MAX_DEGREE {
        Err(degree_error(pos))
    } else {
        Ok(())
    }
}

/// Parses text such as `[1/(s+1), s/(s^2-1)]` into a normalized transfer
/// matrix. Rows are separated by `;` and entries by `,`.
pub fn parse_transfer_matrix(text: &str) -> Result<TransferMatrix> {
    let tokens = tokenize(text)?;
    Parser { tokens, cursor: 0, depth: 0 }.matrix()
}

/// Parses a single rational expression in `s`.
pub fn parse_expression(text: &str) -> Result<RationalFunction> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, cursor: 0, depth: 0 };
    let f = p.expr(0)?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(f)
}
