//! Text input: rational-function expressions with radicals, bracketed
//! matrices, and `key = value` solution documents.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" integer)?
//! atom   := integer | "i" | "sqrt(" rational ")" | "x+" | "x-" | "(" expr ")"
//! matrix := "[" row ("," row)* "]"      row := "[" expr ("," expr)* "]"
//! ```

mod doc;
mod lexer;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::error::AlgebraError;
use crate::poly::Var;
use crate::scalar::{RadicalScalar, Rational, Scalar};
use crate::{GrassmannElem, RatFunc, SuperMatrix};

pub use doc::{parse_solution, SolutionDoc};
pub use lexer::Pos;
use lexer::{tokenize, Tok};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("non-holomorphic entry: {0}")]
    NonHolomorphic(String),
    #[error("missing key '{0}'")]
    MissingKey(String),
    #[error("{0}")]
    Algebra(AlgebraError),
}

impl From<AlgebraError> for ParseError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NonHolomorphic(s) => ParseError::NonHolomorphic(s),
            AlgebraError::DimensionMismatch(s) => ParseError::Dimension(s),
            other => ParseError::Algebra(other),
        }
    }
}

pub(crate) struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    pub(crate) fn new(src: &str, start: Pos) -> Result<Self, ParseError> {
        Ok(Self { toks: tokenize(src, start)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.pos().error(format!("expected {}, found {}", want.describe(), self.peek().describe())))
        }
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        self.expect(Tok::Eof)
    }

    pub(crate) fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let at = self.pos();
                    self.bump();
                    let d = self.unary()?;
                    acc = acc.try_div(&d).map_err(|_| at.error("division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.pos();
        let e = match self.bump() {
            Tok::Num(n) => u32::try_from(n).map_err(|_| at.error("exponent too large"))?,
            t => return Err(at.error(format!("expected integer exponent, found {}", t.describe()))),
        };
        Ok(num_traits::pow(base, e as usize))
    }

    fn integer(&mut self) -> Result<num_bigint::BigInt, ParseError> {
        let at = self.pos();
        match self.bump() {
            Tok::Num(n) => Ok(n),
            t => Err(at.error(format!("expected integer, found {}", t.describe()))),
        }
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        let at = self.pos();
        match self.bump() {
            Tok::Num(n) => Ok(RatFunc::constant(RadicalScalar::from_rational(Rational::from_integer(n)))),
            Tok::I => Ok(RatFunc::imag_unit()),
            Tok::XPlus => Ok(RatFunc::var(Var::Plus)),
            Tok::XMinus => Ok(RatFunc::var(Var::Minus)),
            Tok::Sqrt => {
                self.expect(Tok::LParen)?;
                let arg_at = self.pos();
                let neg = *self.peek() == Tok::Minus;
                if neg {
                    self.bump();
                }
                let num = self.integer()?;
                let den = if *self.peek() == Tok::Slash {
                    self.bump();
                    self.integer()?
                } else {
                    One::one()
                };
                if den.is_zero() {
                    return Err(arg_at.error("zero denominator"));
                }
                self.expect(Tok::RParen)?;
                let r = Rational::new(if neg { -num } else { num }, den);
                let s = RadicalScalar::sqrt(&r).map_err(|e| arg_at.error(e.to_string()))?;
                Ok(RatFunc::constant(s))
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            t => Err(at.error(format!("expected a value, found {}", t.describe()))),
        }
    }

    pub(crate) fn matrix(&mut self) -> Result<SuperMatrix, ParseError> {
        let open = self.pos();
        self.expect(Tok::LBracket)?;
        let mut rows = Vec::new();
        loop {
            self.expect(Tok::LBracket)?;
            let mut row = vec![self.expr()?];
            while *self.peek() == Tok::Comma {
                self.bump();
                row.push(self.expr()?);
            }
            self.expect(Tok::RBracket)?;
            rows.push(row);
            if *self.peek() != Tok::Comma {
                break;
            }
            self.bump();
        }
        self.expect(Tok::RBracket)?;
        let width = rows[0].len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
            return Err(ParseError::Dimension(format!(
                "matrix at {}:{}: row {} has {} entries, row 1 has {width}",
                open.line,
                open.col,
                i + 1,
                r.len()
            )));
        }
        Ok(SuperMatrix::from_fn(rows.len(), width, |i, j| GrassmannElem::scalar(rows[i][j].clone())))
    }
}

/// Parses a constant expression.
pub fn parse_scalar(text: &str) -> Result<RadicalScalar, ParseError> {
    let v = parse_poly(text)?;
    v.as_constant().ok_or_else(|| Pos::START.error(format!("'{text}' is not a constant")))
}

/// Parses a rational function of `x+`, `x-`.
pub fn parse_poly(text: &str) -> Result<RatFunc, ParseError> {
    let mut p = Parser::new(text, Pos::START)?;
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

pub fn parse_matrix(text: &str) -> Result<SuperMatrix, ParseError> {
    let mut p = Parser::new(text, Pos::START)?;
    let m = p.matrix()?;
    p.finish()?;
    Ok(m)
}
