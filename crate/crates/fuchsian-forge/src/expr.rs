//! Parser for polynomial expressions in one symbol `x` with rational
//! coefficients — the command-line syntax for moduli and field elements.
//!
//! Grammar (whitespace free between any tokens):
//!
//! ```text
//! expr   := term  (('+' | '-') term)*
//! term   := factor (('*' | '/')? factor)*     -- adjacency multiplies
//! factor := ('-' | '+')* atom ('^' natural)?
//! atom   := natural | 'x' | '(' expr ')'
//! ```
//!
//! Division is exact and only by expressions that evaluate to nonzero
//! constants, so `x^2/4 - 1/2` parses while `1/x` is rejected.  Adjacency
//! means `2x`, `2(x+1)` and `x(x-1)` multiply, matching how symbols are
//! written by hand.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Parses an expression into a polynomial in `x`.
pub fn parse_polynomial(text: &str) -> Result<UniPoly> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.unexpected("end of expression"));
    }
    Ok(poly)
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Nat(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Nat(n) => format!("number {n}"),
            Token::X => "symbol x".to_string(),
            Token::Plus => "'+'".to_string(),
            Token::Minus => "'-'".to_string(),
            Token::Star => "'*'".to_string(),
            Token::Slash => "'/'".to_string(),
            Token::Caret => "'^'".to_string(),
            Token::Open => "'('".to_string(),
            Token::Close => "')'".to_string(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                    digits.push(*c);
                    chars.next();
                }
                tokens.push(Token::Nat(digits.parse().expect("digits parse")));
            }
            'x' => {
                chars.next();
                tokens.push(Token::X);
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::Open);
            }
            ')' => {
                chars.next();
                tokens.push(Token::Close);
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} in expression"
                )))
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(t) => Error::Parse(format!("expected {wanted}, found {}", t.describe())),
            None => Error::Parse(format!("expected {wanted}, found end of expression")),
        }
    }

    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<UniPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Slash) => {
                    self.next();
                    let divisor = self.factor()?;
                    let q = divisor
                        .as_constant()
                        .filter(|q| !q.is_zero())
                        .ok_or_else(|| {
                            Error::Parse(
                                "division only by nonzero constant expressions".to_string(),
                            )
                        })?;
                    acc = acc.scale(&(Rational::one() / q));
                }
                // adjacency: a factor starting right here multiplies
                Some(Token::Nat(_)) | Some(Token::X) | Some(Token::Open) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<UniPoly> {
        let mut negate = false;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Minus => {
                    negate = !negate;
                    self.next();
                }
                Token::Plus => {
                    self.next();
                }
                _ => break,
            }
        }
        let mut base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.next();
            let exp = match self.next() {
                Some(Token::Nat(n)) => u32::try_from(n)
                    .map_err(|_| Error::Parse("exponent too large".to_string()))?,
                _ => return Err(self.unexpected("a natural-number exponent")),
            };
            base = base.pow(exp);
        }
        if negate {
            base = base.neg();
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<UniPoly> {
        match self.next() {
            Some(Token::Nat(n)) => Ok(UniPoly::constant(Rational::from_integer(n))),
            Some(Token::X) => Ok(UniPoly::x()),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => {
                        self.pos -= usize::from(self.pos < self.tokens.len());
                        Err(self.unexpected("')'"))
                    }
                }
            }
            other => {
                if other.is_some() {
                    self.pos -= 1;
                }
                Err(self.unexpected("a number, x, or '('"))
            }
        }
    }
}
