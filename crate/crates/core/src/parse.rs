//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := ["-"] term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := atom ("^" nat)?
//! atom     := rational | "i" | var | "(" expr ")"
//! var      := "z" nat
//! rational := nat ("/" nat)?
//! ```
//!
//! Multiplication is always explicit, so `z12` is the twelfth variable and
//! never `z1*2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::RationalVector;
use crate::polynomial::{Monomial, Polynomial};
use crate::scalar::Scalar;

const MAX_EXPONENT: u32 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        message: String,
        line: usize,
        column: usize,
    },
    #[error("variable z{index} at {line}:{column} is out of range for dimension {dim}")]
    VariableOutOfRange {
        index: usize,
        dim: usize,
        line: usize,
        column: usize,
    },
    #[error("zero denominator at {line}:{column}")]
    ZeroDenominator { line: usize, column: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Var(usize),
    I,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Nat(n) => format!("number {n}"),
        Tok::Var(j) => format!("variable z{j}"),
        Tok::I => "'i'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let (tl, tc) = (line, column);
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            'i' => Some(Tok::I),
            _ => None,
        };
        if let Some(tok) = single {
            tokens.push(Token {
                tok,
                line: tl,
                column: tc,
            });
            k += 1;
            column += 1;
            continue;
        }
        if c == '\n' {
            line += 1;
            column = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            k += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() || c == 'z' {
            let start = if c == 'z' { k + 1 } else { k };
            let mut end = start;
            while end < chars.len() && chars[end].is_ascii_digit() {
                end += 1;
            }
            if end == start {
                return Err(ParseError::Syntax {
                    message: "expected a variable index after 'z'".into(),
                    line: tl,
                    column: tc,
                });
            }
            let digits: String = chars[start..end].iter().collect();
            let tok = if c == 'z' {
                let index = digits.parse::<usize>().map_err(|_| ParseError::Syntax {
                    message: format!("variable index {digits} is too large"),
                    line: tl,
                    column: tc,
                })?;
                Tok::Var(index)
            } else {
                Tok::Nat(digits.parse().expect("ascii digits"))
            };
            tokens.push(Token {
                tok,
                line: tl,
                column: tc,
            });
            column += end - k;
            k = end;
            continue;
        }
        return Err(ParseError::Syntax {
            message: format!("unexpected character {c:?}"),
            line: tl,
            column: tc,
        });
    }
    tokens.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            message: format!("expected {expected}, found {}", describe(&t.tok)),
            line: t.line,
            column: t.column,
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek().tok {
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

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        if !matches!(self.peek().tok, Tok::Nat(_)) {
            return Err(self.unexpected("an exponent"));
        }
        let t = self.bump();
        let Tok::Nat(n) = t.tok else { unreachable!() };
        let exp = u32::try_from(&n)
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| ParseError::Syntax {
                message: format!("exponent {n} exceeds {MAX_EXPONENT}"),
                line: t.line,
                column: t.column,
            })?;
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Nat(num) => {
                self.bump();
                let mut den = BigInt::from(1);
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    if !matches!(self.peek().tok, Tok::Nat(_)) {
                        return Err(self.unexpected("a denominator"));
                    }
                    let d = self.bump();
                    match d.tok {
                        Tok::Nat(d_val) if d_val.is_zero() => {
                            return Err(ParseError::ZeroDenominator {
                                line: d.line,
                                column: d.column,
                            });
                        }
                        Tok::Nat(d_val) => den = d_val,
                        _ => unreachable!(),
                    }
                }
                Ok(Polynomial::constant(
                    self.dim,
                    Scalar::real(BigRational::new(num, den)),
                ))
            }
            Tok::I => {
                self.bump();
                Ok(Polynomial::constant(self.dim, Scalar::i()))
            }
            Tok::Var(index) => {
                self.bump();
                if index == 0 || index > self.dim {
                    return Err(ParseError::VariableOutOfRange {
                        index,
                        dim: self.dim,
                        line: t.line,
                        column: t.column,
                    });
                }
                Ok(Polynomial::var(self.dim, index - 1))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, 'i', a variable or '('")),
        }
    }
}

/// Parses `text` as a polynomial in `z1 … z{dim}`.
pub fn parse_polynomial(text: &str, dim: usize) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        dim,
    };
    let p = parser.expr()?;
    if parser.peek().tok != Tok::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(p)
}

/// Parses a constant expression such as `-1/2`, `2*i`, or `(1+i)^2`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let p = parse_polynomial(text, 0)?;
    Ok(p.coefficient(&Monomial::one(0)))
}

/// Parses a comma-separated list of constant expressions.
pub fn parse_vector(text: &str) -> Result<RationalVector, ParseError> {
    text.split(',')
        .map(parse_scalar)
        .collect::<Result<Vec<_>, _>>()
        .map(RationalVector::new)
}
