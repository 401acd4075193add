//! Surface syntax for elements.
//!
//! ```text
//! expr     := [sign] term (sign term)*
//! term     := rational ['*'] factor (['*'] factor)* | rational | factor (['*'] factor)*
//! rational := digits ['/' digits]
//! factor   := 'v' | 'e' digits ['\'']
//! ```
//!
//! The apostrophe marks a dual edge: `e2'` is `e2*`. Whitespace is ignored.
//! A bare rational `c` stands for `c v`, so `0` is the zero element.

use leavitt_core::{reduce_word, AlgebraConfig, Element, Generator, Rational, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: edge index {index} is out of range 1..={loops}")]
    IndexOutOfRange {
        line: usize,
        column: usize,
        index: u32,
        loops: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub factors: Vec<Generator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expression {
    pub terms: Vec<Term>,
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    cfg: &'a AlgebraConfig,
}

impl<'a> Parser<'a> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for c in self.chars[..pos.min(self.chars.len())].iter() {
            if *c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> SyntaxError {
        let (line, column) = self.location(pos);
        SyntaxError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn rational(&mut self) -> Result<Rational, SyntaxError> {
        let start = self.pos;
        let numer: BigInt = self.digits().expect("caller checked for a digit").parse().unwrap();
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let denom: BigInt = self
                .digits()
                .ok_or_else(|| self.error(at, "expected a denominator after '/'"))?
                .parse()
                .unwrap();
            if denom.is_zero() {
                return Err(self.error(start, "zero denominator"));
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from_integer(numer))
    }

    fn factor(&mut self) -> Result<Generator, SyntaxError> {
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some('v') => {
                self.pos += 1;
                Ok(Generator::Vertex)
            }
            Some('e') => {
                self.pos += 1;
                let index: u32 = self
                    .digits()
                    .ok_or_else(|| self.error(self.pos, "expected an edge index after 'e'"))?
                    .parse()
                    .map_err(|_| self.error(start, "edge index too large"))?;
                if self.cfg.check_edge(index).is_err() {
                    let (line, column) = self.location(start);
                    return Err(SyntaxError::IndexOutOfRange {
                        line,
                        column,
                        index,
                        loops: self.cfg.loops(),
                    });
                }
                if self.chars.get(self.pos) == Some(&'\'') {
                    self.pos += 1;
                    Ok(Generator::DualEdge(index))
                } else {
                    Ok(Generator::Edge(index))
                }
            }
            Some(c) => Err(self.error(start, format!("unexpected '{c}'"))),
            None => Err(self.error(start, "unexpected end of input")),
        }
    }

    fn starts_factor(c: Option<char>) -> bool {
        matches!(c, Some('v') | Some('e'))
    }

    fn term(&mut self, sign: Rational) -> Result<Term, SyntaxError> {
        let mut coeff = sign;
        let mut factors = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff *= self.rational()?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.skip_ws();
                    if !Self::starts_factor(self.chars.get(self.pos).copied()) {
                        return Err(self.error(self.pos, "expected a factor after '*'"));
                    }
                }
            }
            Some(c) if Self::starts_factor(Some(c)) => {}
            Some(c) => return Err(self.error(self.pos, format!("unexpected '{c}'"))),
            None => return Err(self.error(self.pos, "expected a term")),
        }
        loop {
            let next = self.peek();
            if Self::starts_factor(next) {
                factors.push(self.factor()?);
            } else if next == Some('*') && !factors.is_empty() {
                self.pos += 1;
                self.skip_ws();
                if !Self::starts_factor(self.chars.get(self.pos).copied()) {
                    return Err(self.error(self.pos, "expected a factor after '*'"));
                }
            } else {
                break;
            }
        }
        Ok(Term { coeff, factors })
    }

    fn sign(&mut self) -> Option<Rational> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(Rational::one())
            }
            Some('-') => {
                self.pos += 1;
                Some(-Rational::one())
            }
            _ => None,
        }
    }

    fn expression(&mut self) -> Result<Expression, SyntaxError> {
        let mut terms = Vec::new();
        let first = self.sign().unwrap_or_else(Rational::one);
        terms.push(self.term(first)?);
        while let Some(sign) = self.sign() {
            terms.push(self.term(sign)?);
        }
        if let Some(c) = self.peek() {
            return Err(self.error(self.pos, format!("unexpected '{c}'")));
        }
        Ok(Expression { terms })
    }
}

pub fn parse(source: &str, cfg: &AlgebraConfig) -> Result<Expression, SyntaxError> {
    Parser {
        chars: source.chars().collect(),
        pos: 0,
        cfg,
    }
    .expression()
}

/// Reduces each term's word and sums.
pub fn lower(expr: &Expression, cfg: &AlgebraConfig) -> Element {
    let mut out = Element::zero();
    for term in &expr.terms {
        let word: Word = term.factors.iter().copied().collect();
        let nf = reduce_word(cfg, &word).expect("indices were checked while parsing");
        out.add_scaled(&term.coeff, &nf);
    }
    out
}

pub fn parse_element(source: &str, cfg: &AlgebraConfig) -> Result<Element, SyntaxError> {
    Ok(lower(&parse(source, cfg)?, cfg))
}
