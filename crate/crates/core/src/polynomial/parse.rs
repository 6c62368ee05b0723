//! Text grammar for polynomials in `t`.
//!
//! ```text
//! poly  := sign? term (sign term)*
//! term  := coeff ("*" "t" ("^" int)?)? | "t" ("^" int)?
//! coeff := int ("/" int)?
//! sign  := "+" | "-" | "−"
//! ```
//!
//! Whitespace is ignored everywhere. Repeated exponents are summed.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Upper limit on a parsed exponent; dense storage makes larger degrees impractical.
const MAX_DEGREE: usize = 1 << 20;

struct Parser {
    // (1-based column, char) with whitespace removed
    chars: Vec<(usize, char)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Self {
            chars,
            pos: 0,
            end_column: text.chars().count() + 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.end_column, |&(col, _)| col)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-' | '−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            self.chars[start..self.pos]
                .iter()
                .map(|&(_, c)| c)
                .collect()
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.digits() {
            Some(d) => Ok(d.parse().expect("ascii digits")),
            None => self.error("expected an integer"),
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if !self.eat('^') {
            return Ok(1);
        }
        let column = self.column();
        let k = self.integer()?;
        match usize::try_from(&k) {
            Ok(k) if k <= MAX_DEGREE => Ok(k),
            _ => Err(Error::Parse {
                position: column,
                message: format!("exponent {k} too large (limit {MAX_DEGREE})"),
            }),
        }
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        if self.eat('t') {
            return Ok((Rational::from_integer(1.into()), self.exponent()?));
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return self.error("expected a coefficient or 't'");
        }
        let num = self.integer()?;
        let den = if self.eat('/') {
            let column = self.column();
            let d = self.integer()?;
            if d.is_zero() {
                return Err(Error::Parse {
                    position: column,
                    message: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::from(1)
        };
        let c = Rational::new(num, den);
        if !self.eat('*') {
            return Ok((c, 0));
        }
        if !self.eat('t') {
            return self.error("expected 't' after '*'");
        }
        Ok((c, self.exponent()?))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        if self.chars.is_empty() {
            return self.error("empty polynomial");
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let (c, k) = self.term()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            if negative {
                coeffs[k] -= c;
            } else {
                coeffs[k] += c;
            }
            if self.peek().is_none() {
                break;
            }
            match self.sign() {
                Some(neg) => negative = neg,
                None => return self.error("expected '+' or '-'"),
            }
        }
        Ok(Polynomial::new(coeffs))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).polynomial()
    }
}
