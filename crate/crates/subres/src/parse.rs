//! Polynomial expression parsing.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := coeff ['*'] ['x' ['^' uint]] | 'x' ['^' uint]
//! coeff := int | int '/' uint
//! ```
//!
//! Repeated powers accumulate, so `x + x` parses to `2*x`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::Result;

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse as BigInt"))
    }

    /// `int '/' uint` or `int`; the sign has already been consumed by the
    /// term splitter, so this reads an unsigned magnitude.
    fn coeff(&mut self) -> Result<Rat> {
        let num = self.uint()?;
        if self.eat(b'/') {
            let den = self.uint()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_int(num))
        }
    }

    fn power(&mut self) -> Result<usize> {
        if self.eat(b'^') {
            let e = self.uint()?;
            u32::try_from(&e)
                .ok()
                .map(|e| e as usize)
                .ok_or_else(|| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<(Rat, usize)> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok((Rat::one(), self.power()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                self.eat(b'*');
                if self.eat(b'x') {
                    Ok((coeff, self.power()?))
                } else {
                    Ok((coeff, 0))
                }
            }
            Some(c) => Err(self.err(format!("unexpected character {:?}", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial expression such as `"3/2*x^3 + x - 5"`.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut s = Scanner::new(text);
    if s.peek().is_none() {
        return Err(s.err("empty input"));
    }
    let mut acc = Poly::zero();
    let mut first = true;
    loop {
        let sign = match s.peek() {
            Some(b'+') => {
                s.pos += 1;
                false
            }
            Some(b'-') => {
                s.pos += 1;
                true
            }
            Some(_) if first => false,
            Some(c) => return Err(s.err(format!("expected '+' or '-', got {:?}", c as char))),
            None => break,
        };
        let (mut coeff, power) = s.term()?;
        if sign {
            coeff = -coeff;
        }
        acc = &acc + &Poly::monomial(coeff, power);
        first = false;
        if s.peek().is_none() {
            break;
        }
    }
    Ok(acc)
}
