//! Polynomial expressions in `x`: integer literals, `+ - * / ^`, parentheses.
//! Exponents are nonnegative integer literals, optionally parenthesized;
//! division is allowed only by nonzero constants.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::QPoly;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at position {position}: {message}")]
pub struct PolyParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> PolyParseError {
        PolyParseError { position: self.pos, message: message.into() }
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

    fn expect(&mut self, c: u8) -> Result<(), PolyParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<QPoly, PolyParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QPoly, PolyParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                if d.degree().is_some_and(|n| n > 0) {
                    return Err(PolyParseError {
                        position: at,
                        message: "division by a non-constant polynomial".into(),
                    });
                }
                if d.is_zero() {
                    return Err(PolyParseError { position: at, message: "division by zero".into() });
                }
                acc = acc.scale(&d.coeff(0).recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<QPoly, PolyParseError> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<QPoly, PolyParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        self.skip_ws();
        let start = self.pos;
        let n = self.integer().ok_or_else(|| self.error("exponent must be a nonnegative integer"))?;
        let e: u32 = n
            .try_into()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(PolyParseError { position: start, message: format!("exponent above {MAX_EXPONENT}") })?;
        if paren {
            self.expect(b')')?;
        }
        if self.peek() == Some(b'^') {
            return Err(self.error("chained exponents need parentheses"));
        }
        Ok(base.pow(e))
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn atom(&mut self) -> Result<QPoly, PolyParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(QPoly::x())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().expect("starts with a digit");
                Ok(QPoly::constant(BigRational::from_integer(n)))
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses a polynomial in `x` with rational coefficients.
pub fn parse_poly(text: &str) -> Result<QPoly, PolyParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    if p.peek().is_none() {
        return Err(p.error("empty input"));
    }
    let f = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected '{}'", c as char)));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_poly("x^5 - 4*x - 2").unwrap(), p(&[-2, -4, 0, 0, 0, 1]));
        assert_eq!(parse_poly("(x-1)*(x+1)").unwrap(), p(&[-1, 0, 1]));
        assert_eq!(parse_poly("x^(3) / 2 + 1/2").unwrap(), p(&[1, 0, 0, 1]).scale(&crate::arith::q(1, 2)));
        assert_eq!(parse_poly("-x^2").unwrap(), p(&[0, 0, -1]));
        assert_eq!(parse_poly("(x+1)^0").unwrap(), p(&[1]));
    }

    #[test]
    fn errors() {
        assert!(parse_poly("x^(-1)").is_err());
        let e = parse_poly("x / (x + 1)").unwrap_err();
        assert_eq!(e.position, 2);
        assert_eq!(parse_poly("x +").unwrap_err().position, 3);
        assert_eq!(parse_poly("2 y").unwrap_err().position, 2);
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x^2^3").is_err());
    }

    #[test]
    fn canonical_text_round_trips() {
        for s in ["x^5 - 4*x - 2", "1/3*x^2 - x + 7/2", "-x", "0", "x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1"] {
            let f = parse_poly(s).unwrap();
            assert_eq!(f.to_string(), s);
            assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }
    }
}
