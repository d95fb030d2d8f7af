//! Text syntax for polynomials.
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := var | rational | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! `var` is `x` or `y` (or the names passed to [`parse_polynomial_in`]).
//! Whitespace is ignored between tokens. A single leading sign is accepted
//! at the start of every `expr`, so `-x^2 + y` and `(-1)` both parse.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::BivariatePolynomial;
use crate::rational::Rational;
use crate::{Error, Result};

/// Exponents above this are rejected to keep expansion bounded.
pub const MAX_EXPONENT: u32 = 4096;

pub fn parse_polynomial(text: &str) -> Result<BivariatePolynomial> {
    parse_polynomial_in(text, ["x", "y"])
}

/// Splits a single top-level product into its factors; any other
/// expression is returned whole. `f^k` contributes `k` copies of `f`.
pub fn parse_factors(text: &str) -> Result<alloc::vec::Vec<BivariatePolynomial>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars: ["x", "y"],
    };
    let mut factors = alloc::vec::Vec::new();
    let negate = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            true
        }
        _ => false,
    };
    loop {
        let base = p.base()?;
        let mut k = 1;
        if p.peek() == Some(b'^') {
            p.pos += 1;
            if p.peek() == Some(b'-') {
                return Err(Error::NegativeExponent { pos: p.pos });
            }
            let start = p.pos;
            k = p
                .digits()
                .and_then(|d| d.parse::<u32>().ok())
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or(Error::Syntax {
                    pos: start,
                    message: "bad exponent".to_string(),
                })?;
        }
        for _ in 0..k {
            factors.push(base.clone());
        }
        if p.peek() == Some(b'*') {
            p.pos += 1;
        } else {
            break;
        }
    }
    p.skip_ws();
    if p.pos < p.src.len() {
        // not a bare product: fall back to the whole expression
        let whole = parse_polynomial(text)?;
        return Ok(alloc::vec![whole]);
    }
    if negate {
        if let Some(first) = factors.first_mut() {
            *first = -&*first;
        }
    }
    Ok(factors)
}

/// Parses with custom names for the first and second variable.
pub fn parse_polynomial_in(text: &str, vars: [&str; 2]) -> Result<BivariatePolynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: [&'a str; 2],
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.to_string(),
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

    fn expr(&mut self) -> Result<BivariatePolynomial> {
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BivariatePolynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BivariatePolynomial> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        if self.peek() == Some(b'-') {
            return Err(Error::NegativeExponent { pos: self.pos });
        }
        let start = self.pos;
        let Some(digits) = self.digits() else {
            return Err(self.error("expected exponent"));
        };
        let e: u32 = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(Error::Syntax {
                pos: start,
                message: "exponent too large".to_string(),
            })?;
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<BivariatePolynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                if name == self.vars[0] {
                    Ok(BivariatePolynomial::x())
                } else if name == self.vars[1] {
                    Ok(BivariatePolynomial::y())
                } else {
                    Err(Error::UnknownVariable {
                        name: String::from(name),
                        pos: start,
                    })
                }
            }
            Some(_) => Err(self.error("expected variable, number or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            core::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    fn rational(&mut self) -> Result<BivariatePolynomial> {
        let num: BigInt = self
            .digits()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| self.error("expected number"))?;
        let mut den = BigInt::from(1);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            den = self
                .digits()
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| self.error("expected denominator"))?;
            if den.is_zero() {
                return Err(Error::Syntax {
                    pos: at,
                    message: "zero denominator".to_string(),
                });
            }
        }
        Ok(BivariatePolynomial::constant(Rational::new(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::rational::{frac, int};

    #[test]
    fn expands_sums_of_powers() {
        let p = parse_polynomial("x^2+y^5").unwrap();
        assert_eq!(
            p,
            BivariatePolynomial::from_terms([(Monomial::new(2, 0), int(1)), (Monomial::new(0, 5), int(1)),])
        );
    }

    #[test]
    fn binomial_identity() {
        let p = parse_polynomial("(x+y)^2 - x^2 - y^2").unwrap();
        assert_eq!(p, BivariatePolynomial::monomial(Monomial::new(1, 1), int(2)));
    }

    #[test]
    fn unknown_variable_is_named() {
        assert_eq!(
            parse_polynomial("x^2 + z"),
            Err(Error::UnknownVariable {
                name: "z".to_string(),
                pos: 6
            })
        );
    }

    #[test]
    fn negative_exponent_rejected() {
        assert!(matches!(parse_polynomial("x^-1"), Err(Error::NegativeExponent { .. })));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_polynomial("x + * y") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial("(x+y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rational_literals_and_leading_sign() {
        let p = parse_polynomial("-3/2*x + (-1)").unwrap();
        assert_eq!(p.coefficient(Monomial::new(1, 0)), frac(-3, 2));
        assert_eq!(p.constant_term(), int(-1));
    }

    #[test]
    fn product_splits_into_factors() {
        let fs = parse_factors("(x^2+y^5)*(y^2+x^5)").unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[1], parse_polynomial("y^2+x^5").unwrap());
        assert_eq!(parse_factors("x*y^2").unwrap().len(), 3);
        assert_eq!(parse_factors("x^2+y^3").unwrap().len(), 1);
        assert_eq!(parse_factors("x*y + 1").unwrap(), [parse_polynomial("x*y+1").unwrap()]);
    }

    #[test]
    fn custom_variable_names() {
        let p = parse_polynomial_in("u^2*v", ["u", "v"]).unwrap();
        assert_eq!(p, BivariatePolynomial::monomial(Monomial::new(2, 1), int(1)));
        assert!(parse_polynomial_in("x", ["u", "v"]).is_err());
    }
}
