//! Text form of polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' integer | '(' expr ')'
//! ```
//!
//! Variables are 1-based (`x1` .. `xn`). Integer literals may be arbitrarily
//! long; they are reduced modulo `p` digit by digit.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{PrimeField, Residue};
use crate::poly::Polynomial;

struct Parser<'a, W> {
    src: &'a [u8],
    pos: usize,
    field: PrimeField<W>,
    arity: usize,
}

impl<'a, W: Residue> Parser<'a, W> {
    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn digits(&mut self) -> Result<&'a [u8]> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected an integer");
        }
        Ok(&self.src[start..self.pos])
    }

    fn small_integer(&mut self, what: &str) -> Result<u64> {
        let start = self.pos;
        let d = self.digits()?;
        std::str::from_utf8(d)
            .expect("ascii digits")
            .parse::<u64>()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: format!("{what} too large"),
            })
    }

    fn expr(&mut self) -> Result<Polynomial<W>> {
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

    fn term(&mut self) -> Result<Polynomial<W>> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<W>> {
        if self.eat(b'-') {
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small_integer("exponent")?;
            if e > u32::MAX as u64 {
                return self.syntax("exponent too large");
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<W>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.syntax("expected ')'");
                }
                Ok(inner)
            }
            Some(b'x') => {
                let at = self.pos;
                self.pos += 1;
                if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return self.syntax("expected a variable index after 'x'");
                }
                let idx = self.small_integer("variable index")?;
                if idx == 0 || idx > self.arity as u64 {
                    return Err(Error::VariableOutOfRange {
                        index: idx,
                        arity: self.arity,
                        pos: at,
                    });
                }
                Ok(Polynomial::var(self.field, self.arity, idx as usize - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.field.modulus();
                let v = self
                    .digits()?
                    .iter()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::constant(self.field, self.arity, v as i64))
            }
            Some(c) => self.syntax(format!("unexpected character '{}'", c as char)),
            None => self.syntax("unexpected end of input"),
        }
    }
}

impl<W: Residue> Polynomial<W> {
    /// Parses an expression in `x1..xn` over the given field.
    pub fn parse(text: &str, field: PrimeField<W>, arity: usize) -> Result<Self> {
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
            field,
            arity,
        };
        let poly = parser.expr()?;
        if parser.peek().is_some() {
            return parser.syntax("trailing input");
        }
        Ok(poly)
    }

    /// Convenience wrapper that validates `p` first.
    pub fn parse_mod(text: &str, p: u64, arity: usize) -> Result<Self> {
        Self::parse(text, PrimeField::new(p)?, arity)
    }
}

/// Canonical form: terms in descending graded-lex order, coefficients in
/// `[0, p)`, unit coefficients and unit exponents omitted.
impl<W: Residue> fmt::Display for Polynomial<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", c, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ExponentVector;
    use crate::random::random_polynomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn normalizes_coefficients() {
        let f = Polynomial::<u32>::parse_mod("x1*x2 - x1 - x2", 5, 2).unwrap();
        let terms: Vec<_> = f.terms().map(|(e, c)| (e.clone(), c)).collect();
        assert_eq!(
            terms,
            vec![(ev(&[1, 1]), 1), (ev(&[1, 0]), 4), (ev(&[0, 1]), 4)]
        );
        assert_eq!(f.to_string(), "x1*x2 + 4*x1 + 4*x2");
    }

    #[test]
    fn collapsing_coefficients() {
        assert!(Polynomial::<u32>::parse_mod("x1^3 + 2*x1^3", 3, 1)
            .unwrap()
            .is_zero());
        assert_eq!(
            Polynomial::<u32>::parse_mod("0", 3, 1).unwrap().to_string(),
            "0"
        );
        let big = Polynomial::<u32>::parse_mod("123456789012345678901234567893*x1", 7, 1).unwrap();
        // 123456789012345678901234567893 mod 7 = 3
        assert_eq!(big.to_string(), "3*x1");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            Polynomial::<u32>::parse_mod("x3 + 1", 5, 2),
            Err(Error::VariableOutOfRange {
                index: 3,
                arity: 2,
                pos: 0
            })
        );
        assert!(matches!(
            Polynomial::<u32>::parse_mod("x0", 5, 2),
            Err(Error::VariableOutOfRange { .. })
        ));
        assert_eq!(
            Polynomial::<u32>::parse_mod("x1 + * 2", 5, 2),
            Err(Error::Syntax {
                pos: 5,
                msg: "unexpected character '*'".into()
            })
        );
        assert!(matches!(
            Polynomial::<u32>::parse_mod("2 x1", 5, 2),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            Polynomial::<u32>::parse_mod("(x1", 5, 2),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            Polynomial::<u32>::parse_mod("x1^", 5, 2),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            Polynomial::<u32>::parse_mod("x", 5, 2),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            Polynomial::<u32>::parse_mod("", 5, 2),
            Err(Error::Syntax { .. })
        ));
        assert_eq!(
            Polynomial::<u32>::parse_mod("x1", 6, 2),
            Err(Error::NotPrime(6))
        );
    }

    #[test]
    fn unary_minus_and_precedence() {
        let a = Polynomial::<u32>::parse_mod("-x1^2", 5, 1).unwrap();
        assert_eq!(a.to_string(), "4*x1^2");
        let b = Polynomial::<u32>::parse_mod("2*-(x1 + 1)", 5, 1).unwrap();
        assert_eq!(b.to_string(), "3*x1 + 3");
        let c = Polynomial::<u32>::parse_mod("(x1 + x2)^0", 5, 2).unwrap();
        assert_eq!(c.to_string(), "1");
    }

    #[test]
    fn round_trip_random_corpus() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for i in 0..500 {
            let p = [2u64, 3, 5, 7, 11][i % 5];
            let n = 1 + i % 4;
            let f = random_polynomial(&mut rng, PrimeField::<u32>::new(p).unwrap(), n, 8, 6);
            let back = Polynomial::parse(&f.to_string(), f.field(), n).unwrap();
            assert_eq!(back, f);
        }
    }
}
