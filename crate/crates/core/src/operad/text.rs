//! Text form of elements: `3/2*(2,1,4,3) - (4,3,2,1)`, zero as `0[n]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::operad::OperadElement;
use crate::symmetric::Permutation;
use crate::Rational;

impl fmt::Display for OperadElement<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0[{}]", self.arity());
        }
        for (k, (p, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.src[start..self.pos].parse().expect("digits"))
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.number() else {
            return Ok(None);
        };
        if self.eat('/') {
            let den = self
                .number()
                .ok_or_else(|| self.error("expected denominator"))?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(Some(Rational::new(num, den)));
        }
        Ok(Some(Rational::from_integer(num)))
    }

    fn permutation(&mut self) -> Result<Permutation> {
        self.skip_ws();
        let start = self.pos;
        if !self.eat('(') {
            return Err(self.error("expected '('"));
        }
        let close = self.src[self.pos..]
            .find(')')
            .ok_or_else(|| self.error("unclosed '('"))?;
        self.pos += close + 1;
        let text = &self.src[start..self.pos];
        text.parse().map_err(|_| {
            Cursor {
                src: self.src,
                pos: start,
            }
            .error(format!("bad permutation {text}"))
        })
    }
}

impl FromStr for OperadElement<Rational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor { src: s, pos: 0 };
        cur.skip_ws();
        // explicit zero "0[n]"
        let save = cur.pos;
        if cur.number().is_some_and(|z| z.is_zero()) && cur.eat('[') {
            let n = cur.number().ok_or_else(|| cur.error("expected arity"))?;
            if !cur.eat(']') {
                return Err(cur.error("expected ']'"));
            }
            cur.skip_ws();
            if cur.pos != s.len() {
                return Err(cur.error("trailing input"));
            }
            let n: usize = n.try_into().map_err(|_| cur.error("arity too large"))?;
            return Ok(OperadElement::zero(n));
        }
        cur.pos = save;
        let mut out: Option<OperadElement<Rational>> = None;
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.pos == s.len() {
                if first {
                    return Err(cur.error("empty element"));
                }
                break;
            }
            let mut sign = Rational::one();
            if cur.eat('-') {
                sign = -sign;
            } else if !cur.eat('+') && !first {
                return Err(cur.error("expected '+' or '-'"));
            }
            let coeff = match cur.rational()? {
                Some(c) => {
                    cur.eat('*');
                    c
                }
                None => Rational::one(),
            };
            let term_pos = cur.pos;
            let p = cur.permutation()?;
            let acc = out.get_or_insert_with(|| OperadElement::zero(p.arity()));
            if acc.arity() != p.arity() {
                return Err(Cursor {
                    src: s,
                    pos: term_pos,
                }
                .error(format!(
                    "arity {} does not match {}",
                    p.arity(),
                    acc.arity()
                )));
            }
            acc.add_term(p, sign * coeff);
            first = false;
        }
        Ok(out.expect("at least one term"))
    }
}

impl Serialize for OperadElement<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for OperadElement<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = OperadElement<Rational>;

    #[test]
    fn round_trip() {
        for text in [
            "3/2*(2,1,4,3) - (4,3,2,1)",
            "-(2,1) + (1,2)",
            "0[4]",
            "()",
            "-2*()",
            "(1,2,3) - (2,1,3) - (3,1,2) + (3,2,1)",
        ] {
            let e: E = text.parse().unwrap();
            let again: E = e.to_string().parse().unwrap();
            assert_eq!(e, again, "{text}");
        }
        let e: E = "3/2*(2,1,4,3) - (4,3,2,1)".parse().unwrap();
        assert_eq!(e.to_string(), "3/2*(2,1,4,3) - (4,3,2,1)");
    }

    #[test]
    fn canonical_printing() {
        let e: E = "(2,1) + 2 (1,2) - (2,1) + 4/6*(2,1)".parse().unwrap();
        assert_eq!(e.to_string(), "2*(1,2) + 2/3*(2,1)");
        let z: E = "(1,2) - (1,2)".parse().unwrap();
        assert_eq!(z.to_string(), "0[2]");
    }

    #[test]
    fn errors_carry_positions() {
        match "(1,2) + (1,2,3)".parse::<E>() {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (1, 9)),
            other => panic!("{other:?}"),
        }
        match "(1,2)\n+ 1/0*(2,1)".parse::<E>() {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!("(1,1)".parse::<E>().is_err());
        assert!("".parse::<E>().is_err());
        assert!("(1,2) (2,1)".parse::<E>().is_err());
    }

    #[test]
    fn json_form() {
        let e: E = "1/2*(2,1) - (1,2)".parse().unwrap();
        let js = serde_json::to_string(&e).unwrap();
        assert_eq!(js, "\"-(1,2) + 1/2*(2,1)\"");
        assert_eq!(serde_json::from_str::<E>(&js).unwrap(), e);
    }
}
