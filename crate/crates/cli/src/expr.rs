//! A small expression language over `B[0,∞) ∪ {0}`.
//!
//! ```text
//! top    := expr [ "<=" expr ]
//! expr   := unary { "*" unary }
//! unary  := atom { "^-1" }
//! atom   := "0" | "(" scalar "," scalar ")" | "(" expr ")"
//! scalar := digits [ "/" digits | "." digits ]
//! ```
//!
//! Decimals must have a finite expansion and are read exactly.

use std::fmt;
use std::str::FromStr;

use bicyclic_core::{Elem, ExtElem, QElem, QExtElem, QNbhdAc2, Rational};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Elem(QExtElem),
    Bool(bool),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Elem(e) => write!(f, "{e}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

type PResult<T> = Result<T, HarnessError>;

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> HarnessError {
        HarnessError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(0, char::len_utf8);
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> PResult<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{tok}`")))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let rest = self.rest();
        let n = rest.bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            return None;
        }
        self.pos += n;
        Some(&rest[..n])
    }

    fn scalar(&mut self) -> PResult<Rational> {
        self.skip_ws();
        let start = self.pos;
        if self.rest().starts_with('-') {
            self.pos += 1;
            if self.digits().is_some() {
                return Err(HarnessError::Core(bicyclic_core::Error::NegativeScalar(
                    self.src[start..self.pos].to_string(),
                )));
            }
            self.pos = start;
        }
        let whole = self.digits().ok_or_else(|| self.err("expected a number"))?;
        let int = |s: &str| BigInt::from_str(s).expect("ascii digits");
        if self.rest().starts_with('/') {
            self.pos += 1;
            let den = self.digits().ok_or_else(|| self.err("expected a denominator"))?;
            let den = int(den);
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Rational::new(int(whole), den));
        }
        if self.rest().starts_with('.') {
            self.pos += 1;
            let frac = self.digits().ok_or_else(|| self.err("expected digits after `.`"))?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            return Ok(Rational::new(int(whole) * scale.clone() + int(frac), scale));
        }
        Ok(Rational::from_integer(int(whole)))
    }

    fn atom(&mut self) -> PResult<QExtElem> {
        self.skip_ws();
        if self.eat("(") {
            let save = self.pos;
            match self.scalar() {
                Ok(a) if self.eat(",") => {
                    let b = self.scalar()?;
                    self.expect(")")?;
                    return Ok(ExtElem::Point(Elem::new(a, b)?));
                }
                Err(e @ HarnessError::Core(_)) => return Err(e),
                _ => {}
            }
            self.pos = save;
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        let save = self.pos;
        if self.digits() == Some("0") && !self.rest().starts_with(['/', '.']) {
            return Ok(ExtElem::Zero);
        }
        self.pos = save;
        Err(self.err("expected `0` or `(`"))
    }

    fn unary(&mut self) -> PResult<QExtElem> {
        let mut e = self.atom()?;
        while self.eat("^-1") {
            e = e.inv();
        }
        Ok(e)
    }

    fn expr(&mut self) -> PResult<QExtElem> {
        let mut e = self.unary()?;
        while self.eat("*") {
            let rhs = self.unary()?;
            e = e.mul(&rhs);
        }
        Ok(e)
    }

    fn top(&mut self) -> PResult<Value> {
        let lhs = self.expr()?;
        let v = if self.eat("<=") {
            let rhs = self.expr()?;
            Value::Bool(lhs.natural_leq(&rhs))
        } else {
            Value::Elem(lhs)
        };
        self.skip_ws();
        if !self.rest().is_empty() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

pub fn parse_expr(text: &str) -> Result<Value, HarnessError> {
    Parser { src: text, pos: 0 }.top()
}

pub fn parse_scalar(text: &str) -> Result<Rational, HarnessError> {
    let mut p = Parser { src: text, pos: 0 };
    let v = p.scalar()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// An expression that must evaluate to a non-zero element.
pub fn parse_elem(text: &str) -> Result<QElem, HarnessError> {
    match parse_expr(text)? {
        Value::Elem(ExtElem::Point(e)) => Ok(e),
        other => Err(HarnessError::Parse { pos: 0, msg: format!("expected an element, got {other}") }),
    }
}

/// `(3,1);(2,5)`: the excluded tops of a basic neighbourhood of zero.
pub fn parse_tops(text: &str) -> Result<QNbhdAc2, HarnessError> {
    let tops = text.split(';').map(parse_elem).collect::<Result<Vec<_>, _>>()?;
    Ok(QNbhdAc2::new(tops)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bicyclic_core::{q, qe};

    fn elem(text: &str) -> QElem {
        parse_elem(text).unwrap()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(elem("(1,3)*(2,5)"), qe(1, 6));
        assert_eq!(elem("((1,6))^-1"), qe(6, 1));
        assert_eq!(parse_expr("(3,5) <= (1,3)").unwrap(), Value::Bool(true));
        assert_eq!(parse_expr("(1,3) <= (3,5)").unwrap(), Value::Bool(false));
    }

    #[test]
    fn literals() {
        assert_eq!(elem("(1/2, 0.25)"), Elem::new(q(1, 2), q(1, 4)).unwrap());
        assert_eq!(elem("(2/4,3)"), Elem::new(q(1, 2), q(3, 1)).unwrap());
        assert_eq!(parse_expr("0").unwrap(), Value::Elem(ExtElem::Zero));
        assert_eq!(parse_expr("(0)").unwrap(), Value::Elem(ExtElem::Zero));
        assert_eq!(parse_expr("(1,2) * 0").unwrap(), Value::Elem(ExtElem::Zero));
        assert_eq!(parse_expr("0 <= (1,2)").unwrap(), Value::Bool(true));
        assert_eq!(parse_scalar("1.5").unwrap(), q(3, 2));
    }

    #[test]
    fn precedence() {
        // inversion binds tighter than the product
        assert_eq!(elem("(1,3)*(2,5)^-1"), qe(1, 3).mul(&qe(5, 2)));
        assert_eq!(elem("((1,3)*(2,5))^-1"), qe(6, 1));
        assert_eq!(elem("(1,2)*(3,4)*(5,6)"), qe(1, 2).mul(&qe(3, 4)).mul(&qe(5, 6)));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_expr("(-1,2)"), Err(HarnessError::Core(bicyclic_core::Error::NegativeScalar(_)))));
        assert!(matches!(parse_expr("(1,-2)"), Err(HarnessError::Core(bicyclic_core::Error::NegativeScalar(_)))));
        assert!(matches!(parse_expr("(1,2"), Err(HarnessError::Parse { pos: 4, .. })));
        assert!(matches!(parse_expr("(1,2) +"), Err(HarnessError::Parse { pos: 6, .. })));
        assert!(matches!(parse_expr("(1/0,2)"), Err(HarnessError::Parse { .. })));
        assert!(matches!(parse_expr("1"), Err(HarnessError::Parse { pos: 0, .. })));
        assert!(parse_elem("0").is_err());
    }

    #[test]
    fn tops() {
        let n = parse_tops("(3,1);(2,5)").unwrap();
        assert_eq!(n.tops(), &[qe(3, 1), qe(2, 5)]);
    }
}
