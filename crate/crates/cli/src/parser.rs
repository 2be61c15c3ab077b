//! Recursive descent parser for the expression grammar:
//!
//! ```text
//! expr     := term (("+"|"-") term)*
//! term     := factor (("*"|"/") factor)*
//! factor   := ("-")* atom ("^" rational)?
//! atom     := integer | "X" | name "(" expr ")"
//!           | "subs" "(" expr "," expr ")" | "(" expr ")"
//! rational := ("-")? integer ("/" integer)?
//! ```
//!
//! Left associative; `^` binds tighter than a unary minus on its left, so
//! `-X^2` is `-(X^2)`. Whitespace is insignificant. Errors carry the byte
//! position of the offending token.

use crate::ast::{CallName, Expr};
use fps_core::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn parse(src: &str) -> Result<Expr, Error> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                acc = Expr::Add(Box::new(acc), Box::new(rhs));
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                acc = Expr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, Error> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.factor()?;
                acc = Expr::Mul(Box::new(acc), Box::new(rhs));
            } else if self.eat(b'/') {
                let rhs = self.factor()?;
                acc = Expr::Div(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, Error> {
        let mut negations = 0usize;
        while self.eat(b'-') {
            negations += 1;
        }
        let mut base = self.atom()?;
        if self.eat(b'^') {
            let exponent = self.rational_literal()?;
            base = Expr::Pow(Box::new(base), exponent);
        }
        for _ in 0..negations {
            base = Expr::Neg(Box::new(base));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer_literal()?;
                self.skip_ws();
                Ok(Expr::Number(BigRational::from(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric())
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos])
                    .expect("ascii slice")
                    .to_string();
                self.skip_ws();
                if name == "X" {
                    return Ok(Expr::Var);
                }
                if name == "subs" {
                    self.expect(b'(')?;
                    let outer = self.expr()?;
                    self.expect(b',')?;
                    let inner = self.expr()?;
                    self.expect(b')')?;
                    return Ok(Expr::Subs(Box::new(outer), Box::new(inner)));
                }
                match CallName::from_name(&name) {
                    Some(call) => {
                        self.expect(b'(')?;
                        let arg = self.expr()?;
                        self.expect(b')')?;
                        Ok(Expr::Call(call, Box::new(arg)))
                    }
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown name {name:?}")))
                    }
                }
            }
            Some(c) => Err(self.error(&format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer_literal(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        text.parse::<BigInt>()
            .map_err(|_| self.error("invalid integer literal"))
    }

    /// Exponent literals: optionally signed, with an optional denominator.
    fn rational_literal(&mut self) -> Result<BigRational, Error> {
        self.skip_ws();
        let negative = self.eat(b'-');
        let numer = self.integer_literal()?;
        let numer = if negative { -numer } else { numer };
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let denom_pos = self.pos;
            let denom = self.integer_literal()?;
            if denom == BigInt::from(0) {
                return Err(Error::Parse {
                    position: denom_pos,
                    message: "zero denominator in exponent literal".to_string(),
                });
            }
            self.skip_ws();
            Ok(BigRational::new(numer, denom))
        } else {
            self.skip_ws();
            Ok(BigRational::from(numer))
        }
    }
}
