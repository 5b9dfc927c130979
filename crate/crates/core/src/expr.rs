//! Group expressions such as `Z6 x S3` or `E2^3 x (Z3 x D5)`.
//!
//! Atoms are `Z<n>` (cyclic), `S<n>` (symmetric), `A<n>` (alternating),
//! `D<n>` (dihedral of order 2n) and `E<p>^<k>` (elementary abelian). The
//! product `x` (or `×`) associates to the left.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{direct_product, Builtin, Group, DEFAULT_ORDER_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Atom(Builtin),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn parse(source: &str) -> Result<GroupExpr> {
        let mut parser = Parser { src: source, pos: 0 };
        parser.skip_ws();
        if parser.at_end() {
            return Err(parser.error("empty expression"));
        }
        let expr = parser.product()?;
        parser.skip_ws();
        if !parser.at_end() {
            return Err(parser.error("expected `x` or end of input"));
        }
        Ok(expr)
    }

    pub fn order(&self) -> u128 {
        match self {
            GroupExpr::Atom(b) => b.order(),
            GroupExpr::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    pub fn build(&self, cap: usize) -> Result<Group> {
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        match self {
            GroupExpr::Atom(b) => b.build(cap),
            GroupExpr::Product(a, b) => direct_product(&a.build(cap)?, &b.build(cap)?, cap),
        }
    }
}

/// Canonical form: single spaces around `x`, parentheses only where the
/// right operand is itself a product.
impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom(b) => match *b {
                Builtin::Cyclic(n) => write!(f, "Z{n}"),
                Builtin::Symmetric(n) => write!(f, "S{n}"),
                Builtin::Alternating(n) => write!(f, "A{n}"),
                Builtin::Dihedral(n) => write!(f, "D{n}"),
                Builtin::Elementary { p, k } => write!(f, "E{p}^{k}"),
            },
            GroupExpr::Product(a, b) => match **b {
                GroupExpr::Product(..) => write!(f, "{a} x ({b})"),
                GroupExpr::Atom(_) => write!(f, "{a} x {b}"),
            },
        }
    }
}

pub fn parse_group_expr(source: &str) -> Result<Group> {
    parse_group_expr_capped(source, DEFAULT_ORDER_CAP)
}

pub fn parse_group_expr_capped(source: &str, cap: usize) -> Result<Group> {
    GroupExpr::parse(source)?.build(cap)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn product(&mut self) -> Result<GroupExpr> {
        let mut left = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('x' | '×') => {
                    self.bump();
                    let right = self.term()?;
                    left = GroupExpr::Product(Box::new(left), Box::new(right));
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.product()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(_) => self.atom(),
            None => Err(self.error("expected a group")),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.src[start..self.pos].parse().map_err(|_| Error::Syntax {
            offset: start,
            message: "number too large".into(),
        })
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        let start = self.pos;
        let kind = self.bump().expect("caller checked input remains");
        let n = self.number()?;
        let builtin = match kind {
            'Z' => Builtin::Cyclic(n),
            'S' => Builtin::Symmetric(n),
            'A' => Builtin::Alternating(n),
            'D' => Builtin::Dihedral(n),
            'E' => {
                if self.peek() != Some('^') {
                    return Err(self.error("expected `^` in elementary group"));
                }
                self.bump();
                let k = self.number()?;
                Builtin::Elementary { p: n, k }
            }
            _ => {
                return Err(Error::Syntax {
                    offset: start,
                    message: format!("unknown group `{kind}`"),
                })
            }
        };
        Ok(GroupExpr::Atom(builtin))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_group_expr("Z6").unwrap().order(), 6);
        let v = parse_group_expr("Z2 x Z2").unwrap();
        assert_eq!((v.order(), v.factors().len()), (4, 2));
        let g = parse_group_expr("Z6 x S3").unwrap();
        assert_eq!((g.order(), g.factors().len()), (36, 2));
        assert_eq!(g.factors()[0].order(), 6);
        assert_eq!(g.factors()[1].order(), 6);
        assert_eq!(parse_group_expr("E2^3").unwrap().factors().len(), 3);
        assert_eq!(parse_group_expr("D6").unwrap().order(), 12);
    }

    #[test]
    fn rendering_is_canonical() {
        for (input, canonical) in [
            ("Z6", "Z6"),
            ("  Z2x Z3 ", "Z2 x Z3"),
            ("(Z2 x Z3) x Z5", "Z2 x Z3 x Z5"),
            ("Z2 x (Z3 x Z5)", "Z2 x (Z3 x Z5)"),
            ("E3^2×S3", "E3^2 x S3"),
        ] {
            let e = GroupExpr::parse(input).unwrap();
            assert_eq!(e.to_string(), canonical);
            assert_eq!(GroupExpr::parse(canonical).unwrap(), e);
        }
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        for (input, offset) in [("", 0), ("Z", 1), ("Q4", 0), ("Z2 x", 4), ("(Z2", 3), ("Z2 Z3", 3), ("E2", 2)] {
            match GroupExpr::parse(input) {
                Err(Error::Syntax { offset: o, .. }) => assert_eq!(o, offset, "{input}"),
                other => panic!("{input}: {other:?}"),
            }
        }
    }

    #[test]
    fn order_cap() {
        assert!(matches!(
            parse_group_expr_capped("S5 x S5", 1000),
            Err(Error::OrderCapExceeded { order: 14400, cap: 1000 })
        ));
    }
}
