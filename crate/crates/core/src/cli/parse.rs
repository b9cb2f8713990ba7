//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ['^' nat]
//! base   := ident | integer | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication: `2dhx` is one identifier.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::numeric::{ParamFraction, Rational};
use crate::poly::{MonomialOrder, Polynomial, VarContext};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Int(n) => format!("integer `{n}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(Error::parse(i, "implicit multiplication is not allowed; use `*`"));
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(Error::parse(i, format!("unexpected character `{ch}`")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ctx: &'a Arc<VarContext>,
    order: MonomialOrder,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let d = self.factor()?;
                    let Some(c) = d.as_constant() else {
                        return Err(Error::parse(at, "division by an expression containing variables"));
                    };
                    if c.is_zero() {
                        return Err(Error::parse(at, "division by zero"));
                    }
                    acc = acc.scale(&c.inv()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => {
                let k: u32 = n.try_into().map_err(|_| Error::parse(at, "exponent is too large"))?;
                Ok(base.pow(k))
            }
            Tok::Minus => Err(Error::parse(at, "negative exponent")),
            t => Err(Error::parse(
                at,
                format!("expected an exponent, found {}", describe(&t)),
            )),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => Ok(Polynomial::constant(
                self.ctx,
                self.order,
                ParamFraction::from_rational(self.ctx.nparams(), Rational::from_integer(n)),
            )),
            Tok::Ident(name) => {
                if self.ctx.var_index(&name).is_some() {
                    Polynomial::var_named(self.ctx, self.order, &name)
                } else if self.ctx.param_index(&name).is_some() {
                    Polynomial::param_named(self.ctx, self.order, &name)
                } else {
                    Err(Error::parse(at, format!("unknown identifier `{name}`")))
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    t => Err(Error::parse(close, format!("expected `)`, found {}", describe(&t)))),
                }
            }
            t => Err(Error::parse(at, format!("expected a term, found {}", describe(&t)))),
        }
    }
}

/// Parses `text` into a polynomial of `ctx` under `order`.
pub fn parse_expression(text: &str, ctx: &Arc<VarContext>, order: MonomialOrder) -> Result<Polynomial> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        ctx,
        order,
    };
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(Error::parse(
            p.offset(),
            format!("unexpected {} after expression", describe(p.peek())),
        ));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::poly::Monomial;

    fn ctx() -> Arc<VarContext> {
        VarContext::new(&["x", "y", "z"], &["a", "b"]).unwrap()
    }

    fn p(s: &str) -> Result<Polynomial> {
        parse_expression(s, &ctx(), MonomialOrder::Lex)
    }

    #[test]
    fn paraboloid_generator() {
        let f = p("z - x^2/a^2 - y^2/b^2").unwrap();
        assert_eq!(f.len(), 3);
        let c = ctx();
        let a = Polynomial::param_named(&c, MonomialOrder::Lex, "a").unwrap();
        let coef = f.coefficient_of(&Monomial::new(vec![2, 0, 0]));
        assert_eq!(coef, -a.pow(2).as_constant().unwrap().inv().unwrap());
    }

    #[test]
    fn precedence_and_unary_minus() {
        assert_eq!(p("-x^2").unwrap(), -p("x*x").unwrap());
        assert_eq!(p("2*x + 3*x").unwrap(), p("5*x").unwrap());
        assert_eq!(p("x - y - z").unwrap(), p("x - (y + z)").unwrap());
        assert_eq!(p("a/b*y").unwrap(), p("(a*y)/b").unwrap());
        assert_eq!(p("x/a^2").unwrap(), p("x/(a*a)").unwrap());
        assert!(p("0").unwrap().is_zero());
        assert_eq!(p("x + y*z + y - z^4 - 4").unwrap().len(), 5);
        assert_eq!(p("(x)^0").unwrap().as_constant().unwrap().as_rational(), Some(rat(1)));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(p("x + w"), Err(Error::parse(4, "unknown identifier `w`")));
        assert!(matches!(p("1/x"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(p("1/(a - a)"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(p("x^-1"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(p("2x"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(p("x y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(p("(x + 1"), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(p("x + "), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(p("x $ y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(p("--x"), Err(Error::Parse { pos: 1, .. })));
    }

    #[test]
    fn multi_letter_identifiers_are_single_tokens() {
        let c = VarContext::new(&["x"], &["dh"]).unwrap();
        let f = parse_expression("2*dh*x", &c, MonomialOrder::Lex).unwrap();
        assert_eq!(f.len(), 1);
        assert!(parse_expression("2*d*h*x", &c, MonomialOrder::Lex).is_err());
    }
}
