//! Polynomial expressions: tokenizer, recursive-descent parser, printer and
//! lowering to exact polynomials.
//!
//! Grammar:
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)*
//! atom  := integer | ident | 'zeta' '(' integer ')' | '(' expr ')'
//! ```
//! The identifiers `i`, `sqrt2`, `sqrt5` and `sqrtm3` are constants.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use stacky_core::exactnum::{Cyclotomic, Rational};
use stacky_core::polyalg::{var_list, BinaryForm, PolyError};
use stacky_core::{Form, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sugar {
    I,
    Sqrt2,
    Sqrt5,
    SqrtM3,
}

impl Sugar {
    fn from_name(s: &str) -> Option<Sugar> {
        match s {
            "i" => Some(Sugar::I),
            "sqrt2" => Some(Sugar::Sqrt2),
            "sqrt5" => Some(Sugar::Sqrt5),
            "sqrtm3" => Some(Sugar::SqrtM3),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Sugar::I => "i",
            Sugar::Sqrt2 => "sqrt2",
            Sugar::Sqrt5 => "sqrt5",
            Sugar::SqrtM3 => "sqrtm3",
        }
    }

    pub fn value(&self) -> Cyclotomic {
        match self {
            Sugar::I => Cyclotomic::i(),
            Sugar::Sqrt2 => Cyclotomic::sqrt2(),
            Sugar::Sqrt5 => Cyclotomic::sqrt5(),
            Sugar::SqrtM3 => Cyclotomic::sqrt_m3(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Zeta(u32),
    Const(Sugar),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {pos}: {message}")]
pub struct ParseError {
    /// Character offset into the input.
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LowerError {
    #[error("unknown identifier {0}")]
    UnknownIdentifier(String),
    #[error("invalid cyclotomic order {0}")]
    InvalidZeta(u32),
    #[error("expression is not a binary form: {0}")]
    NotAForm(PolyError),
    #[error("expected a constant, found variable {0}")]
    NotConstant(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let start = k;
        let tok = match c {
            _ if c.is_whitespace() => {
                k += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let s: String = chars[start..k].iter().collect();
                out.push((start, Tok::Int(s.parse().expect("digits"))));
                continue;
            }
            _ if c.is_alphabetic() || c == '_' => {
                while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                out.push((start, Tok::Ident(chars[start..k].iter().collect())));
                continue;
            }
            _ => {
                return Err(ParseError {
                    pos: start,
                    message: format!("unexpected character '{c}'"),
                })
            }
        };
        out.push((start, tok));
        k += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.at += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            let e = self.small_int("exponent")?;
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn small_int(&mut self, what: &str) -> Result<u32, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => u32::try_from(&n).map_err(|_| ParseError {
                pos,
                message: format!("{what} {n} is too large"),
            }),
            _ => Err(ParseError {
                pos,
                message: format!("expected a nonnegative integer {what}"),
            }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "zeta" {
                    self.expect(Tok::LParen, "'(' after zeta")?;
                    let m = self.small_int("cyclotomic order")?;
                    self.expect(Tok::RParen, "')'")?;
                    return Ok(Expr::Zeta(m));
                }
                Ok(match Sugar::from_name(&name) {
                    Some(s) => Expr::Const(s),
                    None => Expr::Var(name),
                })
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(_) => self.fail("expected a number, identifier or '('"),
            None => self.fail("unexpected end of input"),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.chars().count(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Variable names in first-occurrence order.
    pub fn variables(&self) -> Vec<String> {
        fn go(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Var(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Expr::Neg(a) | Expr::Pow(a, _) => go(a, out),
                Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                _ => {}
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    pub fn lower(&self, vars: &Arc<[String]>) -> Result<Poly, LowerError> {
        let constant = |c: Cyclotomic| Poly::constant(vars.clone(), c);
        Ok(match self {
            Expr::Num(n) => constant(Cyclotomic::from_rational(Rational::from_integer(n.clone()))),
            Expr::Zeta(m) => {
                constant(Cyclotomic::zeta(*m).map_err(|_| LowerError::InvalidZeta(*m))?)
            }
            Expr::Const(s) => constant(s.value()),
            Expr::Var(v) => {
                let k = vars
                    .iter()
                    .position(|n| n == v)
                    .ok_or_else(|| LowerError::UnknownIdentifier(v.clone()))?;
                Poly::var(vars.clone(), k)
            }
            Expr::Neg(a) => a.lower(vars)?.neg(),
            Expr::Add(a, b) => a.lower(vars)?.add(&b.lower(vars)?),
            Expr::Sub(a, b) => a.lower(vars)?.sub(&b.lower(vars)?),
            Expr::Mul(a, b) => a.lower(vars)?.mul(&b.lower(vars)?),
            Expr::Pow(a, k) => a.lower(vars)?.pow(*k),
        })
    }

    /// A binary form in `x`, `y`.
    pub fn lower_form(&self) -> Result<Form, LowerError> {
        let p = self.lower(&var_list(&["x", "y"]))?;
        BinaryForm::from_poly(&p).map_err(LowerError::NotAForm)
    }

    /// A constant of Q(ζ_m).
    pub fn lower_constant(&self) -> Result<Cyclotomic, LowerError> {
        if let Some(v) = self.variables().first() {
            return Err(LowerError::NotConstant(v.clone()));
        }
        Ok(self.lower(&var_list(&[]))?.constant_term())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool| {
            if parens {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        let p = self.precedence();
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Zeta(m) => write!(f, "zeta({m})"),
            Expr::Const(s) => write!(f, "{}", s.name()),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, a.precedence() < p)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                let op = match self {
                    Expr::Add(..) => " + ",
                    Expr::Sub(..) => " - ",
                    _ => "*",
                };
                wrap(f, a, a.precedence() < p)?;
                write!(f, "{op}")?;
                // Operators associate to the left, so an equal-precedence
                // right operand keeps its parentheses.
                wrap(f, b, b.precedence() <= p)
            }
            Expr::Pow(a, k) => {
                wrap(f, a, a.precedence() < p)?;
                write!(f, "^{k}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(n: i64) -> Expr {
        Expr::Num(n.into())
    }

    #[test]
    fn examples() {
        let t = parse_poly("x^4 + 2*sqrtm3*x^2*y^2 + y^4").unwrap();
        let f = t.lower_form().unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(
            f.coeff(2),
            &Cyclotomic::sqrt_m3().scale(&Rational::from_integer(2.into()))
        );
        let o = parse_poly("x*y*(x^4 - y^4)").unwrap().lower_form().unwrap();
        assert_eq!(o.coeff(1), &Cyclotomic::from_i64(1));
        assert_eq!(o.coeff(5), &Cyclotomic::from_i64(-1));
        let e = parse_poly("").unwrap_err();
        assert_eq!(e.pos, 0);
    }

    #[test]
    fn structure() {
        assert_eq!(
            parse_poly("-x^2").unwrap(),
            Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Var("x".into())), 2)))
        );
        assert_eq!(
            parse_poly("1 - 2 - 3").unwrap(),
            Expr::Sub(
                Box::new(Expr::Sub(Box::new(num(1)), Box::new(num(2)))),
                Box::new(num(3))
            )
        );
        assert_eq!(parse_poly("zeta(5)").unwrap(), Expr::Zeta(5));
        assert_eq!(parse_poly("i").unwrap(), Expr::Const(Sugar::I));
        assert_eq!(
            parse_poly("1 - (2 - 3)").unwrap().to_string(),
            "1 - (2 - 3)"
        );
        assert_eq!(parse_poly("(x^2)^3").unwrap().to_string(), "x^2^3");
        assert_eq!(parse_poly("(-x)^2").unwrap().to_string(), "(-x)^2");
        assert_eq!(parse_poly("2*-x").unwrap().to_string(), "2*-x");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("x + ").unwrap_err().pos, 4);
        assert_eq!(parse_poly("x $ y").unwrap_err().pos, 2);
        assert_eq!(parse_poly("(x + y").unwrap_err().pos, 6);
        assert_eq!(parse_poly("x^y").unwrap_err().pos, 2);
        assert_eq!(parse_poly("x y").unwrap_err().pos, 2);
        assert!(parse_poly("zeta 3").is_err());
        assert!(matches!(
            parse_poly("z*x").unwrap().lower_form(),
            Err(LowerError::UnknownIdentifier(v)) if v == "z"
        ));
        assert!(matches!(
            parse_poly("x + 1").unwrap().lower_form(),
            Err(LowerError::NotAForm(_))
        ));
        assert!(matches!(
            parse_poly("zeta(0)").unwrap().lower_constant(),
            Err(LowerError::InvalidZeta(0))
        ));
    }

    #[test]
    fn sugar_values() {
        let c = |s: &str| parse_poly(s).unwrap().lower_constant().unwrap();
        assert_eq!(c("i^2"), Cyclotomic::from_i64(-1));
        assert_eq!(c("sqrtm3^2"), Cyclotomic::from_i64(-3));
        assert_eq!(c("sqrt2*sqrt2"), Cyclotomic::from_i64(2));
        assert_eq!(c("sqrt5^2"), Cyclotomic::from_i64(5));
        assert_eq!(c("1 + 2*zeta(3)"), Cyclotomic::sqrt_m3());
    }
}
