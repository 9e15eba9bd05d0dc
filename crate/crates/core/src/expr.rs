//! A small arithmetic expression grammar shared by every textual input:
//! field elements, Laurent polynomials, p-polynomials and skew polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Sym(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            let v = lit.parse().map_err(|_| Error::Parse(format!("integer literal too large: {lit}")))?;
            out.push(Tok::Int(v));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}' in \"{s}\"")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if op == '*' {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let neg = if self.peek_op() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            match self.toks.get(self.pos) {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    return Ok(Expr::Pow(Box::new(base), if neg { -k } else { *k }));
                }
                _ => return Err(Error::Parse("exponent must be an integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Sym(name))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in \"{s}\"")));
    }
    Ok(e)
}

/// A target ring for expression evaluation.
pub trait Domain {
    type Value: Clone;
    fn int(&self, v: i64) -> Result<Self::Value>;
    fn symbol(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value>;
    fn pow(&self, a: &Self::Value, k: i64) -> Result<Self::Value>;
}

pub fn eval<D: Domain>(e: &Expr, d: &D) -> Result<D::Value> {
    match e {
        Expr::Int(v) => d.int(*v),
        Expr::Sym(s) => d.symbol(s),
        Expr::Add(a, b) => d.add(&eval(a, d)?, &eval(b, d)?),
        Expr::Sub(a, b) => d.sub(&eval(a, d)?, &eval(b, d)?),
        Expr::Mul(a, b) => d.mul(&eval(a, d)?, &eval(b, d)?),
        Expr::Div(a, b) => d.div(&eval(a, d)?, &eval(b, d)?),
        Expr::Neg(a) => d.neg(&eval(a, d)?),
        Expr::Pow(a, k) => d.pow(&eval(a, d)?, *k),
    }
}
