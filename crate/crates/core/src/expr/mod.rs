//! Asymptotic complexity expressions in one variable `n`.
//!
//! `log` is the natural logarithm and `exp` is base e. A base-2 logarithm is
//! written `log(n)/log(2)`.

mod compare;
mod eval;
mod parser;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use compare::{asymptotic_compare, Asymptotic};
pub use eval::{eval_log10, eval_log10_raw, X_MIN};
pub use parser::parse;

use crate::error::Error;

pub type Rational = num_rational::Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ComplexityExpr {
    /// Strictly positive constant.
    Const(Rational),
    /// The problem size `n`.
    Var,
    Log(Box<ComplexityExpr>),
    Exp(Box<ComplexityExpr>),
    Pow(Box<ComplexityExpr>, Rational),
    Mul(Vec<ComplexityExpr>),
    Add(Vec<ComplexityExpr>),
}

impl ComplexityExpr {
    pub fn constant(value: i64) -> Self {
        ComplexityExpr::Const(Rational::from_integer(value))
    }

    pub fn log(child: ComplexityExpr) -> Self {
        ComplexityExpr::Log(Box::new(child))
    }

    pub fn exp(child: ComplexityExpr) -> Self {
        ComplexityExpr::Exp(Box::new(child))
    }

    pub fn pow(base: ComplexityExpr, exponent: Rational) -> Self {
        ComplexityExpr::Pow(Box::new(base), exponent)
    }

    pub fn powi(base: ComplexityExpr, exponent: i64) -> Self {
        Self::pow(base, Rational::from_integer(exponent))
    }

    pub fn sqrt(base: ComplexityExpr) -> Self {
        Self::pow(base, Rational::new(1, 2))
    }

    /// Canonical text form; `parse(&e.render())` reproduces `e`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write_expr(&mut out);
        out
    }

    fn write_expr(&self, out: &mut String) {
        match self {
            ComplexityExpr::Add(children) => {
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" + ");
                    }
                    c.write_term(out);
                }
            }
            _ => self.write_term(out),
        }
    }

    fn write_term(&self, out: &mut String) {
        match self {
            ComplexityExpr::Mul(children) => {
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    c.write_factor(out);
                }
            }
            ComplexityExpr::Add(_) => self.write_parenthesized(out),
            _ => self.write_factor(out),
        }
    }

    fn write_factor(&self, out: &mut String) {
        match self {
            ComplexityExpr::Const(r) => write_rational(*r, out),
            ComplexityExpr::Var => out.push('n'),
            ComplexityExpr::Log(c) => {
                out.push_str("log(");
                c.write_expr(out);
                out.push(')');
            }
            ComplexityExpr::Exp(c) => {
                out.push_str("exp(");
                c.write_expr(out);
                out.push(')');
            }
            ComplexityExpr::Pow(base, q) => {
                match **base {
                    ComplexityExpr::Var
                    | ComplexityExpr::Log(_)
                    | ComplexityExpr::Exp(_)
                    | ComplexityExpr::Const(_) => base.write_factor(out),
                    _ => base.write_parenthesized(out),
                }
                out.push('^');
                if q.is_integer() && !q.is_negative() {
                    out.push_str(&q.numer().to_string());
                } else {
                    out.push('(');
                    out.push_str(&q.numer().to_string());
                    if !q.is_integer() {
                        out.push('/');
                        out.push_str(&q.denom().to_string());
                    }
                    out.push(')');
                }
            }
            ComplexityExpr::Mul(_) | ComplexityExpr::Add(_) => self.write_parenthesized(out),
        }
    }

    fn write_parenthesized(&self, out: &mut String) {
        out.push('(');
        self.write_expr(out);
        out.push(')');
    }

    /// Checks the structural invariants parsing guarantees: positive
    /// constants and at least two children in every sum or product.
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            ComplexityExpr::Const(r) => {
                if r.is_positive() {
                    Ok(())
                } else {
                    Err(Error::NonPositiveConstant { offset: 0 })
                }
            }
            ComplexityExpr::Var => Ok(()),
            ComplexityExpr::Log(c) | ComplexityExpr::Exp(c) | ComplexityExpr::Pow(c, _) => {
                c.validate()
            }
            ComplexityExpr::Mul(cs) | ComplexityExpr::Add(cs) => {
                if cs.len() < 2 {
                    return Err(Error::Syntax {
                        offset: 0,
                        message: "sums and products need at least two operands".into(),
                    });
                }
                cs.iter().try_for_each(ComplexityExpr::validate)
            }
        }
    }

    /// True when every atom is nondecreasing in `n` (no negative exponents).
    pub fn is_syntactically_monotone(&self) -> bool {
        match self {
            ComplexityExpr::Const(_) | ComplexityExpr::Var => true,
            ComplexityExpr::Log(c) | ComplexityExpr::Exp(c) => c.is_syntactically_monotone(),
            ComplexityExpr::Pow(c, q) => !q.is_negative() && c.is_syntactically_monotone(),
            ComplexityExpr::Mul(cs) | ComplexityExpr::Add(cs) => {
                cs.iter().all(ComplexityExpr::is_syntactically_monotone)
            }
        }
    }
}

fn write_rational(r: Rational, out: &mut String) {
    if r.is_integer() {
        out.push_str(&r.numer().to_string());
    } else {
        out.push('(');
        out.push_str(&r.numer().to_string());
        out.push('/');
        out.push_str(&r.denom().to_string());
        out.push(')');
    }
}

pub(crate) fn rational_to_f64(r: Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    if r.is_one() {
        return 1.0;
    }
    *r.numer() as f64 / *r.denom() as f64
}

impl fmt::Display for ComplexityExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for ComplexityExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl Serialize for ComplexityExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for ComplexityExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse(&text).map_err(serde::de::Error::custom)
    }
}
