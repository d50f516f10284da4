//! Recursive-descent parser for the complexity grammar.
//!
//! ```text
//! expr     := term ('+' term)*
//! term     := power (('*' | '/' | <juxtaposition>) power)*
//! power    := primary ('^' exponent)*
//! primary  := NUMBER | 'n' | '(' expr ')' | func
//! func     := ('log' | 'ln' | 'exp' | 'sqrt') ('^' exponent)? ('(' expr ')' | power)
//! exponent := '-'? NUMBER | '(' '-'? NUMBER ('/' '-'? NUMBER)? ')'
//! ```
//!
//! `a / b` becomes `a * b^-1`; a constant divided by a constant folds into a
//! single rational so `(64/9)` stays a literal.

use num_traits::{Signed, Zero};

use super::{ComplexityExpr, Rational};
use crate::error::Error;

pub fn parse(text: &str) -> Result<ComplexityExpr, Error> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(Error::Syntax {
            offset: t.offset,
            message: format!("unexpected {}", t.kind.describe()),
        });
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Kind {
    fn describe(&self) -> String {
        match self {
            Kind::Number(s) => format!("number `{s}`"),
            Kind::Ident(s) => format!("identifier `{s}`"),
            Kind::Plus => "`+`".into(),
            Kind::Minus => "`-`".into(),
            Kind::Star => "`*`".into(),
            Kind::Slash => "`/`".into(),
            Kind::Caret => "`^`".into(),
            Kind::LParen => "`(`".into(),
            Kind::RParen => "`)`".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    offset: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, Error> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let kind = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Kind::Plus,
            '-' => Kind::Minus,
            '*' | '·' => Kind::Star,
            '/' => Kind::Slash,
            '^' => Kind::Caret,
            '(' => Kind::LParen,
            ')' => Kind::RParen,
            c if c.is_ascii_digit() || c == '.' => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    s.push(chars[i]);
                    i += 1;
                }
                // scientific suffix: e6, e-3, E+2
                if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        s.push('e');
                        s.extend(&chars[i + 1..j]);
                        i = j;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            s.push(chars[i]);
                            i += 1;
                        }
                    }
                }
                tokens.push(Token {
                    kind: Kind::Number(s),
                    offset: start,
                });
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    s.push(chars[i]);
                    i += 1;
                }
                tokens.push(Token {
                    kind: Kind::Ident(s),
                    offset: start,
                });
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    offset: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        tokens.push(Token {
            kind,
            offset: start,
        });
        i += 1;
    }
    Ok(tokens)
}

/// Exact rational value of a decimal literal such as `1.186` or `2.5e3`.
fn parse_number(s: &str, offset: usize) -> Result<Rational, Error> {
    let bad = || Error::Syntax {
        offset,
        message: format!("malformed number `{s}`"),
    };
    let overflow = || Error::LiteralOverflow { offset };
    let (mantissa, exp10) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mantissa, ""),
    };
    if (int_part.is_empty() && frac_part.is_empty()) || frac_part.contains('.') {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = digits.trim_start_matches('0');
    let mut numer: i64 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| overflow())?
    };
    let mut scale = exp10 - frac_part.len() as i32;
    let mut denom: i64 = 1;
    while scale > 0 {
        numer = numer.checked_mul(10).ok_or_else(overflow)?;
        scale -= 1;
    }
    while scale < 0 {
        denom = denom.checked_mul(10).ok_or_else(overflow)?;
        scale += 1;
    }
    Ok(Rational::new(numer, denom))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&Kind> {
        self.peek().map(|t| &t.kind)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |t| t.offset)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, kind: Kind) -> Result<(), Error> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(Error::Syntax {
                offset: t.offset,
                message: format!("expected {}, found {}", kind.describe(), t.kind.describe()),
            }),
            None => Err(Error::Syntax {
                offset: self.end,
                message: format!("expected {}, found end of input", kind.describe()),
            }),
        }
    }

    fn expr(&mut self) -> Result<ComplexityExpr, Error> {
        let mut terms = vec![self.term()?];
        while self.peek_kind() == Some(&Kind::Plus) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            ComplexityExpr::Add(terms)
        })
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek_kind(),
            Some(Kind::Number(_)) | Some(Kind::Ident(_)) | Some(Kind::LParen)
        )
    }

    fn term(&mut self) -> Result<ComplexityExpr, Error> {
        let mut factors = vec![self.power()?];
        loop {
            match self.peek_kind() {
                Some(Kind::Star) => {
                    self.pos += 1;
                    factors.push(self.power()?);
                }
                Some(Kind::Slash) => {
                    self.pos += 1;
                    let divisor = self.power()?;
                    let last = factors.pop().unwrap();
                    match (last, divisor) {
                        (ComplexityExpr::Const(a), ComplexityExpr::Const(b)) => {
                            factors.push(ComplexityExpr::Const(a / b));
                        }
                        (last, ComplexityExpr::Const(b)) => {
                            factors.push(last);
                            factors.push(ComplexityExpr::Const(Rational::from_integer(1) / b));
                        }
                        (last, divisor) => {
                            factors.push(last);
                            factors.push(ComplexityExpr::pow(
                                divisor,
                                Rational::from_integer(-1),
                            ));
                        }
                    }
                }
                _ if self.starts_factor() => factors.push(self.power()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            ComplexityExpr::Mul(factors)
        })
    }

    fn power(&mut self) -> Result<ComplexityExpr, Error> {
        let mut base = self.primary()?;
        while self.peek_kind() == Some(&Kind::Caret) {
            self.pos += 1;
            let q = self.exponent()?;
            base = ComplexityExpr::pow(base, q);
        }
        Ok(base)
    }

    fn signed_number(&mut self) -> Result<Rational, Error> {
        let negative = if self.peek_kind() == Some(&Kind::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let offset = self.offset();
        match self.bump() {
            Some(Token {
                kind: Kind::Number(s),
                offset,
            }) => {
                let v = parse_number(&s, offset)?;
                Ok(if negative { -v } else { v })
            }
            Some(t) => Err(Error::Syntax {
                offset: t.offset,
                message: format!("expected a rational exponent, found {}", t.kind.describe()),
            }),
            None => Err(Error::Syntax {
                offset,
                message: "expected a rational exponent, found end of input".into(),
            }),
        }
    }

    fn exponent(&mut self) -> Result<Rational, Error> {
        if self.peek_kind() == Some(&Kind::LParen) {
            self.pos += 1;
            let mut q = self.signed_number()?;
            if self.peek_kind() == Some(&Kind::Slash) {
                self.pos += 1;
                let offset = self.offset();
                let d = self.signed_number()?;
                if d.is_zero() {
                    return Err(Error::Syntax {
                        offset,
                        message: "division by zero in exponent".into(),
                    });
                }
                q /= d;
            }
            self.expect(Kind::RParen)?;
            Ok(q)
        } else {
            self.signed_number()
        }
    }

    fn primary(&mut self) -> Result<ComplexityExpr, Error> {
        let offset = self.offset();
        let Some(tok) = self.bump() else {
            return Err(Error::Syntax {
                offset,
                message: "unexpected end of input".into(),
            });
        };
        match tok.kind {
            Kind::Number(s) => {
                let v = parse_number(&s, tok.offset)?;
                if !v.is_positive() {
                    return Err(Error::NonPositiveConstant { offset: tok.offset });
                }
                Ok(ComplexityExpr::Const(v))
            }
            Kind::LParen => {
                let e = self.expr()?;
                self.expect(Kind::RParen)?;
                Ok(e)
            }
            Kind::Ident(name) => match name.as_str() {
                "n" | "N" => Ok(ComplexityExpr::Var),
                "log" | "ln" | "exp" | "sqrt" => self.function(&name),
                _ => Err(Error::Syntax {
                    offset: tok.offset,
                    message: format!("unknown identifier `{name}`"),
                }),
            },
            Kind::Minus => Err(Error::NonPositiveConstant { offset: tok.offset }),
            other => Err(Error::Syntax {
                offset: tok.offset,
                message: format!("unexpected {}", other.describe()),
            }),
        }
    }

    fn function(&mut self, name: &str) -> Result<ComplexityExpr, Error> {
        // log^2 n  ==  log(n)^2
        let outer_power = if self.peek_kind() == Some(&Kind::Caret) {
            self.pos += 1;
            Some(self.exponent()?)
        } else {
            None
        };
        let arg = if self.peek_kind() == Some(&Kind::LParen) {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(Kind::RParen)?;
            e
        } else if self.starts_factor() {
            self.power()?
        } else {
            return Err(Error::Syntax {
                offset: self.offset(),
                message: format!("`{name}` needs an argument"),
            });
        };
        let applied = match name {
            "log" | "ln" => ComplexityExpr::log(arg),
            "exp" => ComplexityExpr::exp(arg),
            _ => ComplexityExpr::sqrt(arg),
        };
        Ok(match outer_power {
            Some(q) => ComplexityExpr::pow(applied, q),
            None => applied,
        })
    }
}
