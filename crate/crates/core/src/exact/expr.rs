//! A small expression grammar for polynomials, field elements and rational
//! functions.
//!
//! ```text
//! equation := expr [ '=' expr ]
//! expr     := term { ('+' | '-') term }
//! term     := unary { ('*' | '/') unary }
//! unary    := '-' unary | power
//! power    := atom [ '^' integer ]
//! atom     := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are `t`, `x` (with `y` accepted as a synonym) and the name of
//! the field generator. Rationals are written as quotients, `-7/4`.
//! Columns in errors are 1-based character positions.

use std::sync::Arc;

use num_bigint::BigInt;

use super::rational::Rational;
use super::{AlgebraicNumber, BiPoly, NumberField, Scalar, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    /// The field generator.
    Gen,
    T,
    X,
    /// A cover generator, written `Y`; only meaningful in [`Expr::to_poly_in_y`].
    Y,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    generator: Option<&'a str>,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse_at(self.pos + 1, msg))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if c == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if c == '*' {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.peek() == Some('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return self.err("expected a non-negative integer exponent");
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::parse_at(start + 1, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|&c| f(c)) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                Ok(Expr::Int(digits.parse().unwrap()))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
                if Some(name.as_str()) == self.generator {
                    return Ok(Expr::Gen);
                }
                match name.as_str() {
                    "t" => Ok(Expr::T),
                    "x" | "y" => Ok(Expr::X),
                    "Y" => Ok(Expr::Y),
                    _ => Err(Error::parse_at(start + 1, format!("unknown identifier `{name}`"))),
                }
            }
            Some(c) => self.err(format!("unexpected character `{c}`")),
        }
    }
}

/// Parses an expression; `generator` is the name of the field generator, if any.
pub fn parse(s: &str, generator: Option<&str>) -> Result<Expr> {
    let mut p = Parser {
        chars: s.chars().collect(),
        pos: 0,
        generator,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses `lhs = rhs` as `lhs - rhs`, or a bare expression.
pub fn parse_equation(s: &str, generator: Option<&str>) -> Result<Expr> {
    match s.split_once('=') {
        None => parse(s, generator),
        Some((l, r)) => {
            let lhs = parse(l, generator)?;
            let offset = l.chars().count() + 1;
            let rhs = parse(r, generator).map_err(|e| match e {
                Error::Parse { line, column, message } => Error::Parse {
                    line,
                    column: column + offset,
                    message,
                },
                other => other,
            })?;
            Ok(Expr::Sub(Box::new(lhs), Box::new(rhs)))
        }
    }
}

fn field_generator(field: &NumberField) -> Option<&str> {
    (!field.is_rationals()).then(|| field.generator_name())
}

impl Expr {
    pub fn mentions_x(&self) -> bool {
        match self {
            Expr::X => true,
            Expr::Int(_) | Expr::Gen | Expr::T | Expr::Y => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.mentions_x(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.mentions_x() || b.mentions_x(),
        }
    }

    /// Evaluates in any field, given values for the leaves.
    pub fn eval<S: Scalar>(&self, one: &S, gen: &S, t: &S, x: &S) -> Result<S> {
        let rec = |e: &Expr| e.eval(one, gen, t, x);
        Ok(match self {
            Expr::Int(n) => int_like(one, n),
            Expr::Gen => gen.clone(),
            Expr::T => t.clone(),
            Expr::X => x.clone(),
            Expr::Y => return Err(Error::parse_at(1, "`Y` is only allowed in cover presentations")),
            Expr::Neg(a) => rec(a)?.neg_ref(),
            Expr::Add(a, b) => rec(a)?.add_ref(&rec(b)?),
            Expr::Sub(a, b) => rec(a)?.sub_ref(&rec(b)?),
            Expr::Mul(a, b) => rec(a)?.mul_ref(&rec(b)?),
            Expr::Div(a, b) => rec(a)?.div_ref(&rec(b)?).ok_or(Error::DivisionByZero)?,
            Expr::Pow(a, e) => rec(a)?.pow(*e),
        })
    }

    /// Polynomial in `(x, t)`; division is allowed only by nonzero constants.
    pub fn to_bipoly(&self, field: &Arc<NumberField>) -> Result<BiPoly<AlgebraicNumber>> {
        let one = AlgebraicNumber::from_i64(field, 1);
        let rec = |e: &Expr| e.to_bipoly(field);
        Ok(match self {
            Expr::Int(n) => BiPoly::constant(int_like(&one, n)),
            Expr::Gen => BiPoly::constant(AlgebraicNumber::generator(field)),
            Expr::T => BiPoly::monomial(one, 0, 1),
            Expr::X => BiPoly::monomial(one, 1, 0),
            Expr::Y => return Err(Error::parse_at(1, "`Y` is only allowed in cover presentations")),
            Expr::Neg(a) => rec(a)?.neg(),
            Expr::Add(a, b) => rec(a)?.add(&rec(b)?),
            Expr::Sub(a, b) => rec(a)?.sub(&rec(b)?),
            Expr::Mul(a, b) => rec(a)?.mul(&rec(b)?),
            Expr::Div(a, b) => {
                let d = rec(b)?;
                if d.deg_x() > 0 || d.deg_t() > 0 {
                    return Err(Error::parse_at(1, "division by a non-constant in a polynomial"));
                }
                let c = d.x_coeff(0).coeff(0).cloned().ok_or(Error::DivisionByZero)?;
                rec(a)?.scale_t(&UniPoly::constant(c.inv().ok_or(Error::DivisionByZero)?))
            }
            Expr::Pow(a, e) => rec(a)?.pow(*e),
        })
    }

    /// Polynomial in `t` alone.
    pub fn to_unipoly(&self, field: &Arc<NumberField>) -> Result<UniPoly<AlgebraicNumber>> {
        let b = self.to_bipoly(field)?;
        if b.deg_x() > 0 {
            return Err(Error::parse_at(1, "expected a polynomial in t only"));
        }
        Ok(b.x_coeff(0))
    }

    /// A constant of the field.
    pub fn to_number(&self, field: &Arc<NumberField>) -> Result<AlgebraicNumber> {
        let one = AlgebraicNumber::from_i64(field, 1);
        if self.mentions_var() {
            return Err(Error::parse_at(1, "expected a constant"));
        }
        let g = AlgebraicNumber::generator(field);
        self.eval(&one, &g, &one, &one)
    }

    /// Polynomial in `Y` whose coefficients are evaluated in `S` from the
    /// other leaves; division is allowed by `Y`-free expressions only.
    pub fn to_poly_in_y<S: Scalar>(&self, one: &S, gen: &S, t: &S, x: &S) -> Result<UniPoly<S>> {
        if !self.mentions_y() {
            return Ok(UniPoly::constant(self.eval(one, gen, t, x)?));
        }
        let rec = |e: &Expr| e.to_poly_in_y(one, gen, t, x);
        Ok(match self {
            Expr::Y => UniPoly::var(one),
            Expr::Neg(a) => rec(a)?.neg(),
            Expr::Add(a, b) => rec(a)?.add(&rec(b)?),
            Expr::Sub(a, b) => rec(a)?.sub(&rec(b)?),
            Expr::Mul(a, b) => rec(a)?.mul(&rec(b)?),
            Expr::Div(a, b) => {
                if b.mentions_y() {
                    return Err(Error::parse_at(1, "division by an expression in Y"));
                }
                let c = b.eval(one, gen, t, x)?.inv().ok_or(Error::DivisionByZero)?;
                rec(a)?.scale(&c)
            }
            Expr::Pow(a, e) => rec(a)?.pow(*e),
            _ => unreachable!("leaves without Y are handled above"),
        })
    }

    fn mentions_y(&self) -> bool {
        match self {
            Expr::Y => true,
            Expr::Int(_) | Expr::Gen | Expr::T | Expr::X => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.mentions_y(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.mentions_y() || b.mentions_y(),
        }
    }

    fn gen_as_t(self) -> Expr {
        let b = |e: Box<Expr>| Box::new(e.gen_as_t());
        match self {
            Expr::Gen => Expr::T,
            Expr::Neg(a) => Expr::Neg(b(a)),
            Expr::Pow(a, e) => Expr::Pow(b(a), e),
            Expr::Add(l, r) => Expr::Add(b(l), b(r)),
            Expr::Sub(l, r) => Expr::Sub(b(l), b(r)),
            Expr::Mul(l, r) => Expr::Mul(b(l), b(r)),
            Expr::Div(l, r) => Expr::Div(b(l), b(r)),
            other => other,
        }
    }

    fn mentions_var(&self) -> bool {
        match self {
            Expr::X | Expr::T | Expr::Y => true,
            Expr::Int(_) | Expr::Gen => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.mentions_var(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.mentions_var() || b.mentions_var()
            }
        }
    }
}

fn int_like<S: Scalar>(one: &S, n: &BigInt) -> S {
    match i64::try_from(n) {
        Ok(k) => one.from_i64_like(k),
        Err(_) => {
            // Horner in base 2^32 for big literals
            let base = one.from_i64_like(1 << 32);
            let (sign, digits) = n.to_u32_digits();
            let mut acc = one.zero_like();
            for d in digits.iter().rev() {
                acc = acc.mul_ref(&base).add_ref(&one.from_i64_like(*d as i64));
            }
            if sign == num_bigint::Sign::Minus {
                acc.neg_ref()
            } else {
                acc
            }
        }
    }
}

/// Parses a constant of `field`, e.g. `-3/2 + 1/2*i`.
pub fn parse_number(s: &str, field: &Arc<NumberField>) -> Result<AlgebraicNumber> {
    parse(s, field_generator(field))?.to_number(field)
}

/// Parses a polynomial in `(x, t)` over `field`, accepting `lhs = rhs`.
pub fn parse_bipoly(s: &str, field: &Arc<NumberField>) -> Result<BiPoly<AlgebraicNumber>> {
    parse_equation(s, field_generator(field))?.to_bipoly(field)
}

/// Parses a polynomial in `t` over `field`.
pub fn parse_unipoly(s: &str, field: &Arc<NumberField>) -> Result<UniPoly<AlgebraicNumber>> {
    parse(s, field_generator(field))?.to_unipoly(field)
}

/// Parses a rational polynomial in the single variable named `var`.
pub fn parse_rational_poly(s: &str, var: &str) -> Result<UniPoly<Rational>> {
    let q = NumberField::rationals();
    let e = parse(s, Some(var))?.gen_as_t();
    Ok(e.to_unipoly(&q)?.map(|c| c.to_rational().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    #[test]
    fn polynomials() {
        let q = NumberField::rationals();
        let f = parse_bipoly("x^2 = t^3 - t", &q).unwrap();
        assert_eq!(f.deg_x(), 2);
        assert_eq!(f.deg_t(), 3);
        let one = AlgebraicNumber::from_i64(&q, 1);
        let zero = one.zero_like();
        assert_eq!(f.eval(&zero, &one), zero);
        let g = parse_bipoly("(t - 1/2)*2", &q).unwrap();
        assert_eq!(g.eval(&zero, &zero), AlgebraicNumber::from_i64(&q, -1));
    }

    #[test]
    fn field_constants() {
        let k = NumberField::new("i", UniPoly::new(vec![int(1), int(0), int(1)])).unwrap();
        let a = parse_number("1 - i", &k).unwrap();
        assert_eq!(a.coords(), &[int(1), int(-1)]);
        let b = parse_number("-3/2 + 1/2*i", &k).unwrap();
        assert_eq!(b.coords(), &[frac(-3, 2), frac(1, 2)]);
        assert_eq!(parse_number(&b.to_string(), &k).unwrap(), b);
        assert_eq!(parse_number("i^2", &k).unwrap(), AlgebraicNumber::from_i64(&k, -1));
    }

    #[test]
    fn errors_carry_columns() {
        let q = NumberField::rationals();
        match parse_bipoly("t + z", &q) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        match parse_bipoly("x^2 = t^3 +", &q) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 12),
            other => panic!("{other:?}"),
        }
        assert!(parse_bipoly("x / t", &q).is_err());
    }

    #[test]
    fn rational_poly() {
        let p = parse_rational_poly("a^2 + 1", "a").unwrap();
        assert_eq!(p, UniPoly::new(vec![int(1), int(0), int(1)]));
    }
}
