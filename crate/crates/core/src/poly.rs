//! Exact bivariate polynomials over the rationals.
//!
//! Terms are kept in a sorted map keyed by [`Monomial`] under graded
//! lexicographic order with `x > y`; zero coefficients are never stored, so
//! structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};
use crate::text::Cursor;

pub type Coeff = BigRational;

/// The monomial `x^a y^b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0 };

    pub const fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }

    pub fn degree(self) -> u32 {
        self.a + self.b
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    pub fn pow(self, k: u32) -> Monomial {
        Monomial::new(self.a * k, self.b * k)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(self, other: Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial::new(other.a - self.a, other.b - self.b))
    }

    /// All monomials of total degree `d`, from `x^d` down to `y^d`.
    pub fn of_degree(d: u32) -> impl Iterator<Item = Monomial> {
        (0..=d).map(move |b| Monomial::new(d - b, b))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Ord for Monomial {
    /// Graded lex, `x > y`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.a.cmp(&other.a))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: char, e: u32) -> fmt::Result {
            match e {
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            }
        }
        match (self.a, self.b) {
            (0, 0) => write!(f, "1"),
            (a, 0) => var(f, 'x', a),
            (0, b) => var(f, 'y', b),
            (a, b) => {
                var(f, 'x', a)?;
                write!(f, "*")?;
                var(f, 'y', b)
            }
        }
    }
}

impl FromStr for Monomial {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let m = cur.monomial()?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(m)
    }
}

/// A polynomial in `k[x, y]` with `k = Q`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn x() -> Self {
        Self::monomial(Monomial::new(1, 0))
    }

    pub fn y() -> Self {
        Self::monomial(Monomial::new(0, 1))
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Coeff::from_integer(BigInt::from(c)))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Coeff::one(), m)
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> Coeff {
        self.terms.get(&m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(Monomial::ONE)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// A unit of the local ring: nonzero constant term.
    pub fn is_local_unit(&self) -> bool {
        !self.constant_term().is_zero()
    }

    /// The m-adic order: least total degree of a term.
    pub fn order(&self) -> Result<u32> {
        self.terms
            .keys()
            .next()
            .map(|m| m.degree())
            .ok_or(Error::OrderOfZero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn shift(&self, by: Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m * by, v.clone()))
                .collect(),
        }
    }

    /// Drop every term of total degree `>= n`.
    pub fn truncate(&self, n: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < n)
                .map(|(m, v)| (*m, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Monomial> for Poly {
    fn from(m: Monomial) -> Self {
        Poly::monomial(m)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    /// Highest term first, e.g. `3*x^2*y - x + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = ParseError;

    /// Accepts `3*x^2*y`, `x^2y`, `-1/2*y + x`, `0`.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let mut out = Poly::zero();
        let mut first = true;
        loop {
            let negative = if cur.eat('-') {
                true
            } else if cur.eat('+') || first {
                false
            } else if cur.at_end() {
                break;
            } else {
                return Err(cur.error("expected '+' or '-'"));
            };
            if cur.at_end() {
                return Err(cur.error("expected a term"));
            }
            let (c, m) = parse_term(&mut cur)?;
            out.add_term(m, if negative { -c } else { c });
            first = false;
        }
        Ok(out)
    }
}

fn parse_term(cur: &mut Cursor) -> std::result::Result<(Coeff, Monomial), ParseError> {
    let mut coeff = Coeff::one();
    let mut mono = Monomial::ONE;
    let mut any = false;
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = cur.number()?.parse().expect("digits");
                let mut value = Coeff::from_integer(num);
                if cur.eat('/') {
                    let den: BigInt = cur.number()?.parse().expect("digits");
                    if den.is_zero() {
                        return Err(cur.error("zero denominator"));
                    }
                    value /= Coeff::from_integer(den);
                }
                coeff *= value;
            }
            Some('x') | Some('y') => mono = mono * cur.variable_power()?,
            _ if any => break,
            _ => return Err(cur.error("expected a coefficient or variable")),
        }
        any = true;
        if cur.eat('*')
            && !matches!(cur.peek(), Some(c) if c.is_ascii_digit() || c == 'x' || c == 'y')
        {
            return Err(cur.error("expected a factor after '*'"));
        }
    }
    Ok((coeff, mono))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        assert_eq!(&p("3*x*y - 1") + &Poly::zero(), p("3xy - 1"));
        assert_eq!(p("x^2y") * p("y^2"), p("x^2*y^3"));
        assert!((&p("x+y") - &p("y+x")).is_zero());
    }

    #[test]
    fn order_examples() {
        assert_eq!(p("x^2y + y^4").order(), Ok(3));
        assert_eq!(Poly::one().order(), Ok(0));
        assert_eq!(p("x^5 + x^3y + y^3").order(), Ok(3));
        assert_eq!(Poly::zero().order(), Err(Error::OrderOfZero));
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(p("y^2 - x^2 + 3*x*y").to_string(), "-x^2 + 3*x*y + y^2");
        assert_eq!(p("1/2 - y").to_string(), "-y + 1/2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("2*x*2").to_string(), "4*x");
        let q = p("-7/3*x^4*y + x*y^2 - 12");
        assert_eq!(q.to_string().parse::<Poly>().unwrap(), q);
    }

    #[test]
    fn parse_errors() {
        let e = "x +".parse::<Poly>().unwrap_err();
        assert_eq!(e.column, 4);
        let e = "x ^ ".parse::<Poly>().unwrap_err();
        assert_eq!(e.token, "end of input");
        assert!("z".parse::<Poly>().is_err());
        assert!("x*".parse::<Poly>().is_err());
        assert!("1/0".parse::<Poly>().is_err());
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let mut ms = vec![
            Monomial::new(0, 2),
            Monomial::new(1, 0),
            Monomial::new(2, 0),
            Monomial::new(1, 1),
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial::new(1, 0),
                Monomial::new(0, 2),
                Monomial::new(1, 1),
                Monomial::new(2, 0)
            ]
        );
        assert_eq!("x^2*y".parse::<Monomial>().unwrap(), Monomial::new(2, 1));
        assert_eq!("x^2yx".parse::<Monomial>().unwrap(), Monomial::new(3, 1));
    }
}
