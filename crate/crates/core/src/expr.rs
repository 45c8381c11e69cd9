//! Ideal expressions such as `(x^2,y)*IC(x^3,y^2)` or `m^3`.
//!
//! ```text
//! Expr := Term ('*' Term)*
//! Term := Atom ('^' UINT)?
//! Atom := '(' MonList ')' | 'IC' '(' MonList ')' | 'm'
//! ```
//!
//! A parenthesised expression, `((x,y^2)*(x^2,y))^2`, and `IC` of an
//! expression are also accepted so that every tree has a printed form.

use std::fmt;
use std::str::FromStr;

use crate::error::{ParseError, Result};
use crate::ideal::MonomialIdeal;
use crate::poly::Monomial;
use crate::text::Cursor;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealExpr {
    Gens(Vec<Monomial>),
    Closure(Box<IdealExpr>),
    Max,
    Product(Box<IdealExpr>, Box<IdealExpr>),
    Power(Box<IdealExpr>, u32),
}

impl IdealExpr {
    pub fn parse(input: &str) -> std::result::Result<IdealExpr, ParseError> {
        let mut cur = Cursor::new(input);
        let e = expr(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("expected '*', '^' or end of input"));
        }
        Ok(e)
    }

    pub fn evaluate(&self) -> Result<MonomialIdeal> {
        Ok(match self {
            IdealExpr::Gens(ms) => MonomialIdeal::from_generators(ms.iter().copied())?,
            IdealExpr::Closure(e) => e.evaluate()?.integral_closure(),
            IdealExpr::Max => MonomialIdeal::maximal(),
            IdealExpr::Product(a, b) => a.evaluate()?.product(&b.evaluate()?),
            IdealExpr::Power(e, k) => e.evaluate()?.power(*k),
        })
    }
}

impl FromStr for IdealExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        IdealExpr::parse(s)
    }
}

fn expr(cur: &mut Cursor) -> std::result::Result<IdealExpr, ParseError> {
    let mut left = term(cur)?;
    while cur.eat('*') {
        let right = term(cur)?;
        left = IdealExpr::Product(Box::new(left), Box::new(right));
    }
    Ok(left)
}

fn term(cur: &mut Cursor) -> std::result::Result<IdealExpr, ParseError> {
    let base = atom(cur)?;
    if cur.eat('^') {
        let k = cur.uint()?;
        return Ok(IdealExpr::Power(Box::new(base), k));
    }
    Ok(base)
}

fn atom(cur: &mut Cursor) -> std::result::Result<IdealExpr, ParseError> {
    match cur.peek() {
        Some('m') => {
            cur.bump();
            Ok(IdealExpr::Max)
        }
        Some('I') => {
            cur.bump();
            cur.expect('C')?;
            cur.expect('(')?;
            let inner = list_or_expr(cur)?;
            Ok(IdealExpr::Closure(Box::new(inner)))
        }
        Some('(') => {
            cur.bump();
            list_or_expr(cur)
        }
        _ => Err(cur.error("expected '(', 'IC' or 'm'")),
    }
}

/// Body of a parenthesis whose `(` has been consumed, through the `)`.
fn list_or_expr(cur: &mut Cursor) -> std::result::Result<IdealExpr, ParseError> {
    let e = match cur.peek() {
        Some('(') | Some('I') | Some('m') => expr(cur)?,
        _ => {
            let mut ms = vec![cur.monomial()?];
            while cur.eat(',') {
                ms.push(cur.monomial()?);
            }
            IdealExpr::Gens(ms)
        }
    };
    if cur.eat(')') {
        Ok(e)
    } else if matches!(e, IdealExpr::Gens(_)) {
        Err(cur.error("expected ',' or ')'"))
    } else {
        Err(cur.error("expected ')'"))
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, ms: &[Monomial]) -> fmt::Result {
    for (i, m) in ms.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{m}")?;
    }
    Ok(())
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Gens(ms) => {
                f.write_str("(")?;
                write_list(f, ms)?;
                f.write_str(")")
            }
            IdealExpr::Closure(e) => match &**e {
                IdealExpr::Gens(ms) => {
                    f.write_str("IC(")?;
                    write_list(f, ms)?;
                    f.write_str(")")
                }
                other => write!(f, "IC({other})"),
            },
            IdealExpr::Max => f.write_str("m"),
            IdealExpr::Product(a, b) => match &**b {
                IdealExpr::Product(..) => write!(f, "{a} * ({b})"),
                _ => write!(f, "{a} * {b}"),
            },
            IdealExpr::Power(e, k) => match &**e {
                IdealExpr::Product(..) | IdealExpr::Power(..) => write!(f, "({e})^{k}"),
                _ => write!(f, "{e}^{k}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn gens(ms: &[(u32, u32)]) -> IdealExpr {
        IdealExpr::Gens(ms.iter().map(|&(a, b)| Monomial::new(a, b)).collect())
    }

    #[test]
    fn parses_overline_notation() {
        let e = IdealExpr::parse("(x^2,y)*IC(x^3,y^2)").unwrap();
        assert_eq!(
            e,
            IdealExpr::Product(
                Box::new(gens(&[(2, 0), (0, 1)])),
                Box::new(IdealExpr::Closure(Box::new(gens(&[(3, 0), (0, 2)]))))
            )
        );
        assert_eq!(
            e.evaluate().unwrap().to_string(),
            "(x^5, x^3*y, x^2*y^2, y^3)"
        );
        assert_eq!(
            IdealExpr::parse(" m ^ 3 ").unwrap(),
            IdealExpr::Power(Box::new(IdealExpr::Max), 3)
        );
        assert_eq!(
            IdealExpr::parse("(x^2y, x^2*y, 1)").unwrap(),
            gens(&[(2, 1), (2, 1), (0, 0)])
        );
    }

    #[test]
    fn parse_errors_report_columns() {
        let err = IdealExpr::parse("(x^2,").unwrap_err();
        assert_eq!((err.column, err.token.as_str()), (6, "end of input"));
        let err = IdealExpr::parse("(x^2,y)(x,y)").unwrap_err();
        assert_eq!(err.column, 8);
        let err = IdealExpr::parse("(x, z)").unwrap_err();
        assert_eq!((err.column, err.token.as_str()), (5, "'z'"));
        let err = IdealExpr::parse("IX(x)").unwrap_err();
        assert_eq!(err.column, 2);
        let err = IdealExpr::parse("m^").unwrap_err();
        assert_eq!(err.column, 3);
        let err = IdealExpr::parse("(x y").unwrap_err();
        assert_eq!(err.column, 5);
    }

    #[test]
    fn evaluation() {
        let eval = |s: &str| IdealExpr::parse(s).unwrap().evaluate();
        assert_eq!(eval("m^2").unwrap(), MonomialIdeal::mpower(2));
        assert_eq!(
            eval("(x^2,y)*IC(x^2,y^3)").unwrap().to_string(),
            "(x^4, x^2*y, x*y^3, y^4)"
        );
        assert_eq!(
            eval("((x,y^2)*(x^2,y))^2").unwrap(),
            eval("(x,y^2)^2*(x^2,y)^2").unwrap()
        );
        assert_eq!(
            eval("IC(m^2*(x^3,y))").unwrap(),
            eval("m^2*(x^3,y)").unwrap()
        );
        assert_eq!(eval("(x^2,x*y)"), Err(Error::NotMPrimary));
        assert!(eval("m^0").unwrap().is_unit());
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "(x^2, y) * IC(x^3, y^2)",
            "m^3",
            "(x^5, x^3*y, x^2*y^2, y^3)",
            "IC(m * (x, y^2))",
            "((x, y^2) * (x^2, y))^2",
            "(x, y) * ((x, y^2) * (x^2, y))",
            "(m^2)^3",
        ] {
            let e = IdealExpr::parse(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(IdealExpr::parse(&e.to_string()).unwrap(), e);
        }
    }
}
