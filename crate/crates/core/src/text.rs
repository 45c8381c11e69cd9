//! Character cursor shared by the polynomial and ideal-expression parsers.

use crate::error::ParseError;
use crate::poly::Monomial;

pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(input: &str) -> Self {
        Self {
            chars: input.chars().collect(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    /// Next non-whitespace character, without consuming it.
    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    pub(crate) fn error(&mut self, message: &str) -> ParseError {
        let token = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError {
            column: self.pos + 1,
            token,
            message: message.to_string(),
        }
    }

    pub(crate) fn number(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    pub(crate) fn uint(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.number()?;
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error("exponent out of range")
        })
    }

    /// `x`, `y`, `x^2`, `y^3`.
    pub(crate) fn variable_power(&mut self) -> Result<Monomial, ParseError> {
        let var = match self.peek() {
            Some('x') => Monomial::new(1, 0),
            Some('y') => Monomial::new(0, 1),
            _ => return Err(self.error("expected 'x' or 'y'")),
        };
        self.pos += 1;
        let exp = if self.eat('^') { self.uint()? } else { 1 };
        Ok(var.pow(exp))
    }

    /// A coefficient-free monomial: `1`, `x^2y`, `x^2*y`, `y`.
    pub(crate) fn monomial(&mut self) -> Result<Monomial, ParseError> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Monomial::ONE);
        }
        let mut m = self.variable_power()?;
        loop {
            match self.peek() {
                Some('x') | Some('y') => m = m * self.variable_power()?,
                Some('*') => {
                    // only a variable may follow '*' inside a monomial
                    let save = self.pos;
                    self.pos += 1;
                    match self.peek() {
                        Some('x') | Some('y') => m = m * self.variable_power()?,
                        _ => {
                            self.pos = save;
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(m)
    }
}
