//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := rational | 'sqrt' '(' uint ')' | var | '(' expr ')'
//! rational := uint ('/' uint)?
//! var    := 'x' uint | 'x' | 'y' | 'z' | 'w'
//! ```
//!
//! The leading minus lets canonical output such as `-x1^2 + 1` and
//! `(-1/2 + sqrt(3))*x1` read back unchanged.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::ParseError;
use crate::polyalg::{Polynomial, RadicalScalar, Rational};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;
/// Largest variable count a polynomial may use.
pub const MAX_VARS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> Option<String> {
        match self {
            Tok::Int(n) => Some(n.to_string()),
            Tok::Ident(s) => Some(s.clone()),
            Tok::Sym(c) => Some(c.to_string()),
            Tok::End => None,
        }
    }
}

fn error(offset: usize, expected: &[&str], found: Option<String>) -> ParseError {
    ParseError {
        offset,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found,
    }
}

fn lex(text: &str, base: usize) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("ascii digits");
            out.push((base + start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((base + start, Tok::Ident(text[start..i].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((base + i, Tok::Sym(c as char)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("non-empty tail");
            return Err(error(
                base + i,
                &["number", "variable", "operator", "("],
                Some(ch.to_string()),
            ));
        }
    }
    out.push((base + bytes.len(), Tok::End));
    Ok(out)
}

/// Variable index of an identifier, or `None` when it is not a variable.
fn variable_index(name: &str) -> Option<usize> {
    match name {
        "x" => Some(0),
        "y" => Some(1),
        "z" => Some(2),
        "w" => Some(3),
        _ => {
            let digits = name.strip_prefix('x')?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
                return None;
            }
            digits.parse::<usize>().ok().filter(|&n| n <= MAX_VARS).map(|n| n - 1)
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    nvars: usize,
}

const BASE_START: &[&str] = &["number", "sqrt", "variable", "("];

impl Parser {
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

    fn fail(&self, expected: &[&str]) -> ParseError {
        error(self.offset(), expected, self.peek().describe())
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.fail(&[&c.to_string()]))
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.fail(&["unsigned integer"])),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = *self.peek() == Tok::Sym('-');
        if negate {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Sym('*') {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let e = self.uint()?;
        match e.to_u32().filter(|&e| e <= MAX_EXPONENT) {
            Some(e) => Ok(base.pow(e)),
            None => Err(error(
                at,
                &[&format!("exponent at most {MAX_EXPONENT}")],
                Some(e.to_string()),
            )),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let mut q = Rational::from_integer(n);
                if *self.peek() == Tok::Sym('/') {
                    self.bump();
                    let d_at = self.offset();
                    let d = self.uint()?;
                    if d.is_zero() {
                        return Err(error(d_at, &["nonzero denominator"], Some("0".into())));
                    }
                    q /= Rational::from_integer(d);
                }
                Ok(Polynomial::constant(self.nvars, RadicalScalar::from_rational(q)))
            }
            Tok::Ident(name) if name == "sqrt" => {
                self.bump();
                self.expect_sym('(')?;
                let n_at = self.offset();
                let n = self.uint()?;
                let n = n
                    .to_u64()
                    .ok_or_else(|| error(n_at, &["radicand below 2^64"], Some(n.to_string())))?;
                self.expect_sym(')')?;
                Ok(Polynomial::constant(self.nvars, RadicalScalar::sqrt_of(n)))
            }
            Tok::Ident(name) => match variable_index(&name) {
                Some(i) if i < self.nvars => {
                    self.bump();
                    Ok(Polynomial::var(self.nvars, i))
                }
                Some(_) => Err(error(
                    at,
                    &[&format!("variable among x1..x{}", self.nvars)],
                    Some(name),
                )),
                None => Err(self.fail(BASE_START)),
            },
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            _ => Err(self.fail(BASE_START)),
        }
    }
}

fn highest_variable(toks: &[(usize, Tok)]) -> Option<usize> {
    toks.iter()
        .filter_map(|(_, t)| match t {
            Tok::Ident(s) => variable_index(s),
            _ => None,
        })
        .max()
}

/// Parses `text` whose byte offsets start at `base`. With `nvars = None`
/// the variable count is the highest variable used (at least 1).
pub(crate) fn parse_at(text: &str, nvars: Option<usize>, base: usize) -> Result<Polynomial, ParseError> {
    let toks = lex(text, base)?;
    let nvars = nvars.unwrap_or_else(|| highest_variable(&toks).map_or(1, |i| i + 1));
    let mut p = Parser { toks, pos: 0, nvars };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.fail(&["+", "-", "*", "^", "end of input"]));
    }
    Ok(out)
}

/// Highest variable index mentioned in `text`, if it lexes.
pub(crate) fn max_variable(text: &str) -> Result<Option<usize>, ParseError> {
    Ok(highest_variable(&lex(text, 0)?))
}

/// Parses a polynomial in as many variables as the highest one it mentions.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    parse_at(text, None, 0)
}

/// Parses a polynomial in exactly `nvars` variables.
pub fn parse_polynomial_in(text: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    parse_at(text, Some(nvars), 0)
}
