//! The map-source mini-language.
//!
//! ```text
//! source := ('gallery:')? name | 'circle:' uint | 'identity:' uint
//!         | 'diagonal' '(' source ',' source ',' rational ')'
//!         | 'product' '(' source ',' source ',' rational ')'
//!         | 'xg' '(' source ')' | 'twist' '(' source ')'
//!         | 'stack' '(' source ',' source ')'
//!         | 'radial' '(' source ',' uint ')'
//!         | '[' poly (',' poly)* (';' 'vars' '=' uint)? ']'
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::parser::{max_variable, parse_at, MAX_VARS};
use crate::constructors::{
    circle_harmonics, diagonal_sum, identity, named_form, product_map, radial_multiple, stack, twist, x_times_g,
    GALLERY_NAMES,
};
use crate::error::{Error, ParseError, Result};
use crate::maps::{sphere_restriction_check, KindHint, PolyMap, SphereMapMeta};
use crate::polyalg::{RadicalScalar, Rational};

/// A parsed description of a polynomial map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapSource {
    Gallery(String),
    Circle(u32),
    Identity(usize),
    Diagonal(Box<MapSource>, Box<MapSource>, Rational),
    Product(Box<MapSource>, Box<MapSource>, Rational),
    XTimesG(Box<MapSource>),
    Twist(Box<MapSource>),
    Stack(Box<MapSource>, Box<MapSource>),
    Radial(Box<MapSource>, u32),
    Inline { components: Vec<String>, nvars: usize },
}

/// A map together with its verified sphere-map metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltMap {
    pub map: PolyMap,
    pub meta: SphereMapMeta,
}

impl MapSource {
    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let mut s = Scanner { text, pos: 0 };
        let out = s.source()?;
        s.skip_ws();
        if s.pos < text.len() {
            return Err(s.fail(&["end of input"]));
        }
        Ok(out)
    }

    /// The polynomial map, and the metadata the construction already knows.
    pub fn evaluate(&self) -> Result<(PolyMap, Option<SphereMapMeta>)> {
        let map_only = |m: PolyMap| Ok((m, None));
        match self {
            MapSource::Gallery(name) => {
                let e = named_form(name)?;
                Ok((e.map, Some(e.meta)))
            }
            MapSource::Circle(k) => map_only(circle_harmonics(*k)),
            MapSource::Identity(m) => map_only(identity(*m)),
            MapSource::Diagonal(a, b, r) => {
                let (m, meta) = diagonal_sum(&a.evaluate()?.0, &b.evaluate()?.0, &RadicalScalar::from_rational(r.clone()))?;
                Ok((m, Some(meta)))
            }
            MapSource::Product(a, b, r) => {
                let (m, meta) = product_map(&a.evaluate()?.0, &b.evaluate()?.0, &RadicalScalar::from_rational(r.clone()))?;
                Ok((m, Some(meta)))
            }
            MapSource::XTimesG(a) => map_only(x_times_g(&a.evaluate()?.0)?),
            MapSource::Twist(a) => map_only(twist(&a.evaluate()?.0)?),
            MapSource::Stack(a, b) => map_only(stack(&a.evaluate()?.0, &b.evaluate()?.0)?),
            MapSource::Radial(a, p) => map_only(radial_multiple(&a.evaluate()?.0, *p)),
            MapSource::Inline { components, nvars } => {
                let comps = components
                    .iter()
                    .map(|c| parse_at(c, Some(*nvars), 0).map_err(Error::from))
                    .collect::<Result<Vec<_>>>()?;
                map_only(PolyMap::new(comps)?)
            }
        }
    }

    /// Evaluates the source and verifies that it restricts to a sphere map.
    pub fn build(&self) -> Result<BuiltMap> {
        let (map, meta) = self.evaluate()?;
        let meta = match meta {
            Some(m) => m,
            None => sphere_restriction_check(&map, KindHint::Auto)?,
        };
        Ok(BuiltMap { map, meta })
    }
}

impl fmt::Display for MapSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapSource::Gallery(n) => write!(f, "gallery:{n}"),
            MapSource::Circle(k) => write!(f, "circle:{k}"),
            MapSource::Identity(m) => write!(f, "identity:{m}"),
            MapSource::Diagonal(a, b, r) => write!(f, "diagonal({a}, {b}, {r})"),
            MapSource::Product(a, b, r) => write!(f, "product({a}, {b}, {r})"),
            MapSource::XTimesG(a) => write!(f, "xg({a})"),
            MapSource::Twist(a) => write!(f, "twist({a})"),
            MapSource::Stack(a, b) => write!(f, "stack({a}, {b})"),
            MapSource::Radial(a, p) => write!(f, "radial({a}, {p})"),
            MapSource::Inline { components, nvars } => {
                write!(f, "[{}; vars={nvars}]", components.join(", "))
            }
        }
    }
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

const SOURCE_START: &[&str] = &["gallery name", "circle:", "identity:", "construction", "["];

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn fail(&mut self, expected: &[&str]) -> ParseError {
        let found = self.peek().map(|c| c.to_string());
        ParseError {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.fail(&[&c.to_string()]))
        }
    }

    fn word(&mut self) -> Option<(usize, &str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_' || *b == b'-')
            .count();
        self.pos += len;
        (len > 0).then(|| (start, &self.text[start..start + len]))
    }

    fn uint(&mut self) -> std::result::Result<(usize, BigInt), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.fail(&["unsigned integer"]));
        }
        self.pos += len;
        Ok((start, self.text[start..start + len].parse().expect("ascii digits")))
    }

    fn small_uint(&mut self, min: u64, max: u64) -> std::result::Result<u64, ParseError> {
        let (at, n) = self.uint()?;
        n.to_u64().filter(|v| (min..=max).contains(v)).ok_or(ParseError {
            offset: at,
            expected: vec![format!("integer in {min}..={max}")],
            found: Some(n.to_string()),
        })
    }

    fn rational(&mut self) -> std::result::Result<Rational, ParseError> {
        let (_, n) = self.uint()?;
        let mut q = Rational::from_integer(n);
        if self.peek() == Some('/') {
            self.pos += 1;
            let (at, d) = self.uint()?;
            if d.is_zero() {
                return Err(ParseError {
                    offset: at,
                    expected: vec!["nonzero denominator".into()],
                    found: Some("0".into()),
                });
            }
            q /= Rational::from_integer(d);
        }
        Ok(q)
    }

    fn source(&mut self) -> std::result::Result<MapSource, ParseError> {
        if self.peek() == Some('[') {
            return self.inline();
        }
        let start = self.pos;
        let Some((at, word)) = self.word() else {
            return Err(self.fail(SOURCE_START));
        };
        let word = word.to_string();
        match self.peek() {
            Some(':') => {
                self.pos += 1;
                match word.as_str() {
                    "circle" => Ok(MapSource::Circle(self.small_uint(1, 64)? as u32)),
                    "identity" => Ok(MapSource::Identity(self.small_uint(1, MAX_VARS as u64 - 1)? as usize)),
                    "gallery" => {
                        let Some((at, name)) = self.word() else {
                            return Err(self.fail(&["gallery name"]));
                        };
                        let name = name.to_string();
                        gallery_name(at, &name)
                    }
                    _ => Err(ParseError {
                        offset: at,
                        expected: vec!["gallery".into(), "circle".into(), "identity".into()],
                        found: Some(word),
                    }),
                }
            }
            Some('(') => {
                self.pos += 1;
                let out = match word.as_str() {
                    "diagonal" | "product" => {
                        let a = Box::new(self.source()?);
                        self.expect(',')?;
                        let b = Box::new(self.source()?);
                        self.expect(',')?;
                        let r = self.rational()?;
                        if word == "diagonal" {
                            MapSource::Diagonal(a, b, r)
                        } else {
                            MapSource::Product(a, b, r)
                        }
                    }
                    "xg" => MapSource::XTimesG(Box::new(self.source()?)),
                    "twist" => MapSource::Twist(Box::new(self.source()?)),
                    "stack" => {
                        let a = Box::new(self.source()?);
                        self.expect(',')?;
                        MapSource::Stack(a, Box::new(self.source()?))
                    }
                    "radial" => {
                        let a = Box::new(self.source()?);
                        self.expect(',')?;
                        MapSource::Radial(a, self.small_uint(0, 16)? as u32)
                    }
                    _ => {
                        return Err(ParseError {
                            offset: start.max(at),
                            expected: ["diagonal", "product", "xg", "twist", "stack", "radial"]
                                .iter()
                                .map(|s| s.to_string())
                                .collect(),
                            found: Some(word),
                        })
                    }
                };
                self.expect(')')?;
                Ok(out)
            }
            _ => gallery_name(at, &word),
        }
    }

    /// Byte span of one inline component, ending before `,`, `;` or `]` at
    /// parenthesis depth zero.
    fn component_span(&mut self) -> (usize, usize) {
        let start = self.pos;
        let mut depth = 0i32;
        for (i, c) in self.text[start..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' | ';' | ']' if depth <= 0 => {
                    self.pos = start + i;
                    return (start, start + i);
                }
                _ => {}
            }
        }
        self.pos = self.text.len();
        (start, self.text.len())
    }

    fn inline(&mut self) -> std::result::Result<MapSource, ParseError> {
        self.expect('[')?;
        let mut spans = vec![self.component_span()];
        while self.peek() == Some(',') {
            self.pos += 1;
            spans.push(self.component_span());
        }
        let mut nvars = None;
        if self.peek() == Some(';') {
            self.pos += 1;
            match self.word() {
                Some((_, "vars")) => {}
                _ => return Err(self.fail(&["vars"])),
            }
            self.expect('=')?;
            nvars = Some(self.small_uint(1, MAX_VARS as u64)? as usize);
        }
        self.expect(']')?;
        let nvars = match nvars {
            Some(n) => n,
            None => {
                let mut top = 0;
                for &(a, b) in &spans {
                    let highest = max_variable(&self.text[a..b]).map_err(|e| shift(e, a))?;
                    top = top.max(highest.map_or(1, |i| i + 1));
                }
                top
            }
        };
        // Parse now so that syntax errors carry offsets into the full text.
        for &(a, b) in &spans {
            parse_at(&self.text[a..b], Some(nvars), a)?;
        }
        Ok(MapSource::Inline {
            components: spans.iter().map(|&(a, b)| self.text[a..b].trim().to_string()).collect(),
            nvars,
        })
    }
}

fn shift(mut e: ParseError, by: usize) -> ParseError {
    e.offset += by;
    e
}

fn gallery_name(at: usize, name: &str) -> std::result::Result<MapSource, ParseError> {
    GALLERY_NAMES
        .iter()
        .find(|(s, l)| *s == name || *l == name)
        .map(|(s, _)| MapSource::Gallery(s.to_string()))
        .ok_or_else(|| ParseError {
            offset: at,
            expected: GALLERY_NAMES.iter().map(|(s, _)| s.to_string()).collect(),
            found: Some(name.to_string()),
        })
}
