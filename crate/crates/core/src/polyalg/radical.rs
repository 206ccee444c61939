//! Exact scalars of the form `Σ q·√n` with rational `q` and squarefree `n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Splits `n > 0` into `(s, d)` with `n = s²·d` and `d` squarefree.
pub fn squarefree_decompose(mut n: u64) -> (u64, u64) {
    assert!(n > 0, "squarefree decomposition of zero");
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    free *= n;
    (square, free)
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && squarefree_decompose(n).0 == 1
}

/// An element of the Q-span of `{√n : n squarefree}`.
///
/// Keys are squarefree radicands (1 is the rational part); zero is the
/// empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    terms: BTreeMap<u64, Rational>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(integer(n))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(rational(numer, denom))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::term(q, 1)
    }

    /// `q·√n` for any positive `n`; the square part of `n` is pulled out.
    pub fn term(q: Rational, n: u64) -> Self {
        let mut out = Self::zero();
        if q.is_zero() {
            return out;
        }
        let (s, d) = squarefree_decompose(n);
        out.terms.insert(d, q * integer(s as i64));
        out
    }

    /// `√n`.
    pub fn sqrt_of(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        Self::term(Rational::one(), n)
    }

    /// Square root of a non-negative rational, when its numerator and
    /// denominator fit in machine words.
    pub fn sqrt_rational(q: &Rational) -> Option<Self> {
        if q.is_negative() {
            return None;
        }
        if q.is_zero() {
            return Some(Self::zero());
        }
        let numer = q.numer().to_u64()?;
        let denom = q.denom().to_u64()?;
        let prod = numer.checked_mul(denom)?;
        // √(p/q) = √(pq)/q
        Some(Self::term(
            Rational::new(BigInt::one(), BigInt::from(denom)),
            prod,
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, if there are no irrational parts.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// `(q, n)` when the scalar is a single nonzero term `q·√n`.
    pub fn single_term(&self) -> Option<(&Rational, u64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(n, q)| (q, *n))
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(n, q)| (*n, q))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `(q√n)⁻¹ = √n / (q·n)`; multi-term scalars are rejected.
    pub fn invert(&self) -> Result<Self> {
        let (q, n) = self.single_term().ok_or(Error::UnsupportedDivision)?;
        let denom = q * integer(n as i64);
        let mut out = Self::zero();
        out.terms.insert(n, denom.recip());
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(n, c)| (*n, c * q)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(n, q)| {
                let c = q.to_f64().unwrap_or(f64::NAN);
                if *n == 1 {
                    c
                } else {
                    c * (*n as f64).sqrt()
                }
            })
            .sum()
    }

    /// Sign as a real number; exact for rationals, floating otherwise.
    pub fn is_positive(&self) -> bool {
        match self.as_rational() {
            Some(q) => q.is_positive(),
            None => self.to_f64() > 0.0,
        }
    }

    fn add_term(&mut self, n: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(n).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&n);
        }
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_magnitude(f: &mut fmt::Formatter<'_>, q: &Rational, n: u64) -> fmt::Result {
    let q = q.abs();
    match (n, q.is_one()) {
        (1, _) => write!(f, "{q}"),
        (_, true) => write!(f, "sqrt({n})"),
        _ => write!(f, "{q}*sqrt({n})"),
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, q)) in self.terms.iter().enumerate() {
            match (i, q.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            fmt_magnitude(f, q, *n)?;
        }
        Ok(())
    }
}

impl From<Rational> for RadicalScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a RadicalScalar> for &'a RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalScalar {
    type Output = RadicalScalar;
    fn add(mut self, rhs: RadicalScalar) -> RadicalScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &RadicalScalar) {
        for (n, q) in &rhs.terms {
            self.add_term(*n, q.clone());
        }
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar {
            terms: self.terms.iter().map(|(n, q)| (*n, -q)).collect(),
        }
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl<'a> Sub<&'a RadicalScalar> for &'a RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        for (n, q) in &rhs.terms {
            out.add_term(*n, -q);
        }
        out
    }
}

impl Sub for RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: RadicalScalar) -> RadicalScalar {
        &self - &rhs
    }
}

impl<'a> Mul<&'a RadicalScalar> for &'a RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = RadicalScalar::zero();
        for (a, qa) in &self.terms {
            for (b, qb) in &rhs.terms {
                // a, b squarefree: √a·√b = g·√((a/g)(b/g)) with g = gcd(a, b)
                let g = a.gcd(b);
                let radicand = (a / g) * (b / g);
                let coeff = qa * qb * integer(g as i64);
                out.add_term(radicand, coeff);
            }
        }
        out
    }
}

impl Mul for RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: RadicalScalar) -> RadicalScalar {
        &self * &rhs
    }
}
