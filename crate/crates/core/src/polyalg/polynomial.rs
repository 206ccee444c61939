//! Sparse multivariate polynomials over [`RadicalScalar`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::radical::{integer, Rational, RadicalScalar};
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable. The derived order is
/// lexicographic with `x1` most significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// A polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, RadicalScalar>,
}

fn mismatch(a: usize, b: usize) -> Error {
    Error::DimensionMismatch(format!("{a} variables vs {b} variables"))
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars > 0, "a polynomial needs at least one variable");
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: RadicalScalar) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, RadicalScalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Self::monomial(nvars, Monomial::var(nvars, i), RadicalScalar::one())
    }

    pub fn monomial(nvars: usize, mono: Monomial, c: RadicalScalar) -> Self {
        assert_eq!(mono.0.len(), nvars, "monomial length must match nvars");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// `Σ xᵢ²`, the squared Euclidean norm of the position vector.
    pub fn radius_squared(nvars: usize) -> Self {
        Self::radius_squared_on(nvars, 0..nvars)
    }

    /// `Σ xᵢ²` over a contiguous block of variables.
    pub fn radius_squared_on(nvars: usize, block: std::ops::Range<usize>) -> Self {
        let mut p = Self::zero(nvars);
        for i in block {
            let mut e = vec![0; nvars];
            e[i] = 2;
            p.terms.insert(Monomial(e), RadicalScalar::one());
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, RadicalScalar)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial length must match nvars");
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> RadicalScalar {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// The constant value, when the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<RadicalScalar> {
        match self.terms.len() {
            0 => Some(RadicalScalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(k)` when every monomial has total degree `k`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Whether the polynomial only involves variables in `vars`.
    pub fn depends_only_on(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms.keys().all(|m| {
            m.0.iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || vars.contains(&i))
        })
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: &RadicalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c.clone());
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(mismatch(self.nvars, other.nvars));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(mismatch(self.nvars, other.nvars));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(mismatch(self.nvars, other.nvars));
        }
        let mut acc: BTreeMap<Monomial, RadicalScalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                let slot = acc.entry(ma.mul(mb)).or_default();
                *slot += &prod;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            nvars: self.nvars,
            terms: acc,
        })
    }

    pub fn scale(&self, c: &RadicalScalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a * c))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Polynomial {
        self.scale(&RadicalScalar::from_rational(q.clone()))
    }

    pub fn scale_int(&self, n: i64) -> Polynomial {
        self.scale_rational(&integer(n))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "variable index {i} out of range for {} variables",
                self.nvars
            )));
        }
        Ok(self.derivative(i))
    }

    /// Partial derivative with an index already known to be in range.
    pub(crate) fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] = e - 1;
            out.add_term(dm, &c.scale(&integer(i64::from(e))));
        }
        out
    }

    /// Exact substitution of a rational point.
    pub fn evaluate_exact(&self, point: &[BigRational]) -> RadicalScalar {
        assert_eq!(point.len(), self.nvars, "point length must equal nvars");
        let mut total = RadicalScalar::zero();
        for (m, c) in &self.terms {
            let mut v = Rational::one();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), usize::from(e));
                }
            }
            total += &c.scale(&v);
        }
        total
    }

    /// Floating evaluation; each radical is taken in double precision.
    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars, "point length must equal nvars");
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono: f64 = point
                    .iter()
                    .zip(&m.0)
                    .map(|(x, &e)| x.powi(i32::from(e)))
                    .product();
                c.to_f64() * mono
            })
            .sum()
    }

    /// `q` with `p = (Σ xᵢ²)·q`, if it exists.
    pub fn divide_by_radius_squared(&self) -> Option<Polynomial> {
        let divisor = Polynomial::radius_squared(self.nvars);
        // Leading monomial of Σxᵢ² under lex is x1²; a single polynomial
        // is a Gröbner basis of its ideal, so the remainder decides.
        let mut rest = self.terms.clone();
        let mut quotient = Polynomial::zero(self.nvars);
        while let Some((lead, c)) = rest.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if lead.0[0] < 2 {
                return None;
            }
            let mut qm = lead.clone();
            qm.0[0] -= 2;
            for (dm, dc) in &divisor.terms {
                let m = qm.mul(dm);
                let delta = -(&c * dc);
                let slot = rest.entry(m.clone()).or_default();
                *slot += &delta;
                if slot.is_zero() {
                    rest.remove(&m);
                }
            }
            quotient.add_term(qm, &c);
        }
        debug_assert_eq!(&quotient * &divisor, *self);
        Some(quotient)
    }

    /// Reindex into a polynomial in `nvars` variables, variable `i` moving
    /// to position `offset + i`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Polynomial {
        assert!(offset + self.nvars <= nvars, "embedding does not fit");
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; nvars];
            e[offset..offset + self.nvars].copy_from_slice(&m.0);
            (Monomial(e), c.clone())
        });
        Polynomial {
            nvars,
            terms: terms.collect(),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text in the same grammar the parser reads; terms appear in
/// descending lexicographic order.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let is_const = m.degree() == 0;
            let single = c.single_term();
            let negative = single.is_some_and(|(q, _)| q < &Rational::zero());
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match single {
                Some((q, n)) => {
                    let mag = RadicalScalar::term(num_traits::abs(q.clone()), n);
                    if is_const {
                        write!(f, "{mag}")?;
                    } else {
                        if !mag.is_one() {
                            write!(f, "{mag}*")?;
                        }
                        write_monomial(f, m)?;
                    }
                }
                None => {
                    write!(f, "({c})")?;
                    if !is_const {
                        write!(f, "*")?;
                        write_monomial(f, m)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
