use std::fmt;

use crate::error::{Error, Result};
use crate::polyalg::{Polynomial, RadicalScalar, SphereIdeal};

/// A vector of polynomials sharing one variable count: a map `R^N → R^{n+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    nvars: usize,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::DimensionMismatch("a map needs at least one component".into()))?;
        let nvars = first.nvars();
        if let Some(bad) = components.iter().find(|c| c.nvars() != nvars) {
            return Err(Error::DimensionMismatch(format!(
                "component in {} variables, expected {nvars}",
                bad.nvars()
            )));
        }
        Ok(Self { nvars, components })
    }

    /// The identity of `R^nvars`, i.e. the inclusion of the unit sphere.
    pub fn identity(nvars: usize) -> Self {
        Self {
            nvars,
            components: (0..nvars).map(|i| Polynomial::var(nvars, i)).collect(),
        }
    }

    pub fn zeros(nvars: usize, len: usize) -> Self {
        assert!(len > 0);
        Self {
            nvars,
            components: vec![Polynomial::zero(nvars); len],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// `|F|² = Σ F_α²`.
    pub fn norm_squared(&self) -> Polynomial {
        self.dot(self)
    }

    /// Pointwise inner product `Σ F_α G_α`.
    pub fn dot(&self, other: &PolyMap) -> Polynomial {
        assert_eq!(self.len(), other.len(), "component counts differ");
        let mut acc = Polynomial::zero(self.nvars);
        for (a, b) in self.components.iter().zip(&other.components) {
            acc = &acc + &(a * b);
        }
        acc
    }

    pub fn map<F: FnMut(&Polynomial) -> Polynomial>(&self, f: F) -> PolyMap {
        PolyMap {
            nvars: self.nvars,
            components: self.components.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &RadicalScalar) -> PolyMap {
        self.map(|p| p.scale(c))
    }

    /// Multiply every component by the same polynomial.
    pub fn scale_by(&self, p: &Polynomial) -> PolyMap {
        self.map(|q| q * p)
    }

    pub fn add(&self, other: &PolyMap) -> PolyMap {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMap) -> PolyMap {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with<F: Fn(&Polynomial, &Polynomial) -> Polynomial>(&self, other: &PolyMap, f: F) -> PolyMap {
        assert_eq!(self.len(), other.len(), "component counts differ");
        PolyMap {
            nvars: self.nvars,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn reduce(&self, ideal: &SphereIdeal) -> PolyMap {
        self.map(|p| ideal.reduce(p))
    }

    /// Components `[0, split)` and `[split, len)`.
    pub fn split_at(&self, split: usize) -> (PolyMap, PolyMap) {
        assert!(split > 0 && split < self.len(), "split index out of range");
        let (a, b) = self.components.split_at(split);
        (
            PolyMap {
                nvars: self.nvars,
                components: a.to_vec(),
            },
            PolyMap {
                nvars: self.nvars,
                components: b.to_vec(),
            },
        )
    }

    pub fn concat(&self, other: &PolyMap) -> Result<PolyMap> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack maps in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        Ok(PolyMap {
            nvars: self.nvars,
            components,
        })
    }

    /// Reindex every component into `nvars` variables starting at `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> PolyMap {
        PolyMap {
            nvars,
            components: self.components.iter().map(|p| p.embed(nvars, offset)).collect(),
        }
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> Vec<f64> {
        self.components.iter().map(|p| p.evaluate_f64(point)).collect()
    }
}

impl fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMap[{}]{self}", self.nvars)
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
