//! Canonical remainders modulo unit-sphere ideals.
//!
//! A domain is a product of unit spheres, each living on a contiguous block
//! of variables. The generators `Σ_{i∈B} xᵢ² − 1` have pairwise coprime
//! leading monomials (the square of each block's first variable) under lex,
//! so they form a Gröbner basis and the remainder is unique.

use std::collections::BTreeMap;
use std::ops::Range;

use super::polynomial::{Monomial, Polynomial};
use super::radical::RadicalScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereIdeal {
    nvars: usize,
    blocks: Vec<Range<usize>>,
}

impl SphereIdeal {
    /// The ideal of the unit sphere in all `nvars` variables.
    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            blocks: std::iter::once(0..nvars).collect(),
        }
    }

    /// One unit sphere per block; blocks must partition `0..nvars`.
    pub fn product(blocks: Vec<Range<usize>>) -> Self {
        let nvars = blocks.last().map_or(0, |b| b.end);
        let mut next = 0;
        for b in &blocks {
            assert_eq!(b.start, next, "blocks must be contiguous");
            assert!(b.end > b.start, "blocks must be non-empty");
            next = b.end;
        }
        Self { nvars, blocks }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.blocks
            .iter()
            .map(|b| {
                &Polynomial::radius_squared_on(self.nvars, b.clone()) - &Polynomial::one(self.nvars)
            })
            .collect()
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars, "polynomial does not live on this domain");
        let mut current = p.clone();
        for block in &self.blocks {
            current = reduce_block(&current, block.clone());
        }
        current
    }
}

fn reduce_block(p: &Polynomial, block: Range<usize>) -> Polynomial {
    let nvars = p.nvars();
    let lead = block.start;
    if p.terms().all(|(m, _)| m.0[lead] < 2) {
        return p.clone();
    }
    // x_lead² = 1 − Σ_{other} x_i², so x_lead^{2q+s} = x_lead^s (1 − S)^q.
    let mut rest = Polynomial::one(nvars);
    for i in block.clone().skip(1) {
        let mut e = vec![0; nvars];
        e[i] = 2;
        rest = &rest - &Polynomial::monomial(nvars, Monomial(e), RadicalScalar::one());
    }
    let mut powers: Vec<Polynomial> = vec![Polynomial::one(nvars)];
    let mut acc: BTreeMap<Monomial, RadicalScalar> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.0[lead];
        if e < 2 {
            let slot = acc.entry(m.clone()).or_default();
            *slot += c;
            continue;
        }
        let q = usize::from(e / 2);
        while powers.len() <= q {
            let next = powers.last().expect("non-empty") * &rest;
            powers.push(next);
        }
        let mut base = m.clone();
        base.0[lead] = e % 2;
        for (pm, pc) in powers[q].terms() {
            let prod_m = Monomial(base.0.iter().zip(&pm.0).map(|(a, b)| a + b).collect());
            let slot = acc.entry(prod_m).or_default();
            *slot += &(c * pc);
        }
    }
    Polynomial::from_terms(nvars, acc.into_iter().filter(|(_, c)| !c.is_zero()))
}

/// Normal form modulo `Σ xᵢ² − 1` in all variables of `p`.
pub fn normal_form_mod_sphere(p: &Polynomial) -> Polynomial {
    SphereIdeal::unit(p.nvars()).reduce(p)
}
