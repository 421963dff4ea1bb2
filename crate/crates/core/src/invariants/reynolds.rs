//! Explicit invariants by averaging monomials over the group.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::group::{GradedGroupRep, GroupElement};
use super::InvariantsError;
use crate::series::rational;

/// Default bound on the number of monomials in one degree.
pub const DEFAULT_MONOMIAL_BOUND: usize = 5000;

/// Exponent vector, one entry per generator of the polynomial ring.
pub type Monomial = Vec<u32>;

/// A polynomial in the ring generators with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    pub terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::default();
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(exponents: Monomial) -> Self {
        let mut p = Self::default();
        p.add_term(exponents, BigRational::one());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(m.clone())
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    /// `Some(c)` when `self = c · other` for a nonzero rational `c`.
    pub fn proportionality(&self, other: &Self) -> Option<BigRational> {
        let (m, c) = other.terms.iter().next()?;
        let ratio = self.terms.get(m)? / c;
        (!ratio.is_zero() && other.scale(&ratio) == *self).then_some(ratio)
    }

    /// Renders with the given variable names, e.g. `x^2 + x*y + y^2`.
    pub fn render(&self, symbols: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = m
                .iter()
                .zip(symbols)
                .filter(|(e, _)| **e > 0)
                .map(|(e, s)| {
                    if *e == 1 {
                        s.clone()
                    } else {
                        format!("{s}^{e}")
                    }
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let body = factors.join("*");
            match (mag.is_one(), body.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&body),
                (false, true) => out.push_str(&mag.to_string()),
                (false, false) => out.push_str(&format!("{mag}*{body}")),
            }
        }
        out
    }
}

/// Monomials of weighted degree `total` for generator degrees `degrees`.
fn monomials_of_degree(degrees: &[u32], total: u32) -> Vec<Monomial> {
    fn walk(degrees: &[u32], remaining: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        match degrees.split_first() {
            None => {
                if remaining == 0 {
                    out.push(prefix.clone());
                }
            }
            Some((&d, rest)) => {
                for e in 0..=remaining / d {
                    prefix.push(e);
                    walk(rest, remaining - e * d, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(degrees, total, &mut Vec::new(), &mut out);
    out
}

/// Number of monomials of weighted degree `total`, without listing them.
fn count_monomials(degrees: &[u32], total: u32) -> usize {
    let mut ways = vec![0usize; total as usize + 1];
    ways[0] = 1;
    for &d in degrees {
        for k in d as usize..ways.len() {
            ways[k] = ways[k].saturating_add(ways[k - d as usize]);
        }
    }
    ways[total as usize]
}

/// Images `g · x_j = Σ_i M_{ij} x_i` of the generators.
fn linear_images(g: &GroupElement, nvars: usize) -> Vec<Polynomial> {
    let m = g.full_matrix();
    (0..nvars)
        .map(|j| {
            Polynomial::from_terms((0..nvars).map(|i| {
                let mut e = vec![0; nvars];
                e[i] = 1;
                (e, m.get(i, j).clone())
            }))
        })
        .collect()
}

fn act_on_monomial(images: &[Polynomial], m: &Monomial) -> Polynomial {
    let nvars = images.len();
    let mut out = Polynomial::constant(nvars, BigRational::one());
    for (img, &e) in images.iter().zip(m) {
        for _ in 0..e {
            out = out.mul(img);
        }
    }
    out
}

/// `(1/|G|) Σ_g g · p`.
pub fn reynolds(g: &GradedGroupRep, p: &Polynomial) -> Polynomial {
    let nvars = g.dimension();
    let mut sum = Polynomial::default();
    for element in g.elements() {
        let images = linear_images(element, nvars);
        for (m, c) in &p.terms {
            sum = sum.add(&act_on_monomial(&images, m).scale(c));
        }
    }
    sum.scale(&(BigRational::one() / rational(g.order() as i64)))
}

/// Reduced row-echelon basis of the span of `polys`.
fn row_reduce(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for mut p in polys {
        for b in &basis {
            let (lead, _) = b
                .terms
                .iter()
                .next_back()
                .expect("basis vectors are nonzero");
            if let Some(c) = p.terms.get(lead).cloned() {
                p = p.add(&b.scale(&-c));
            }
        }
        if p.is_zero() {
            continue;
        }
        let (lead, c) = p
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        p = p.scale(&(BigRational::one() / c));
        for b in basis.iter_mut() {
            if let Some(x) = b.terms.get(&lead).cloned() {
                *b = b.add(&p.scale(&-x));
            }
        }
        basis.push(p);
    }
    basis.sort_by(|a, b| b.terms.keys().next_back().cmp(&a.terms.keys().next_back()));
    basis
}

/// A basis of the invariants of weighted degree `total_degree`.
pub fn invariant_basis(
    g: &GradedGroupRep,
    total_degree: u32,
    monomial_bound: usize,
) -> Result<Vec<Polynomial>, InvariantsError> {
    let degrees = g.generator_degrees();
    let count = count_monomials(&degrees, total_degree);
    if count > monomial_bound {
        return Err(InvariantsError::MonomialBoundExceeded(
            count,
            monomial_bound,
        ));
    }
    let averaged: Vec<Polynomial> = monomials_of_degree(&degrees, total_degree)
        .into_iter()
        .map(|m| reynolds(g, &Polynomial::monomial(m)))
        .collect();
    Ok(row_reduce(averaged))
}
