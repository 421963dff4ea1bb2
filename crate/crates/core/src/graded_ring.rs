//! Graded complete-intersection presentations and their numerology.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::series::{HilbertSeries, LaurentPolynomial};

/// Degree window scanned by [`regularity_warning`] unless the caller picks one.
pub const DEFAULT_NONNEGATIVITY_DEGREE: i64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("InvalidPresentation: {0}")]
    InvalidPresentation(String),
    #[error("NotGorensteinSeries: {0}")]
    NotGorensteinSeries(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSymbol {
    pub symbol: String,
    pub degree: u32,
}

/// `K[x_1, ..., x_n] / (f_1, ..., f_m)` with positive degrees on everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    name: String,
    coefficient_label: String,
    generators: Vec<GradedSymbol>,
    relations: Vec<GradedSymbol>,
    regular_sequence_asserted: bool,
}

impl RingPresentation {
    pub fn new(
        name: impl Into<String>,
        coefficient_label: impl Into<String>,
        generators: Vec<GradedSymbol>,
        relations: Vec<GradedSymbol>,
        regular_sequence_asserted: bool,
    ) -> Result<Self, RingError> {
        let invalid = |msg: String| Err(RingError::InvalidPresentation(msg));
        if generators.is_empty() {
            return invalid("at least one generator is required".into());
        }
        if relations.len() > generators.len() {
            return invalid(format!(
                "{} relations exceed {} generators",
                relations.len(),
                generators.len()
            ));
        }
        for g in &generators {
            if g.degree < 1 {
                return invalid(format!("generator {} has degree 0", g.symbol));
            }
        }
        for r in &relations {
            if r.degree < 2 {
                return invalid(format!(
                    "relation {} has degree {} (must be at least 2)",
                    r.symbol, r.degree
                ));
            }
        }
        let mut seen = BTreeSet::new();
        for s in generators.iter().chain(&relations) {
            if s.symbol.is_empty() {
                return invalid("empty symbol".into());
            }
            if !seen.insert(s.symbol.as_str()) {
                return invalid(format!("symbol {} is used twice", s.symbol));
            }
        }
        Ok(Self {
            name: name.into(),
            coefficient_label: coefficient_label.into(),
            generators,
            relations,
            regular_sequence_asserted,
        })
    }

    /// A relation-free presentation with generators `x1, x2, ...`.
    pub fn polynomial(name: impl Into<String>, degrees: &[u32]) -> Result<Self, RingError> {
        Self::from_degrees(name, degrees, &[])
    }

    /// Generators `x1, ...` and relations `f1, ...` at the given degrees.
    pub fn from_degrees(
        name: impl Into<String>,
        generator_degrees: &[u32],
        relation_degrees: &[u32],
    ) -> Result<Self, RingError> {
        let symbols = |prefix: &str, degrees: &[u32]| {
            degrees
                .iter()
                .enumerate()
                .map(|(i, &degree)| GradedSymbol {
                    symbol: format!("{prefix}{}", i + 1),
                    degree,
                })
                .collect()
        };
        Self::new(
            name,
            "K",
            symbols("x", generator_degrees),
            symbols("f", relation_degrees),
            true,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coefficient_label(&self) -> &str {
        &self.coefficient_label
    }

    pub fn generators(&self) -> &[GradedSymbol] {
        &self.generators
    }

    pub fn relations(&self) -> &[GradedSymbol] {
        &self.relations
    }

    pub fn regular_sequence_asserted(&self) -> bool {
        self.regular_sequence_asserted
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn relation_degrees(&self) -> Vec<u32> {
        self.relations.iter().map(|r| r.degree).collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.relations.is_empty()
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[GradedSymbol]| {
            v.iter()
                .map(|s| s.symbol.as_str())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}[{}]", self.coefficient_label, join(&self.generators))?;
        if !self.relations.is_empty() {
            write!(f, "/({})", join(&self.relations))?;
        }
        let degrees: Vec<String> = self
            .generators
            .iter()
            .chain(&self.relations)
            .map(|s| format!("|{}|={}", s.symbol, s.degree))
            .collect();
        write!(f, "  {}", degrees.join(", "))
    }
}

/// `Π (1 - t^{e_j}) / Π (1 - t^{d_i})`.
pub fn hilbert_series(p: &RingPresentation) -> HilbertSeries {
    let numerator = p.relations.iter().fold(LaurentPolynomial::one(), |acc, r| {
        &acc * &LaurentPolynomial::one_minus_power(i64::from(r.degree))
    });
    HilbertSeries::new(numerator, p.generator_degrees())
}

pub fn krull_dimension(p: &RingPresentation) -> usize {
    p.generators.len() - p.relations.len()
}

/// `a = Σ relation degrees − Σ generator degrees − Krull dimension`.
pub fn gorenstein_shift_formula(p: &RingPresentation) -> i64 {
    let rel: i64 = p.relations.iter().map(|r| i64::from(r.degree)).sum();
    let gen: i64 = p.generators.iter().map(|g| i64::from(g.degree)).sum();
    rel - gen - krull_dimension(p) as i64
}

/// Reads the shift off the functional equation `p(1/t) = (−1)^r t^{−(a+r)} p(t)`.
pub fn gorenstein_shift_stanley(series: &HilbertSeries, dim: usize) -> Result<i64, RingError> {
    if series.is_zero() {
        return Err(RingError::NotGorensteinSeries("zero series".into()));
    }
    let (sign, k) = series
        .substitute_inverse()
        .ratio_as_signed_monomial(series)
        .map_err(|e| RingError::NotGorensteinSeries(e.to_string()))?;
    let expected = if dim.is_multiple_of(2) { 1 } else { -1 };
    if sign != expected {
        return Err(RingError::NotGorensteinSeries(format!(
            "functional-equation sign {sign} does not match (-1)^{dim}"
        )));
    }
    Ok(-k - dim as i64)
}

/// Independent count of graded ranks `0..=n`: enumerate monomials directly,
/// then apply each relation as `c[k] -= c[k - e]`.
pub fn brute_force_hilbert(p: &RingPresentation, n: u32) -> Vec<BigInt> {
    fn count(degrees: &[u32], budget: u32, used: u32, out: &mut [u64]) {
        match degrees.split_first() {
            None => out[used as usize] += 1,
            Some((&d, rest)) => {
                let mut total = used;
                while total <= budget {
                    count(rest, budget, total, out);
                    total += d;
                }
            }
        }
    }
    let mut counts = vec![0u64; n as usize + 1];
    count(&p.generator_degrees(), n, 0, &mut counts);
    let mut coeffs: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    for e in p.relation_degrees() {
        let e = e as usize;
        for k in (e..coeffs.len()).rev() {
            let lower = coeffs[k - e].clone();
            coeffs[k] -= lower;
        }
    }
    coeffs
}

/// Degrees in `0..=max_degree` where the series has a negative coefficient.
///
/// A genuine complete intersection never has one, so a nonempty answer means
/// the asserted regular sequence cannot be regular.
pub fn negative_coefficients(p: &RingPresentation, max_degree: i64) -> Vec<i64> {
    hilbert_series(p)
        .expand(0, max_degree)
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_negative())
        .map(|(k, _)| k as i64)
        .collect()
}

/// Warning text when a presentation asserting regularity fails the
/// nonnegativity check up to `max_degree`.
pub fn regularity_warning(p: &RingPresentation, max_degree: i64) -> Option<String> {
    if !p.regular_sequence_asserted {
        return None;
    }
    let bad = negative_coefficients(p, max_degree);
    let first = bad.first()?;
    Some(format!(
        "{}: Hilbert series has a negative coefficient in degree {first}; \
         the relations cannot form a regular sequence",
        p.name
    ))
}

/// A graded module described by its Poincaré series, possibly suspended and
/// dualized. The effective series is `t^shift · S(1/t)` when `dualized`,
/// `t^shift · S(t)` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModuleSeries {
    pub series: HilbertSeries,
    pub shift: i64,
    pub dualized: bool,
    pub label: String,
}

impl GradedModuleSeries {
    pub fn new(series: HilbertSeries, label: impl Into<String>) -> Self {
        Self {
            series,
            shift: 0,
            dualized: false,
            label: label.into(),
        }
    }

    /// `Σ^k M`.
    pub fn suspend(&self, k: i64, label: impl Into<String>) -> Self {
        Self {
            series: self.series.clone(),
            shift: self.shift + k,
            dualized: self.dualized,
            label: label.into(),
        }
    }

    /// The effective series as a rational function.
    pub fn rational_function(&self) -> HilbertSeries {
        let base = if self.dualized {
            self.series.substitute_inverse()
        } else {
            self.series.clone()
        };
        base.shift(self.shift)
    }

    /// Ranks in degrees `from..=to`. Dualized modules are bounded above, so
    /// their expansion runs in powers of `1/t`.
    pub fn coefficients(&self, from: i64, to: i64) -> Vec<num_rational::BigRational> {
        if from > to {
            return Vec::new();
        }
        if self.dualized {
            let mut c = self.series.expand(self.shift - to, self.shift - from);
            c.reverse();
            c
        } else {
            self.series.expand(from - self.shift, to - self.shift)
        }
    }

    /// Degrees in `from..=to` with a nonzero rank.
    pub fn support(&self, from: i64, to: i64) -> Vec<i64> {
        self.coefficients(from, to)
            .iter()
            .zip(from..)
            .filter(|(c, _)| !c.is_zero())
            .map(|(_, k)| k)
            .collect()
    }
}

/// `M ↦ M^∨ = Hom_K(M, K)`: degree `n` of the result is degree `−n` of `M`.
pub fn dual_series(m: &GradedModuleSeries) -> GradedModuleSeries {
    let label = match m.label.strip_suffix("^∨") {
        Some(base) if m.dualized => base.to_string(),
        _ => format!("{}^∨", m.label),
    };
    GradedModuleSeries {
        series: m.series.clone(),
        shift: -m.shift,
        dualized: !m.dualized,
        label,
    }
}
