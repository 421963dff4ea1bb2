//! Molien series, fundamental degrees and the Solomon supplement.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::character::ClassFunction;
use super::group::GradedGroupRep;
use super::InvariantsError;
use crate::series::{rational, HilbertSeries, LaurentPolynomial};

/// Character by which each term of the Molien sum is weighted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Twist {
    Trivial,
    /// Determinant of the whole of `⊕ V_d`.
    Det,
    /// A rational class function, aligned with the group's classes.
    Character {
        name: String,
        values: ClassFunction,
    },
}

impl Twist {
    pub fn label(&self) -> &str {
        match self {
            Twist::Trivial => "trivial",
            Twist::Det => "det",
            Twist::Character { name, .. } => name,
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolienReport {
    pub series: HilbertSeries,
    pub twist: Twist,
    pub polynomial_degrees: Option<Vec<u32>>,
    pub pseudoreflection_count: usize,
}

/// `1 / det(1 − h t^d)` for one block, as `Q(t) / (1 − t^{m d})^n` where `m`
/// is the order of `h`.
fn block_term(h: &super::matrix::RationalMatrix, degree: u32, order: usize) -> HilbertSeries {
    let n = h.size();
    let char_poly = LaurentPolynomial::from_dense(&h.det_one_minus());
    let m = order as i64;
    // every eigenvalue is an m-th root of unity, so det(1 − hs) divides (1 − s^m)^n
    let cover = LaurentPolynomial::one_minus_power(m).pow(n as u32);
    let quotient = cover
        .div_exact(&char_poly)
        .expect("characteristic factor divides (1 - s^m)^n");
    let degree_i = i64::from(degree);
    let md = u32::try_from(m * degree_i).expect("degree overflow");
    HilbertSeries::new(quotient.inflate(degree_i), vec![md; n])
}

/// `1 / det(1 − g^{-1} t, ⊕ V_d)` with block `V_d` in degree `d`.
fn element_term(g: &GradedGroupRep, i: usize) -> HilbertSeries {
    let inv = g.inverse(i);
    let order = g.element_order(inv);
    g.element(inv)
        .blocks()
        .iter()
        .zip(g.blocks())
        .fold(HilbertSeries::one(), |acc, (h, b)| {
            acc.mul(&block_term(h, b.degree, order))
        })
}

fn twist_value(g: &GradedGroupRep, twist: &Twist, class: usize) -> BigRational {
    match twist {
        Twist::Trivial => BigRational::one(),
        Twist::Det => g.element(g.classes()[class][0]).determinant(),
        Twist::Character { values, .. } => values[class].clone(),
    }
}

/// Number of non-identity elements with `rank(g − 1) = 1`.
pub fn pseudoreflection_count(g: &GradedGroupRep) -> usize {
    g.elements()
        .iter()
        .skip(1)
        .filter(|e| e.moved_rank() == 1)
        .count()
}

/// `(1/|G|) Σ_g χ(g) / det(1 − g^{-1} t)`, summed class by class.
pub fn molien_series(g: &GradedGroupRep, twist: &Twist) -> Result<MolienReport, InvariantsError> {
    if let Twist::Character { values, name } = twist {
        if values.len() != g.classes().len() {
            return Err(InvariantsError::InvalidCharacterTable(format!(
                "twist {name} has {} values for {} classes",
                values.len(),
                g.classes().len()
            )));
        }
    }
    let mut sum = HilbertSeries::zero();
    for (c, class) in g.classes().iter().enumerate() {
        let weight = twist_value(g, twist, c) * rational(class.len() as i64);
        if weight.is_zero() {
            continue;
        }
        sum = sum.add(&element_term(g, class[0]).scale(&weight));
    }
    let series = sum.scale(&(BigRational::one() / rational(g.order() as i64)));
    let polynomial_degrees = extract_polynomial_degrees(&series, g.dimension()).ok();
    Ok(MolienReport {
        series,
        twist: twist.clone(),
        polynomial_degrees,
        pseudoreflection_count: pseudoreflection_count(g),
    })
}

/// Smallest `e ≥ 1` with a positive coefficient, scanning a window sized
/// from the presentation of `s`.
fn first_positive_degree(s: &HilbertSeries) -> Option<u32> {
    let den: i64 = s.denominator_degrees().iter().map(|&d| i64::from(d)).sum();
    let top = s.numerator().max_exponent().unwrap_or(0).max(0);
    let window = 2 * (den + top) + 2;
    s.expand(1, window)
        .iter()
        .position(Signed::is_positive)
        .map(|k| k as u32 + 1)
}

/// Greedy peeling of `(1 − t^e)` factors: succeeds when the series is
/// exactly `1 / Π (1 − t^{e_i})` with `rank` factors.
pub fn extract_polynomial_degrees(
    series: &HilbertSeries,
    rank: usize,
) -> Result<Vec<u32>, InvariantsError> {
    if rank == 0 {
        return Err(InvariantsError::NotPolynomial(
            "rank must be positive".into(),
        ));
    }
    let mut residue = series.clone();
    let mut degrees = Vec::with_capacity(rank);
    for _ in 0..rank {
        let Some(e) = first_positive_degree(&residue) else {
            return Err(InvariantsError::NotPolynomial(format!(
                "no further positive coefficient after peeling {degrees:?}"
            )));
        };
        degrees.push(e);
        residue = residue.mul(&HilbertSeries::polynomial(
            LaurentPolynomial::one_minus_power(i64::from(e)),
        ));
    }
    if residue != HilbertSeries::one() {
        return Err(InvariantsError::NotPolynomial(format!(
            "residue {residue} after peeling {degrees:?}"
        )));
    }
    degrees.sort_unstable();
    Ok(degrees)
}

/// `b = Σ d_i − Σ e_i`.
pub fn solomon_supplement(
    generator_degrees: &[u32],
    invariant_degrees: &[u32],
) -> Result<i64, InvariantsError> {
    if generator_degrees.len() != invariant_degrees.len() {
        return Err(InvariantsError::LengthMismatch(
            generator_degrees.len(),
            invariant_degrees.len(),
        ));
    }
    let sum = |v: &[u32]| v.iter().map(|&d| i64::from(d)).sum::<i64>();
    Ok(sum(generator_degrees) - sum(invariant_degrees))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolomonCheck {
    pub holds: bool,
    pub b: i64,
    pub invariant_degrees: Vec<u32>,
    pub untwisted: HilbertSeries,
    pub twisted: HilbertSeries,
}

/// Checks `molien(det) = t^{−b} · molien(trivial)` exactly.
pub fn verify_solomon(g: &GradedGroupRep) -> Result<SolomonCheck, InvariantsError> {
    let untwisted = molien_series(g, &Twist::Trivial)?.series;
    let invariant_degrees = extract_polynomial_degrees(&untwisted, g.dimension())?;
    let b = solomon_supplement(&g.generator_degrees(), &invariant_degrees)?;
    let twisted = molien_series(g, &Twist::Det)?.series;
    let holds = twisted == untwisted.shift(-b);
    Ok(SolomonCheck {
        holds,
        b,
        invariant_degrees,
        untwisted,
        twisted,
    })
}
