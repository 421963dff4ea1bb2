//! Exact Laurent polynomials and rational functions in one variable `t`.
//!
//! Every graded dimension count in this crate is a [`HilbertSeries`]: a Laurent
//! polynomial numerator over a product of cyclotomic-style factors `(1 - t^d)`.
//! Coefficients are exact rationals; nothing here ever touches floating point.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("NotMonomialRatio: the quotient is not a signed power of t")]
    NotMonomialRatio,
    #[error("DivisionByZero: the divisor series is zero")]
    DivisionByZero,
}

/// Shorthand for an integer-valued rational.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite sum `Σ c_k t^k` with `k` ranging over all integers.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn monomial(coeff: BigRational, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    /// `1 - t^d`.
    pub fn one_minus_power(d: i64) -> Self {
        Self::one() - Self::monomial(BigRational::one(), d)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Builds from integer coefficients, e.g. `from_ints([(0, 1), (48, -1)])`.
    pub fn from_ints<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(terms.into_iter().map(|(k, c)| (k, rational(c))))
    }

    /// Dense coefficients `c_0 + c_1 s + ...` of an ordinary polynomial.
    pub fn from_dense(coeffs: &[BigRational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64, c.clone())),
        )
    }

    fn add_term(&mut self, exponent: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> BigRational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// `t ↦ t^k` for positive `k`.
    pub fn inflate(&self, k: i64) -> Self {
        assert!(k > 0, "inflation factor must be positive");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// `t ↦ 1/t`.
    pub fn substitute_inverse(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dlo, dhi) = (divisor.min_exponent()?, divisor.max_exponent()?);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = divisor.coeff(dhi);
        let mut remainder = self.clone();
        let mut quotient = Self::zero();
        let floor = self.min_exponent().unwrap_or(0) - dlo;
        while let Some(top) = remainder.max_exponent() {
            let k = top - dhi;
            if k < floor {
                return None;
            }
            let c = remainder.coeff(top) / &lead;
            for (e, dc) in divisor.terms() {
                remainder.add_term(e + k, -(dc * &c));
            }
            quotient.add_term(k, c);
        }
        Some(quotient)
    }

    /// Whether every exponent with a nonzero coefficient is even.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// If `self = s · t^k · other` with `s = ±1`, returns `(s, k)`.
    pub fn signed_monomial_ratio(&self, other: &Self) -> Option<(i8, i64)> {
        if self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (top_a, top_b) = (self.max_exponent()?, other.max_exponent()?);
        let ratio = self.coeff(top_a) / other.coeff(top_b);
        let sign = if ratio == BigRational::one() {
            1
        } else if ratio == -BigRational::one() {
            -1
        } else {
            return None;
        };
        let k = top_a - top_b;
        let candidate = other.shift(k).scale(&rational(i64::from(sign)));
        (candidate == *self).then_some((sign, k))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $ty:ty) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: Self) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add, LaurentPolynomial);
forward_owned!(Sub, sub, LaurentPolynomial);
forward_owned!(Mul, mul, LaurentPolynomial);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "t"),
        _ => write!(f, "t^{e}"),
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() || e == 0 {
                write!(f, "{magnitude}")?;
            }
            fmt_power(f, e)?;
        }
        Ok(())
    }
}

/// A rational function `numerator / Π (1 - t^d)`.
///
/// The constructor runs a reduction pass: a denominator factor is cancelled
/// whenever it divides the numerator exactly. Two series compare equal when
/// they are equal as rational functions, regardless of presentation.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    numerator: LaurentPolynomial,
    denominator: Vec<u32>,
}

fn denominator_product(degrees: &[u32]) -> LaurentPolynomial {
    degrees.iter().fold(LaurentPolynomial::one(), |acc, &d| {
        &acc * &LaurentPolynomial::one_minus_power(i64::from(d))
    })
}

/// Multiset difference `a - b` of sorted degree lists.
fn multiset_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut remaining = b.to_vec();
    let mut out = Vec::new();
    for d in a {
        if let Some(pos) = remaining.iter().position(|x| x == d) {
            remaining.swap_remove(pos);
        } else {
            out.push(*d);
        }
    }
    out
}

/// Smallest multiset containing both `a` and `b`.
fn multiset_union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = a.to_vec();
    out.extend(multiset_difference(b, a));
    out.sort_unstable();
    out
}

impl HilbertSeries {
    /// Builds `numerator / Π (1 - t^d)` and reduces it.
    ///
    /// Panics if a denominator degree is zero.
    pub fn new(numerator: LaurentPolynomial, denominator: Vec<u32>) -> Self {
        assert!(
            denominator.iter().all(|&d| d >= 1),
            "denominator degrees must be positive"
        );
        let mut s = Self {
            numerator,
            denominator,
        };
        s.reduce();
        s
    }

    pub fn zero() -> Self {
        Self::polynomial(LaurentPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::polynomial(LaurentPolynomial::one())
    }

    pub fn polynomial(p: LaurentPolynomial) -> Self {
        Self::new(p, Vec::new())
    }

    /// `1 / Π (1 - t^d)`.
    pub fn free(degrees: &[u32]) -> Self {
        Self::new(LaurentPolynomial::one(), degrees.to_vec())
    }

    /// `c · t^k`.
    pub fn monomial(coeff: BigRational, k: i64) -> Self {
        Self::polynomial(LaurentPolynomial::monomial(coeff, k))
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return;
        }
        self.denominator.sort_unstable();
        let mut kept = Vec::with_capacity(self.denominator.len());
        // Largest factors first: they absorb the most.
        for &d in self.denominator.iter().rev() {
            let factor = LaurentPolynomial::one_minus_power(i64::from(d));
            match self.numerator.div_exact(&factor) {
                Some(q) => self.numerator = q,
                None => kept.push(d),
            }
        }
        kept.sort_unstable();
        self.denominator = kept;
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    /// Sorted multiset of denominator degrees.
    pub fn denominator_degrees(&self) -> &[u32] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Whether the reduction pass would cancel anything further.
    pub fn is_canonical(&self) -> bool {
        let mut copy = self.clone();
        copy.reduce();
        copy.numerator == self.numerator && copy.denominator == self.denominator
    }

    /// Coefficients of `t^from ..= t^to` in the expansion as a Laurent series
    /// bounded below (each `1/(1 - t^d)` expands as `1 + t^d + t^{2d} + ...`).
    pub fn expand(&self, from: i64, to: i64) -> Vec<BigRational> {
        if from > to {
            return Vec::new();
        }
        let lo = self.numerator.min_exponent().map_or(from, |m| m.min(from));
        let len = usize::try_from(to - lo + 1).expect("expansion window too large");
        let mut coeffs = vec![BigRational::zero(); len];
        for (e, c) in self.numerator.terms() {
            if e <= to {
                coeffs[(e - lo) as usize] = c.clone();
            }
        }
        for &d in &self.denominator {
            let d = d as usize;
            for k in d..len {
                let prev = coeffs[k - d].clone();
                coeffs[k] += prev;
            }
        }
        coeffs.split_off((from - lo) as usize)
    }

    /// Expansion with every coefficient checked to be an integer.
    pub fn expand_integers(&self, from: i64, to: i64) -> Option<Vec<BigInt>> {
        self.expand(from, to)
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let common = multiset_union(&self.denominator, &other.denominator);
        let lift = |s: &Self| {
            &s.numerator * &denominator_product(&multiset_difference(&common, &s.denominator))
        };
        Self::new(&lift(self) + &lift(other), common)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denominator = self.denominator.clone();
        denominator.extend_from_slice(&other.denominator);
        Self::new(&self.numerator * &other.numerator, denominator)
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.numerator.scale(factor), self.denominator.clone())
    }

    /// Multiplies by `t^k`, i.e. the suspension `Σ^k` on graded dimensions.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            numerator: self.numerator.shift(k),
            denominator: self.denominator.clone(),
        }
    }

    /// The rational function `p(1/t)`, rewritten with each
    /// `1 - t^{-d} = -t^{-d} (1 - t^d)` so the denominator stays canonical.
    pub fn substitute_inverse(&self) -> Self {
        let total: i64 = self.denominator.iter().map(|&d| i64::from(d)).sum();
        let sign = if self.denominator.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        let numerator = self
            .numerator
            .substitute_inverse()
            .shift(total)
            .scale(&rational(sign));
        Self::new(numerator, self.denominator.clone())
    }

    /// Finds `(s, k)` with `self = s · t^k · other`, `s = ±1`.
    pub fn ratio_as_signed_monomial(&self, other: &Self) -> Result<(i8, i64), SeriesError> {
        if other.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        if self.is_zero() {
            return Err(SeriesError::NotMonomialRatio);
        }
        let (lhs, rhs) = self.cross_multiplied(other);
        lhs.signed_monomial_ratio(&rhs)
            .ok_or(SeriesError::NotMonomialRatio)
    }

    /// Numerators of `self` and `other` brought over a common denominator.
    fn cross_multiplied(&self, other: &Self) -> (LaurentPolynomial, LaurentPolynomial) {
        let only_self = multiset_difference(&self.denominator, &other.denominator);
        let only_other = multiset_difference(&other.denominator, &self.denominator);
        (
            &self.numerator * &denominator_product(&only_other),
            &other.numerator * &denominator_product(&only_self),
        )
    }

    /// Whether the expansion is concentrated in even degrees.
    pub fn is_even(&self) -> bool {
        // Multiply through by (1 + t^d) for odd d so the denominator is even.
        let numerator = self.denominator.iter().filter(|&&d| d % 2 == 1).fold(
            self.numerator.clone(),
            |acc, &d| {
                &acc * &(&LaurentPolynomial::one()
                    + &LaurentPolynomial::monomial(BigRational::one(), i64::from(d)))
            },
        );
        numerator.is_even()
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        let (lhs, rhs) = self.cross_multiplied(other);
        lhs == rhs
    }
}

impl Eq for HilbertSeries {}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        if self.numerator.len() > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        write!(f, " / ")?;
        let mut grouped: BTreeMap<u32, usize> = BTreeMap::new();
        for &d in &self.denominator {
            *grouped.entry(d).or_default() += 1;
        }
        for (d, mult) in grouped {
            write!(f, "(1 - ")?;
            fmt_power(f, i64::from(d))?;
            write!(f, ")")?;
            if mult > 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rational(x)).collect()
    }

    fn taf_d6() -> HilbertSeries {
        HilbertSeries::new(LaurentPolynomial::one_minus_power(48), vec![8, 12, 24])
    }

    #[test]
    fn expand_constant_and_geometric() {
        assert_eq!(HilbertSeries::one().expand(0, 3), ints(&[1, 0, 0, 0]));
        assert_eq!(
            HilbertSeries::free(&[2]).expand(0, 6),
            ints(&[1, 0, 1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn expand_degrees_eight_and_twelve_at_multiples_of_four() {
        let s = HilbertSeries::free(&[8, 12]);
        let coeffs = s.expand(0, 68);
        let digits: String = coeffs.iter().step_by(4).map(|c| c.to_string()).collect();
        assert_eq!(digits, "101111212222323333");
    }

    #[test]
    fn expand_window_below_numerator() {
        let s = HilbertSeries::monomial(rational(1), 3);
        assert_eq!(s.expand(-2, 4), ints(&[0, 0, 0, 0, 0, 1, 0]));
        assert_eq!(s.expand(5, 4), Vec::<BigRational>::new());
    }

    #[test]
    fn add_and_mul_identities() {
        let g = HilbertSeries::free(&[1]);
        assert_eq!(g.add(&HilbertSeries::zero()), g);
        let inverse = HilbertSeries::polynomial(LaurentPolynomial::one_minus_power(2));
        let prod = HilbertSeries::free(&[2]).mul(&inverse);
        assert_eq!(prod, HilbertSeries::one());
        assert!(prod.denominator_degrees().is_empty());
        let cancelled = g.add(&g.neg());
        assert!(cancelled.is_zero());
        assert!(cancelled.denominator_degrees().is_empty());
    }

    #[test]
    fn substitute_inverse_examples() {
        let s = HilbertSeries::free(&[2]);
        let inv = s.substitute_inverse();
        assert_eq!(inv.numerator(), &LaurentPolynomial::from_ints([(2, -1)]));
        assert_eq!(inv.denominator_degrees(), &[2]);
        assert_eq!(
            HilbertSeries::one().substitute_inverse(),
            HilbertSeries::one()
        );
        let t = taf_d6();
        assert_eq!(t.substitute_inverse(), t.shift(-4));
    }

    #[test]
    fn signed_monomial_ratios() {
        let p = HilbertSeries::free(&[2]);
        assert_eq!(
            p.substitute_inverse().ratio_as_signed_monomial(&p),
            Ok((-1, 2))
        );
        assert_eq!(p.ratio_as_signed_monomial(&p), Ok((1, 0)));
        let q = HilbertSeries::free(&[1]).add(&HilbertSeries::one());
        assert_eq!(
            q.ratio_as_signed_monomial(&HilbertSeries::free(&[1])),
            Err(SeriesError::NotMonomialRatio)
        );
        assert_eq!(
            p.ratio_as_signed_monomial(&HilbertSeries::zero()),
            Err(SeriesError::DivisionByZero)
        );
    }

    #[test]
    fn ratio_rejects_scalar_multiples() {
        let p = HilbertSeries::free(&[4]);
        assert!(p.scale(&rational(2)).ratio_as_signed_monomial(&p).is_err());
    }

    #[test]
    fn reduction_cancels_exact_factors() {
        let s = HilbertSeries::new(LaurentPolynomial::one_minus_power(4), vec![2, 4]);
        assert_eq!(s.denominator_degrees(), &[2]);
        assert_eq!(s.numerator(), &LaurentPolynomial::one());
        assert!(s.is_canonical());
    }

    #[test]
    fn equality_across_presentations() {
        // (1 + t)/(1 - t^2) = 1/(1 - t)
        let a = HilbertSeries::new(LaurentPolynomial::from_ints([(0, 1), (1, 1)]), vec![2]);
        assert_eq!(a, HilbertSeries::free(&[1]));
        assert_ne!(a, HilbertSeries::free(&[2]));
    }

    #[test]
    fn div_exact_detects_remainders() {
        let p = LaurentPolynomial::from_ints([(0, 1), (3, 1)]);
        let q = LaurentPolynomial::from_ints([(0, 1), (1, 1)]);
        assert_eq!(
            p.div_exact(&q),
            Some(LaurentPolynomial::from_ints([(0, 1), (1, -1), (2, 1)]))
        );
        assert_eq!(p.div_exact(&LaurentPolynomial::one_minus_power(2)), None);
        let shifted = p.shift(-5);
        assert_eq!(
            shifted.div_exact(&q).map(|r| r.min_exponent()),
            Some(Some(-5))
        );
    }

    #[test]
    fn parity_detection() {
        assert!(taf_d6().is_even());
        assert!(!HilbertSeries::free(&[3]).is_even());
        // (1 - t^6)/(1 - t^3) reduces to 1 + t^3
        assert!(!HilbertSeries::new(LaurentPolynomial::one_minus_power(6), vec![3]).is_even());
        // 1/(1 - t^3)(1 + t^3) = 1/(1 - t^6)
        let s = HilbertSeries::new(LaurentPolynomial::from_ints([(0, 1), (3, -1)]), vec![3, 6]);
        assert!(s.is_even());
    }

    #[test]
    fn display_forms() {
        // (1 - t^48)/(1 - t^24) cancels to 1 + t^24
        assert_eq!(taf_d6().to_string(), "(1 + t^24) / (1 - t^8)(1 - t^12)");
        assert_eq!(HilbertSeries::free(&[4, 4]).to_string(), "1 / (1 - t^4)^2");
        assert_eq!(
            HilbertSeries::free(&[2]).substitute_inverse().to_string(),
            "-t^2 / (1 - t^2)"
        );
    }
}
