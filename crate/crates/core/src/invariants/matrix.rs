//! Dense square matrices over the rationals.

use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::series::rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    /// Row-major construction; `None` if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Option<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rational(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigRational::one();
        }
        Self { n, entries }
    }

    /// `[c]` as a 1×1 matrix.
    pub fn scalar(c: BigRational) -> Self {
        Self {
            n: 1,
            entries: vec![c],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> + '_ {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn sub_identity(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i] -= BigRational::one();
        }
        out
    }

    /// Row echelon form via Gaussian elimination, returning the rank and the
    /// product of pivots (with sign from row swaps).
    fn eliminate(&self) -> (usize, BigRational) {
        let n = self.n;
        let mut m: Vec<Vec<BigRational>> = self.rows().map(<[_]>::to_vec).collect();
        let mut rank = 0;
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
                det = BigRational::zero();
                continue;
            };
            if pivot != rank {
                m.swap(pivot, rank);
                det = -det;
            }
            let p = m[rank][col].clone();
            det *= &p;
            for r in rank + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &p;
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &factor * y;
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().0
    }

    pub fn determinant(&self) -> BigRational {
        if self.n == 0 {
            return BigRational::one();
        }
        self.eliminate().1
    }

    /// Coefficients `[1, c_1, ..., c_n]` of `det(I − s·M)` in `s`, computed by
    /// the Faddeev–LeVerrier recursion on the characteristic polynomial.
    pub fn det_one_minus(&self) -> Vec<BigRational> {
        let n = self.n;
        let mut coeffs = vec![BigRational::one()];
        let mut aux = Self::identity(n);
        for k in 1..=n {
            let am = self * &aux;
            let c = -am.trace() / rational(k as i64);
            coeffs.push(c.clone());
            aux = am;
            for i in 0..n {
                aux.entries[i * n + i] += &c;
            }
        }
        // det(λI − M) = λ^n + c_1 λ^{n-1} + ...; det(I − sM) = 1 + c_1 s + ... + c_n s^n.
        coeffs
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: Self) -> RationalMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        RationalMatrix { n, entries }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_determinant() {
        let m = RationalMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.determinant().is_zero());
        let t = RationalMatrix::from_int_rows(&[&[-1, 1], &[0, 1]]).unwrap();
        assert_eq!(t.determinant(), rational(-1));
        assert_eq!(t.sub_identity().rank(), 1);
        let swap = RationalMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(swap.determinant(), rational(-1));
    }

    #[test]
    fn det_one_minus_matches_hand_expansion() {
        // 3-cycle on the reduced permutation representation: det(I − sM) = 1 + s + s^2.
        let r = RationalMatrix::from_int_rows(&[&[0, -1], &[1, -1]]).unwrap();
        assert_eq!(
            r.det_one_minus(),
            vec![rational(1), rational(1), rational(1)]
        );
        let neg = RationalMatrix::scalar(rational(-1));
        assert_eq!(neg.det_one_minus(), vec![rational(1), rational(1)]);
        let id = RationalMatrix::identity(2);
        assert_eq!(
            id.det_one_minus(),
            vec![rational(1), rational(-2), rational(1)]
        );
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(RationalMatrix::from_int_rows(&[&[1, 2], &[3]]).is_none());
    }
}
