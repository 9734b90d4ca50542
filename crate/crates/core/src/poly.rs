//! Dense univariate polynomials with big-integer coefficients.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: usize, coeff: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::new(coeffs)
    }

    /// `(1 + x)^n`.
    pub fn one_plus_x_pow(n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = BigInt::one();
        for k in 0..=n {
            coeffs.push(c.clone());
            c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        }
        Self::new(coeffs)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
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

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn binomial_expansion() {
        assert_eq!(Poly::one_plus_x_pow(4), p(&[1, 4, 6, 4, 1]));
        assert_eq!(Poly::one_plus_x_pow(0), Poly::one());
        assert_eq!(p(&[1, 1]).pow(5), Poly::one_plus_x_pow(5));
    }

    #[test]
    fn trims_and_degree() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(&p(&[1, 1]) - &p(&[0, 1]), Poly::one());
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(a in proptest::collection::vec(-5i64..6, 0..6),
                                       b in proptest::collection::vec(-5i64..6, 0..6),
                                       x in -4i64..5) {
            let (pa, pb) = (p(&a), p(&b));
            let x = BigInt::from(x);
            prop_assert_eq!((&pa * &pb).eval(&x), pa.eval(&x) * pb.eval(&x));
            prop_assert_eq!((&pa + &pb).eval(&x), pa.eval(&x) + pb.eval(&x));
        }
    }
}
