//! Dense univariate polynomials in the symbolic dimension `N`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{ExactField, Scalar};

/// Polynomial with coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `N`.
    pub fn var() -> Self {
        Polynomial {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    /// `N + shift`.
    pub fn linear(shift: i64) -> Self {
        Self::new(vec![T::from_int(shift), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl<T: ExactField> Polynomial<T> {
    /// Euclidean division, `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor
            .leading()
            .expect("polynomial division by zero")
            .clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = rem[k + ddeg].clone() / dlead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (Self::new(quot), Self::new(rem))
    }

    /// Canonical associate: integer coefficients with content one and a
    /// positive leading coefficient. Zero stays zero.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let u = T::canonical_unit(&self.coeffs);
        Self::new(self.coeffs.iter().map(|c| c.clone() / u.clone()).collect())
    }

    /// Greatest common divisor, returned as the canonical associate.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        a
    }

    /// Integer roots, each listed once per multiplicity.
    pub fn integer_roots(&self) -> Vec<i64> {
        let mut roots = Vec::new();
        let mut p = self.primitive();
        while p.degree().is_some_and(|d| d > 0) && p.coeffs[0].is_zero() {
            roots.push(0);
            p = Self::new(p.coeffs[1..].to_vec());
        }
        let Some(deg) = p.degree() else {
            return roots;
        };
        if deg == 0 {
            return roots;
        }
        let lead = p.coeffs[deg].to_f64_lossy().abs();
        let bound = p.coeffs[..deg]
            .iter()
            .map(|c| c.to_f64_lossy().abs() / lead)
            .fold(0.0_f64, f64::max)
            + 1.0;
        let bound = bound.min(1e7) as i64;
        let mut a = 1;
        while a <= bound && p.degree().is_some_and(|d| d > 0) {
            let mut found = false;
            for cand in [a, -a] {
                let factor = Self::linear(-cand);
                let (q, r) = p.div_rem(&factor);
                if r.is_zero() {
                    roots.push(cand);
                    p = q;
                    found = true;
                    break;
                }
            }
            if !found {
                a += 1;
            }
        }
        roots.sort_unstable();
        roots
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn p(c: &[i64]) -> P {
        P::new(c.iter().map(|&v| BigRational::from_int(v)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn div_rem_exact_and_inexact() {
        // (N^2 - 1) / (N - 1) = N + 1
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 1]));
        assert_eq!(q, p(&[0, 1]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn gcd_is_primitive() {
        // 2(N-1)(N+2) and 4(N-1)N
        let a = p(&[-4, 2, 2]);
        let b = p(&[0, -4, 4]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.gcd(&P::zero()), p(&[-2, 1, 1]));
    }

    #[test]
    fn integer_roots_with_multiplicity() {
        // N^2 (N-2)(N+4)^2
        let f = &(&P::var().pow(2) * &P::linear(-2)) * &P::linear(4).pow(2);
        assert_eq!(f.integer_roots(), vec![-4, -4, 0, 0, 2]);
        assert!(p(&[1, 0, 1]).integer_roots().is_empty());
    }

    #[test]
    fn float_coefficients() {
        let f = Polynomial::<f64>::new(vec![1.0, 2.0, 3.0]);
        assert_eq!(f.eval(&2.0), 17.0);
        assert_eq!((&f * &Polynomial::var()).degree(), Some(3));
    }
}
