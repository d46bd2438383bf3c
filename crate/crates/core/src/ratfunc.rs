//! Reduced rational functions of `N`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ExactField;

/// `numer / denom` in lowest terms.
///
/// The denominator is always the canonical associate (integer coefficients,
/// content one, positive leading coefficient), so two equal functions have
/// identical representations and `==` is semantic equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction<T> {
    numer: Polynomial<T>,
    denom: Polynomial<T>,
}

impl<T: ExactField> RationalFunction<T> {
    pub fn new(numer: Polynomial<T>, denom: Polynomial<T>) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(numer, denom))
    }

    fn reduce(numer: Polynomial<T>, denom: Polynomial<T>) -> Self {
        if numer.is_zero() {
            return Self::zero();
        }
        let g = numer.gcd(&denom);
        let (numer, denom) = if g.degree() == Some(0) {
            (numer, denom)
        } else {
            (numer.div_rem(&g).0, denom.div_rem(&g).0)
        };
        let unit = T::canonical_unit(denom.coeffs());
        let inv = T::one() / unit;
        RationalFunction {
            numer: numer.scale(&inv),
            denom: denom.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            numer: Polynomial::zero(),
            denom: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        RationalFunction {
            numer: Polynomial::constant(c),
            denom: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        Self::reduce(p, Polynomial::one())
    }

    pub fn numer(&self) -> &Polynomial<T> {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial<T> {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.denom.clone(), self.numer.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Exact value at a concrete integer `n`.
    pub fn evaluate_at(&self, n: i64) -> Result<T> {
        self.evaluate(&T::from_int(n)).ok_or(Error::PoleAtN(n))
    }

    /// Exact value at `x`, or `None` at a pole.
    pub fn evaluate(&self, x: &T) -> Option<T> {
        let d = self.denom.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.numer.eval(x) / d)
    }
}

impl<T: ExactField> Add for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn add(self, rhs: Self) -> RationalFunction<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.denom == rhs.denom {
            return RationalFunction::reduce(&self.numer + &rhs.numer, self.denom.clone());
        }
        let g = self.denom.gcd(&rhs.denom);
        let left = rhs.denom.div_rem(&g).0;
        let right = self.denom.div_rem(&g).0;
        let numer = &(&self.numer * &left) + &(&rhs.numer * &right);
        RationalFunction::reduce(numer, &self.denom * &left)
    }
}

impl<T: ExactField> Neg for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn neg(self) -> RationalFunction<T> {
        RationalFunction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl<T: ExactField> Sub for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn sub(self, rhs: Self) -> RationalFunction<T> {
        self + &(-rhs)
    }
}

impl<T: ExactField> Mul for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn mul(self, rhs: Self) -> RationalFunction<T> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel before multiplying
        let g1 = self.numer.gcd(&rhs.denom);
        let g2 = rhs.numer.gcd(&self.denom);
        let n1 = self.numer.div_rem(&g1).0;
        let d2 = rhs.denom.div_rem(&g1).0;
        let n2 = rhs.numer.div_rem(&g2).0;
        let d1 = self.denom.div_rem(&g2).0;
        RationalFunction::reduce(&n1 * &n2, &d1 * &d2)
    }
}

/// Panics on division by zero; see [`RationalFunction::checked_div`].
impl<T: ExactField> Div for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn div(self, rhs: Self) -> RationalFunction<T> {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: ExactField> $tr for RationalFunction<T> {
            type Output = RationalFunction<T>;
            fn $m(self, rhs: Self) -> RationalFunction<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl<T: ExactField> Neg for RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn neg(self) -> RationalFunction<T> {
        -&self
    }
}

impl<T: ExactField> From<Polynomial<T>> for RationalFunction<T> {
    fn from(p: Polynomial<T>) -> Self {
        Self::from_poly(p)
    }
}

impl<T: ExactField> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::render_factored(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use num_rational::BigRational;

    type RF = RationalFunction<BigRational>;
    type P = Polynomial<BigRational>;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn inv_linear(shift: i64) -> RF {
        RF::new(P::one(), P::linear(shift)).unwrap()
    }

    #[test]
    fn one_over_n_plus_one_over_n() {
        let x = inv_linear(0);
        let y = &x + &x;
        assert_eq!(y, RF::new(P::constant(q(2, 1)), P::var()).unwrap());
    }

    #[test]
    fn product_cancels() {
        // (N+1)/(N(N+2)) * N = (N+1)/(N+2)
        let a = RF::new(P::linear(1), &P::var() * &P::linear(2)).unwrap();
        let b = RF::from_poly(P::var());
        assert_eq!(&a * &b, RF::new(P::linear(1), P::linear(2)).unwrap());
    }

    #[test]
    fn self_division_is_one() {
        let a = RF::new(P::linear(3), &P::linear(-1) * &P::linear(5)).unwrap();
        assert!((&a / &a).is_one());
        assert_eq!(a.checked_div(&RF::zero()), Err(Error::DivisionByZero));
        assert_eq!(RF::new(P::one(), P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalization_is_unique() {
        // 2/(4N) and (-1)/(-2N) both reduce to the same value.
        let a = RF::new(P::constant(q(2, 1)), P::var().scale(&q(4, 1))).unwrap();
        let b = RF::new(P::constant(q(-1, 1)), P::var().scale(&q(-2, 1))).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.denom(), &P::var());
        assert_eq!(a.numer(), &P::constant(q(1, 2)));
    }

    #[test]
    fn evaluate_and_poles() {
        assert_eq!(inv_linear(0).evaluate_at(4), Ok(q(1, 4)));
        assert_eq!(inv_linear(-2).evaluate_at(2), Err(Error::PoleAtN(2)));
    }

    #[test]
    fn evaluate_paper_three_vector_value() {
        // (N^2+3N-2)/((N-2)(N-1)N(N+2)(N+4)) at N = 5
        let den = [-2, -1, 0, 2, 4]
            .iter()
            .fold(P::one(), |acc, &s| &acc * &P::linear(s));
        let num = P::new(vec![q(-2, 1), q(3, 1), q(1, 1)]);
        let f = RF::new(num, den).unwrap();
        // 38 / (3*4*5*7*9)
        assert_eq!(f.evaluate_at(5), Ok(q(19, 1890)));
    }

    #[test]
    fn works_over_machine_rationals() {
        use num_rational::Ratio;
        type R = RationalFunction<Ratio<i64>>;
        let x = R::new(Polynomial::one(), Polynomial::var()).unwrap();
        let y = &x * &x;
        assert_eq!(y.evaluate_at(3), Ok(Ratio::new(1, 9)));
        assert_eq!(<Ratio<i64>>::from_int(2), Ratio::from_integer(2));
    }
}
