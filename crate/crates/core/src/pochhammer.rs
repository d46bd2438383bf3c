//! Rising factorials that appear in the closed forms.

use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::ExactField;

/// `(1/2)_j = (1/2)(3/2)...(j - 1/2)`.
pub fn poch_half<T: ExactField>(j: u32) -> T {
    let two = T::from_int(2);
    (0..j as i64).fold(T::one(), |acc, t| {
        acc * T::from_int(2 * t + 1) / two.clone()
    })
}

/// `((N + offset)/2)_j = 2^-j (N+offset)(N+offset+2)...(N+offset+2j-2)`.
pub fn poch_shifted_poly<T: ExactField>(offset: i64, j: u32) -> Polynomial<T> {
    let half = T::one() / T::from_int(2);
    (0..j as i64).fold(Polynomial::one(), |acc, t| {
        &acc * &Polynomial::linear(offset + 2 * t).scale(&half)
    })
}

pub fn poch_shifted_n<T: ExactField>(offset: i64, j: u32) -> RationalFunction<T> {
    RationalFunction::from_poly(poch_shifted_poly(offset, j))
}

/// `(N + offset)_j = (N+offset)(N+offset+1)...(N+offset+j-1)`.
pub fn poch_integer_poly<T: ExactField>(offset: i64, j: u32) -> Polynomial<T> {
    (0..j as i64).fold(Polynomial::one(), |acc, t| {
        &acc * &Polynomial::linear(offset + t)
    })
}

pub fn poch_integer_n<T: ExactField>(offset: i64, j: u32) -> RationalFunction<T> {
    RationalFunction::from_poly(poch_integer_poly(offset, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn half_constants() {
        assert_eq!(poch_half::<BigRational>(0), q(1, 1));
        assert_eq!(poch_half::<BigRational>(1), q(1, 2));
        assert_eq!(poch_half::<BigRational>(2), q(3, 4));
        assert_eq!(poch_half::<BigRational>(3), q(15, 8));
    }

    #[test]
    fn shifted() {
        assert_eq!(
            poch_shifted_poly::<BigRational>(0, 1),
            P::var().scale(&q(1, 2))
        );
        // N(N+2)/4
        assert_eq!(
            poch_shifted_poly::<BigRational>(0, 2),
            P::new(vec![q(0, 1), q(1, 2), q(1, 4)])
        );
        assert_eq!(
            poch_shifted_poly::<BigRational>(-1, 1),
            P::linear(-1).scale(&q(1, 2))
        );
        assert!(poch_shifted_poly::<BigRational>(7, 0).is_one());
    }

    #[test]
    fn integer() {
        assert_eq!(
            poch_integer_poly::<BigRational>(-1, 2),
            &P::linear(-1) * &P::var()
        );
        assert!(poch_integer_poly::<BigRational>(0, 0).is_one());
        assert_eq!(
            poch_integer_poly::<BigRational>(0, 3),
            &(&P::var() * &P::linear(1)) * &P::linear(2)
        );
    }

    #[test]
    fn shifted_step_relation() {
        for offset in [-3, -1, 0, 2] {
            for j in 0..=10 {
                let lhs = poch_shifted_n::<BigRational>(offset, j + 1);
                let step =
                    RationalFunction::from_poly(P::linear(offset + 2 * j as i64).scale(&q(1, 2)));
                assert_eq!(lhs, &poch_shifted_n(offset, j) * &step);
            }
        }
    }
}
