//! Coefficient traits.
//!
//! Polynomial code only needs a commutative ring with a way to lift small
//! integers, which [`Scalar`] captures for floats and exact rationals alike.
//! Reduction of rational functions needs exact zero tests and a canonical
//! associate for every nonzero polynomial, which is what [`ExactField`] adds.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Ring element usable as a polynomial coefficient.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {
    /// Lift a machine integer.
    fn from_int(v: i64) -> Self;
}

impl<T> Scalar for T
where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive,
{
    fn from_int(v: i64) -> Self {
        <T as FromPrimitive>::from_i64(v).expect("integer not representable in scalar type")
    }
}

/// A field with exact arithmetic, embedding the integers.
///
/// Every element can be written as `p/q` with `p`, `q` integral and `q > 0`;
/// [`ExactField::numer_denom`] exposes that split, and the remaining methods
/// are derived from it.
pub trait ExactField: Scalar + Display {
    /// `(p, q)` with `self = p/q`, `q > 0`, `gcd(p, q) = 1`, both integral.
    fn numer_denom(&self) -> (Self, Self);

    /// Integer greatest common divisor of two integral elements (non-negative).
    fn integer_gcd(a: &Self, b: &Self) -> Self;

    fn is_negative(&self) -> bool;

    /// Lossy conversion, used only for root bounds.
    fn to_f64_lossy(&self) -> f64;

    /// Lift a big integer. Fails if it does not fit the backing integer type.
    fn from_bigint(v: &BigInt) -> Option<Self>;

    fn abs_value(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn is_integral(&self) -> bool {
        self.numer_denom().1.is_one()
    }

    /// Positive rational `c` such that `coeffs / c` is an integer vector with
    /// coprime entries. Zero for an all-zero slice.
    fn content(coeffs: &[Self]) -> Self {
        let mut num_gcd = Self::zero();
        let mut den_lcm = Self::one();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            let (p, q) = c.numer_denom();
            num_gcd = Self::integer_gcd(&num_gcd, &p);
            let g = Self::integer_gcd(&den_lcm, &q);
            den_lcm = den_lcm.clone() * (q / g);
        }
        if num_gcd.is_zero() {
            return Self::zero();
        }
        num_gcd / den_lcm
    }

    /// Unit that maps `coeffs` (ascending, last entry nonzero) to its
    /// canonical associate: integer coefficients, content one, positive
    /// leading coefficient.
    fn canonical_unit(coeffs: &[Self]) -> Self {
        let c = Self::content(coeffs);
        match coeffs.last() {
            Some(lead) if lead.is_negative() => -c,
            _ => c,
        }
    }
}

impl<I> ExactField for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Display + ToPrimitive + FromPrimitive,
    Ratio<I>: FromPrimitive,
    for<'a> &'a BigInt: TryIntoInt<I>,
{
    fn numer_denom(&self) -> (Self, Self) {
        (
            Ratio::from_integer(self.numer().clone()),
            Ratio::from_integer(self.denom().clone()),
        )
    }

    fn integer_gcd(a: &Self, b: &Self) -> Self {
        debug_assert!(a.is_integer() && b.is_integer());
        Ratio::from_integer(a.numer().gcd(b.numer()))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn to_f64_lossy(&self) -> f64 {
        let n = self.numer().to_f64().unwrap_or(f64::NAN);
        let d = self.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    }

    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.try_into_int().map(Ratio::from_integer)
    }
}

/// Conversion from [`BigInt`] into a concrete backing integer.
pub trait TryIntoInt<I> {
    fn try_into_int(self) -> Option<I>;
}

impl TryIntoInt<BigInt> for &BigInt {
    fn try_into_int(self) -> Option<BigInt> {
        Some(self.clone())
    }
}

macro_rules! try_into_prim {
    ($($t:ty => $m:ident),*) => {$(
        impl TryIntoInt<$t> for &BigInt {
            fn try_into_int(self) -> Option<$t> {
                self.$m()
            }
        }
    )*};
}

try_into_prim!(i32 => to_i32, i64 => to_i64, i128 => to_i128);
