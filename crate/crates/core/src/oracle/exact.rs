use crate::error::{Error, Result};
use crate::matrix::PowerMatrix;
use crate::scalar::ExactField;

fn double_factorial<T: ExactField>(n: i64) -> T {
    let mut acc = T::one();
    let mut k = n;
    while k > 1 {
        acc = acc * T::from_int(k);
        k -= 2;
    }
    acc
}

/// Mean of `cos^a(t) sin^b(t)` over a uniform angle:
/// `(a-1)!! (b-1)!! / (a+b)!!` for even `a`, `b`, else zero.
pub fn wallis_moment<T: ExactField>(a: u32, b: u32) -> T {
    if a % 2 == 1 || b % 2 == 1 {
        return T::zero();
    }
    let (a, b) = (a as i64, b as i64);
    double_factorial::<T>(a - 1) * double_factorial::<T>(b - 1) / double_factorial::<T>(a + b)
}

/// `<w^m>` over O(1) = {+1, -1}.
pub fn exact_o1<T: ExactField>(m: u32) -> T {
    if m % 2 == 0 {
        T::one()
    } else {
        T::zero()
    }
}

/// `<M>` over O(2), averaging rotations `[[c,-s],[s,c]]` and reflections
/// `[[c,s],[s,-c]]` with a uniform angle.
pub fn exact_o2<T: ExactField>(m: &PowerMatrix) -> Result<T> {
    if m.support() > 2 || m.column_count() > 2 {
        return Err(Error::Shape(format!(
            "O(2) oracle needs a support within 2x2, got {}x{}",
            m.support(),
            m.column_count()
        )));
    }
    let e = |i: usize, j: usize| if j < m.column_count() { m.get(i, j) } else { 0 };
    let (a, b, c, d) = (e(0, 0), e(0, 1), e(1, 0), e(1, 1));
    // both components reduce to cos^(a+d) sin^(b+c) up to a sign
    let base = wallis_moment::<T>(a + d, b + c);
    let rot_sign = if b % 2 == 0 { T::one() } else { -T::one() };
    let refl_sign = if d % 2 == 0 { T::one() } else { -T::one() };
    Ok(base * (rot_sign + refl_sign) / T::from_int(2))
}

/// `<Re(w)^m Im(w)^n>` over U(1).
pub fn exact_u1<T: ExactField>(m: u32, n: u32) -> T {
    wallis_moment(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pm(rows: &[&[u32]]) -> PowerMatrix {
        PowerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Midpoint rule on a uniform grid; exact (up to rounding) for
    /// trigonometric polynomials of degree below the grid size.
    fn quadrature(a: u32, b: u32) -> f64 {
        let n = 256;
        (0..n)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / n as f64;
                t.cos().powi(a as i32) * t.sin().powi(b as i32)
            })
            .sum::<f64>()
            / n as f64
    }

    #[test]
    fn wallis_examples() {
        assert_eq!(wallis_moment::<BigRational>(0, 0), q(1, 1));
        assert_eq!(wallis_moment::<BigRational>(2, 2), q(1, 8));
        assert_eq!(wallis_moment::<BigRational>(1, 2), q(0, 1));
        assert_eq!(wallis_moment::<BigRational>(4, 0), q(3, 8));
    }

    #[test]
    fn wallis_matches_quadrature() {
        for a in 0..=8 {
            for b in 0..=8 {
                let exact = wallis_moment::<BigRational>(a, b);
                let approx = quadrature(a, b);
                let e = exact.to_f64_lossy();
                assert!((e - approx).abs() < 1e-13, "({a},{b}): {e} vs {approx}");
            }
        }
    }

    #[test]
    fn o1_and_u1() {
        assert_eq!(exact_o1::<BigRational>(0), q(1, 1));
        assert_eq!(exact_o1::<BigRational>(2), q(1, 1));
        assert_eq!(exact_o1::<BigRational>(3), q(0, 1));
        assert_eq!(exact_u1::<BigRational>(2, 0), q(1, 2));
        assert_eq!(exact_u1::<BigRational>(2, 2), q(1, 8));
        assert_eq!(exact_u1::<BigRational>(4, 0), q(3, 8));
    }

    #[test]
    fn o2_examples() {
        assert_eq!(exact_o2::<BigRational>(&pm(&[&[2]])), Ok(q(1, 2)));
        assert_eq!(
            exact_o2::<BigRational>(&pm(&[&[1, 1], &[1, 1]])),
            Ok(q(-1, 8))
        );
        assert_eq!(exact_o2::<BigRational>(&pm(&[&[4]])), Ok(q(3, 8)));
        assert!(exact_o2::<BigRational>(&pm(&[&[2], &[0], &[2]])).is_err());
        assert!(exact_o2::<BigRational>(&pm(&[&[2, 0, 2]])).is_err());
    }
}
