//! Closed-form integrals: one column over O(N) and U(N), two columns over
//! O(N) by two independent formulas.

use crate::combinatorics::{enumerate_even_kappa, vector_binomial};
use crate::error::{Error, Result};
use crate::matrix::VectorIndex;
use crate::pochhammer::{poch_half, poch_integer_poly, poch_shifted_poly};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::ExactField;

fn same_len(m: &VectorIndex, n: &VectorIndex) -> Result<()> {
    if m.len() != n.len() {
        return Err(Error::Shape(format!(
            "vector lengths differ ({} vs {})",
            m.len(),
            n.len()
        )));
    }
    Ok(())
}

fn half_product<T: ExactField>(v: &VectorIndex) -> T {
    v.iter()
        .fold(T::one(), |acc, &x| acc * poch_half::<T>(x / 2))
}

fn sign<T: ExactField>(exponent: u32) -> T {
    if exponent % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// `c / p` for a nonzero polynomial `p`.
fn over<T: ExactField>(c: T, p: Polynomial<T>) -> RationalFunction<T> {
    RationalFunction::new(Polynomial::constant(c), p).expect("Pochhammer polynomial is nonzero")
}

/// One column `m` over O(N): `prod_i (1/2)_{m_i/2} / (N/2)_{|m|/2}`, zero if
/// any component is odd.
pub fn one_vector_orthogonal<T: ExactField>(m: &VectorIndex) -> RationalFunction<T> {
    if !m.all_even() {
        return RationalFunction::zero();
    }
    over(half_product(m), poch_shifted_poly(0, m.total() / 2))
}

/// One column of U(N) with real parts raised to `m` and imaginary parts to
/// `n`: `prod_i (1/2)_{m_i/2} (1/2)_{n_i/2} / (N)_{(|m|+|n|)/2}`.
pub fn one_vector_unitary<T: ExactField>(
    m: &VectorIndex,
    n: &VectorIndex,
) -> Result<RationalFunction<T>> {
    same_len(m, n)?;
    if !m.all_even() || !n.all_even() {
        return Ok(RationalFunction::zero());
    }
    let c = half_product::<T>(m) * half_product::<T>(n);
    Ok(over(c, poch_integer_poly(0, (m.total() + n.total()) / 2)))
}

/// Two columns `(m, n)` over O(N), summing over even `kappa <= n`.
pub fn two_vector_closed<T: ExactField>(
    m: &VectorIndex,
    n: &VectorIndex,
) -> Result<RationalFunction<T>> {
    same_len(m, n)?;
    let nbar = n.total();
    if nbar % 2 == 1 {
        return Ok(RationalFunction::zero());
    }
    let mn = m.checked_add(n)?;
    let mut sum = RationalFunction::zero();
    for kappa in enumerate_even_kappa(n) {
        let kbar = kappa.total();
        let rest = (nbar - kbar) / 2;
        let c = vector_binomial::<T>(n, &kappa)?
            * sign::<T>(rest)
            * half_product::<T>(&kappa)
            * poch_half::<T>(rest);
        let inner = one_vector_orthogonal::<T>(&mn.checked_sub(&kappa)?);
        sum = &sum + &inner.scale(&c);
    }
    Ok(&sum * &over(T::one(), poch_shifted_poly(-1, nbar / 2)))
}

/// Componentwise box `0 <= k <= upper`, lexicographic.
fn box_indices(upper: &VectorIndex) -> impl Iterator<Item = VectorIndex> + '_ {
    let mut next = Some(vec![0u32; upper.len()]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < upper[i] {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(VectorIndex::new(current))
    })
}

/// Two columns `(m, n)` over O(N) via the older double-sum formula, with both
/// known misprints corrected. Shares only the one-column integral with
/// [`two_vector_closed`].
pub fn two_vector_ullah<T: ExactField>(
    m: &VectorIndex,
    n: &VectorIndex,
) -> Result<RationalFunction<T>> {
    same_len(m, n)?;
    let (mbar, nbar) = (m.total(), n.total());
    if mbar % 2 == 1 || nbar % 2 == 1 {
        return Ok(RationalFunction::zero());
    }
    let mut sum = RationalFunction::zero();
    for k in box_indices(m) {
        let mk = m.checked_sub(&k)?;
        let bk = vector_binomial::<T>(m, &k)?;
        for l in box_indices(n) {
            let kl = k.checked_add(&l)?;
            if !kl.all_even() {
                continue;
            }
            let rest = mk.checked_add(&n.checked_sub(&l)?)?;
            let a = one_vector_orthogonal::<T>(&kl);
            let b = one_vector_orthogonal::<T>(&rest);
            let c = bk.clone() * vector_binomial::<T>(n, &l)? * sign::<T>(l.total());
            sum = &sum + &(&a * &b).scale(&c);
        }
    }
    let two_pow = (0..mbar + nbar).fold(T::one(), |acc, _| acc * T::from_int(2));
    let denom = &poch_shifted_poly::<T>(-1, mbar / 2) * &poch_shifted_poly::<T>(-1, nbar / 2);
    let pre = RationalFunction::new(
        poch_integer_poly::<T>(-1, (mbar + nbar) / 2),
        denom.scale(&two_pow),
    )?;
    Ok(&sum * &pre)
}
