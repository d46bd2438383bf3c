//! One step of the column recursion: an `R`-column integral as a linear
//! combination of `(R-1)`-column integrals.

use crate::combinatorics::{
    enumerate_even_kappa, enumerate_k_matrices, matrix_multinomial, vector_binomial,
};
use crate::error::{Error, Result};
use crate::matrix::PowerMatrix;
use crate::pochhammer::{poch_half, poch_shifted_poly};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::ExactField;

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionTerm<T> {
    /// N-independent weight of this term.
    pub weight: T,
    /// First `R-1` columns plus the index matrix `K`.
    pub matrix: PowerMatrix,
}

/// `<M> = prefactor * sum_t weight_t * <matrix_t>`.
///
/// Only the prefactor depends on `N`; it is shared by every term.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction<T> {
    pub prefactor: RationalFunction<T>,
    pub terms: Vec<ReductionTerm<T>>,
}

impl<T: ExactField> Reduction<T> {
    /// Terms with the prefactor folded into each coefficient.
    pub fn expanded_terms(&self) -> Vec<(RationalFunction<T>, PowerMatrix)> {
        self.terms
            .iter()
            .map(|t| (self.prefactor.scale(&t.weight), t.matrix.clone()))
            .collect()
    }
}

fn sign<T: ExactField>(exponent: u32) -> T {
    if exponent % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// Expand `<M>` along its last column.
///
/// Terms are listed in enumeration order (even `kappa` lexicographic, then
/// `K` matrices) without merging duplicates. An odd last-column sum admits no
/// `K` with all-even column sums, so the expansion is empty and the prefactor
/// is zero.
pub fn recursion_reduce<T: ExactField>(m: &PowerMatrix) -> Result<Reduction<T>> {
    let r_cols = m.column_count();
    if r_cols < 2 {
        return Err(Error::Shape(
            "the recursion needs at least two columns".into(),
        ));
    }
    let last = m.last_column();
    let lbar = last.total();
    if lbar % 2 == 1 {
        return Ok(Reduction {
            prefactor: RationalFunction::zero(),
            terms: Vec::new(),
        });
    }
    let head = m.drop_last_column()?;
    let mut terms = Vec::new();
    for kappa in enumerate_even_kappa(&last) {
        let rest = last.checked_sub(&kappa)?;
        let half_pairs = rest.total() / 2;
        let base = vector_binomial::<T>(&last, &kappa)?
            * sign::<T>(half_pairs)
            * kappa
                .iter()
                .fold(T::one(), |acc, &k| acc * poch_half::<T>(k / 2));
        for k in enumerate_k_matrices(&rest, r_cols - 1) {
            let col_factor = k
                .column_sums()
                .iter()
                .fold(T::one(), |acc, &s| acc * poch_half::<T>(s / 2));
            let weight = base.clone() * matrix_multinomial::<T>(&rest, &k)? * col_factor;
            terms.push(ReductionTerm {
                weight,
                matrix: head.add_index(&k)?,
            });
        }
    }
    let offset = 1 - r_cols as i64;
    let prefactor = RationalFunction::new(Polynomial::one(), poch_shifted_poly(offset, lbar / 2))?;
    Ok(Reduction { prefactor, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::parse_rational;
    use num_rational::BigRational;

    type RF = RationalFunction<BigRational>;

    fn pm(rows: &[&[u32]]) -> PowerMatrix {
        PowerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rf(text: &str) -> RF {
        parse_rational(text).unwrap()
    }

    #[test]
    fn all_ones_two_by_two() {
        let red = recursion_reduce::<BigRational>(&pm(&[&[1, 1], &[1, 1]])).unwrap();
        let terms = red.expanded_terms();
        assert_eq!(terms.len(), 1);
        // (2/(N-1)) * (-1) * (1/2)
        assert_eq!(terms[0].0, rf("-1/(N-1)"));
        assert_eq!(terms[0].1, pm(&[&[2], &[2]]));
    }

    #[test]
    fn diagonal_two_by_two() {
        let red = recursion_reduce::<BigRational>(&pm(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(red.prefactor, rf("2/(N-1)"));
        let got: Vec<_> = red
            .terms
            .iter()
            .map(|t| (t.weight.clone(), t.matrix.clone()))
            .collect();
        // kappa = 0: K = [[0],[2]], weight -1 * 1 * (1/2)_1
        // kappa = (0,2): weight (1/2)_1, reduced column (2)
        assert_eq!(
            got,
            vec![(q(-1, 2), pm(&[&[2], &[2]])), (q(1, 2), pm(&[&[2]]))]
        );
        let total = red
            .expanded_terms()
            .iter()
            .map(|(c, m)| c * &crate::closed_form::one_vector_orthogonal(&m.column_vector(0)))
            .fold(RF::zero(), |a, b| &a + &b);
        assert_eq!(total, rf("(N+1)/((N-1)N(N+2))"));
    }

    #[test]
    fn diagonal_three_by_three_terms() {
        let red = recursion_reduce::<BigRational>(&PowerMatrix::diagonal(&[2, 2, 2])).unwrap();
        let mut got: Vec<_> = red.expanded_terms();
        got.sort_by_key(|(_, m)| format!("{m}"));
        let mut want = vec![
            (rf("-1/(N-2)"), pm(&[&[2, 0], &[0, 2], &[2, 0]])),
            (rf("-1/(N-2)"), pm(&[&[2, 0], &[0, 2], &[0, 2]])),
            (rf("1/(N-2)"), pm(&[&[2, 0], &[0, 2]])),
        ];
        want.sort_by_key(|(_, m)| format!("{m}"));
        assert_eq!(got, want);
    }

    #[test]
    fn odd_last_column_is_empty() {
        let red = recursion_reduce::<BigRational>(&pm(&[&[1, 1], &[0, 0], &[1, 0]])).unwrap();
        assert!(red.terms.is_empty());
        assert!(red.prefactor.is_zero());
    }

    #[test]
    fn single_column_rejected() {
        assert!(recursion_reduce::<BigRational>(&pm(&[&[2]])).is_err());
    }
}
