//! Binomial products, multinomial products and the two summation-index
//! enumerations used by the recursion.

use crate::error::{Error, Result};
use crate::matrix::{MatrixIndex, VectorIndex};
use crate::scalar::Scalar;

fn binomial<T: Scalar>(n: u32, k: u32) -> T {
    let k = k.min(n - k);
    // acc * (n - i) is divisible by (i + 1) at every step
    (0..k).fold(T::one(), |acc, i| {
        acc * T::from_int((n - i) as i64) / T::from_int(i as i64 + 1)
    })
}

/// `prod_i C(n_i, k_i)`.
pub fn vector_binomial<T: Scalar>(n: &VectorIndex, k: &VectorIndex) -> Result<T> {
    if n.len() != k.len() {
        return Err(Error::Shape("binomial vectors differ in length".into()));
    }
    let mut acc = T::one();
    for (index, (&ni, &ki)) in n.iter().zip(k.iter()).enumerate() {
        if ki > ni {
            return Err(Error::IndexOutOfRange {
                index,
                value: ki,
                bound: ni,
            });
        }
        acc = acc * binomial(ni, ki);
    }
    Ok(acc)
}

/// `prod_i n_i! / prod_xi K_{i xi}!`; row `i` of `k` must sum to `n_i`.
pub fn matrix_multinomial<T: Scalar>(n: &VectorIndex, k: &MatrixIndex) -> Result<T> {
    if n.len() != k.rows() {
        return Err(Error::Shape(
            "multinomial index has the wrong number of rows".into(),
        ));
    }
    let mut acc = T::one();
    for (i, &ni) in n.iter().enumerate() {
        let actual: u32 = k.row(i).iter().sum();
        if actual != ni {
            return Err(Error::RowSumMismatch {
                row: i,
                expected: ni,
                actual,
            });
        }
        let mut left = ni;
        for &kij in k.row(i) {
            acc = acc * binomial(left, kij);
            left -= kij;
        }
    }
    Ok(acc)
}

/// All `kappa` with `0 <= kappa_i <= m_i` and every `kappa_i` even, in
/// lexicographic order (first component most significant).
pub fn enumerate_even_kappa(m: &VectorIndex) -> impl Iterator<Item = VectorIndex> {
    let upper: Vec<u32> = m.iter().map(|&v| v - v % 2).collect();
    let mut next = Some(vec![0u32; upper.len()]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < upper[i] {
                succ[i] += 2;
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(VectorIndex::new(current))
    })
}

/// Weak compositions of `total` into `parts` parts, first part descending.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut tail in compositions(total - first, parts - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// All non-negative integer matrices with `columns` columns whose row `i`
/// sums to `row_totals[i]` and whose column sums are all even.
///
/// Rows are enumerated as an odometer over per-row compositions, the first
/// row most significant, and each row's compositions in descending
/// lexicographic order.
pub fn enumerate_k_matrices(
    row_totals: &VectorIndex,
    columns: usize,
) -> impl Iterator<Item = MatrixIndex> {
    assert!(columns >= 1, "need at least one column");
    let per_row: Vec<Vec<Vec<u32>>> = row_totals
        .iter()
        .map(|&t| compositions(t, columns))
        .collect();
    let rows = per_row.len();
    let mut odometer = Some(vec![0usize; rows]);
    let mut col_sums = vec![0u32; columns];
    std::iter::from_fn(move || loop {
        let current = odometer.take()?;
        let mut succ = current.clone();
        for i in (0..rows).rev() {
            if succ[i] + 1 < per_row[i].len() {
                succ[i] += 1;
                odometer = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        col_sums.iter_mut().for_each(|s| *s = 0);
        for (i, &c) in current.iter().enumerate() {
            for (s, v) in col_sums.iter_mut().zip(&per_row[i][c]) {
                *s += v;
            }
        }
        if col_sums.iter().all(|s| s % 2 == 0) {
            let data = current
                .iter()
                .enumerate()
                .flat_map(|(i, &c)| per_row[i][c].clone())
                .collect();
            return Some(MatrixIndex::from_flat(rows, columns, data));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(e: &[u32]) -> VectorIndex {
        VectorIndex::new(e.to_vec())
    }

    fn k(rows: &[&[u32]]) -> MatrixIndex {
        MatrixIndex::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn vector_binomial_examples() {
        assert_eq!(
            vector_binomial::<BigInt>(&v(&[2, 4]), &v(&[2, 2])),
            Ok(BigInt::from(6))
        );
        assert_eq!(
            vector_binomial::<BigInt>(&v(&[0, 0]), &v(&[0, 0])),
            Ok(BigInt::from(1))
        );
        assert_eq!(
            vector_binomial::<BigInt>(&v(&[1, 1]), &v(&[0, 0])),
            Ok(BigInt::from(1))
        );
        assert_eq!(
            vector_binomial::<BigInt>(&v(&[1, 1]), &v(&[0, 2])),
            Err(Error::IndexOutOfRange {
                index: 1,
                value: 2,
                bound: 1
            })
        );
        assert_eq!(
            vector_binomial::<BigInt>(&v(&[40]), &v(&[20])),
            Ok(BigInt::from(137846528820u64))
        );
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(
            matrix_multinomial::<BigInt>(&v(&[2]), &k(&[&[1, 1]])),
            Ok(BigInt::from(2))
        );
        assert_eq!(
            matrix_multinomial::<BigInt>(&v(&[2]), &k(&[&[2, 0]])),
            Ok(BigInt::from(1))
        );
        assert_eq!(
            matrix_multinomial::<BigInt>(&v(&[3, 1]), &k(&[&[2, 1], &[1, 0]])),
            Ok(BigInt::from(3))
        );
        assert_eq!(
            matrix_multinomial::<BigInt>(&v(&[3]), &k(&[&[1, 1]])),
            Err(Error::RowSumMismatch {
                row: 0,
                expected: 3,
                actual: 2
            })
        );
        // 6!/(1!2!3!) = 60
        assert_eq!(
            matrix_multinomial::<BigInt>(&v(&[6]), &k(&[&[1, 2, 3]])),
            Ok(BigInt::from(60))
        );
    }

    #[test]
    fn even_kappa_listing() {
        let got: Vec<_> = enumerate_even_kappa(&v(&[2, 0])).collect();
        assert_eq!(got, vec![v(&[0, 0]), v(&[2, 0])]);
        let got: Vec<_> = enumerate_even_kappa(&v(&[1, 1])).collect();
        assert_eq!(got, vec![v(&[0, 0])]);
        let got: Vec<_> = enumerate_even_kappa(&v(&[4])).collect();
        assert_eq!(got, vec![v(&[0]), v(&[2]), v(&[4])]);
        assert_eq!(enumerate_even_kappa(&v(&[])).count(), 1);
    }

    #[test]
    fn k_matrix_listing() {
        let got: Vec<_> = enumerate_k_matrices(&v(&[2]), 2).collect();
        assert_eq!(got, vec![k(&[&[2, 0]]), k(&[&[0, 2]])]);
        let got: Vec<_> = enumerate_k_matrices(&v(&[1, 1]), 1).collect();
        assert_eq!(got, vec![k(&[&[1], &[1]])]);
        let got: Vec<_> = enumerate_k_matrices(&v(&[0, 0]), 3).collect();
        assert_eq!(got, vec![k(&[&[0, 0, 0], &[0, 0, 0]])]);
        assert_eq!(enumerate_k_matrices(&v(&[1]), 2).count(), 0);
    }

    /// Brute force over all matrices with entries up to the row totals.
    fn brute_k(totals: &[u32], cols: usize) -> Vec<MatrixIndex> {
        let rows = totals.len();
        let cells = rows * cols;
        let max = totals.iter().copied().max().unwrap_or(0);
        let mut out = Vec::new();
        let mut cur = vec![0u32; cells];
        loop {
            let m = MatrixIndex::from_flat(rows, cols, cur.clone());
            if m.row_sums().entries() == totals && m.column_sums().all_even() {
                out.push(m);
            }
            let mut i = 0;
            while i < cells && cur[i] == max {
                cur[i] = 0;
                i += 1;
            }
            if i == cells {
                break;
            }
            cur[i] += 1;
        }
        out
    }

    #[test]
    fn k_matrices_match_brute_force() {
        for (totals, cols) in [
            (vec![2, 1, 1], 2),
            (vec![3, 1], 3),
            (vec![2, 2], 2),
            (vec![4], 3),
        ] {
            let mut fast: Vec<_> = enumerate_k_matrices(&v(&totals), cols)
                .map(|m| format!("{m:?}"))
                .collect();
            let mut slow: Vec<_> = brute_k(&totals, cols)
                .iter()
                .map(|m| format!("{m:?}"))
                .collect();
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "totals {totals:?}, cols {cols}");
        }
    }
}
