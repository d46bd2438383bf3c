use orthomoments::oracle::{exact_o2, exact_u1, mc_moment, wallis_moment};
use orthomoments::{
    integrate_default, one_vector_orthogonal, one_vector_unitary, BigRational, ExactField,
    PowerMatrix, VectorIndex,
};

fn pm(rows: &[&[u32]]) -> PowerMatrix {
    PowerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn unitary_matches_circle() {
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            let f =
                one_vector_unitary::<BigRational>(&VectorIndex::from([m]), &VectorIndex::from([n]))
                    .unwrap();
            assert_eq!(
                f.evaluate_at(1).unwrap(),
                exact_u1::<BigRational>(m, n),
                "({m}:{n})"
            );
        }
    }
}

#[test]
fn unitary_is_orthogonal_in_twice_the_dimension() {
    // real and imaginary parts live on the unit sphere in R^(2N)
    let m = VectorIndex::from([2, 0, 4]);
    let n = VectorIndex::from([2, 2, 0]);
    let u = one_vector_unitary::<BigRational>(&m, &n).unwrap();
    let o = one_vector_orthogonal::<BigRational>(&VectorIndex::from([2, 0, 4, 2, 2, 0]));
    for dim in 1..8 {
        assert_eq!(u.evaluate_at(dim).unwrap(), o.evaluate_at(2 * dim).unwrap());
    }
}

#[test]
fn o2_oracle_against_single_columns() {
    for a in 0..=8u32 {
        for b in 0..=8 - a {
            let m = pm(&[&[a], &[b]]);
            let got = integrate_default(&m).unwrap().evaluate_at(2).unwrap();
            assert_eq!(got, exact_o2::<BigRational>(&m).unwrap(), "{m}");
            assert_eq!(got, wallis_moment::<BigRational>(a, b));
        }
    }
}

/// Moderate-size Monte Carlo spot checks of three- and four-column values.
#[test]
fn monte_carlo_spot_checks() {
    let cases = [
        (pm(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]), 4usize),
        (pm(&[&[2, 1, 1], &[0, 1, 1]]), 4),
        (pm(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]), 3),
        (
            pm(&[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]),
            4,
        ),
        (pm(&[&[4, 0], &[0, 2], &[2, 0]]), 3),
    ];
    for (i, (m, n)) in cases.iter().enumerate() {
        let exact = integrate_default(m)
            .unwrap()
            .evaluate_at(*n as i64)
            .unwrap()
            .to_f64_lossy();
        let est = mc_moment::<f64>(m, *n, 200_000, 100 + i as u64).unwrap();
        assert!(
            est.is_consistent_with(exact, 4.0),
            "{m} at N={n}: {} +- {} vs {exact}",
            est.mean,
            est.standard_error
        );
    }
}

#[test]
fn single_precision_monte_carlo() {
    let est = mc_moment::<f32>(&pm(&[&[2]]), 4, 50_000, 9).unwrap();
    assert!(est.is_consistent_with(0.25, 4.0), "{est:?}");
}
