use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::matrix::PowerMatrix;

/// Dense row-major square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix<F> {
    n: usize,
    data: Vec<F>,
}

impl<F: Float> SquareMatrix<F> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![F::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = F::one();
        }
        SquareMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.n + j] = v;
    }

    /// `max |Q^T Q - I|`.
    pub fn orthogonality_defect(&self) -> F {
        let n = self.n;
        let mut worst = F::zero();
        for a in 0..n {
            for b in 0..n {
                let dot = (0..n).fold(F::zero(), |acc, i| acc + self.get(i, a) * self.get(i, b));
                let target = if a == b { F::one() } else { F::zero() };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> F {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = F::one();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].abs().partial_cmp(&a[y * n + k].abs()).unwrap())
                .unwrap();
            if a[p * n + k] == F::zero() {
                return F::zero();
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            det = det * a[k * n + k];
            for i in k + 1..n {
                let f = a[i * n + k] / a[k * n + k];
                for j in k..n {
                    a[i * n + j] = a[i * n + j] - f * a[k * n + j];
                }
            }
        }
        det
    }
}

/// Haar-distributed element of O(n).
///
/// Householder QR of a matrix of independent standard normals, then each
/// column of `Q` is multiplied by the sign of the matching diagonal entry of
/// `R`, so `R` has a positive diagonal. Draws with a (numerically) singular
/// Gaussian matrix are discarded.
pub fn haar_sample_orthogonal<F, G>(n: usize, rng: &mut G) -> SquareMatrix<F>
where
    F: Float,
    G: Rng + ?Sized,
    StandardNormal: Distribution<F>,
{
    assert!(n >= 1, "dimension must be positive");
    loop {
        if let Some(q) = try_sample(n, rng) {
            return q;
        }
    }
}

fn try_sample<F, G>(n: usize, rng: &mut G) -> Option<SquareMatrix<F>>
where
    F: Float,
    G: Rng + ?Sized,
    StandardNormal: Distribution<F>,
{
    let mut a = SquareMatrix {
        n,
        data: (0..n * n).map(|_| StandardNormal.sample(rng)).collect(),
    };
    let tiny = F::epsilon() * F::from(n).unwrap();
    let two = F::one() + F::one();
    let mut reflectors: Vec<Vec<F>> = Vec::with_capacity(n);
    let mut diag = vec![F::zero(); n];

    for k in 0..n {
        let norm = (k..n)
            .fold(F::zero(), |acc, i| acc + a.get(i, k) * a.get(i, k))
            .sqrt();
        if norm <= tiny {
            return None;
        }
        if k == n - 1 {
            diag[k] = a.get(k, k);
            break;
        }
        let x0 = a.get(k, k);
        let alpha = if x0 >= F::zero() { -norm } else { norm };
        let mut v: Vec<F> = (k..n).map(|i| a.get(i, k)).collect();
        v[0] = v[0] - alpha;
        let vnorm = v.iter().fold(F::zero(), |acc, &x| acc + x * x).sqrt();
        if vnorm <= tiny {
            return None;
        }
        v.iter_mut().for_each(|x| *x = *x / vnorm);
        for j in k..n {
            let dot = (k..n).fold(F::zero(), |acc, i| acc + v[i - k] * a.get(i, j));
            for i in k..n {
                a.set(i, j, a.get(i, j) - two * v[i - k] * dot);
            }
        }
        diag[k] = alpha;
        reflectors.push(v);
    }

    // Q = H_0 H_1 ... H_{n-2}, applied to the identity from the right end
    let mut q = SquareMatrix::identity(n);
    for (k, v) in reflectors.iter().enumerate().rev() {
        for j in 0..n {
            let dot = (k..n).fold(F::zero(), |acc, i| acc + v[i - k] * q.get(i, j));
            for i in k..n {
                q.set(i, j, q.get(i, j) - two * v[i - k] * dot);
            }
        }
    }
    for (j, d) in diag.iter().enumerate() {
        if *d < F::zero() {
            for i in 0..n {
                q.set(i, j, -q.get(i, j));
            }
        }
    }
    Some(q)
}

/// `prod w_ij^M_ij` for a concrete group element.
pub fn monomial_value<F: Float>(m: &PowerMatrix, w: &SquareMatrix<F>) -> F {
    let mut acc = F::one();
    for (i, row) in m.rows().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e > 0 {
                acc = acc * w.get(i, j).powi(e as i32);
            }
        }
    }
    acc
}

/// Sample mean of a monomial over Haar-random matrices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentEstimate<F> {
    pub mean: F,
    /// Sample standard deviation over `sqrt(samples)`.
    pub standard_error: F,
    pub samples: usize,
    pub seed: u64,
}

impl<F: Float> MomentEstimate<F> {
    /// `|mean - exact|` in units of the standard error.
    pub fn z_score(&self, exact: F) -> F {
        (self.mean - exact).abs() / self.standard_error
    }

    /// True if `exact` lies within `k` standard errors. A zero standard
    /// error requires an exact match.
    pub fn is_consistent_with(&self, exact: F, k: F) -> bool {
        if self.standard_error == F::zero() {
            return self.mean == exact;
        }
        self.z_score(exact) <= k
    }
}

/// Monte Carlo estimate of `<M>` over O(n).
///
/// ChaCha8 seeded from `seed` via `seed_from_u64`, normals from the ziggurat
/// sampler; the estimate is bit-for-bit reproducible for fixed inputs.
pub fn mc_moment<F>(
    m: &PowerMatrix,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<MomentEstimate<F>>
where
    F: Float,
    StandardNormal: Distribution<F>,
{
    let required = m.validity_bound();
    if n < required || n == 0 {
        return Err(Error::DimensionTooSmall {
            n,
            required: required.max(1),
        });
    }
    if samples < 2 {
        return Err(Error::Shape(
            "Monte Carlo needs at least two samples".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Welford running mean and sum of squared deviations
    let mut mean = F::zero();
    let mut m2 = F::zero();
    for count in 1..=samples {
        let w = haar_sample_orthogonal::<F, _>(n, &mut rng);
        let x = monomial_value(m, &w);
        let delta = x - mean;
        mean = mean + delta / F::from(count).unwrap();
        m2 = m2 + delta * (x - mean);
    }
    let var = m2 / F::from(samples - 1).unwrap();
    let standard_error = (var / F::from(samples).unwrap()).sqrt();
    Ok(MomentEstimate {
        mean,
        standard_error,
        samples,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=7 {
            for _ in 0..50 {
                let q: SquareMatrix<f64> = haar_sample_orthogonal(n, &mut rng);
                assert!(q.orthogonality_defect() <= 1e-12, "n={n}");
                let det = q.determinant();
                assert!((det.abs() - 1.0).abs() <= 1e-10, "det {det}");
            }
        }
    }

    #[test]
    fn both_determinant_signs_occur() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let dets: Vec<f64> = (0..200)
            .map(|_| haar_sample_orthogonal::<f64, _>(3, &mut rng).determinant())
            .collect();
        assert!(dets.iter().any(|&d| d > 0.0));
        assert!(dets.iter().any(|&d| d < 0.0));
    }

    #[test]
    fn first_entry_has_zero_mean() {
        let m = PowerMatrix::from_rows(&[vec![1]]).unwrap();
        let est = mc_moment::<f64>(&m, 3, 10_000, 3).unwrap();
        assert!(est.is_consistent_with(0.0, 4.0), "{est:?}");
    }

    #[test]
    fn single_precision_sampler() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let q: SquareMatrix<f32> = haar_sample_orthogonal(4, &mut rng);
        assert!(q.orthogonality_defect() < 1e-5);
    }

    #[test]
    fn reproducible() {
        let m = PowerMatrix::from_rows(&[vec![2, 0], vec![0, 2]]).unwrap();
        let a = mc_moment::<f64>(&m, 3, 500, 42).unwrap();
        let b = mc_moment::<f64>(&m, 3, 500, 42).unwrap();
        assert_eq!(a.mean.to_bits(), b.mean.to_bits());
        assert_eq!(a.standard_error.to_bits(), b.standard_error.to_bits());
        let c = mc_moment::<f64>(&m, 3, 500, 43).unwrap();
        assert_ne!(a.mean, c.mean);
    }

    #[test]
    fn dimension_checks() {
        let m = PowerMatrix::diagonal(&[2, 2, 2]);
        assert_eq!(
            mc_moment::<f64>(&m, 2, 10, 0),
            Err(Error::DimensionTooSmall { n: 2, required: 3 })
        );
        assert!(mc_moment::<f64>(&m, 3, 1, 0).is_err());
    }
}
