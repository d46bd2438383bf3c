//! Exact integrals of monomials over the orthogonal group.
//!
//! For a power matrix `M` of non-negative exponents, [`integrate`] returns
//! `<M> = int dsigma(w) prod_{i,xi} w_{i xi}^{M_{i xi}}` over Haar-random
//! `w` in O(N) as a reduced rational function of the symbolic dimension `N`.
//!
//! The algebra is generic over the coefficient field; the aliases below fix
//! it to arbitrary-precision rationals, which is what the integrator needs in
//! general. The Monte Carlo oracle is generic over `f32`/`f64`.
//!
//! ```
//! use orthomoments::{integrate_default, PowerMatrix};
//!
//! let m = PowerMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
//! let value = integrate_default(&m).unwrap();
//! assert_eq!(value.to_string(), "-1/((N-1)N(N+2))");
//! ```

pub mod closed_form;
pub mod combinatorics;
pub mod error;
pub mod integrator;
pub mod matrix;
pub mod oracle;
pub mod pochhammer;
pub mod poly;
pub mod ratfunc;
pub mod recursion;
pub mod render;
pub mod scalar;

pub use closed_form::{
    one_vector_orthogonal, one_vector_unitary, two_vector_closed, two_vector_ullah,
};
pub use combinatorics::{
    enumerate_even_kappa, enumerate_k_matrices, matrix_multinomial, vector_binomial,
};
pub use error::{Error, Result};
pub use integrator::{integrate, Integrator, IntegratorConfig, MemoCache, Method};
pub use matrix::{CanonicalKey, MatrixIndex, PowerMatrix, VectorIndex};
pub use pochhammer::{poch_half, poch_integer_n, poch_shifted_n};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use recursion::{recursion_reduce, Reduction, ReductionTerm};
pub use render::{parse_rational, render_expanded, render_factored, render_poly};
pub use scalar::{ExactField, Scalar};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational number.
pub type Rational = BigRational;
/// Polynomial in `N` with exact rational coefficients.
pub type PolynomialN = Polynomial<BigRational>;
/// Reduced rational function of `N`; the result type of every integral.
pub type RationalFunctionN = RationalFunction<BigRational>;
pub type MemoCacheN = MemoCache<BigRational>;
pub type IntegratorN = Integrator<BigRational>;
pub type MomentEstimateF64 = oracle::MomentEstimate<f64>;
pub type MomentEstimateF32 = oracle::MomentEstimate<f32>;

/// [`integrate`] with the default configuration and a throwaway cache.
pub fn integrate_default(m: &PowerMatrix) -> Result<RationalFunctionN> {
    integrate(m, &IntegratorConfig::default(), &MemoCache::new())
}
