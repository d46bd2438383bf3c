//! Independent checks: exact integrals over O(1), O(2) and U(1), and Monte
//! Carlo estimates over Haar-random orthogonal matrices.

mod exact;
mod haar;

pub use exact::{exact_o1, exact_o2, exact_u1, wallis_moment};
pub use haar::{haar_sample_orthogonal, mc_moment, monomial_value, MomentEstimate, SquareMatrix};
