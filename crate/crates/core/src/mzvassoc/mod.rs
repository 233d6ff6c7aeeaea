//! Multiple zeta values, the Drinfeld associator, and the value of the
//! Conway symbol on it.
//!
//! `a = A/(2πi)` and `b = B/(2πi)`; convergent words `a^{s1-1} b ... a^{sk-1} b`
//! carry `(-1)^k ζ(s1, ..., sk)` with `ζ(s) = sum_{n1 > ... > nk} prod n_i^{-s_i}`.

mod associator;
mod regularize;
mod words;
mod zeta;

pub use associator::{
    associator, chi_on_associator, chi_on_associator_scaled, conjecture_rhs, conjecture_table, AssociatorSeries, ConjecturePolynomial,
    ConjectureRow, Scaling, MAX_ASSOCIATOR_DEGREE,
};
pub use regularize::{shuffle, shuffle_regularize, MzvCombination};
pub use words::{ABWord, Composition, AB};
pub use zeta::{polylog_half, zeta, zeta_depth_sum, DEFAULT_EPS};
