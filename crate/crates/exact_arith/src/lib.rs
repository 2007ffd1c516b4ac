//! Exact arithmetic for the generic ring ℤ[u_i, v_i, x_ij]: coefficient
//! domains, sparse polynomials in degrevlex canonical form, sparse polynomial
//! matrices and dense exact elimination over fields.

pub mod coeff;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod var;

pub use coeff::{check_modulus, Coeff, Fp, Integer, Rational};
pub use error::ArithError;
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use poly::{IntPoly, Polynomial, WeightedDegree};
pub use var::{GradingProfile, VarId, MAX_N, NSLOTS};

/// Integer polynomial matrix, the representation of every differential.
pub type IntMatrix = PolyMatrix<Integer>;

/// Default prime for rank and Gröbner work.
pub const DEFAULT_PRIME: u64 = 1_000_003;
