//! The minimal complex `M`: splittings, the decomposition `F = L ⊕ M ⊕ N̂`,
//! the contraction `τ` and the induced differential with comparison maps.

pub mod decomposition;
pub mod error;
pub mod minimal;
pub mod n2;
pub mod splitting;
pub mod tau;

pub use decomposition::{build_decomposition, stratum_role, Decomposition, DegreeDecomposition, Role, SVec, SplitKind, StratumRole, Subspace};
pub use error::MinimalError;
pub use minimal::{build_minimal, build_minimal_with, MinimalComplex};
pub use n2::{build_n2, koszul_differential, koszul_generators, rank_two_decomposition, w_subsets, w_vector, RankTwoComplex};
pub use splitting::{ell, ell_lambda, lambda, mu, mu_sigma, sigma, tensor_basis, wedge_basis, SplittingChoice, TensorTerm};
pub use tau::tau_matrix;
