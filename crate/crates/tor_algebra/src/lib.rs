//! Products in `Tor^R(R/H, k)` from the lifting map `γ: ⋀M₁ → F`: blocks
//! of `γ` indexed by family pairs, their chain-map residuals, the reduced product
//! `⋀²Tor₁ → Tor₂` and the monomial presentation it is compared against.

pub mod error;
pub mod gamma;
pub mod presentation;
pub mod product;

pub use error::TorError;
pub use gamma::{block_33, block_22, block_12, block_13, block_23, block_11, build_gamma, chain_square_residuals, gamma_two, koszul_matrix, m1_labels, pure_gamma, pure_residuals, tuples, GammaMap};
pub use presentation::{hilbert_of_presentation, pair_in_relations, presentation, survives, Summand, TorPresentation};
pub use product::{reduce, tor1_square, Tor1Square};
