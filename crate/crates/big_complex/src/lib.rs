//! The complex `F` on the data `(u, X, v)`, its grading, the sign-twisted
//! companion `F~`, the basis-change isomorphisms and the block-decomposition
//! complex `G`.
//!
//! `F_r` is the sum of four families: `⋀ᵗF*⊗⋀^{r+1−t}F*`, `⋀ᵗF⊗⋀^{r−t}F*`
//! (twice) and `⋀ᵗF*⊗⋀^{r−1−t}F*`, for `−1 ≤ r ≤ 2n+1`. The stratum `t` is
//! the degree of the left factor. Block `[i,j]` is the component from family
//! `j` to family `i`.

pub mod block_g;
pub mod build_f;
pub mod complex;
pub mod error;
pub mod isos;
pub mod label;

pub use block_g::{build_g, h_prime, split_block, BlockDecomposition};
pub use build_f::{build_f, build_f_signed, build_f_variant, f_basis, f_module, tensor, BlockSigns, FContext, FVariant, Image};
pub use complex::{chain_map_residual, ChainComplex, ChainMap, DegreeViolation};
pub use error::ComplexError;
pub use isos::{iso_basis_change, iso_theta_sign, theta_sign, transvection, unimodular_inverse, BasisSide};
pub use label::{f_labels, BasisLabel, Label, LabeledModule, Part};
