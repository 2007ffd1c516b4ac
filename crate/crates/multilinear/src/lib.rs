//! Exterior-algebra calculus on basis monomials for ⋀F and ⋀F* of a free
//! module of rank `n`: wedge, the two module actions, comultiplication,
//! induced minor maps and orientations.
//!
//! Conventions: `e_1..e_n` and `ε_1..ε_n` are dual bases; monomials are stored
//! with increasing indices. A degree-one element acts as a graded derivation,
//! and `(α∧β)(a) = α(β(a))`. The primal orientation is `η = e_1∧…∧e_n` and the
//! dual orientation is `ε_n∧…∧ε_1`, so that `η(ε_n) = 1`.

pub mod element;
pub mod error;
pub mod identities;
pub mod index_set;
pub mod minors;
pub mod orientation;

pub use element::{comult_basis, ExtElement, Side};
pub use error::MultilinearError;
pub use index_set::{contract_sign, wedge_sign, IndexSet};
pub use minors::Minors;
pub use orientation::Orientation;
