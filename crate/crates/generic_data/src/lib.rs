//! The generic data `(u, X, v)` over ℤ, the ideal `H(u, X, v)`, and the
//! specializations used downstream: random 𝔽_p points, the diagonal family,
//! the block form `X = diag(1, X')`, the sign twist `v ↦ −v`, and custom maps.
//!
//! Random values come from SplitMix64: the state advances by
//! `s ← s + 0x9E3779B97F4A7C15` and each output is
//! `z = s; z = (z ^ (z >> 30))·0xBF58476D1CE4E5B9; z = (z ^ (z >> 27))·0x94D049BB133111EB; z ^ (z >> 31)`
//! (wrapping arithmetic mod 2⁶⁴).

pub mod data;
pub mod error;
pub mod specialization;

pub use data::GenericData;
pub use error::DataError;
pub use specialization::{rng_from_seed, SpecKind, Specialization};
