//! A small Gröbner engine over 𝔽_p in degrevlex order, and the codimension of
//! an ideal read off its leading-term ideal.

pub mod buchberger;
pub mod codim;
pub mod error;

pub use buchberger::{buchberger, normal_form, to_fp, Budget, FpPoly, GroebnerBasis, MAX_VARIABLES};
pub use codim::{codimension, grade_of_specialization, GradeReport};
pub use error::GroebnerError;
