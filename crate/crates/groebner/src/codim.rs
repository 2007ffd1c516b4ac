//! Codimension from the leading-term ideal, and the grade of `H` at a specialization.

use std::collections::BTreeSet;

use exact_arith::VarId;
use generic_data::{GenericData, SpecKind, Specialization};
use serde::Serialize;

use crate::buchberger::{buchberger, to_fp, Budget, GroebnerBasis};
use crate::error::GroebnerError;

/// `nvars − dim`, where `dim` is the largest set of the given variables that
/// contains the support of no leading monomial.
pub fn codimension(gb: &GroebnerBasis, vars: &[VarId]) -> usize {
    if gb.is_unit() {
        return vars.len();
    }
    let position = |slot: usize| vars.iter().position(|v| v.slot() == slot);
    let supports: Vec<u32> = gb
        .leading()
        .iter()
        .map(|m| m.support().map(|s| 1u32 << position(s).expect("leading monomial uses a listed variable")).fold(0, |a, b| a | b))
        .collect();
    let k = vars.len();
    let mut dim = 0;
    for mask in 0u32..(1u32 << k) {
        let size = mask.count_ones() as usize;
        if size > dim && supports.iter().all(|&s| s & !mask != 0) {
            dim = size;
        }
    }
    k - dim
}

/// Outcome of the grade computation for one specialization.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GradeReport {
    pub n: usize,
    pub specialization: String,
    pub prime: u64,
    pub variables: usize,
    pub generators: usize,
    pub basis_size: usize,
    pub steps: usize,
    pub codim: usize,
}

fn kind_name(spec: &Specialization) -> String {
    match spec.kind {
        _ if spec.assignment.is_empty() => "generic".into(),
        SpecKind::RandomPoint { .. } => "random".into(),
        SpecKind::Diagonal => "diagonal".into(),
        SpecKind::Block => "block".into(),
        SpecKind::SignTwist => "sign-twist".into(),
        SpecKind::Custom => "custom".into(),
    }
}

/// Codimension of `H(u, X, (−1)^{n(n−1)/2}v)` after applying `spec`, in the
/// variables that survive.
pub fn grade_of_specialization(d: &GenericData, spec: &Specialization, p: u64, budget: Budget) -> Result<GradeReport, GroebnerError> {
    let sd = spec.apply_data(d);
    let gens = to_fp(&sd.h_ideal(true), p);
    let vars: Vec<VarId> = gens.iter().flat_map(|g| g.variables()).collect::<BTreeSet<_>>().into_iter().collect();
    let gb = buchberger(&gens, p, budget)?;
    Ok(GradeReport {
        n: d.n,
        specialization: kind_name(spec),
        prime: p,
        variables: vars.len(),
        generators: gens.len(),
        basis_size: gb.gens.len(),
        steps: gb.steps,
        codim: codimension(&gb, &vars),
    })
}
