//! Deterministic substitutions of the generic variables.

use std::collections::{BTreeMap, HashMap};

use exact_arith::{IntPoly, Integer, VarId};
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::data::GenericData;
use crate::error::DataError;

/// The seeded generator used for every random choice.
pub fn rng_from_seed(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// Provenance of a specialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpecKind {
    /// Every variable to a uniform value in `[0, prime)`.
    RandomPoint { seed: u64, prime: u64 },
    /// `x_ij ↦ 0` for `i ≠ j`.
    Diagonal,
    /// `x_11 ↦ 1`, `x_1j, x_i1 ↦ 0` for `i, j ≥ 2`.
    Block,
    /// `v_i ↦ −v_i`.
    SignTwist,
    Custom,
}

/// A substitution `VarId → polynomial`; unmentioned variables survive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub n: usize,
    pub kind: SpecKind,
    pub assignment: BTreeMap<VarId, IntPoly>,
}

#[derive(Serialize, Deserialize)]
struct SpecDoc {
    n: usize,
    #[serde(flatten)]
    kind: SpecKind,
    assignment: BTreeMap<String, String>,
}

impl Specialization {
    pub fn random_point(n: usize, seed: u64, prime: u64) -> Self {
        let mut rng = rng_from_seed(seed);
        let assignment = VarId::all(n).into_iter().map(|v| (v, IntPoly::constant(Integer::from(rng.gen_range(0..prime) as i64)))).collect();
        Specialization { n, kind: SpecKind::RandomPoint { seed, prime }, assignment }
    }

    pub fn diagonal(n: usize) -> Self {
        let assignment = VarId::all(n)
            .into_iter()
            .filter(|v| matches!(v, VarId::X(i, j) if i != j))
            .map(|v| (v, IntPoly::zero()))
            .collect();
        Specialization { n, kind: SpecKind::Diagonal, assignment }
    }

    pub fn block(n: usize) -> Self {
        let mut assignment = BTreeMap::new();
        assignment.insert(VarId::X(1, 1), IntPoly::int(1));
        for k in 2..=n as u8 {
            assignment.insert(VarId::X(1, k), IntPoly::zero());
            assignment.insert(VarId::X(k, 1), IntPoly::zero());
        }
        Specialization { n, kind: SpecKind::Block, assignment }
    }

    pub fn sign_twist(n: usize) -> Self {
        let assignment = (1..=n as u8).map(|i| (VarId::V(i), IntPoly::v(VarId::V(i)).neg())).collect();
        Specialization { n, kind: SpecKind::SignTwist, assignment }
    }

    pub fn custom(n: usize, assignment: BTreeMap<VarId, IntPoly>) -> Self {
        Specialization { n, kind: SpecKind::Custom, assignment }
    }

    /// Build by kind name: `random`, `diagonal`, `block`, `sign-twist`, `generic` (empty).
    pub fn make(kind: &str, n: usize, seed: u64, prime: u64) -> Result<Self, DataError> {
        match kind {
            "random" | "random-point" => Ok(Self::random_point(n, seed, prime)),
            "diagonal" => Ok(Self::diagonal(n)),
            "block" => Ok(Self::block(n)),
            "sign-twist" => Ok(Self::sign_twist(n)),
            "generic" => Ok(Self::custom(n, BTreeMap::new())),
            other => Err(DataError::UnknownKind(other.to_string())),
        }
    }

    fn map(&self) -> HashMap<VarId, IntPoly> {
        self.assignment.iter().map(|(k, v)| (*k, v.clone())).collect()
    }

    pub fn apply(&self, p: &IntPoly) -> IntPoly {
        p.substitute(&self.map())
    }

    pub fn apply_data(&self, d: &GenericData) -> GenericData {
        d.substitute(&self.map())
    }

    pub fn to_json(&self) -> Result<String, DataError> {
        let doc = SpecDoc {
            n: self.n,
            kind: self.kind.clone(),
            assignment: self.assignment.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    pub fn from_json(s: &str) -> Result<Self, DataError> {
        let doc: SpecDoc = serde_json::from_str(s)?;
        let mut assignment = BTreeMap::new();
        for (k, v) in doc.assignment {
            assignment.insert(VarId::parse(&k)?, IntPoly::parse_int(&v)?);
        }
        Ok(Specialization { n: doc.n, kind: doc.kind, assignment })
    }
}
