//! Graded chain complexes of free modules over the generic ring.

use exact_arith::{GradingProfile, IntMatrix, PolyMatrix, WeightedDegree};
use serde::Serialize;

use crate::label::LabeledModule;

/// Modules `M_lo..=M_hi` with differentials `d_r: M_r → M_{r−1}`.
///
/// `d_lo` maps to the zero module, so every degree carries a matrix.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    lo: i64,
    modules: Vec<LabeledModule>,
    diffs: Vec<IntMatrix>,
}

/// A differential entry whose weighted degree disagrees with the twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub degree: i64,
    pub row: usize,
    pub col: usize,
    pub expected: i64,
    pub found: Option<i64>,
}

impl ChainComplex {
    /// Assemble from modules and the differentials `d_{lo+1}..=d_hi`.
    pub fn new(lo: i64, modules: Vec<LabeledModule>, upper: Vec<IntMatrix>) -> Self {
        assert!(!modules.is_empty(), "a complex needs at least one module");
        assert_eq!(upper.len() + 1, modules.len(), "one differential between each pair of modules");
        let mut diffs = vec![PolyMatrix::zeros(0, modules[0].rank())];
        for (k, d) in upper.into_iter().enumerate() {
            assert_eq!((d.nrows(), d.ncols()), (modules[k].rank(), modules[k + 1].rank()), "differential shape in degree {}", lo + k as i64 + 1);
            diffs.push(d);
        }
        ChainComplex { lo, modules, diffs }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    fn slot(&self, r: i64) -> Option<usize> {
        (self.lo..=self.hi()).contains(&r).then(|| (r - self.lo) as usize)
    }

    /// `M_r`, empty outside the range.
    pub fn module(&self, r: i64) -> LabeledModule {
        self.slot(r).map(|k| self.modules[k].clone()).unwrap_or_default()
    }

    pub fn module_ref(&self, r: i64) -> Option<&LabeledModule> {
        self.slot(r).map(|k| &self.modules[k])
    }

    pub fn rank(&self, r: i64) -> usize {
        self.slot(r).map_or(0, |k| self.modules[k].rank())
    }

    pub fn total_rank(&self) -> usize {
        self.modules.iter().map(|m| m.rank()).sum()
    }

    /// `d_r`, a zero matrix of the right shape outside the range.
    pub fn diff(&self, r: i64) -> IntMatrix {
        match self.slot(r) {
            Some(k) => self.diffs[k].clone(),
            None => PolyMatrix::zeros(self.rank(r - 1), self.rank(r)),
        }
    }

    pub fn diff_ref(&self, r: i64) -> Option<&IntMatrix> {
        self.slot(r).map(|k| &self.diffs[k])
    }

    /// Number of nonzero entries of `d_{r−1}∘d_r` for every `r`.
    pub fn d_squared_residuals(&self) -> Vec<(i64, usize)> {
        use rayon::prelude::*;
        let rs: Vec<i64> = (self.lo + 1..=self.hi()).collect();
        rs.into_par_iter().map(|r| (r, self.diff(r - 1).mul(&self.diff(r)).nnz())).collect()
    }

    /// Entries of the differentials that are not weighted-homogeneous of degree
    /// `twist(source) − twist(target)`.
    pub fn degree_violations(&self, g: &GradingProfile) -> Vec<DegreeViolation> {
        let mut out = Vec::new();
        for r in self.lo + 1..=self.hi() {
            let (src, tgt) = (self.module(r), self.module(r - 1));
            for (i, j, p) in self.diff(r).entries() {
                let expected = src.twist(j) - tgt.twist(i);
                let found = match p.weighted_degree(g) {
                    Ok(WeightedDegree::Homogeneous(k)) => Some(k),
                    _ => None,
                };
                if found != Some(expected) {
                    out.push(DegreeViolation { degree: r, row: i, col: j, expected, found });
                }
            }
        }
        out
    }

    /// Replace every differential by `f(r, d_r)`, keeping the modules.
    pub fn map_diffs(&self, f: impl Fn(i64, &IntMatrix) -> IntMatrix) -> Self {
        let diffs = self.diffs.iter().enumerate().map(|(k, d)| f(self.lo + k as i64, d)).collect();
        ChainComplex { lo: self.lo, modules: self.modules.clone(), diffs }
    }

    /// Portable JSON export.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.export()).expect("export is serializable")
    }

    fn export(&self) -> Export {
        let modules = self
            .degrees()
            .map(|r| {
                let m = self.module(r);
                ModuleExport { degree: r, labels: m.labels().iter().map(|l| l.to_string()).collect(), twists: m.twists().to_vec() }
            })
            .collect();
        let differentials = (self.lo + 1..=self.hi())
            .map(|r| {
                let (src, tgt) = (self.module(r), self.module(r - 1));
                let entries = self.diff(r).entries().map(|(i, j, p)| (tgt.label(i).to_string(), src.label(j).to_string(), p.to_string())).collect();
                DiffExport { degree: r, entries }
            })
            .collect();
        Export { lo: self.lo, hi: self.hi(), modules, differentials }
    }
}

#[derive(Serialize)]
struct Export {
    lo: i64,
    hi: i64,
    modules: Vec<ModuleExport>,
    differentials: Vec<DiffExport>,
}

#[derive(Serialize)]
struct ModuleExport {
    degree: i64,
    labels: Vec<String>,
    twists: Vec<i64>,
}

#[derive(Serialize)]
struct DiffExport {
    degree: i64,
    entries: Vec<(String, String, String)>,
}

/// Number of nonzero entries of `g∘a − b∘f` for a degreewise map `maps[r]`
/// from `a` to `b`: entry `r` is the residual of `maps[r−1]∘d^a_r − d^b_r∘maps[r]`.
pub fn chain_map_residual(a: &ChainComplex, b: &ChainComplex, map: impl Fn(i64) -> IntMatrix) -> Vec<(i64, usize)> {
    let lo = a.lo().min(b.lo());
    let hi = a.hi().max(b.hi());
    (lo + 1..=hi)
        .map(|r| {
            let left = map(r - 1).mul(&a.diff(r));
            let right = b.diff(r).mul(&map(r));
            (r, left.sub(&right).nnz())
        })
        .collect()
}

/// Degreewise maps `φ_r: A_r → B_r` over a range of degrees.
#[derive(Clone, Debug)]
pub struct ChainMap {
    lo: i64,
    maps: Vec<IntMatrix>,
}

impl ChainMap {
    pub fn new(lo: i64, maps: Vec<IntMatrix>) -> Self {
        ChainMap { lo, maps }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.maps.len() as i64 - 1
    }

    pub fn get(&self, r: i64) -> Option<&IntMatrix> {
        (self.lo..=self.hi()).contains(&r).then(|| &self.maps[(r - self.lo) as usize])
    }

    /// `φ_r`, or a zero matrix from `a_r` to `b_r` outside the range.
    pub fn matrix(&self, r: i64, a: &ChainComplex, b: &ChainComplex) -> IntMatrix {
        self.get(r).cloned().unwrap_or_else(|| PolyMatrix::zeros(b.rank(r), a.rank(r)))
    }

    /// Residuals of `φ_{r−1}∘d^a_r − d^b_r∘φ_r`.
    pub fn residual(&self, a: &ChainComplex, b: &ChainComplex) -> Vec<(i64, usize)> {
        chain_map_residual(a, b, |r| self.matrix(r, a, b))
    }

    /// Whether every residual vanishes.
    pub fn is_chain_map(&self, a: &ChainComplex, b: &ChainComplex) -> bool {
        self.residual(a, b).iter().all(|(_, k)| *k == 0)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ChainMap) -> ChainMap {
        assert_eq!((self.lo, self.maps.len()), (first.lo, first.maps.len()), "composable ranges");
        ChainMap { lo: self.lo, maps: self.maps.iter().zip(&first.maps).map(|(a, b)| a.mul(b)).collect() }
    }
}
