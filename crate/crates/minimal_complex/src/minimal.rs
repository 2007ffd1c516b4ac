//! The minimal complex `(M, m)` with the comparison maps `ψ: F → M` and
//! `ρ: M → F` and the homotopy `s`.

use big_complex::{ChainComplex, ChainMap, FContext, LabeledModule};
use exact_arith::{IntMatrix, PolyMatrix};
use generic_data::GenericData;
use rayon::prelude::*;

use crate::decomposition::{build_decomposition, Decomposition, Role};
use crate::error::MinimalError;
use crate::n2::rank_two_decomposition;
use crate::splitting::SplittingChoice;
use crate::tau::tau_matrix;

/// `M` together with the data relating it to `F`.
#[derive(Clone, Debug)]
pub struct MinimalComplex {
    pub n: usize,
    pub decomposition: Decomposition,
    /// `(M, m)`.
    pub complex: ChainComplex,
    /// `τ_r` as `F_{r+1} × L_r`, indexed from `r = −1`.
    pub tau: Vec<IntMatrix>,
    /// `s_r = τ_r∘π^L_r: F_r → F_{r+1}`, indexed from `r = −1`.
    pub s: Vec<IntMatrix>,
    /// `ψ: F → M`.
    pub psi: ChainMap,
    /// `ρ: M → F`.
    pub rho: ChainMap,
}

impl MinimalComplex {
    pub fn lo(&self) -> i64 {
        -1
    }

    pub fn hi(&self) -> i64 {
        2 * self.n as i64 + 1
    }

    /// `τ_r`, `None` outside the range.
    pub fn tau(&self, r: i64) -> Option<&IntMatrix> {
        (self.lo()..=self.hi()).contains(&r).then(|| &self.tau[(r + 1) as usize])
    }

    /// `s_r`, `None` outside the range.
    pub fn s(&self, r: i64) -> Option<&IntMatrix> {
        (self.lo()..=self.hi()).contains(&r).then(|| &self.s[(r + 1) as usize])
    }

    /// Nonzero ranks of `M` by degree.
    pub fn ranks(&self) -> Vec<(i64, usize)> {
        self.complex.degrees().map(|r| (r, self.complex.rank(r))).filter(|(_, k)| *k > 0).collect()
    }

    /// JSON export of `m`, `τ`, `ψ` and `ρ`.
    pub fn to_json(&self) -> serde_json::Value {
        let mat = |m: &IntMatrix| -> serde_json::Value {
            serde_json::json!({
                "rows": m.nrows(),
                "cols": m.ncols(),
                "entries": m.entries().map(|(i, j, p)| serde_json::json!([i, j, p.to_string()])).collect::<Vec<_>>(),
            })
        };
        let seq = |lo: i64, ms: Vec<&IntMatrix>| -> serde_json::Value { ms.into_iter().enumerate().map(|(k, m)| serde_json::json!({"degree": lo + k as i64, "matrix": mat(m)})).collect() };
        let range: Vec<i64> = (self.lo()..=self.hi()).collect();
        serde_json::json!({
            "n": self.n,
            "complex": self.complex.to_json(),
            "tau": seq(-1, self.tau.iter().collect()),
            "psi": seq(-1, range.iter().map(|&r| self.psi.get(r).expect("in range")).collect()),
            "rho": seq(-1, range.iter().map(|&r| self.rho.get(r).expect("in range")).collect()),
        })
    }
}

/// Build `M` from `F` using the decomposition with the given splittings.
/// Rank two always uses its own splittings and the `w` basis of `M`.
pub fn build_minimal(d: &GenericData, f: &ChainComplex, choice: SplittingChoice) -> Result<MinimalComplex, MinimalError> {
    let dec = if d.n == 2 { rank_two_decomposition(d.grading.d_v)? } else { build_decomposition(d.n, d.grading.d_v, choice)? };
    build_minimal_with(d, f, dec)
}

/// Build `M` from `F` and a given decomposition.
pub fn build_minimal_with(d: &GenericData, f: &ChainComplex, dec: Decomposition) -> Result<MinimalComplex, MinimalError> {
    let n = d.n;
    let c = FContext::new(d);
    let (lo, hi) = (-1i64, 2 * n as i64 + 1);
    for r in lo..=hi {
        let fm = f.module(r);
        if fm.labels() != dec.get(r).expect("in range").f.labels() {
            return Err(MinimalError::RankMismatch(format!("F_{r} does not match the decomposition")));
        }
    }
    let fmod = |r: i64| -> LabeledModule { f.module(r) };
    let tau: Vec<IntMatrix> = (lo..=hi).into_par_iter().map(|r| tau_matrix(&c, dec.get(r).expect("in range"), &fmod(r + 1))).collect();
    let s: Vec<IntMatrix> = (lo..=hi).map(|r| tau[(r + 1) as usize].mul(&dec.get(r).expect("in range").l.coords)).collect();
    let s_at = |r: i64| -> IntMatrix {
        if (lo..=hi).contains(&r) {
            s[(r + 1) as usize].clone()
        } else {
            PolyMatrix::zeros(f.rank(r + 1), f.rank(r))
        }
    };
    let psi: Vec<IntMatrix> = (lo..=hi)
        .into_par_iter()
        .map(|r| {
            let cm = &dec.get(r).expect("in range").m.coords;
            let id = PolyMatrix::identity(f.rank(r), &());
            cm.mul(&id.sub(&f.diff(r + 1).mul(&s_at(r))))
        })
        .collect();
    let rho: Vec<IntMatrix> = (lo..=hi)
        .into_par_iter()
        .map(|r| {
            let bm = &dec.get(r).expect("in range").m.basis;
            bm.sub(&s_at(r - 1).mul(&f.diff(r).mul(bm)))
        })
        .collect();
    let psi_at = |r: i64| -> IntMatrix {
        if (lo..=hi).contains(&r) {
            psi[(r + 1) as usize].clone()
        } else {
            PolyMatrix::zeros(dec.rank(Role::M, r), f.rank(r))
        }
    };
    let diffs: Vec<IntMatrix> = (lo + 1..=hi).into_par_iter().map(|r| psi_at(r - 1).mul(&f.diff(r)).mul(&dec.get(r).expect("in range").m.basis)).collect();
    let modules = (lo..=hi).map(|r| dec.get(r).expect("in range").m.module.clone()).collect();
    let complex = ChainComplex::new(lo, modules, diffs);
    Ok(MinimalComplex { n, decomposition: dec, complex, tau, s, psi: ChainMap::new(lo, psi), rho: ChainMap::new(lo, rho) })
}
