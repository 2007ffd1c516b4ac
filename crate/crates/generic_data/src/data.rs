//! The triple `(u, X, v)` with `X(e_j) = Σ_i x_ij ε_i`.

use std::collections::HashMap;

use exact_arith::{GradingProfile, IntMatrix, IntPoly, PolyMatrix, VarId, MAX_N};
use multilinear::{Minors, Orientation};

use crate::error::DataError;

/// Data over ℤ-coefficient polynomials: `u`, `v` as coordinate vectors and `X`
/// as an `n × n` matrix, with the orientation pair and grading.
#[derive(Clone, Debug)]
pub struct GenericData {
    pub n: usize,
    pub u: Vec<IntPoly>,
    pub v: Vec<IntPoly>,
    pub x: IntMatrix,
    pub orientation: Orientation,
    pub grading: GradingProfile,
}

impl GenericData {
    /// The generic triple `u_i`, `x_ij`, `v_i` with `d_v = n − 1 − d_u`.
    pub fn build_generic(n: usize, d_u: i64) -> Result<Self, DataError> {
        if !(2..=MAX_N).contains(&n) {
            return Err(DataError::Invalid(format!("n must lie in 2..={MAX_N}, got {n}")));
        }
        let grading = GradingProfile::new(n, d_u)?;
        let u = (1..=n).map(|i| IntPoly::v(VarId::U(i as u8))).collect();
        let v = (1..=n).map(|i| IntPoly::v(VarId::V(i as u8))).collect();
        let entries = (1..=n).flat_map(|i| (1..=n).map(move |j| (i - 1, j - 1, IntPoly::v(VarId::X(i as u8, j as u8)))));
        let x = PolyMatrix::from_triplets(n, n, entries.collect::<Vec<_>>());
        Ok(GenericData { n, u, v, x, orientation: Orientation::new(n), grading })
    }

    /// Data from explicit components.
    pub fn from_parts(u: Vec<IntPoly>, x: IntMatrix, v: Vec<IntPoly>, grading: GradingProfile) -> Result<Self, DataError> {
        let n = u.len();
        if v.len() != n || x.nrows() != n || x.ncols() != n || grading.n != n {
            return Err(DataError::Invalid(format!("inconsistent sizes: u {}, v {}, X {}x{}", n, v.len(), x.nrows(), x.ncols())));
        }
        Ok(GenericData { n, u, v, x, orientation: Orientation::new(n), grading })
    }

    pub fn x_entry(&self, i: usize, j: usize) -> IntPoly {
        self.x.entry(i - 1, j - 1)
    }

    pub fn minors(&self) -> Minors<exact_arith::Integer> {
        Minors::new(&self.x, &())
    }

    /// Replace `v` by `c·v` for `c = ±1`.
    pub fn with_v_sign(&self, sign: i64) -> Self {
        let mut d = self.clone();
        d.v = d.v.iter().map(|p| p.signed(sign)).collect();
        d
    }

    /// The `n + n + n²` generators of `H`: entries of `uX` (by column), of `Xv`
    /// (by row), then of `vu − Adj X` (row-major). With `sign_twist`, `v` is
    /// first replaced by `(−1)^{n(n−1)/2} v`.
    pub fn h_ideal(&self, sign_twist: bool) -> Vec<IntPoly> {
        let n = self.n;
        let d = if sign_twist { self.with_v_sign(self.orientation.dual_sign()) } else { self.clone() };
        let m = d.minors();
        let mut out = Vec::with_capacity(n * n + 2 * n);
        for j in 1..=n {
            out.push((1..=n).fold(IntPoly::zero(), |acc, i| acc.add(&d.u[i - 1].mul(&d.x_entry(i, j)))));
        }
        for i in 1..=n {
            out.push((1..=n).fold(IntPoly::zero(), |acc, j| acc.add(&d.x_entry(i, j).mul(&d.v[j - 1]))));
        }
        for i in 1..=n {
            for j in 1..=n {
                out.push(d.v[i - 1].mul(&d.u[j - 1]).sub(&m.adjoint_entry(i, j)));
            }
        }
        out
    }

    /// Apply a substitution to every component.
    pub fn substitute(&self, map: &HashMap<VarId, IntPoly>) -> Self {
        let mut d = self.clone();
        d.u = d.u.iter().map(|p| p.substitute(map)).collect();
        d.v = d.v.iter().map(|p| p.substitute(map)).collect();
        d.x = d.x.map(|p| p.substitute(map));
        d
    }
}
