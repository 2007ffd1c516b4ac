//! The maps `μ_s`, `σ_s` and their splittings `ℓ_s`, `λ_s` on basis monomials.
//!
//! Images are lists of signed basis pairs `(left, right)` for tensors and
//! signed sets for exterior powers.

use std::collections::HashMap;

use exact_arith::{IntMatrix, IntPoly, PolyMatrix};
use multilinear::{comult_basis, contract_sign, wedge_sign, IndexSet, Orientation, Side};

/// Rule set for the splittings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplittingChoice {
    /// Monomial rules for every `n`.
    Canonical,
    /// Canonical `ℓ`, with `λ_1(e_1⊗ε_1) = ε_{12}` and `λ_1 = 0` on the other monomials (rank 2).
    RankTwo,
}

/// A signed tensor monomial `x_left ⊗ ε_right`.
pub type TensorTerm = (i64, IndexSet, IndexSet);

/// `μ_s(e_i ⊗ ε_A) = e_i(ε_A)`.
pub fn mu(i: usize, a: IndexSet) -> Option<(i64, IndexSet)> {
    contract_sign(IndexSet::singleton(i), a)
}

/// `σ_s(ε_A) = Σ ε_{a}(η) ⊗ ε_{A∖a}` over `Δ^(1,s−1)`.
pub fn sigma(n: usize, a: IndexSet) -> Vec<TensorTerm> {
    let o = Orientation::new(n);
    comult_basis(a, 1)
        .into_iter()
        .map(|(sg, one, rest)| {
            let (s2, comp) = o.contract_basis(Side::Dual, one);
            (sg * s2, comp, rest)
        })
        .collect()
}

/// `ℓ_s(ε_A) = e_j ⊗ ε_j∧ε_A` with `j = min([n]∖A)`; zero when `A = [n]`.
pub fn ell(n: usize, a: IndexSet) -> Vec<TensorTerm> {
    match IndexSet::full(n).minus(a).min() {
        None => Vec::new(),
        Some(j) => {
            let j1 = IndexSet::singleton(j);
            let sg = wedge_sign(j1, a).expect("j not in A");
            vec![(sg, j1, a.insert(j))]
        }
    }
}

/// `λ_s(e_{[n]∖j} ⊗ ε_B)`: `(−1)^{j−1} ε_{j∪B}` when `j < min B`, else zero.
/// Equivalently `λ(ε_j(η) ⊗ ε_B) = ε_j∧ε_B` for `j < min B`.
pub fn lambda(n: usize, choice: SplittingChoice, left: IndexSet, b: IndexSet) -> Option<(i64, IndexSet)> {
    assert_eq!(left.len() + 1, n, "λ acts on ⋀^(n−1)F ⊗ ⋀F*");
    if choice == SplittingChoice::RankTwo && n == 2 && b.len() == 1 {
        let e1 = IndexSet::singleton(1);
        return (left == e1 && b == e1).then(|| (1, IndexSet::full(2)));
    }
    let j = IndexSet::full(n).minus(left).min().expect("complement is a singleton");
    if b.min().is_some_and(|m| m < j) || b.contains(j) {
        return None;
    }
    Some((if j % 2 == 1 { 1 } else { -1 }, b.insert(j)))
}

/// Basis of `⋀^s F*`, or empty when `s` is out of range.
pub fn wedge_basis(n: usize, s: i64) -> Vec<IndexSet> {
    if (0..=n as i64).contains(&s) {
        IndexSet::subsets(n, s as usize)
    } else {
        Vec::new()
    }
}

/// Basis of `⋀^t F ⊗ ⋀^s F*`, ordered by left then right factor.
pub fn tensor_basis(n: usize, t: usize, s: i64) -> Vec<(IndexSet, IndexSet)> {
    let rights = wedge_basis(n, s);
    IndexSet::subsets(n, t).into_iter().flat_map(|l| rights.iter().map(move |r| (l, *r))).collect()
}

fn matrix_from(rows: usize, cols: impl IntoIterator<Item = Vec<(usize, i64)>>) -> IntMatrix {
    PolyMatrix::from_columns(rows, cols.into_iter().map(|c| c.into_iter().map(|(i, v)| (i, IntPoly::int(v))).collect()).collect())
}

fn positions<T: std::hash::Hash + Eq + Copy>(v: &[T]) -> HashMap<T, usize> {
    v.iter().enumerate().map(|(k, x)| (*x, k)).collect()
}

/// `μ_s: F ⊗ ⋀^s F* → ⋀^{s−1} F*` and `σ_s: ⋀^s F* → ⋀^{n−1} F ⊗ ⋀^{s−1} F*`
/// in the bases of [`wedge_basis`] and [`tensor_basis`].
pub fn mu_sigma(n: usize, s: i64) -> (IntMatrix, IntMatrix) {
    let src = tensor_basis(n, 1, s);
    let tgt = positions(&wedge_basis(n, s - 1));
    let mu_m = matrix_from(tgt.len(), src.iter().map(|&(l, r)| mu(l.min().expect("degree one"), r).map(|(c, x)| vec![(tgt[&x], c)]).unwrap_or_default()));
    let ts = positions(&tensor_basis(n, n - 1, s - 1));
    let sigma_m = matrix_from(ts.len(), wedge_basis(n, s).into_iter().map(|a| sigma(n, a).into_iter().map(|(c, l, r)| (ts[&(l, r)], c)).collect()));
    (mu_m, sigma_m)
}

/// `ℓ_s: ⋀^s F* → F ⊗ ⋀^{s+1} F*` and `λ_s: ⋀^{n−1} F ⊗ ⋀^s F* → ⋀^{s+1} F*`.
pub fn ell_lambda(n: usize, s: i64, choice: SplittingChoice) -> (IntMatrix, IntMatrix) {
    let tl = positions(&tensor_basis(n, 1, s + 1));
    let ell_m = matrix_from(tl.len(), wedge_basis(n, s).into_iter().map(|a| ell(n, a).into_iter().map(|(c, l, r)| (tl[&(l, r)], c)).collect()));
    let tgt = positions(&wedge_basis(n, s + 1));
    let lambda_m = matrix_from(
        tgt.len(),
        tensor_basis(n, n - 1, s).into_iter().map(|(l, r)| lambda(n, choice, l, r).filter(|(_, x)| tgt.contains_key(x)).map(|(c, x)| vec![(tgt[&x], c)]).unwrap_or_default()),
    );
    (ell_m, lambda_m)
}
