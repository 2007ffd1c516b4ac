//! Orientation elements `η ∈ ⋀ⁿF`, `ε_n ∈ ⋀ⁿF*` with `η(ε_n) = 1`.

use exact_arith::{Coeff, Polynomial};

use crate::element::{ExtElement, Side};
use crate::index_set::IndexSet;
use crate::minors::Minors;

/// `η = e_1∧…∧e_n`; `ε_n = ε_n∧…∧ε_1 = (−1)^{n(n−1)/2} ε_{1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub n: usize,
}

impl Orientation {
    pub fn new(n: usize) -> Self {
        Orientation { n }
    }

    /// Sign of `ε_n` relative to the increasing monomial `ε_{1..n}`.
    pub fn dual_sign(&self) -> i64 {
        if (self.n * (self.n.saturating_sub(1)) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn primal<C: Coeff>(&self, d: &C::Domain) -> ExtElement<C> {
        ExtElement::basis(Side::Primal, self.n, IndexSet::full(self.n), d)
    }

    pub fn dual<C: Coeff>(&self, d: &C::Domain) -> ExtElement<C> {
        ExtElement::basis(Side::Dual, self.n, IndexSet::full(self.n), d).signed(self.dual_sign())
    }

    /// `x[η]` for dual `x`, or `x(ε_n)` for primal `x`.
    pub fn contract<C: Coeff>(&self, x: &ExtElement<C>, d: &C::Domain) -> ExtElement<C> {
        let target = match x.side() {
            Side::Dual => self.primal(d),
            Side::Primal => self.dual(d),
        };
        x.contract(&target).expect("opposite sides")
    }

    /// Basis-level `x_S[orientation]`: sign and complementary set.
    pub fn contract_basis(&self, side: Side, s: IndexSet) -> (i64, IndexSet) {
        let full = IndexSet::full(self.n);
        let (sg, rest) = crate::index_set::contract_sign(s, full).expect("subset of full set");
        match side {
            Side::Dual => (sg, rest),
            Side::Primal => (sg * self.dual_sign(), rest),
        }
    }

    /// `[ε_j ∧ (⋀ⁿ⁻¹X)(ε_i[η])](η)`, which equals `(−1)^{n(n−1)/2}(Adj X)_{ij}`.
    pub fn adjoint_via_orientation<C: Coeff>(&self, m: &Minors<C>, i: usize, j: usize, d: &C::Domain) -> Polynomial<C> {
        let eps = |k| ExtElement::basis(Side::Dual, self.n, IndexSet::singleton(k), d);
        let inner = m.apply(&self.contract(&eps(i), d), false);
        let w = eps(j).wedge(&inner).expect("same side");
        self.contract(&w, d).scalar_value()
    }
}
