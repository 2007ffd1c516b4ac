//! Homogeneous elements of ⋀ᵗF (primal) and ⋀ᵗF* (dual) with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use exact_arith::{Coeff, Polynomial};

use crate::error::MultilinearError;
use crate::index_set::{contract_sign, wedge_sign, IndexSet};

/// Which exterior algebra an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// ⋀F, basis `e_S`.
    Primal,
    /// ⋀F*, basis `ε_S`.
    Dual,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Primal => Side::Dual,
            Side::Dual => Side::Primal,
        }
    }
}

/// A homogeneous element `Σ c_S x_S` of degree `deg` over a free module of rank `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtElement<C: Coeff> {
    side: Side,
    n: usize,
    deg: usize,
    terms: BTreeMap<IndexSet, Polynomial<C>>,
}

impl<C: Coeff> ExtElement<C> {
    pub fn zero(side: Side, n: usize, deg: usize) -> Self {
        ExtElement { side, n, deg, terms: BTreeMap::new() }
    }

    /// The basis monomial `x_S`.
    pub fn basis(side: Side, n: usize, s: IndexSet, d: &C::Domain) -> Self {
        Self::monomial(side, n, s, Polynomial::one(d))
    }

    pub fn monomial(side: Side, n: usize, s: IndexSet, c: Polynomial<C>) -> Self {
        assert!(s.is_subset(IndexSet::full(n)), "index set {s} exceeds rank {n}");
        let mut e = Self::zero(side, n, s.len());
        if !c.is_zero() {
            e.terms.insert(s, c);
        }
        e
    }

    /// The scalar `c` in degree 0.
    pub fn scalar(side: Side, n: usize, c: Polynomial<C>) -> Self {
        Self::monomial(side, n, IndexSet::EMPTY, c)
    }

    /// Sum of `c·x_S`; all sets must have size `deg`.
    pub fn from_terms(side: Side, n: usize, deg: usize, terms: impl IntoIterator<Item = (IndexSet, Polynomial<C>)>) -> Self {
        let mut e = Self::zero(side, n, deg);
        for (s, c) in terms {
            e.add_term(s, &c);
        }
        e
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (IndexSet, &Polynomial<C>)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn coeff(&self, s: IndexSet) -> Polynomial<C> {
        self.terms.get(&s).cloned().unwrap_or_default()
    }

    /// Add `c·x_S` in place.
    pub fn add_term(&mut self, s: IndexSet, c: &Polynomial<C>) {
        assert_eq!(s.len(), self.deg, "term {s} has wrong degree for a degree-{} element", self.deg);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(s).or_default();
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    fn check_same(&self, o: &Self) {
        assert!(self.side == o.side && self.n == o.n, "adding elements of different exterior algebras");
    }

    /// Sum; a zero summand of any degree is absorbed.
    pub fn add(&self, o: &Self) -> Self {
        self.check_same(o);
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        assert_eq!(self.deg, o.deg, "adding elements of different degrees");
        let mut out = self.clone();
        for (s, c) in &o.terms {
            out.add_term(*s, c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Polynomial<C>) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn signed(&self, sign: i64) -> Self {
        if sign >= 0 {
            self.clone()
        } else {
            self.neg()
        }
    }

    fn map(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<C>) -> Self {
        let terms = self.terms.iter().map(|(s, c)| (*s, f(c))).filter(|(_, c)| !c.is_zero()).collect();
        ExtElement { side: self.side, n: self.n, deg: self.deg, terms }
    }

    /// `self ∧ o`.
    pub fn wedge(&self, o: &Self) -> Result<Self, MultilinearError> {
        if self.side != o.side {
            return Err(MultilinearError::SideMismatch("wedge"));
        }
        if self.n != o.n {
            return Err(MultilinearError::RankMismatch(self.n, o.n));
        }
        let deg = self.deg + o.deg;
        let mut out = Self::zero(self.side, self.n, deg.min(self.n + 1));
        if deg > self.n {
            return Ok(out);
        }
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if let Some(sg) = wedge_sign(*a, *b) {
                    out.add_term(a.union(*b), &ca.mul(cb).signed(sg));
                }
            }
        }
        Ok(out)
    }

    /// `self(on)`: the module action of one exterior algebra on the other.
    /// The result has degree `on.deg − self.deg` (zero if negative).
    pub fn contract(&self, on: &Self) -> Result<Self, MultilinearError> {
        if self.side == on.side {
            return Err(MultilinearError::SideMismatch("contract"));
        }
        if self.n != on.n {
            return Err(MultilinearError::RankMismatch(self.n, on.n));
        }
        if self.deg > on.deg {
            return Ok(Self::zero(on.side, on.n, 0));
        }
        let mut out = Self::zero(on.side, on.n, on.deg - self.deg);
        for (a, ca) in &self.terms {
            for (b, cb) in &on.terms {
                if let Some((sg, rest)) = contract_sign(*a, *b) {
                    out.add_term(rest, &ca.mul(cb).signed(sg));
                }
            }
        }
        Ok(out)
    }

    /// Graded piece `Δ^(p,q)` of the comultiplication, as a list of pure
    /// tensors (coefficients carried on the left factor).
    pub fn comult(&self, p: usize, q: usize) -> Result<Vec<(Self, Self)>, MultilinearError> {
        if p + q != self.deg {
            return Err(MultilinearError::BadSplit(p, q, self.deg));
        }
        let mut out = Vec::new();
        for (s, c) in &self.terms {
            for (sg, l, r) in comult_basis(*s, p) {
                out.push((Self::monomial(self.side, self.n, l, c.signed(sg)), Self::monomial(self.side, self.n, r, one_like(c))));
            }
        }
        Ok(out)
    }

    /// Scalar value of a degree-0 element.
    pub fn scalar_value(&self) -> Polynomial<C> {
        assert_eq!(self.deg, 0, "scalar_value of a positive-degree element");
        self.coeff(IndexSet::EMPTY)
    }

    /// Apply `f` to every coefficient, changing the coefficient domain.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<D>) -> ExtElement<D> {
        let terms = self.terms.iter().map(|(s, c)| (*s, f(c))).filter(|(_, c)| !c.is_zero()).collect();
        ExtElement { side: self.side, n: self.n, deg: self.deg, terms }
    }
}

/// The constant 1 in the coefficient domain of the nonzero `c`.
fn one_like<C: Coeff>(c: &Polynomial<C>) -> Polynomial<C> {
    Polynomial::one(&c.domain().expect("nonzero polynomial has a domain"))
}

/// `Δ^(p, |S|−p)(x_S) = Σ_P sign(P, S∖P) x_P ⊗ x_{S∖P}` over `p`-subsets `P ⊆ S`
/// in lexicographic order.
pub fn comult_basis(s: IndexSet, p: usize) -> Vec<(i64, IndexSet, IndexSet)> {
    let idx = s.to_vec();
    if p > idx.len() {
        return Vec::new();
    }
    IndexSet::subsets(idx.len(), p)
        .into_iter()
        .map(|pos| {
            let l = IndexSet::new(&pos.iter().map(|k| idx[k - 1]).collect::<Vec<_>>());
            let r = s.minus(l);
            (wedge_sign(l, r).expect("disjoint"), l, r)
        })
        .collect()
}

impl<C: Coeff> fmt::Display for ExtElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.side {
            Side::Primal => "e",
            Side::Dual => "ε",
        };
        for (k, (s, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{sym}{s}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for ExtElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[deg {}]: {}", self.side, self.deg, self)
    }
}
