//! Induced maps ⋀ʲX, ⋀ʲX*: ⋀ʲF → ⋀ʲF* and the classical adjoint.

use std::collections::HashMap;

use exact_arith::{Coeff, PolyMatrix, Polynomial};

use crate::element::{ExtElement, Side};
use crate::index_set::IndexSet;

/// All minors of a square matrix `X`, where `X(e_j) = Σ_i x_ij ε_i`.
#[derive(Clone, Debug)]
pub struct Minors<C: Coeff> {
    n: usize,
    table: HashMap<(IndexSet, IndexSet), Polynomial<C>>,
}

impl<C: Coeff> Minors<C> {
    /// Precompute every minor by Laplace expansion along the first row.
    pub fn new(x: &PolyMatrix<C>, d: &C::Domain) -> Self {
        let n = x.nrows();
        assert_eq!(n, x.ncols(), "minors need a square matrix");
        let mut table = HashMap::new();
        table.insert((IndexSet::EMPTY, IndexSet::EMPTY), Polynomial::one(d));
        for k in 1..=n {
            let subsets = IndexSet::subsets(n, k);
            for &rows in &subsets {
                let t1 = rows.min().expect("nonempty");
                let rest = rows.remove(t1);
                for &cols in &subsets {
                    let mut acc = Polynomial::zero();
                    for (pos, s) in cols.iter().enumerate() {
                        let x_ts = x.entry(t1 - 1, s - 1);
                        if x_ts.is_zero() {
                            continue;
                        }
                        let sub = &table[&(rest, cols.remove(s))];
                        let term = x_ts.mul(sub);
                        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                    }
                    table.insert((rows, cols), acc);
                }
            }
        }
        Minors { n, table }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Determinant of the submatrix on `rows` × `cols`.
    pub fn minor(&self, rows: IndexSet, cols: IndexSet) -> &Polynomial<C> {
        &self.table[&(rows, cols)]
    }

    /// `det X`.
    pub fn det(&self) -> &Polynomial<C> {
        let f = IndexSet::full(self.n);
        self.minor(f, f)
    }

    /// `(⋀ʲX)(b)` for primal `b` of degree `j`, or `(⋀ʲX*)(b)` when `transpose`.
    pub fn apply(&self, b: &ExtElement<C>, transpose: bool) -> ExtElement<C> {
        assert_eq!(b.side(), Side::Primal, "⋀X acts on ⋀F");
        self.apply_as(b, transpose, Side::Dual)
    }

    /// The matrix of minors applied to the coordinates of `b`, landing on `target`:
    /// the coefficient of `x_T` is `Σ_S det M[T,S]·b_S` (`det M[S,T]` when `transpose`).
    pub fn apply_as(&self, b: &ExtElement<C>, transpose: bool, target: Side) -> ExtElement<C> {
        let j = b.degree();
        let mut out = ExtElement::zero(target, self.n, j);
        for t in IndexSet::subsets(self.n, j) {
            for (s, c) in b.terms() {
                let m = if transpose { self.minor(s, t) } else { self.minor(t, s) };
                if !m.is_zero() {
                    out.add_term(t, &m.mul(c));
                }
            }
        }
        out
    }

    /// Matrix of `⋀ʲX` (or `⋀ʲX*`) in the lexicographic bases.
    pub fn matrix(&self, j: usize, transpose: bool) -> PolyMatrix<C> {
        let basis = IndexSet::subsets(self.n, j);
        let triples = basis.iter().enumerate().flat_map(|(r, &t)| {
            basis.iter().enumerate().map(move |(c, &s)| {
                let m = if transpose { self.minor(s, t) } else { self.minor(t, s) };
                (r, c, m.clone())
            })
        });
        PolyMatrix::from_triplets(basis.len(), basis.len(), triples.collect::<Vec<_>>())
    }

    /// `(Adj X)_{ij} = (−1)^{i+j} det X([n]∖j; [n]∖i)`.
    pub fn adjoint_entry(&self, i: usize, j: usize) -> Polynomial<C> {
        let f = IndexSet::full(self.n);
        let m = self.minor(f.remove(j), f.remove(i));
        if (i + j).is_multiple_of(2) {
            m.clone()
        } else {
            m.neg()
        }
    }
}
