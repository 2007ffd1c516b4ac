//! Sparse matrices of polynomials, stored column by column.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::coeff::Coeff;
use crate::error::ArithError;
use crate::poly::Polynomial;

/// Sparse `nrows × ncols` matrix; each column holds `(row, entry)` pairs with
/// strictly increasing rows and nonzero entries.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<C: Coeff> {
    nrows: usize,
    ncols: usize,
    cols: Vec<Vec<(usize, Polynomial<C>)>>,
}

/// Columns above this count are multiplied in parallel.
const PAR_THRESHOLD: usize = 16;

impl<C: Coeff> PolyMatrix<C> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        PolyMatrix { nrows, ncols, cols: vec![Vec::new(); ncols] }
    }

    pub fn identity(n: usize, d: &C::Domain) -> Self {
        let cols = (0..n).map(|j| vec![(j, Polynomial::one(d))]).collect();
        PolyMatrix { nrows: n, ncols: n, cols }
    }

    /// Build from `(row, col, entry)` triples; duplicates are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, Polynomial<C>)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, Polynomial<C>>> = vec![BTreeMap::new(); ncols];
        for (i, j, p) in entries {
            assert!(i < nrows && j < ncols, "triplet ({i},{j}) outside {nrows}x{ncols}");
            if p.is_zero() {
                continue;
            }
            let slot = acc[j].entry(i).or_default();
            *slot = slot.add(&p);
        }
        let cols = acc.into_iter().map(|c| c.into_iter().filter(|(_, p)| !p.is_zero()).collect()).collect();
        PolyMatrix { nrows, ncols, cols }
    }

    /// Build from sparse columns given as `(row, entry)` lists (duplicates summed).
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(usize, Polynomial<C>)>>) -> Self {
        let ncols = cols.len();
        let triples = cols.into_iter().enumerate().flat_map(|(j, c)| c.into_iter().map(move |(i, p)| (i, j, p)));
        Self::from_triplets(nrows, ncols, triples)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, j: usize) -> &[(usize, Polynomial<C>)] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Polynomial<C>> {
        let c = &self.cols[j];
        c.binary_search_by_key(&i, |(r, _)| *r).ok().map(|k| &c[k].1)
    }

    /// Entry or zero.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial<C> {
        self.get(i, j).cloned().unwrap_or_default()
    }

    /// Replace one entry.
    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<C>) {
        let c = &mut self.cols[j];
        match c.binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => {
                if p.is_zero() {
                    c.remove(k);
                } else {
                    c[k].1 = p;
                }
            }
            Err(k) => {
                if !p.is_zero() {
                    c.insert(k, (i, p));
                }
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// First nonzero entry in column-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Polynomial<C>)> {
        self.entries().next()
    }

    /// All nonzero entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial<C>)> + '_ {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, p)| (*i, j, p)))
    }

    /// Product `self · o`.
    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("matrix shapes compose")
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, ArithError> {
        if self.ncols != o.nrows {
            return Err(ArithError::Shape(format!("{}x{} times {}x{}", self.nrows, self.ncols, o.nrows, o.ncols)));
        }
        let col = |bj: &Vec<(usize, Polynomial<C>)>| -> Vec<(usize, Polynomial<C>)> {
            let mut acc: BTreeMap<usize, Polynomial<C>> = BTreeMap::new();
            for (k, b) in bj {
                for (i, a) in &self.cols[*k] {
                    let t = a.mul(b);
                    let slot = acc.entry(*i).or_default();
                    *slot = slot.add(&t);
                }
            }
            acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
        };
        let cols: Vec<_> = if o.ncols >= PAR_THRESHOLD {
            o.cols.par_iter().map(col).collect()
        } else {
            o.cols.iter().map(col).collect()
        };
        Ok(PolyMatrix { nrows: self.nrows, ncols: o.ncols, cols })
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        assert!(self.nrows == o.nrows && self.ncols == o.ncols, "shape mismatch in matrix sum");
        let cols = self
            .cols
            .iter()
            .zip(o.cols.iter())
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Polynomial<C>> = a.iter().cloned().collect();
                for (i, p) in b {
                    let slot = acc.entry(*i).or_default();
                    *slot = if negate { slot.sub(p) } else { slot.add(p) };
                }
                acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
            })
            .collect();
        PolyMatrix { nrows: self.nrows, ncols: self.ncols, cols }
    }

    pub fn neg(&self) -> Self {
        self.map(|p| p.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        self.map(|p| p.scale(k))
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(usize, Polynomial<C>)>> = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, p) in c {
                cols[*i].push((j, p.clone()));
            }
        }
        PolyMatrix { nrows: self.ncols, ncols: self.nrows, cols }
    }

    /// Apply a map to every nonzero entry, dropping entries that become zero.
    pub fn map(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<C> + Sync) -> Self {
        self.map_into(f)
    }

    /// Entrywise map into another coefficient domain.
    pub fn map_into<D: Coeff>(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<D> + Sync) -> PolyMatrix<D> {
        let cols = self
            .cols
            .par_iter()
            .map(|c| c.iter().map(|(i, p)| (*i, f(p))).filter(|(_, p)| !p.is_zero()).collect())
            .collect();
        PolyMatrix { nrows: self.nrows, ncols: self.ncols, cols }
    }

    /// Submatrix on the given rows and columns (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.nrows];
        for (k, &r) in rows.iter().enumerate() {
            pos[r] = k;
        }
        let out = cols
            .iter()
            .map(|&j| {
                let mut c: Vec<(usize, Polynomial<C>)> =
                    self.cols[j].iter().filter(|(i, _)| pos[*i] != usize::MAX).map(|(i, p)| (pos[*i], p.clone())).collect();
                c.sort_by_key(|(i, _)| *i);
                c
            })
            .collect();
        PolyMatrix { nrows: rows.len(), ncols: cols.len(), cols: out }
    }

    /// Columns of `self` followed by columns of `o`.
    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.nrows, o.nrows, "hstack row mismatch");
        let mut cols = self.cols.clone();
        cols.extend(o.cols.iter().cloned());
        PolyMatrix { nrows: self.nrows, ncols: self.ncols + o.ncols, cols }
    }

    /// Rows of `self` followed by rows of `o`.
    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.ncols, o.ncols, "vstack column mismatch");
        let cols = self
            .cols
            .iter()
            .zip(o.cols.iter())
            .map(|(a, b)| {
                let mut c = a.clone();
                c.extend(b.iter().map(|(i, p)| (i + self.nrows, p.clone())));
                c
            })
            .collect();
        PolyMatrix { nrows: self.nrows + o.nrows, ncols: self.ncols, cols }
    }

    /// Dense copy of the constant matrix, `None` if some entry is not constant.
    pub fn to_dense_constants(&self, d: &C::Domain) -> Option<Vec<Vec<C>>> {
        let mut m = vec![vec![C::zero(d); self.ncols]; self.nrows];
        for (i, j, p) in self.entries() {
            if !p.is_constant() {
                return None;
            }
            m[i][j] = p.terms()[0].1.clone();
        }
        Some(m)
    }

    /// Matrix of constants from a dense array.
    pub fn from_dense(m: &[Vec<C>], ncols: usize) -> Self {
        let nrows = m.len();
        let triples = m
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(j, c)| (i, j, Polynomial::constant(c.clone()))));
        Self::from_triplets(nrows, ncols, triples)
    }
}

impl<C: Coeff> fmt::Debug for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} ({} nonzero)", self.nrows, self.ncols, self.nnz())?;
        for (i, j, p) in self.entries() {
            writeln!(f, "  [{i},{j}] {p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Integer;
    use crate::poly::IntPoly;

    fn p(s: &str) -> IntPoly {
        IntPoly::parse_int(s).unwrap()
    }

    #[test]
    fn product_and_transpose() {
        let a = PolyMatrix::<Integer>::from_triplets(2, 2, vec![(0, 0, p("x11")), (0, 1, p("x12")), (1, 0, p("x21")), (1, 1, p("x22"))]);
        let adj = PolyMatrix::from_triplets(2, 2, vec![(0, 0, p("x22")), (0, 1, p("-x12")), (1, 0, p("-x21")), (1, 1, p("x11"))]);
        let det = p("x11*x22 - x12*x21");
        let prod = a.mul(&adj);
        assert_eq!(prod, PolyMatrix::from_triplets(2, 2, vec![(0, 0, det.clone()), (1, 1, det)]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().entry(0, 1), p("x21"));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn stacking_and_selection() {
        let a = PolyMatrix::<Integer>::identity(2, &());
        let s = a.hstack(&a).vstack(&PolyMatrix::zeros(1, 4));
        assert_eq!((s.nrows(), s.ncols(), s.nnz()), (3, 4, 4));
        let t = s.select(&[1], &[1, 3]);
        assert_eq!(t.nnz(), 2);
    }
}
