//! Subsets of `{1..n}` as bitmasks, naming basis monomials of ⋀F and ⋀F*.

use std::fmt;

/// A subset of `{1..=32}`; bit `i-1` holds index `i`. Indices are read in
/// increasing order, so the set names `e_{i1}∧…∧e_{it}` with `i1 < … < it`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Set of the given 1-based indices.
    pub fn new(indices: &[usize]) -> Self {
        IndexSet(indices.iter().fold(0u32, |b, &i| {
            assert!((1..=32).contains(&i), "index {i} out of range");
            b | 1 << (i - 1)
        }))
    }

    pub fn singleton(i: usize) -> Self {
        Self::new(&[i])
    }

    /// `{1..n}`.
    pub fn full(n: usize) -> Self {
        IndexSet(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 >> (i - 1) & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        IndexSet(self.0 | 1 << (i - 1))
    }

    pub fn remove(self, i: usize) -> Self {
        IndexSet(self.0 & !(1 << (i - 1)))
    }

    pub fn union(self, o: Self) -> Self {
        IndexSet(self.0 | o.0)
    }

    pub fn intersect(self, o: Self) -> Self {
        IndexSet(self.0 & o.0)
    }

    pub fn minus(self, o: Self) -> Self {
        IndexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        Self::full(n).minus(self)
    }

    /// Smallest index, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Number of elements strictly below `i`.
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u32 << (i - 1)) - 1)).count_ones() as usize
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut b = self.0;
        std::iter::from_fn(move || {
            (b != 0).then(|| {
                let i = b.trailing_zeros() as usize;
                b &= b - 1;
                i + 1
            })
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `t`-subsets of `{1..n}` in lexicographic order of their sorted index lists.
    pub fn subsets(n: usize, t: usize) -> Vec<IndexSet> {
        fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if cur.len() == t {
                out.push(IndexSet::new(cur));
                return;
            }
            for i in start..=n {
                if n + 1 - i < t - cur.len() {
                    break;
                }
                cur.push(i);
                rec(i + 1, n, t, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if t <= n {
            rec(1, n, t, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Lexicographic comparison of sorted index lists.
    pub fn lex_cmp(self, o: Self) -> std::cmp::Ordering {
        self.iter().cmp(o.iter())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

/// Sets are ordered by size, then lexicographically.
impl Ord for IndexSet {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.len().cmp(&o.len()).then_with(|| self.lex_cmp(*o))
    }
}

/// Sign of `x_a ∧ x_b` relative to `x_{a∪b}`, or `None` when the sets meet.
pub fn wedge_sign(a: IndexSet, b: IndexSet) -> Option<i64> {
    if !a.intersect(b).is_empty() {
        return None;
    }
    // pairs i ∈ a, j ∈ b with i > j
    let inversions: usize = b.iter().map(|j| a.len() - a.count_below(j + 1)).sum();
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// Contraction of the basis monomial `act` on the basis monomial `on`
/// (either side acting on the other). The largest index of `act` acts first;
/// removing `i` from the current set costs `(-1)^{#elements below i}`.
pub fn contract_sign(act: IndexSet, on: IndexSet) -> Option<(i64, IndexSet)> {
    if !act.is_subset(on) {
        return None;
    }
    let mut cur = on;
    let mut sign = 1i64;
    let idx: Vec<usize> = act.to_vec();
    for &i in idx.iter().rev() {
        if cur.count_below(i) % 2 == 1 {
            sign = -sign;
        }
        cur = cur.remove(i);
    }
    Some((sign, cur))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_lex_order() {
        let s = IndexSet::subsets(4, 2);
        let v: Vec<Vec<usize>> = s.iter().map(|x| x.to_vec()).collect();
        assert_eq!(v, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(IndexSet::subsets(3, 0), vec![IndexSet::EMPTY]);
        assert!(IndexSet::subsets(2, 3).is_empty());
    }

    #[test]
    fn signs() {
        let e = IndexSet::singleton;
        assert_eq!(wedge_sign(e(1), e(2)), Some(1));
        assert_eq!(wedge_sign(e(2), e(1)), Some(-1));
        assert_eq!(wedge_sign(e(1), e(1)), None);
        // ε2(e1∧e2) = -e1
        assert_eq!(contract_sign(e(2), IndexSet::new(&[1, 2])), Some((-1, e(1))));
        // ε1(e1∧e2∧e3) = e2∧e3
        assert_eq!(contract_sign(e(1), IndexSet::new(&[1, 2, 3])), Some((1, IndexSet::new(&[2, 3]))));
        // (ε1∧ε2)(e1∧e2) = ε1(ε2(e1∧e2)) = -1
        assert_eq!(contract_sign(IndexSet::new(&[1, 2]), IndexSet::new(&[1, 2])), Some((-1, IndexSet::EMPTY)));
    }
}
