//! The decomposition `F_r = L_r ⊕ M_r ⊕ N̂_r` by constant integer bases.
//!
//! Each summand carries a basis (columns in `F_r`) and coordinate maps
//! (rows on `F_r`) with `coords·basis = id` and the three projectors summing
//! to the identity.

use std::collections::HashMap;

use big_complex::{f_module, BasisLabel, Label, LabeledModule, Part};
use exact_arith::{linalg, IntMatrix, IntPoly, Integer, PolyMatrix, Rational};
use multilinear::IndexSet;

use crate::error::MinimalError;
use crate::splitting::{ell, lambda, mu, sigma, SplittingChoice};

/// Sparse integer vector over the basis of some `F_r`.
pub type SVec = Vec<(usize, i64)>;

/// Summand of the decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    L,
    M,
    N,
}

impl Role {
    fn tag(self) -> char {
        match self {
            Role::L => 'L',
            Role::M => 'M',
            Role::N => 'N',
        }
    }
}

/// How a stratum `F_r(i)^(1)` or `F_r(i)^(n−1)` splits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    /// `ker μ_{r−1} ⊕ im ℓ_{r−2}` on `F ⊗ ⋀^{r−1}F*`.
    Ell,
    /// `ker λ_{r+1−n} ⊕ im σ_{r+2−n}` on `⋀^{n−1}F ⊗ ⋀^{r+1−n}F*`.
    Sigma,
}

/// Placement of one stratum `F_r(family)^(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumRole {
    Whole(Role),
    Split { kind: SplitKind, prime: Role, double: Role },
}

/// Placement of the stratum `(family, t)` of `F_r`.
pub fn stratum_role(n: usize, r: i64, family: u8, t: usize) -> StratumRole {
    use Role::*;
    use StratumRole::*;
    let (ni, ti) = (n as i64, t as i64);
    match family {
        1 => {
            if r < ni && (ti == 0 || ti == r + 1) {
                Whole(L)
            } else if r >= ni && (ti == ni || ti == r + 1 - ni) {
                Whole(N)
            } else {
                Whole(M)
            }
        }
        4 => {
            if r <= ni && (ti == 0 || ti == r - 1) {
                Whole(L)
            } else if ti == ni || ti == r - 1 - ni {
                Whole(N)
            } else {
                Whole(M)
            }
        }
        _ if n == 2 => rank_two_role(r, family, t),
        2 => match t {
            0 => Whole(N),
            _ if t == n => Whole(L),
            1 => Split { kind: SplitKind::Ell, prime: M, double: N },
            _ if t == n - 1 => Split { kind: SplitKind::Sigma, prime: M, double: L },
            _ => Whole(M),
        },
        _ => match t {
            0 => Whole(if r == 0 { M } else { N }),
            _ if t == n => Whole(if r == 2 * ni { M } else { L }),
            1 if r == 2 => Whole(M),
            1 => Split { kind: SplitKind::Ell, prime: M, double: N },
            _ if t == n - 1 && r == 2 * ni - 2 => Whole(M),
            _ if t == n - 1 => Split { kind: SplitKind::Sigma, prime: M, double: L },
            _ => Whole(M),
        },
    }
}

/// Families 2 and 3 at rank 2, where the strata `t = 1` and `t = n − 1` coincide.
fn rank_two_role(r: i64, family: u8, t: usize) -> StratumRole {
    use Role::*;
    use StratumRole::*;
    match (family, t, r) {
        (2, 0, _) => Whole(N),
        (2, 2, _) => Whole(L),
        (2, 1, 1) => Whole(L),
        (2, 1, 2) => Split { kind: SplitKind::Ell, prime: M, double: N },
        (2, 1, _) => Whole(N),
        (3, 0, 0) => Whole(M),
        (3, 0, _) => Whole(N),
        (3, 2, 4) => Whole(M),
        (3, 2, _) => Whole(L),
        (3, 1, 1) => Whole(L),
        (3, 1, 2) => Split { kind: SplitKind::Sigma, prime: M, double: L },
        _ => Whole(N),
    }
}

/// A summand of `F_r` with basis and coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub module: LabeledModule,
    /// `F_r × k` inclusion.
    pub basis: IntMatrix,
    /// `k × F_r` coordinate map.
    pub coords: IntMatrix,
}

impl Subspace {
    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    /// `basis·coords`, the projector onto this summand.
    pub fn projector(&self) -> IntMatrix {
        self.basis.mul(&self.coords)
    }
}

/// The decomposition in one degree.
#[derive(Clone, Debug)]
pub struct DegreeDecomposition {
    pub r: i64,
    pub f: LabeledModule,
    pub l: Subspace,
    pub m: Subspace,
    pub n: Subspace,
}

impl DegreeDecomposition {
    /// Assemble from labeled basis vectors of the three summands.
    pub fn new(r: i64, f: LabeledModule, parts: [Vec<(Label, SVec)>; 3]) -> Result<Self, MinimalError> {
        let dim = f.rank();
        let all: Vec<&SVec> = parts.iter().flat_map(|p| p.iter().map(|(_, v)| v)).collect();
        if all.len() != dim {
            return Err(MinimalError::RankMismatch(format!("degree {r}: {} basis vectors for rank {dim}", all.len())));
        }
        let coords = invert_blocks(dim, &all).map_err(|e| MinimalError::RankMismatch(format!("degree {r}: {e}")))?;
        let mut offset = 0;
        let mut subs = Vec::new();
        for p in &parts {
            let twists = p.iter().map(|(l, v)| vector_twist(&f, l, v)).collect::<Result<Vec<_>, _>>()?;
            let module = LabeledModule::new(p.iter().map(|(l, _)| l.clone()).collect(), twists);
            let basis = PolyMatrix::from_triplets(dim, p.len(), p.iter().enumerate().flat_map(|(j, (_, v))| v.iter().map(move |&(i, c)| (i, j, IntPoly::int(c)))).collect::<Vec<_>>());
            let rows = &coords[offset..offset + p.len()];
            let c = PolyMatrix::from_triplets(p.len(), dim, rows.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |&(j, ref x)| (i, j, IntPoly::constant(x.clone())))).collect::<Vec<_>>());
            offset += p.len();
            subs.push(Subspace { module, basis, coords: c });
        }
        let n = subs.pop().expect("three parts");
        let m = subs.pop().expect("three parts");
        let l = subs.pop().expect("three parts");
        Ok(DegreeDecomposition { r, f, l, m, n })
    }

    pub fn part(&self, role: Role) -> &Subspace {
        match role {
            Role::L => &self.l,
            Role::M => &self.m,
            Role::N => &self.n,
        }
    }
}

fn vector_twist(f: &LabeledModule, l: &Label, v: &SVec) -> Result<i64, MinimalError> {
    let mut tw = v.iter().map(|&(i, _)| f.twist(i));
    let first = tw.next().ok_or_else(|| MinimalError::RankMismatch(format!("zero basis vector {l}")))?;
    if tw.any(|x| x != first) {
        return Err(MinimalError::RankMismatch(format!("basis vector {l} is not homogeneous")));
    }
    Ok(first)
}

/// Rows of the inverse of the square matrix with the given columns, computed
/// on connected blocks of the row/column incidence.
fn invert_blocks(dim: usize, cols: &[&SVec]) -> Result<Vec<Vec<(usize, Integer)>>, String> {
    let mut parent: Vec<usize> = (0..dim).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in cols {
        let Some(&(a, _)) = c.first() else { return Err("zero column".into()) };
        for &(b, _) in c.iter() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut block_rows: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..dim {
        let root = find(&mut parent, i);
        block_rows.entry(root).or_default().push(i);
    }
    let mut block_cols: HashMap<usize, Vec<usize>> = HashMap::new();
    for (j, c) in cols.iter().enumerate() {
        let root = find(&mut parent, c[0].0);
        block_cols.entry(root).or_default().push(j);
    }
    let mut out = vec![Vec::new(); cols.len()];
    for (root, rows) in &block_rows {
        let cs = block_cols.get(root).cloned().unwrap_or_default();
        if cs.len() != rows.len() {
            return Err(format!("block of {} rows spanned by {} vectors", rows.len(), cs.len()));
        }
        let k = rows.len();
        let pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let mut m = vec![vec![Rational::from_i64(0, &()); k]; k];
        for (b, &j) in cs.iter().enumerate() {
            for &(i, c) in cols[j].iter() {
                m[pos[&i]][b] = Rational::from_i64(c, &());
            }
        }
        let inv = linalg::left_inverse(&m, k, &()).map_err(|e| e.to_string())?;
        let inv = linalg::to_integer(&inv).map_err(|_| "non-integral coordinates".to_string())?;
        for (b, &j) in cs.iter().enumerate() {
            out[j] = rows.iter().enumerate().filter(|(a, _)| !inv[b][*a].is_zero()).map(|(a, &i)| (i, inv[b][a].clone())).collect();
        }
    }
    Ok(out)
}

use exact_arith::Coeff;

/// Decomposition over all degrees `−1..=2n+1`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub n: usize,
    pub choice: SplittingChoice,
    degrees: Vec<DegreeDecomposition>,
}

impl Decomposition {
    pub fn from_degrees(n: usize, choice: SplittingChoice, degrees: Vec<DegreeDecomposition>) -> Self {
        assert_eq!(degrees.len(), 2 * n + 3, "one decomposition per degree");
        Decomposition { n, choice, degrees }
    }

    pub fn lo(&self) -> i64 {
        -1
    }

    pub fn hi(&self) -> i64 {
        2 * self.n as i64 + 1
    }

    pub fn get(&self, r: i64) -> Option<&DegreeDecomposition> {
        (self.lo()..=self.hi()).contains(&r).then(|| &self.degrees[(r + 1) as usize])
    }

    pub fn degrees(&self) -> &[DegreeDecomposition] {
        &self.degrees
    }

    /// `rank` of a summand in degree `r`, zero outside the range.
    pub fn rank(&self, role: Role, r: i64) -> usize {
        self.get(r).map_or(0, |d| d.part(role).rank())
    }
}

/// Basis vectors of one stratum, split by role.
pub fn stratum_vectors(n: usize, choice: SplittingChoice, f: &LabeledModule, r: i64, family: u8, t: usize) -> Vec<(Role, Label, SVec)> {
    let labels: Vec<BasisLabel> = f
        .labels()
        .iter()
        .filter_map(|l| match l {
            Label::F(b) if b.family == family && b.t() == t => Some(*b),
            _ => None,
        })
        .collect();
    if labels.is_empty() {
        return Vec::new();
    }
    let pos = |b: &BasisLabel| f.pos_f(b);
    match stratum_role(n, r, family, t) {
        StratumRole::Whole(role) => labels.iter().map(|b| (role, Label::F(*b), vec![(pos(b), 1)])).collect(),
        StratumRole::Split { kind, prime, double } => {
            let lab = |role: Role, part: Part, index: usize| Label::Sub { space: role.tag(), family, t: t as u8, part, index };
            let sv = |terms: Vec<(i64, IndexSet, IndexSet)>| -> SVec { terms.into_iter().map(|(c, l, rr)| (pos(&BasisLabel::new(family, l, rr)), c)).collect() };
            // the map whose kernel is the primed part, as rows over the stratum
            let (targets, images): (Vec<IndexSet>, Vec<SVec>) = match kind {
                SplitKind::Ell => {
                    let k = r - 2;
                    let targets = if k >= 0 { IndexSet::subsets(n, k as usize) } else { Vec::new() };
                    let images = targets.iter().map(|b| sv(ell(n, *b))).collect();
                    (targets, images)
                }
                SplitKind::Sigma => {
                    let k = r + 2 - n as i64;
                    let targets = if k >= 0 && k <= n as i64 { IndexSet::subsets(n, k as usize) } else { Vec::new() };
                    let images = targets.iter().map(|b| sv(sigma(n, *b))).collect();
                    (targets, images)
                }
            };
            let tpos: HashMap<IndexSet, usize> = targets.iter().enumerate().map(|(k, s)| (*s, k)).collect();
            let mut dense = vec![vec![Rational::from_i64(0, &()); labels.len()]; targets.len()];
            for (j, b) in labels.iter().enumerate() {
                let img = match kind {
                    SplitKind::Ell => mu(b.left.min().expect("t = 1"), b.right),
                    SplitKind::Sigma => lambda(n, choice, b.left, b.right),
                };
                if let Some((c, s)) = img {
                    dense[tpos[&s]][j] = Rational::from_i64(c, &());
                }
            }
            let kernel = if targets.is_empty() {
                (0..labels.len()).map(|j| (0..labels.len()).map(|i| Rational::from_i64((i == j) as i64, &())).collect()).collect()
            } else {
                linalg::kernel(&dense, labels.len(), &())
            };
            let mut out: Vec<(Role, Label, SVec)> = Vec::new();
            for (k, v) in kernel.iter().enumerate() {
                let v: SVec = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (pos(&labels[j]), c.to_integer().and_then(|z| z.to_i64()).expect("integral kernel vector")))
                    .collect();
                out.push((prime, lab(prime, Part::Prime, k), v));
            }
            for (k, v) in images.into_iter().enumerate() {
                out.push((double, lab(double, Part::DoublePrime, k), v));
            }
            out
        }
    }
}

/// The decomposition for rank `n`, with twists for `deg v = d_v`.
pub fn build_decomposition(n: usize, d_v: i64, choice: SplittingChoice) -> Result<Decomposition, MinimalError> {
    if n < 2 {
        return Err(MinimalError::Unsupported(format!("rank {n}")));
    }
    let degrees = (-1..=2 * n as i64 + 1)
        .map(|r| {
            let f = f_module(n, d_v, r);
            let mut parts: [Vec<(Label, SVec)>; 3] = Default::default();
            for family in 1..=4u8 {
                for t in 0..=n {
                    for (role, l, v) in stratum_vectors(n, choice, &f, r, family, t) {
                        parts[role as usize].push((l, v));
                    }
                }
            }
            DegreeDecomposition::new(r, f, parts)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Decomposition { n, choice, degrees })
}
