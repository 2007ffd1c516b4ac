//! The complex `F` and its sign variants.
//!
//! Each of the sixteen sub-blocks of the differential is a separate function
//! mapping one source basis label in degree `r` to its image in `F_{r−1}`.

use exact_arith::{IntPoly, Integer, PolyMatrix};
use generic_data::GenericData;
use multilinear::{ExtElement, IndexSet, Minors, Orientation, Side};
use rayon::prelude::*;

use crate::complex::ChainComplex;
use crate::label::{f_labels, left_side, BasisLabel, Label, LabeledModule};

type Elt = ExtElement<Integer>;

/// Image of a basis label: a list of `(target label, coefficient)`.
pub type Image = Vec<(BasisLabel, IntPoly)>;

/// Sign multiplier per block `[target family][source family]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSigns(pub [[i64; 4]; 4]);

impl BlockSigns {
    pub const PLAIN: BlockSigns = BlockSigns([[1; 4]; 4]);

    /// The blocks `[2,1]`, `[3,1]`, `[2,4]`, `[3,4]` multiplied by `c`.
    pub fn cross(c: i64) -> Self {
        let mut s = [[1; 4]; 4];
        for (i, j) in [(2, 1), (3, 1), (2, 4), (3, 4)] {
            s[i - 1][j - 1] = c;
        }
        BlockSigns(s)
    }

    pub fn get(&self, target: u8, source: u8) -> i64 {
        self.0[target as usize - 1][source as usize - 1]
    }

    /// Entrywise product.
    pub fn compose(&self, o: &Self) -> Self {
        let mut s = self.0;
        for (i, row) in s.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x *= o.0[i][j];
            }
        }
        BlockSigns(s)
    }
}

/// Which form of `F` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FVariant {
    Plain,
    /// Cross blocks `[2,1]`, `[3,1]`, `[2,4]`, `[3,4]` negated.
    Tilde,
    /// `F` rebuilt from `(u, X, −v)`.
    MinusV,
}

/// Precomputed ingredients of the differential.
pub struct FContext {
    pub n: usize,
    pub d_v: i64,
    pub u: Elt,
    pub v: Elt,
    pub xu: Elt,
    pub xv: Elt,
    pub minors: Minors<Integer>,
    pub orient: Orientation,
}

impl FContext {
    pub fn new(d: &GenericData) -> Self {
        let n = d.n;
        let vec = |c: &[IntPoly]| Elt::from_terms(Side::Primal, n, 1, c.iter().enumerate().map(|(i, p)| (IndexSet::singleton(i + 1), p.clone())));
        let minors = d.minors();
        let (u, v) = (vec(&d.u), vec(&d.v));
        let xu = minors.apply(&u, true);
        let xv = minors.apply(&v, false);
        FContext { n, d_v: d.grading.d_v, u, v, xu, xv, minors, orient: d.orientation }
    }

    pub fn basis(&self, side: Side, s: IndexSet) -> Elt {
        Elt::basis(side, self.n, s, &())
    }

    pub fn source(&self, b: &BasisLabel) -> (Elt, Elt) {
        (self.basis(b.left_side(), b.left), self.basis(Side::Dual, b.right))
    }

    /// `x[η]` or `[x](η)` for dual `x`.
    pub fn eta(&self, x: &Elt) -> Elt {
        self.orient.contract(x, &())
    }
}

/// Expand `sign · l ⊗ r` into labels of `family`.
pub fn tensor(family: u8, sign: i64, l: &Elt, r: &Elt) -> Image {
    assert_eq!(l.side(), left_side(family), "left factor side for family {family}");
    let mut out = Vec::new();
    for (ls, lc) in l.terms() {
        for (rs, rc) in r.terms() {
            out.push((BasisLabel::new(family, ls, rs), lc.mul(rc).signed(sign)));
        }
    }
    out
}

fn contract(a: &Elt, b: &Elt) -> Elt {
    a.contract(b).expect("opposite sides")
}

fn wedge(a: &Elt, b: &Elt) -> Elt {
    a.wedge(b).expect("same side")
}

pub fn pow(r: i64) -> i64 {
    if r.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `Δ^(1, deg−1)` of a basis element, empty in degree 0.
fn split_one(x: &Elt) -> Vec<(Elt, Elt)> {
    if x.degree() == 0 {
        return Vec::new();
    }
    x.comult(1, x.degree() - 1).expect("valid split")
}

// family 1: α ⊗ β in ⋀ᵗF* ⊗ ⋀ˢF*, s = r+1−t

/// `α ⊗ v(β)` into `(1)^(t)`.
pub fn f1_to1_v(c: &FContext, _r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(1, 1, &a, &contract(&c.v, &be))
}

/// `(−1)^r u(α) ⊗ β` into `(1)^(t−1)`.
pub fn f1_to1_u(c: &FContext, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(1, pow(r), &contract(&c.u, &a), &be)
}

/// `Σ [β₁ ∧ (⋀ⁿ⁻ᵗX*)(α[η])](η) ⊗ β_{s−1}` into `(2)^(t−1)`.
pub fn f1_to2(c: &FContext, _r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    let inner = c.minors.apply(&c.eta(&a), true);
    split_one(&be).iter().flat_map(|(b1, rest)| tensor(2, 1, &c.eta(&wedge(b1, &inner)), rest)).collect()
}

/// `Σ [α₁ ∧ (⋀ⁿ⁻ˢX)(β[η])](η) ⊗ α_{t−1}` into `(3)^(s−1)`.
pub fn f1_to3(c: &FContext, _r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    let inner = c.minors.apply(&c.eta(&be), false);
    split_one(&a).iter().flat_map(|(a1, rest)| tensor(3, 1, &c.eta(&wedge(a1, &inner)), rest)).collect()
}

// family 2: a ⊗ β in ⋀ᵗF ⊗ ⋀ˢF*, s = r−t

/// `(−1)^r (⋀ᵗX)a ⊗ β` into `(1)^(t)`.
pub fn f2_to1(c: &FContext, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(1, pow(r), &c.minors.apply(&a, false), &be)
}

/// `a ⊗ v(β)` into `(2)^(t)`.
pub fn f2_to2_v(c: &FContext, _r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(2, 1, &a, &contract(&c.v, &be))
}

/// `(−1)^{r+1} [X*(u)](a) ⊗ β` into `(2)^(t−1)`.
pub fn f2_to2_xu(c: &FContext, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(2, pow(r + 1), &contract(&c.xu, &a), &be)
}

/// `Σ (⋀^{t−1}X)(a_{t−1}) ⊗ a₁(β)` into `(4)^(t−1)`.
pub fn f2_to4(c: &FContext, _r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    split_one(&a).iter().flat_map(|(a1, rest)| tensor(4, 1, &c.minors.apply(rest, false), &contract(a1, &be))).collect()
}

// family 3: a ⊗ β in ⋀ᵗF ⊗ ⋀ˢF*, s = r−t

/// `(−1)^{r+1} β ⊗ (⋀ᵗX*)a` into `(1)^(s)`.
pub fn f3_to1(c: &FContext, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(1, pow(r + 1), &be, &c.minors.apply(&a, true))
}

/// `(−1)^{r+1} a ⊗ u(β)` into `(3)^(t)`.
pub fn f3_to3_u(c: &FContext, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(3, pow(r + 1), &a, &contract(&c.u, &be))
}

/// `[X(v)](a) ⊗ β` into `(3)^(t−1)`.
pub fn f3_to3_xv(c: &FContext, _r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(3, 1, &contract(&c.xv, &a), &be)
}

/// `−Σ a₁(β) ⊗ (⋀^{t−1}X*)(a_{t−1})` into `(4)^(s−1)`.
pub fn f3_to4(c: &FContext, _r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    split_one(&a).iter().flat_map(|(a1, rest)| tensor(4, -1, &contract(a1, &be), &c.minors.apply(rest, true))).collect()
}

// family 4: α ⊗ β in ⋀ᵗF* ⊗ ⋀ˢF*, s = r−1−t

/// `(−1)^r [(⋀ⁿ⁻ᵗX*)(α[η])](η) ⊗ β` into `(2)^(t)`.
pub fn f4_to2(c: &FContext, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(2, pow(r), &c.eta(&c.minors.apply(&c.eta(&a), true)), &be)
}

/// `(−1)^r [(⋀ⁿ⁻ˢX)(β[η])](η) ⊗ α` into `(3)^(s)`.
pub fn f4_to3(c: &FContext, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(3, pow(r), &c.eta(&c.minors.apply(&c.eta(&be), false)), &a)
}

/// `α ⊗ v(β)` into `(4)^(t)`.
pub fn f4_to4_v(c: &FContext, _r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(4, 1, &a, &contract(&c.v, &be))
}

/// `(−1)^r u(α) ⊗ β` into `(4)^(t−1)`.
pub fn f4_to4_u(c: &FContext, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    tensor(4, pow(r), &contract(&c.u, &a), &be)
}

type BlockFn = fn(&FContext, i64, &BasisLabel) -> Image;

/// The four block functions out of a source family, with their target families.
pub fn blocks_from(family: u8) -> [(u8, BlockFn); 4] {
    match family {
        1 => [(1, f1_to1_v), (1, f1_to1_u), (2, f1_to2), (3, f1_to3)],
        2 => [(1, f2_to1), (2, f2_to2_v), (2, f2_to2_xu), (4, f2_to4)],
        3 => [(1, f3_to1), (3, f3_to3_u), (3, f3_to3_xv), (4, f3_to4)],
        _ => [(2, f4_to2), (3, f4_to3), (4, f4_to4_v), (4, f4_to4_u)],
    }
}

/// Image of one basis label under the differential in degree `r`.
pub fn image(c: &FContext, signs: &BlockSigns, r: i64, b: &BasisLabel) -> Image {
    blocks_from(b.family)
        .iter()
        .flat_map(|(tgt, f)| {
            let s = signs.get(*tgt, b.family);
            f(c, r, b).into_iter().map(move |(l, p)| (l, p.signed(s)))
        })
        .collect()
}

/// `F_r` as a labeled module with twists.
pub fn f_module(n: usize, d_v: i64, r: i64) -> LabeledModule {
    let labels = f_labels(n, r);
    let twists = labels.iter().map(|b| b.twist(n, d_v)).collect();
    LabeledModule::new(labels.into_iter().map(Label::F).collect(), twists)
}

/// Every `F` basis label of a module, in order.
pub fn f_basis(m: &LabeledModule) -> Vec<BasisLabel> {
    m.labels()
        .iter()
        .map(|l| match l {
            Label::F(b) => *b,
            other => panic!("not an F label: {other}"),
        })
        .collect()
}

/// Differential `F_r → F_{r−1}` with block signs.
pub fn f_differential(c: &FContext, signs: &BlockSigns, r: i64) -> PolyMatrix<Integer> {
    let src = f_module(c.n, c.d_v, r);
    let tgt = f_module(c.n, c.d_v, r - 1);
    let cols: Vec<Vec<(usize, IntPoly)>> = f_basis(&src)
        .par_iter()
        .map(|b| image(c, signs, r, b).into_iter().map(|(l, p)| (tgt.pos_f(&l), p)).collect())
        .collect();
    PolyMatrix::from_columns(tgt.rank(), cols)
}

/// `F` over degrees `−1..=2n+1` with the given block signs.
pub fn build_f_signed(d: &GenericData, signs: &BlockSigns) -> ChainComplex {
    let c = FContext::new(d);
    let lo = -1;
    let hi = 2 * d.n as i64 + 1;
    let modules = (lo..=hi).map(|r| f_module(d.n, c.d_v, r)).collect();
    let diffs = (lo + 1..=hi).into_par_iter().map(|r| f_differential(&c, signs, r)).collect();
    ChainComplex::new(lo, modules, diffs)
}

/// The complex `F` built from `(u, X, v)`.
pub fn build_f(d: &GenericData) -> ChainComplex {
    build_f_signed(d, &BlockSigns::PLAIN)
}

/// `F~` or `F[u, X, −v]`.
pub fn build_f_variant(d: &GenericData, variant: FVariant) -> ChainComplex {
    match variant {
        FVariant::Plain => build_f(d),
        FVariant::Tilde => build_f_signed(d, &BlockSigns::cross(-1)),
        FVariant::MinusV => build_f(&d.with_v_sign(-1)),
    }
}
