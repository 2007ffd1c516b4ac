//! The lifting map `γ: ⋀M₁ → F` on the parts given by the blocks indexed by family pairs.
//!
//! `M₁ = F₁(1)^(1) ⊕ F₁(2)^(1) ⊕ F₁(3)^(1)`; elements of `⋀ʳM₁` are indexed by
//! increasing `r`-tuples of `M₁` basis positions.

use big_complex::{tensor, BasisLabel, ChainComplex, FContext, Image, Label};
use exact_arith::{IntMatrix, IntPoly, Integer, PolyMatrix};
use multilinear::{ExtElement, Side};
use minimal_complex::MinimalComplex;

use crate::error::TorError;

type Elt = ExtElement<Integer>;

/// `(−1)^k`.
fn pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(−1)^{r(r−1)/2}`.
fn wedge_sign(r: usize) -> i64 {
    pow((r * (r.saturating_sub(1)) / 2) as i64)
}

fn wedge(a: &Elt, b: &Elt) -> Elt {
    a.wedge(b).expect("same side")
}

fn pairing(a: &Elt, b: &Elt) -> IntPoly {
    a.contract(b).expect("opposite sides").scalar_value()
}

fn one(c: &FContext, side: Side) -> Elt {
    Elt::scalar(side, c.n, IntPoly::int(1))
}

fn left_right(c: &FContext, b: &BasisLabel) -> (Elt, Elt) {
    c.source(b)
}

/// Block `(3,3)`: `γ_r` on `⋀ʳF₁(3)^(1)` at `a_r = a¹∧…∧aʳ`.
pub fn block_33(c: &FContext, a_r: &Elt) -> Image {
    let mut out = tensor(2, 1, &one(c, Side::Primal), &c.minors.apply(a_r, true));
    out.extend(tensor(3, 1, a_r, &one(c, Side::Dual)));
    out
}

/// Block `(2,2)`: `γ_r` on `⋀ʳF₁(2)^(1)` at `a_r = a¹∧…∧aʳ`.
pub fn block_22(c: &FContext, a_r: &Elt) -> Image {
    let s = wedge_sign(a_r.degree());
    let mut out = tensor(2, s, a_r, &one(c, Side::Dual));
    out.extend(tensor(3, s, &one(c, Side::Primal), &c.minors.apply(a_r, false)));
    out
}

/// Block `(1,2)`: `γ₂([α⊗β] ∧ [a⊗1])` with the first factor in `F₁(1)^(1)`, the second in `F₁(2)^(1)`.
pub fn block_12(c: &FContext, p: &BasisLabel, q: &BasisLabel) -> Image {
    let (al, be) = left_right(c, p);
    let (a, _) = left_right(c, q);
    let xa = c.minors.apply(&a, false);
    let mut out = tensor(1, -1, &wedge(&xa, &al), &be);
    out.extend(tensor(2, -1, &a.scale(&pairing(&c.u, &al)), &be));
    out.extend(tensor(3, -1, &one(c, Side::Primal).scale(&pairing(&c.v, &be)), &wedge(&xa, &al)));
    out.extend(tensor(4, 1, &al.scale(&pairing(&a, &be)), &one(c, Side::Dual)));
    out
}

/// Block `(1,3)`: `γ₂([α⊗β] ∧ [a⊗1])` with the second factor in `F₁(3)^(1)`.
pub fn block_13(c: &FContext, p: &BasisLabel, q: &BasisLabel) -> Image {
    let (al, be) = left_right(c, p);
    let (a, _) = left_right(c, q);
    let xa = wedge(&c.minors.apply(&a, true), &be);
    let mut out = tensor(1, -1, &al, &xa);
    out.extend(tensor(2, 1, &one(c, Side::Primal).scale(&pairing(&c.u, &al)), &xa));
    out.extend(tensor(3, 1, &a.scale(&pairing(&c.v, &be)), &al));
    out.extend(tensor(4, 1, &one(c, Side::Dual).scale(&pairing(&a, &al)), &be));
    out
}

/// Block `(2,3)`: `γ₂([a⊗1] ∧ [b⊗1])` with `a` from `F₁(2)^(1)` and `b` from `F₁(3)^(1)`.
pub fn block_23(c: &FContext, p: &BasisLabel, q: &BasisLabel) -> Image {
    let (a, _) = left_right(c, p);
    let (b, _) = left_right(c, q);
    let mut out = tensor(2, -1, &a, &c.minors.apply(&b, true));
    out.extend(tensor(3, -1, &b, &c.minors.apply(&a, false)));
    out
}

/// Block `(1,1)`: `γ̃₂([α⊗β] ⊗ [α'⊗β'])` on `F₁(1)^(1) ⊗ F₁(1)^(1)`.
pub fn block_11(c: &FContext, p: &BasisLabel, q: &BasisLabel) -> Image {
    let (al, be) = left_right(c, p);
    let (al2, be2) = left_right(c, q);
    let (aa, bb) = (wedge(&al, &al2), wedge(&be, &be2));
    let (ua, ua2) = (pairing(&c.u, &al), pairing(&c.u, &al2));
    let (vb, vb2) = (pairing(&c.v, &be), pairing(&c.v, &be2));
    let mut out = tensor(1, -1, &aa.scale(&vb2), &be);
    out.extend(tensor(1, -1, &al2.scale(&ua), &bb));
    out.extend(tensor(2, 1, &c.eta(&wedge(&be, &c.minors.apply(&c.eta(&aa), true))), &be2));
    out.extend(tensor(2, 1, &one(c, Side::Primal).scale(&ua.mul(&ua2)), &bb));
    out.extend(tensor(3, -1, &c.eta(&wedge(&al2, &c.minors.apply(&c.eta(&bb), false))), &al));
    out.extend(tensor(3, -1, &one(c, Side::Primal).scale(&vb.mul(&vb2)), &aa));
    out
}

/// `γ₂` on two distinct basis labels of `M₁` in the given order, antisymmetric.
/// The splitting in block `(1,1)` sends `x∧y` to `x⊗y` when `x` precedes `y`.
pub fn gamma_two(c: &FContext, p: &BasisLabel, q: &BasisLabel, p_first: bool) -> Image {
    let neg = |im: Image| im.into_iter().map(|(l, k)| (l, k.neg())).collect();
    match (p.family, q.family) {
        (1, 1) if p_first => block_11(c, p, q),
        (1, 1) => neg(block_11(c, q, p)),
        (1, 2) => block_12(c, p, q),
        (2, 1) => neg(block_12(c, q, p)),
        (1, 3) => block_13(c, p, q),
        (3, 1) => neg(block_13(c, q, p)),
        (2, 3) => block_23(c, p, q),
        (3, 2) => neg(block_23(c, q, p)),
        (2, 2) => block_22(c, &wedge(&left_right(c, p).0, &left_right(c, q).0)),
        (3, 3) => block_33(c, &wedge(&left_right(c, p).0, &left_right(c, q).0)),
        _ => unreachable!("M₁ has families 1, 2, 3"),
    }
}

/// Increasing `r`-tuples of `0..k` in lexicographic order.
pub fn tuples(k: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            go(i + 1, k, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, r, &mut Vec::new(), &mut out);
    out
}

/// The `F₁` label and sign of each `M₁` basis vector.
pub fn m1_labels(mc: &MinimalComplex) -> Result<Vec<(BasisLabel, i64)>, TorError> {
    let dd = mc.decomposition.get(1).ok_or_else(|| TorError::Shape("no degree 1".into()))?;
    (0..dd.m.rank())
        .map(|k| match dd.m.basis.column(k) {
            [(i, coef)] => {
                let sign = coef.constant_term().and_then(|c| c.to_i64()).filter(|s| s.abs() == 1 && coef.is_constant());
                match (dd.f.label(*i), sign) {
                    (Label::F(b), Some(s)) if (1..=3).contains(&b.family) && b.t() == 1 => Ok((*b, s)),
                    _ => Err(TorError::Shape(format!("M₁ basis vector {k} is not a unit multiple of a stratum label"))),
                }
            }
            _ => Err(TorError::Shape(format!("M₁ basis vector {k} is not a single label"))),
        })
        .collect()
}

/// `γ_r` as matrices `⋀ʳM₁ → F_r` for `r = 0, 1, 2`, with `γ₀ = ρ₀`, `γ₁ = ρ₁`.
#[derive(Clone, Debug)]
pub struct GammaMap {
    pub n: usize,
    pub labels: Vec<(BasisLabel, i64)>,
    /// `(r, source tuples, matrix F_r × tuples)`.
    pub degrees: Vec<(usize, Vec<Vec<usize>>, IntMatrix)>,
}

impl GammaMap {
    pub fn matrix(&self, r: usize) -> &IntMatrix {
        &self.degrees[r].2
    }

    pub fn tuples(&self, r: usize) -> &[Vec<usize>] {
        &self.degrees[r].1
    }
}

fn image_column(f: &ChainComplex, r: i64, im: Image, scale: i64) -> Vec<(usize, IntPoly)> {
    let module = f.module_ref(r).expect("degree in range");
    im.into_iter().map(|(b, k)| (module.pos_f(&b), k.signed(scale))).collect()
}

/// Assemble `γ₀, γ₁, γ₂` from `ρ` and the blocks indexed by family pairs.
pub fn build_gamma(c: &FContext, f: &ChainComplex, mc: &MinimalComplex) -> Result<GammaMap, TorError> {
    let labels = m1_labels(mc)?;
    let k = labels.len();
    let rho = |r: i64| mc.rho.get(r).cloned().ok_or_else(|| TorError::Shape(format!("no ρ in degree {r}")));
    let two = tuples(k, 2);
    let cols = two
        .iter()
        .map(|t| {
            let ((p, sp), (q, sq)) = (labels[t[0]], labels[t[1]]);
            image_column(f, 2, gamma_two(c, &p, &q, true), sp * sq)
        })
        .collect();
    let g2 = PolyMatrix::from_columns(f.rank(2), cols);
    Ok(GammaMap { n: c.n, labels, degrees: vec![(0, tuples(k, 0), rho(0)?), (1, tuples(k, 1), rho(1)?), (2, two, g2)] })
}

/// The pure blocks `(3,3)` or `(2,2)` on `⋀ʳ` of the `M₁` part of `family` (3 or 2), as a matrix into `F_r`.
pub fn pure_gamma(c: &FContext, f: &ChainComplex, labels: &[(BasisLabel, i64)], family: u8, r: usize) -> (Vec<Vec<usize>>, IntMatrix) {
    let part: Vec<usize> = (0..labels.len()).filter(|&k| labels[k].0.family == family).collect();
    let ts: Vec<Vec<usize>> = tuples(part.len(), r).into_iter().map(|t| t.into_iter().map(|i| part[i]).collect()).collect();
    let cols = ts
        .iter()
        .map(|t| {
            let mut a_r = one(c, Side::Primal);
            let mut sign = 1;
            for &i in t {
                a_r = wedge(&a_r, &left_right(c, &labels[i].0).0);
                sign *= labels[i].1;
            }
            let im = if family == 3 { block_33(c, &a_r) } else { block_22(c, &a_r) };
            image_column(f, r as i64, im, sign)
        })
        .collect();
    (ts, PolyMatrix::from_columns(f.rank(r as i64), cols))
}

/// Koszul differential `⋀ʳM₁ → ⋀^{r−1}M₁` of `m₁`, on the given source and target tuples.
pub fn koszul_matrix(m1: &IntMatrix, source: &[Vec<usize>], target: &[Vec<usize>]) -> IntMatrix {
    let pos: std::collections::HashMap<&Vec<usize>, usize> = target.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let cols = source
        .iter()
        .map(|t| {
            t.iter()
                .enumerate()
                .filter_map(|(j, &k)| {
                    let rest: Vec<usize> = t.iter().copied().filter(|&x| x != k).collect();
                    let coef = m1.entry(0, k).signed(pow(j as i64));
                    pos.get(&rest).map(|&i| (i, coef))
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_columns(target.len(), cols)
}

/// `f_r∘γ_r − γ_{r−1}∘∂_r` for `r = 1, 2`.
pub fn chain_square_residuals(f: &ChainComplex, m: &ChainComplex, g: &GammaMap) -> Vec<(usize, IntMatrix)> {
    (1..=2)
        .map(|r| {
            let d = koszul_matrix(&m.diff(1), g.tuples(r), g.tuples(r - 1));
            (r, f.diff(r as i64).mul(g.matrix(r)).sub(&g.matrix(r - 1).mul(&d)))
        })
        .collect()
}

/// Residual of the pure blocks as a chain map on `⋀^•` of one family, degrees `1..=max_r`;
/// degree 0 uses `ρ₀`.
pub fn pure_residuals(c: &FContext, f: &ChainComplex, m: &ChainComplex, g: &GammaMap, family: u8, max_r: usize) -> Vec<(usize, IntMatrix)> {
    (1..=max_r)
        .map(|r| {
            let (src, gr) = pure_gamma(c, f, &g.labels, family, r);
            let (tgt, gprev) = if r == 1 { (g.tuples(0).to_vec(), g.matrix(0).clone()) } else { pure_gamma(c, f, &g.labels, family, r - 1) };
            let d = koszul_matrix(&m.diff(1), &src, &tgt);
            (r, f.diff(r as i64).mul(&gr).sub(&gprev.mul(&d)))
        })
        .collect()
}
