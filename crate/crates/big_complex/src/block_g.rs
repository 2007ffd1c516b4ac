//! The block-decomposition complex for `X = [[1, 0], [0, X']]`.
//!
//! `G_r = F'_r ⊕ F'_{r−1} ⊕ F'_{r−1} ⊕ F'_{r−2}` (summands A, B, C, D) where `F'`
//! is `F` of rank `n−1` on the indices `2..n`, relabeled `1..n−1`.

use exact_arith::{GradingProfile, IntPoly, PolyMatrix};
use generic_data::GenericData;
use multilinear::IndexSet;
use rayon::prelude::*;

use crate::build_f::{f_module, image, pow, tensor, BlockSigns, FContext, Image};
use crate::complex::{ChainComplex, ChainMap};
use crate::error::ComplexError;
use crate::isos::theta_sign;
use crate::label::{f_labels, BasisLabel, Label, LabeledModule};

/// `h'_r: F'_r → F'_{r+1}` on one basis label; `n` is the rank of the full data.
pub fn h_prime(c: &FContext, n: usize, r: i64, b: &BasisLabel) -> Image {
    let (a, be) = c.source(b);
    match b.family {
        1 => {
            let sg = pow(n as i64 - 1 + r);
            let mut out = tensor(2, sg, &c.eta(&c.minors.apply(&c.eta(&a), true)), &be);
            out.extend(tensor(3, sg, &c.eta(&c.minors.apply(&c.eta(&be), false)), &a));
            out
        }
        2 => tensor(4, pow(r - 1), &c.minors.apply(&a, false), &be),
        3 => tensor(4, pow(r), &be, &c.minors.apply(&a, true)),
        _ => Vec::new(),
    }
}

/// `ρ = diag(1, −1, −1, 1)` by family.
fn rho(family: u8) -> i64 {
    if family == 2 || family == 3 {
        -1
    } else {
        1
    }
}

fn shift(s: IndexSet) -> IndexSet {
    IndexSet::from_bits(s.bits() << 1)
}

fn with_one(s: IndexSet) -> IndexSet {
    shift(s).insert(1)
}

/// Image of summand `k` label `b'` of `G_r` under `φ`, as a signed `F` label.
pub fn phi_label(r: i64, summand: u8, b: &BasisLabel) -> (i64, BasisLabel) {
    let f = b.family;
    let (l, rr) = (b.left, b.right);
    let (sign, left, right) = match summand {
        0 => (1, shift(l), shift(rr)),
        1 if f == 3 => (rho(f), shift(l), with_one(rr)),
        1 => (rho(f), with_one(l), shift(rr)),
        2 if f == 3 => (pow(r), with_one(l), shift(rr)),
        2 => (pow(r), shift(l), with_one(rr)),
        _ => (pow(r) * rho(f), with_one(l), with_one(rr)),
    };
    (sign, BasisLabel::new(f, left, right))
}

/// Degree offset of each summand.
const OFFSETS: [i64; 4] = [0, 1, 1, 2];

fn g_labels(n1: usize, r: i64) -> Vec<(u8, BasisLabel)> {
    (0..4u8).flat_map(|k| f_labels(n1, r - OFFSETS[k as usize]).into_iter().map(move |b| (k, b))).collect()
}

fn g_module(n: usize, d_v: i64, r: i64) -> LabeledModule {
    let labels = g_labels(n - 1, r);
    let twists = labels.iter().map(|(k, b)| phi_label(r, *k, b).1.twist(n, d_v)).collect();
    LabeledModule::new(labels.into_iter().map(|(summand, inner)| Label::G { summand, inner }).collect(), twists)
}

/// Output of the block decomposition.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    /// `(u', X', v')` on rank `n−1`.
    pub prime: GenericData,
    /// Built from `𝔣` (cross blocks times `(−1)^{n−1}`) and `h'`.
    pub f_hat: ChainComplex,
    /// Built from `F[u', X', (−1)^{n−1}v']` and `h`.
    pub g: ChainComplex,
    /// `φ: F̂ → F`.
    pub phi: ChainMap,
    /// Diagonal `θ`-conjugation `F̂ → G` (identity for odd `n`).
    pub theta_hat: ChainMap,
    /// `G → F`.
    pub iso: ChainMap,
}

/// Check block form and extract `(u', X', v')`.
pub fn split_block(d: &GenericData) -> Result<GenericData, ComplexError> {
    let n = d.n;
    if d.x.entry(0, 0) != IntPoly::int(1) {
        return Err(ComplexError::NotBlockForm(format!("x11 = {}", d.x.entry(0, 0))));
    }
    for k in 1..n {
        if !d.x.entry(0, k).is_zero() || !d.x.entry(k, 0).is_zero() {
            return Err(ComplexError::NotBlockForm(format!("nonzero entry in row or column 1 at position {}", k + 1)));
        }
    }
    let rest: Vec<usize> = (1..n).collect();
    let g = GradingProfile { n: n - 1, d_u: d.grading.d_u, d_v: d.grading.d_v };
    Ok(GenericData::from_parts(d.u[1..].to_vec(), d.x.select(&rest, &rest), d.v[1..].to_vec(), g).expect("consistent sizes"))
}

/// Assemble `F̂` or `G` from `f`-images of `F'` and the map `h` (`F'_ρ → F'_{ρ+1}`).
fn assemble(d: &GenericData, c: &FContext, signs: &BlockSigns, h: &(dyn Fn(i64, &BasisLabel) -> Image + Sync)) -> ChainComplex {
    let n = d.n;
    let (u1, v1) = (d.u[0].clone(), d.v[0].clone());
    let lo = -1;
    let hi = 2 * n as i64 + 1;
    let modules: Vec<LabeledModule> = (lo..=hi).map(|r| g_module(n, d.grading.d_v, r)).collect();
    let diffs = (lo + 1..=hi)
        .into_par_iter()
        .map(|r| {
            let src = g_module(n, d.grading.d_v, r);
            let tgt = g_module(n, d.grading.d_v, r - 1);
            let pos = |k: u8, b: BasisLabel| tgt.position(&Label::G { summand: k, inner: b }).unwrap_or_else(|| panic!("missing G label {k}:{b}"));
            let cols = src
                .labels()
                .iter()
                .map(|l| {
                    let Label::G { summand: k, inner: b } = l else { unreachable!() };
                    let rb = r - OFFSETS[*k as usize];
                    let mut col: Vec<(usize, IntPoly)> = image(c, signs, rb, b).into_iter().map(|(t, p)| (pos(*k, t), p)).collect();
                    match k {
                        1 => col.push((pos(0, *b), u1.signed(pow(r)))),
                        2 => col.push((pos(0, *b), v1.signed(pow(r)))),
                        3 => {
                            col.extend(h(rb, b).into_iter().map(|(t, p)| (pos(0, t), p)));
                            col.push((pos(1, *b), v1.signed(pow(r))));
                            col.push((pos(2, *b), u1.signed(pow(r + 1))));
                        }
                        _ => {}
                    }
                    col
                })
                .collect();
            PolyMatrix::from_columns(tgt.rank(), cols)
        })
        .collect();
    ChainComplex::new(lo, modules, diffs)
}

/// Build `F̂`, `G`, `φ` and the isomorphism `G → F` for data in block form.
pub fn build_g(d: &GenericData) -> Result<BlockDecomposition, ComplexError> {
    let prime = split_block(d)?;
    let n = d.n;
    let odd = n % 2 == 1;
    let c_frak = FContext::new(&prime);
    let frak_signs = BlockSigns::cross(pow(n as i64 - 1));
    let hp = |r: i64, b: &BasisLabel| h_prime(&c_frak, n, r, b);
    let f_hat = assemble(d, &c_frak, &frak_signs, &hp);

    let prime_v = prime.with_v_sign(pow(n as i64 - 1));
    let c_g = FContext::new(&prime_v);
    let h = |r: i64, b: &BasisLabel| -> Image {
        let img = h_prime(&c_frak, n, r, b);
        if odd {
            img
        } else {
            let s = theta_sign(b);
            img.into_iter().map(|(t, p)| (t, p.signed(s * theta_sign(&t)))).collect()
        }
    };
    let g = assemble(d, &c_g, &BlockSigns::PLAIN, &h);

    let lo = -1;
    let hi = 2 * n as i64 + 1;
    let phi = ChainMap::new(
        lo,
        (lo..=hi)
            .map(|r| {
                let src = g_module(n, d.grading.d_v, r);
                let tgt = f_module(n, d.grading.d_v, r);
                let triples: Vec<_> = src
                    .labels()
                    .iter()
                    .enumerate()
                    .map(|(j, l)| {
                        let Label::G { summand, inner } = l else { unreachable!() };
                        let (s, fl) = phi_label(r, *summand, inner);
                        (tgt.pos_f(&fl), j, IntPoly::int(s))
                    })
                    .collect();
                PolyMatrix::from_triplets(tgt.rank(), src.rank(), triples)
            })
            .collect(),
    );
    let theta_hat = ChainMap::new(
        lo,
        (lo..=hi)
            .map(|r| {
                let m = g_module(n, d.grading.d_v, r);
                let triples: Vec<_> = m
                    .labels()
                    .iter()
                    .enumerate()
                    .map(|(j, l)| {
                        let Label::G { inner, .. } = l else { unreachable!() };
                        (j, j, IntPoly::int(if odd { 1 } else { theta_sign(inner) }))
                    })
                    .collect();
                PolyMatrix::from_triplets(m.rank(), m.rank(), triples)
            })
            .collect(),
    );
    // θ̂ is a ±1 diagonal, hence its own inverse
    let iso = phi.after(&theta_hat);
    Ok(BlockDecomposition { prime, f_hat, g, phi, theta_hat, iso })
}
