//! Buchberger's algorithm with the normal selection strategy and both
//! classical criteria, returning the reduced basis.

use std::collections::BTreeSet;

use exact_arith::{Coeff, Fp, IntPoly, Monomial, Polynomial};
use crate::error::GroebnerError;

pub type FpPoly = Polynomial<Fp>;

/// Largest number of variables accepted.
pub const MAX_VARIABLES: usize = 24;

/// Limit on the number of single-term reduction steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: 20_000_000 }
    }
}

/// Reduced, monic basis sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub prime: u64,
    pub gens: Vec<FpPoly>,
    /// Reduction steps spent.
    pub steps: usize,
}

impl GroebnerBasis {
    pub fn leading(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.leading_term().expect("nonzero generator").0).collect()
    }

    /// Whether `f` reduces to zero.
    pub fn contains(&self, f: &FpPoly) -> bool {
        let mut steps = 0;
        normal_form(f, &self.gens, &mut steps).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant())
    }
}

/// Reduce integer polynomials modulo `p`, dropping those that vanish.
pub fn to_fp(ps: &[IntPoly], p: u64) -> Vec<FpPoly> {
    ps.iter().map(|q| q.map_coeffs(|c| Fp::from_integer(c, &p))).filter(|q| !q.is_zero()).collect()
}

fn monic(f: &FpPoly) -> FpPoly {
    match f.leading_term() {
        Some((_, c)) if !c.is_one() => f.scale(&c.inv().expect("field element")),
        _ => f.clone(),
    }
}

/// Full normal form of `f` modulo `basis`; `steps` counts single-term reductions.
pub fn normal_form(f: &FpPoly, basis: &[FpPoly], steps: &mut usize) -> FpPoly {
    let leads: Vec<(Monomial, Fp)> = basis.iter().map(|g| *g.leading_term().expect("nonzero generator")).collect();
    let mut rest = f.clone();
    let mut done: Vec<(Monomial, Fp)> = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        match leads.iter().position(|(l, _)| l.divides(&m)) {
            Some(k) => {
                let (l, lc) = &leads[k];
                let factor = c.mul(&lc.inv().expect("field element"));
                rest = rest.sub(&basis[k].mul_monomial(&l.div(&m), &factor));
                *steps += 1;
            }
            None => {
                done.push((m, c));
                rest = Polynomial::from_sorted_terms_unchecked(rest.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted_terms_unchecked(done)
}

fn s_polynomial(f: &FpPoly, g: &FpPoly) -> FpPoly {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    f.mul_monomial(&mf.div(&l), &cf.inv().expect("field element")).sub(&g.mul_monomial(&mg.div(&l), &cg.inv().expect("field element")))
}

/// Pair key: degree of the lcm, then the pair indices.
type Pair = (u32, usize, usize);

/// Reduced Gröbner basis of the ideal generated by `gens` over 𝔽_p.
pub fn buchberger(gens: &[FpPoly], p: u64, budget: Budget) -> Result<GroebnerBasis, GroebnerError> {
    if gens.iter().any(|g| g.domain().is_some_and(|q| q != p)) {
        return Err(GroebnerError::MixedPrimes);
    }
    let vars: BTreeSet<_> = gens.iter().flat_map(|g| g.variables()).collect();
    if vars.len() > MAX_VARIABLES {
        return Err(GroebnerError::TooManyVariables(vars.len(), MAX_VARIABLES));
    }
    let mut steps = 0usize;
    let mut basis: Vec<FpPoly> = Vec::new();
    let mut pairs: BTreeSet<Pair> = BTreeSet::new();
    let add = |g: FpPoly, basis: &mut Vec<FpPoly>, pairs: &mut BTreeSet<Pair>| {
        let g = monic(&g);
        let lg = g.leading_term().expect("nonzero").0;
        let j = basis.len();
        for (i, b) in basis.iter().enumerate() {
            let lb = b.leading_term().expect("nonzero").0;
            pairs.insert((lb.lcm(&lg).degree(), i, j));
        }
        basis.push(g);
    };
    for g in gens {
        let r = normal_form(g, &basis, &mut steps);
        if !r.is_zero() {
            add(r, &mut basis, &mut pairs);
        }
    }
    while let Some(pair) = pairs.pop_first() {
        if steps > budget.max_steps {
            return Err(GroebnerError::Budget { budget: budget.max_steps, pending: pairs.len() + 1 });
        }
        let (_, i, j) = pair;
        let (li, lj) = (basis[i].leading_term().expect("nonzero").0, basis[j].leading_term().expect("nonzero").0);
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let pending = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            pairs.iter().any(|&(_, x, y)| x == a && y == b)
        };
        let chain = (0..basis.len()).any(|k| k != i && k != j && basis[k].leading_term().expect("nonzero").0.divides(&l) && !pending(i, k) && !pending(j, k));
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis, &mut steps);
        if !r.is_zero() {
            if r.is_constant() {
                basis = vec![Polynomial::one(&p)];
                break;
            }
            add(r, &mut basis, &mut pairs);
        }
    }
    Ok(GroebnerBasis { prime: p, gens: reduce(basis, &mut steps), steps })
}

/// Minimize, inter-reduce and sort a Gröbner basis.
fn reduce(mut basis: Vec<FpPoly>, steps: &mut usize) -> Vec<FpPoly> {
    basis.sort_by_key(|a| a.leading_term().expect("nonzero").0);
    let mut minimal: Vec<FpPoly> = Vec::new();
    for g in basis {
        let lg = g.leading_term().expect("nonzero").0;
        if !minimal.iter().any(|h| h.leading_term().expect("nonzero").0.divides(&lg)) {
            minimal.push(g);
        }
    }
    let out: Vec<FpPoly> = (0..minimal.len())
        .map(|k| {
            let others: Vec<FpPoly> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
            let g = &minimal[k];
            let (lm, lc) = *g.leading_term().expect("nonzero");
            let tail = Polynomial::from_sorted_terms_unchecked(g.terms()[1..].to_vec());
            let reduced = Polynomial::monomial(lm, lc).add(&normal_form(&tail, &others, steps));
            monic(&reduced)
        })
        .collect();
    out
}
