//! Seeded randomized checks of the exterior-algebra identities used by the
//! complexes: the module-action formulas, the comultiplication identities, the
//! minor-map compatibilities and the orientation pairing. All arithmetic is
//! over a prime field.

use std::collections::BTreeMap;

use exact_arith::{Fp, PolyMatrix, Polynomial, VarId};
use rand::Rng;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

use crate::element::{ExtElement, Side};
use crate::index_set::IndexSet;
use crate::minors::Minors;
use crate::orientation::Orientation;

/// Prime used by the randomized identity checks.
pub const IDENTITY_PRIME: u64 = 1_000_003;

type E = ExtElement<Fp>;
type P = Polynomial<Fp>;

/// Outcome of one identity family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: &'static str,
    pub n: usize,
    pub cases: usize,
    pub failure: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Gen {
    rng: SplitMix64,
    n: usize,
    p: u64,
}

impl Gen {
    fn new(n: usize, seed: u64) -> Self {
        Gen { rng: SplitMix64::seed_from_u64(seed), n, p: IDENTITY_PRIME }
    }

    fn scalar(&mut self) -> P {
        Polynomial::constant(Fp::new(self.rng.gen_range(0..self.p), self.p))
    }

    fn degree(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// Random element of the given side and degree; each basis monomial is
    /// present with probability 1/2 (at least one is kept).
    fn element(&mut self, side: Side, deg: usize) -> E {
        let basis = IndexSet::subsets(self.n, deg);
        let mut e = E::zero(side, self.n, deg);
        let keep = self.rng.gen_range(0..basis.len());
        for (k, s) in basis.into_iter().enumerate() {
            if k == keep || self.rng.gen_bool(0.5) {
                let c = self.scalar();
                e.add_term(s, &c);
            }
        }
        e
    }

    /// Matrix with entries `c·x_ij + c'`.
    fn matrix(&mut self) -> PolyMatrix<Fp> {
        let n = self.n;
        let mut triples = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                let var = Polynomial::var(VarId::X(i as u8, j as u8), &self.p).mul(&self.scalar());
                triples.push((i - 1, j - 1, var.add(&self.scalar())));
            }
        }
        PolyMatrix::from_triplets(n, n, triples)
    }
}

/// Equality; degree-0 elements compare as scalars regardless of side.
fn same(a: &E, b: &E) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    if a.degree() == 0 && b.degree() == 0 {
        return a.scalar_value() == b.scalar_value();
    }
    a.side() == b.side() && a.sub(b).is_zero()
}

type Tensor = BTreeMap<(Side, IndexSet, Side, IndexSet), P>;

fn tensor(pairs: impl IntoIterator<Item = (E, E)>) -> Tensor {
    let mut out = Tensor::new();
    for (l, r) in pairs {
        for (s, cs) in l.terms() {
            for (t, ct) in r.terms() {
                let slot = out.entry((l.side(), s, r.side(), t)).or_default();
                *slot = slot.add(&cs.mul(ct));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn run(id: &'static str, n: usize, cases: usize, seed: u64, mut case: impl FnMut(&mut Gen) -> Option<String>) -> IdentityReport {
    let mut g = Gen::new(n, seed ^ (n as u64) << 32);
    for k in 0..cases {
        if let Some(msg) = case(&mut g) {
            return IdentityReport { id, n, cases: k + 1, failure: Some(format!("case {k}: {msg}")) };
        }
    }
    IdentityReport { id, n, cases, failure: None }
}

/// `(a(γ))(b) = a∧(γ(b)) + (−1)^{1+deg γ} γ(a∧b)` for `deg a = 1`.
pub fn check_contraction_leibniz(n: usize, cases: usize, seed: u64) -> IdentityReport {
    run("contraction-leibniz", n, cases, seed, |g| {
        let a = g.element(Side::Primal, 1);
        let dg = g.degree(0, n);
        let gamma = g.element(Side::Dual, dg);
        let db = g.degree(0, n);
        let b = g.element(Side::Primal, db);
        let lhs = a.contract(&gamma).ok()?.contract(&b).ok()?;
        let t1 = a.wedge(&gamma.contract(&b).ok()?).ok()?;
        let t2 = gamma.contract(&a.wedge(&b).ok()?).ok()?.signed(if dg % 2 == 0 { -1 } else { 1 });
        (!same(&lhs, &t1.add(&t2))).then(|| format!("a={a}, γ={gamma}, b={b}"))
    })
}

/// `(a(γ))(b) = (−1)^ν (b(γ))(a)` for `γ` of top degree, `ν = (n−deg a)(n−deg b)`.
/// Exhaustive on basis monomials, then `cases` random combinations.
pub fn check_top_degree_symmetry(n: usize, cases: usize, seed: u64) -> IdentityReport {
    let p = IDENTITY_PRIME;
    let gamma = E::basis(Side::Dual, n, IndexSet::full(n), &p);
    for da in 0..=n {
        for db in 0..=n {
            for sa in IndexSet::subsets(n, da) {
                for sb in IndexSet::subsets(n, db) {
                    let a = E::basis(Side::Primal, n, sa, &p);
                    let b = E::basis(Side::Primal, n, sb, &p);
                    if let Some(msg) = top_degree_symmetry_case(n, &a, &b, &gamma) {
                        return IdentityReport { id: "top-degree-symmetry", n, cases: 0, failure: Some(format!("basis {msg}")) };
                    }
                }
            }
        }
    }
    run("top-degree-symmetry", n, cases, seed, |g| {
        let gamma = E::monomial(Side::Dual, n, IndexSet::full(n), g.scalar());
        let da = g.degree(0, n);
        let db = g.degree(0, n);
        let a = g.element(Side::Primal, da);
        let b = g.element(Side::Primal, db);
        top_degree_symmetry_case(n, &a, &b, &gamma)
    })
}

fn top_degree_symmetry_case(n: usize, a: &E, b: &E, gamma: &E) -> Option<String> {
    let nu = (n - a.degree()) * (n - b.degree());
    let lhs = a.contract(gamma).ok()?.contract(b).ok()?;
    let rhs = b.contract(gamma).ok()?.contract(a).ok()?.signed(if nu.is_multiple_of(2) { 1 } else { -1 });
    (!same(&lhs, &rhs)).then(|| format!("a={a}, b={b}"))
}

/// `[a(γ)](b) = a∧γ(b)` for `b` of top degree.
pub fn check_top_degree_action(n: usize, cases: usize, seed: u64) -> IdentityReport {
    run("top-degree-action", n, cases, seed, |g| {
        let da = g.degree(0, n);
        let a = g.element(Side::Primal, da);
        let dg = g.degree(0, n);
        let gamma = g.element(Side::Dual, dg);
        let b = g.element(Side::Primal, n);
        let lhs = a.contract(&gamma).ok()?.contract(&b).ok()?;
        let rhs = a.wedge(&gamma.contract(&b).ok()?).ok()?;
        (!same(&lhs, &rhs)).then(|| format!("a={a}, γ={gamma}"))
    })
}

/// `Σ_j c_{t−2}(α_{t−1}^j) ∧ α_1^j = 2(−1)^{t−1} c_{t−2}(α_t)`.
pub fn check_comult_dual_sum(n: usize, cases: usize, seed: u64) -> IdentityReport {
    run("comult-dual-sum", n, cases, seed, |g| {
        let t = g.degree(2, n);
        let alpha = g.element(Side::Dual, t);
        let c = g.element(Side::Primal, t - 2);
        let mut lhs = E::zero(Side::Dual, n, 1);
        for (a1, at) in alpha.comult(1, t - 1).ok()? {
            lhs = lhs.add(&c.contract(&at).ok()?.wedge(&a1).ok()?);
        }
        let two = Polynomial::constant(Fp::from_signed(if t % 2 == 0 { -2 } else { 2 }, IDENTITY_PRIME));
        let rhs = c.contract(&alpha).ok()?.scale(&two);
        (!same(&lhs, &rhs)).then(|| format!("α={alpha}, c={c}"))
    })
}

/// `Σ_i [β_1^i(a_2)](β_{s−1}^i) = −2 a_2(β_s)`.
pub fn check_comult_primal_sum(n: usize, cases: usize, seed: u64) -> IdentityReport {
    run("comult-primal-sum", n, cases, seed, |g| {
        let s = g.degree(1, n);
        let beta = g.element(Side::Dual, s);
        let a2 = g.element(Side::Primal, 2);
        let mut lhs = E::zero(Side::Dual, n, 0);
        for (b1, bs) in beta.comult(1, s - 1).ok()? {
            lhs = lhs.add(&b1.contract(&a2).ok()?.contract(&bs).ok()?);
        }
        let m2 = Polynomial::constant(Fp::from_signed(-2, IDENTITY_PRIME));
        let rhs = a2.contract(&beta).ok()?.scale(&m2);
        (!same(&lhs, &rhs)).then(|| format!("β={beta}, a2={a2}"))
    })
}

/// `(⋀ⁱX*)[((⋀ʲX)(b_j))(a_{i+j})] = b_j[(⋀^{i+j}X*)(a_{i+j})]`.
pub fn check_minor_action(n: usize, cases: usize, seed: u64) -> IdentityReport {
    let p = IDENTITY_PRIME;
    run("minor-action", n, cases, seed, |g| {
        let x = g.matrix();
        let m = Minors::new(&x, &p);
        let k = g.degree(0, n);
        let j = g.degree(0, k);
        let a = g.element(Side::Primal, k);
        let b = g.element(Side::Primal, j);
        let lhs = m.apply(&m.apply(&b, false).contract(&a).ok()?, true);
        let rhs = b.contract(&m.apply(&a, true)).ok()?;
        (!same(&lhs, &rhs)).then(|| format!("a={a}, b={b}"))
    })
}

/// `Σ_i β_1^i(a_t) ⊗ β_{s−1}^i = Σ_j a_{t−1}^j ⊗ a_1^j(β_s)`.
pub fn check_comult_exchange(n: usize, cases: usize, seed: u64) -> IdentityReport {
    run("comult-exchange", n, cases, seed, |g| {
        let t = g.degree(1, n);
        let s = g.degree(1, n);
        let a = g.element(Side::Primal, t);
        let beta = g.element(Side::Dual, s);
        let lhs = beta.comult(1, s - 1).ok()?.into_iter().map(|(b1, bs)| (b1.contract(&a).expect("sides"), bs));
        let lhs = tensor(lhs);
        let rhs = a.comult(1, t - 1).ok()?.into_iter().map(|(a1, at)| (at, a1.contract(&beta).expect("sides")));
        let rhs = tensor(rhs);
        (lhs != rhs).then(|| format!("a={a}, β={beta}"))
    })
}

/// `Σ_i ([(⋀ⁿ⁻¹X)[β_1^i(η)]](η))(α_t) ⊗ β_{s−1}^i = Σ_j α_{t−1}^j ⊗ ([(⋀ⁿ⁻¹X*)[α_1^j(η)]](η))(β_s)`.
pub fn check_adjugate_exchange(n: usize, cases: usize, seed: u64) -> IdentityReport {
    let p = IDENTITY_PRIME;
    let o = Orientation::new(n);
    let eta = o.primal::<Fp>(&p);
    run("adjugate-exchange", n, cases, seed, |g| {
        let x = g.matrix();
        let m = Minors::new(&x, &p);
        let t = g.degree(1, n);
        let s = g.degree(1, n);
        let alpha = g.element(Side::Dual, t);
        let beta = g.element(Side::Dual, s);
        let hook = |e1: &E, transpose: bool| -> E {
            let inner = m.apply(&e1.contract(&eta).expect("sides"), transpose);
            inner.contract(&eta).expect("sides")
        };
        let lhs = beta.comult(1, s - 1).ok()?.into_iter().map(|(b1, bs)| (hook(&b1, false).contract(&alpha).expect("sides"), bs));
        let lhs = tensor(lhs);
        let rhs = alpha.comult(1, t - 1).ok()?.into_iter().map(|(a1, at)| (at, hook(&a1, true).contract(&beta).expect("sides")));
        let rhs = tensor(rhs);
        (lhs != rhs).then(|| format!("α={alpha}, β={beta}"))
    })
}

/// `[(⋀ʲX)(b_j)](a_j) = b_j[(⋀ʲX*)(a_j)]` on all basis pairs, for `cases` random `X`.
pub fn check_minor_transpose(n: usize, cases: usize, seed: u64) -> IdentityReport {
    let p = IDENTITY_PRIME;
    run("minor-transpose", n, cases, seed, |g| {
        let x = g.matrix();
        let m = Minors::new(&x, &p);
        for j in 0..=n {
            let basis = IndexSet::subsets(n, j);
            for &sa in &basis {
                for &sb in &basis {
                    let a = E::basis(Side::Primal, n, sa, &p);
                    let b = E::basis(Side::Primal, n, sb, &p);
                    let lhs = m.apply(&b, false).contract(&a).ok()?;
                    let rhs = b.contract(&m.apply(&a, true)).ok()?;
                    if !same(&lhs, &rhs) {
                        return Some(format!("j={j}, a={sa}, b={sb}"));
                    }
                }
            }
        }
        None
    })
}

/// `η(ε_n) = 1`, `(ε_1∧…∧ε_n)(η) = (−1)^{n(n−1)/2}` and
/// `[ε_j ∧ (⋀ⁿ⁻¹X)(ε_i[η])](η) = (−1)^{n(n−1)/2}(Adj X)_{ij}`.
pub fn check_orientation(n: usize, cases: usize, seed: u64) -> IdentityReport {
    let p = IDENTITY_PRIME;
    let o = Orientation::new(n);
    let one = Polynomial::<Fp>::one(&p);
    let pair = o.primal::<Fp>(&p).contract(&o.dual(&p)).expect("sides").scalar_value();
    if pair != one {
        return IdentityReport { id: "orientation", n, cases: 0, failure: Some(format!("η(ε_n) = {pair}")) };
    }
    let inc = E::basis(Side::Dual, n, IndexSet::full(n), &p).contract(&o.primal(&p)).expect("sides").scalar_value();
    if inc != one.signed(o.dual_sign()) {
        return IdentityReport { id: "orientation", n, cases: 0, failure: Some(format!("(ε_1∧…∧ε_n)(η) = {inc}")) };
    }
    run("orientation", n, cases, seed, |g| {
        let x = g.matrix();
        let m = Minors::new(&x, &p);
        for i in 1..=n {
            for j in 1..=n {
                let lhs = o.adjoint_via_orientation(&m, i, j, &p);
                if lhs != m.adjoint_entry(i, j).signed(o.dual_sign()) {
                    return Some(format!("adjoint entry ({i},{j})"));
                }
            }
        }
        // X·Adj X = det X·I
        for i in 1..=n {
            for k in 1..=n {
                let s = (1..=n).fold(P::zero(), |acc, j| acc.add(&x.entry(i - 1, j - 1).mul(&m.adjoint_entry(j, k))));
                let want = if i == k { m.det().clone() } else { P::zero() };
                if s != want {
                    return Some(format!("X·Adj X at ({i},{k})"));
                }
            }
        }
        None
    })
}

/// Every identity family at rank `n` with `cases` cases each.
pub fn run_all(n: usize, cases: usize, seed: u64) -> Vec<IdentityReport> {
    vec![
        check_contraction_leibniz(n, cases, seed),
        check_top_degree_symmetry(n, cases, seed),
        check_top_degree_action(n, cases, seed),
        check_comult_dual_sum(n, cases, seed),
        check_comult_primal_sum(n, cases, seed),
        check_minor_action(n, cases, seed),
        check_comult_exchange(n, cases, seed),
        check_adjugate_exchange(n, cases, seed),
        check_minor_transpose(n, cases, seed),
        check_orientation(n, cases, seed),
    ]
}
