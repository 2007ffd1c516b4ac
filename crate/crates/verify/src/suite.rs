//! Named groups of checks over a shared context `(data, F, M)`.

use big_complex::{build_f, build_f_variant, build_g, iso_basis_change, iso_theta_sign, transvection, BasisSide, ChainComplex, FVariant};
use exact_arith::{linalg, IntMatrix, IntPoly, PolyMatrix};
use generic_data::{rng_from_seed, GenericData, Specialization};
use minimal_complex::{build_minimal, build_n2, koszul_generators, MinimalComplex, SplittingChoice};
use rand::Rng;

use crate::betti::{betti_table, expected_betti};
use crate::certify::{certify_exactness, evaluate_mod_p};
use crate::checks::{all_of, check_chain_map, check_d_squared, check_equal, check_minimality};
use crate::report::{timed, CheckReport};
use crate::spans::compare_spans;

/// Generic data with `F` and `M` built once.
pub struct Context {
    pub n: usize,
    pub data: GenericData,
    pub f: ChainComplex,
    pub minimal: MinimalComplex,
}

impl Context {
    pub fn new(n: usize, d_u: i64) -> Result<Self, String> {
        Self::from_data(GenericData::build_generic(n, d_u).map_err(|e| e.to_string())?)
    }

    /// Context over given (possibly specialized) data.
    pub fn from_data(data: GenericData) -> Result<Self, String> {
        let n = data.n;
        let f = build_f(&data);
        let choice = if n == 2 { SplittingChoice::RankTwo } else { SplittingChoice::Canonical };
        let minimal = build_minimal(&data, &f, choice).map_err(|e| e.to_string())?;
        Ok(Context { n, data, f, minimal })
    }

    pub fn m(&self) -> &ChainComplex {
        &self.minimal.complex
    }

    fn range(&self) -> std::ops::RangeInclusive<i64> {
        -1..=2 * self.n as i64 + 1
    }

    fn s(&self, r: i64) -> IntMatrix {
        self.minimal.s(r).cloned().unwrap_or_else(|| PolyMatrix::zeros(self.f.rank(r + 1), self.f.rank(r)))
    }
}

fn identity(k: usize) -> IntMatrix {
    PolyMatrix::identity(k, &())
}

/// `d² = 0` for `F` or `M`.
pub fn d2_checks(ctx: &Context, which: &str) -> Vec<CheckReport> {
    match which {
        "F" => vec![timed(|| check_d_squared("d2.F", &ctx.f))],
        "M" => vec![timed(|| check_d_squared("d2.M", ctx.m()))],
        _ => vec![timed(|| check_d_squared("d2.F", &ctx.f)), timed(|| check_d_squared("d2.M", ctx.m()))],
    }
}

/// Weighted homogeneity of `F` and `M` against their twists.
pub fn grading_checks(ctx: &Context) -> Vec<CheckReport> {
    let one = |id: &str, c: &ChainComplex| {
        timed(|| match c.degree_violations(&ctx.data.grading).first() {
            None => CheckReport::pass(id),
            Some(v) => CheckReport::fail_with(id, format!("degree {} entry ({}, {}): expected {}, found {:?}", v.degree, v.row, v.col, v.expected, v.found)),
        })
    };
    vec![one("grading.F", &ctx.f), one("grading.M", ctx.m())]
}

/// Projectors, ranks and the inverse pair `τ`, `π^L∘f`.
pub fn decomposition_checks(ctx: &Context) -> Vec<CheckReport> {
    let dec = &ctx.minimal.decomposition;
    let projectors = timed(|| {
        all_of(
            "decomposition.projectors",
            dec.degrees().iter().flat_map(|dd| {
                let (pl, pm, pn) = (dd.l.projector(), dd.m.projector(), dd.n.projector());
                let sum = pl.add(&pm).add(&pn);
                let mut out = vec![check_equal("", dd.r, &sum, &identity(dd.f.rank()), Some(&dd.f), Some(&dd.f))];
                for p in [pl, pm, pn] {
                    out.push(check_equal("", dd.r, &p.mul(&p), &p, Some(&dd.f), Some(&dd.f)));
                }
                out
            }),
        )
    });
    let ranks = timed(|| {
        let bad = dec.degrees().iter().find(|dd| dd.l.rank() + dd.m.rank() + dd.n.rank() != dd.f.rank());
        let shift = ctx.range().find(|&r| dec.rank(minimal_complex::Role::L, r) != dec.rank(minimal_complex::Role::N, r + 1));
        match (bad, shift) {
            (Some(dd), _) => CheckReport::fail_with("decomposition.ranks", format!("degree {}: ranks do not add up", dd.r)),
            (_, Some(r)) => CheckReport::fail_with("decomposition.ranks", format!("rank L_{r} differs from rank N̂_{}", r + 1)),
            _ => CheckReport::pass("decomposition.ranks"),
        }
    });
    let tau_left = timed(|| {
        all_of(
            "decomposition.tau-left-inverse",
            ctx.range().take_while(|&r| r < 2 * ctx.n as i64 + 1).map(|r| {
                let dd = dec.get(r).expect("in range");
                let lf = dd.l.coords.mul(&ctx.f.diff(r + 1));
                check_equal("", r, &lf.mul(ctx.minimal.tau(r).expect("in range")), &identity(dd.l.rank()), Some(&dd.l.module), Some(&dd.l.module))
            }),
        )
    });
    let tau_right = timed(|| {
        all_of(
            "decomposition.tau-right-inverse",
            ctx.range().take_while(|&r| r < 2 * ctx.n as i64 + 1).map(|r| {
                let (dd, next) = (dec.get(r).expect("in range"), dec.get(r + 1).expect("in range"));
                let bn = &next.n.basis;
                let lhs = ctx.minimal.tau(r).expect("in range").mul(&dd.l.coords.mul(&ctx.f.diff(r + 1)).mul(bn));
                check_equal("", r + 1, &lhs, bn, Some(&next.f), Some(&next.n.module))
            }),
        )
    });
    vec![projectors, ranks, tau_left, tau_right]
}

/// The homotopy on `N`, `ψ` and `ρ` as chain maps, `ψρ = id` and `ker ψ = N`.
pub fn chainmap_checks(ctx: &Context, prime: u64, seed: u64) -> Vec<CheckReport> {
    let (f, m, mc) = (&ctx.f, ctx.m(), &ctx.minimal);
    let dec = &mc.decomposition;
    let homotopy = timed(|| {
        all_of(
            "chainmaps.homotopy",
            ctx.range().flat_map(|r| {
                let h = ctx.s(r - 1).mul(&f.diff(r)).add(&f.diff(r + 1).mul(&ctx.s(r)));
                let bn = dec.get(r).expect("in range").n.basis.clone();
                let mut out = vec![check_equal("", r, &h.mul(&bn), &bn, f.module_ref(r), None)];
                if let Some(next) = dec.get(r + 1) {
                    let fb = f.diff(r + 1).mul(&next.n.basis);
                    out.push(check_equal("", r, &h.mul(&fb), &fb, f.module_ref(r), None));
                }
                out
            }),
        )
    });
    let psi = timed(|| check_chain_map("chainmaps.psi", f, m, |r| mc.psi.matrix(r, f, m)));
    let rho = timed(|| check_chain_map("chainmaps.rho", m, f, |r| mc.rho.matrix(r, m, f)));
    let psi_rho = timed(|| {
        all_of(
            "chainmaps.psi-rho",
            ctx.range().map(|r| check_equal("", r, &mc.psi.matrix(r, f, m).mul(&mc.rho.matrix(r, m, f)), &identity(m.rank(r)), m.module_ref(r), m.module_ref(r))),
        )
    });
    let kernel = timed(|| {
        let point = Specialization::random_point(ctx.n, seed, prime);
        all_of(
            "chainmaps.kernel-psi",
            ctx.range().flat_map(|r| {
                let dd = dec.get(r).expect("in range");
                let psi_r = mc.psi.matrix(r, f, m);
                let n_hat = &dd.n.basis;
                let image = dec.get(r + 1).map_or_else(|| PolyMatrix::zeros(f.rank(r), 0), |next| f.diff(r + 1).mul(&next.n.basis));
                let both = n_hat.hstack(&image);
                let dense: Vec<Vec<u64>> = evaluate_mod_p(&both.transpose(), &point, prime);
                let rank = linalg::rank_mod_p(&dense, both.nrows(), prime);
                let expected = f.rank(r) - m.rank(r);
                vec![
                    check_equal("", r, &psi_r.mul(n_hat), &PolyMatrix::zeros(m.rank(r), n_hat.ncols()), m.module_ref(r), None),
                    check_equal("", r, &psi_r.mul(&image), &PolyMatrix::zeros(m.rank(r), image.ncols()), m.module_ref(r), None),
                    CheckReport::from_bool("", rank == expected, format!("degree {r}: rank N = {rank}, expected {expected}")),
                ]
            }),
        )
    });
    vec![homotopy, psi, rho, psi_rho, kernel]
}

pub fn minimality_checks(ctx: &Context) -> Vec<CheckReport> {
    vec![timed(|| check_minimality("minimality.M", ctx.m()))]
}

/// Entries of a matrix as a list.
fn entries(m: &IntMatrix) -> Vec<IntPoly> {
    m.entries().map(|(_, _, p)| p.clone()).collect()
}

/// `H₀(M) = R/H(u, X, (−1)^{n(n−1)/2}v)` by spans of generators; for `n = 2` the
/// generators are the entries of `Adj X + vu`.
pub fn h0_checks(ctx: &Context) -> Vec<CheckReport> {
    let gens = if ctx.n == 2 { koszul_generators(&ctx.data) } else { ctx.data.h_ideal(true) };
    vec![timed(|| compare_spans("h0.span", &entries(&ctx.m().diff(1)), &gens, &ctx.data.grading))]
}

/// Betti table against the expected display or closed form.
pub fn betti_checks(ctx: &Context) -> Vec<CheckReport> {
    vec![timed(|| {
        let t = betti_table(ctx.m());
        match expected_betti(ctx.n, ctx.data.grading.d_u) {
            Some(e) => {
                let diff = t.diff(&e);
                CheckReport::from_bool("betti.table", diff.is_empty(), if diff.is_empty() { format!("{} degrees match", e.entries.len()) } else { diff.join("; ") })
            }
            None if ctx.n == 2 => {
                let d = build_n2(&ctx.data, &ctx.f);
                match d {
                    Ok(k) => {
                        let kz = k.koszul();
                        all_of("betti.table", (0..=5).map(|r| check_equal("", r, &ctx.m().diff(r), &kz.diff(r), kz.module_ref(r - 1), kz.module_ref(r))))
                    }
                    Err(e) => CheckReport::fail_with("betti.table", e.to_string()),
                }
            }
            None => CheckReport::inconclusive("betti.table", format!("no expected table for n = {}, d_u = {}", ctx.n, ctx.data.grading.d_u)),
        }
    })]
}

/// Ranks and twists mirror under `r ↦ 2n − r`, `m ↦ n² − m`; spans of `m₁` and `m_{2n}` agree.
pub fn duality_checks(ctx: &Context) -> Vec<CheckReport> {
    let n = ctx.n as i64;
    let table = timed(|| {
        let t = betti_table(ctx.m());
        let diff = t.diff(&t.mirror(2 * n, n * n));
        CheckReport::from_bool("duality.table", diff.is_empty(), diff.join("; "))
    });
    let back = timed(|| compare_spans("duality.back-span", &entries(&ctx.m().diff(1)), &entries(&ctx.m().diff(2 * n)), &ctx.data.grading));
    vec![table, back]
}

/// Rank certificate for `M` at seeded points of 𝔽_p.
pub fn exactness_checks(ctx: &Context, prime: u64, seed: u64, trials: usize) -> Vec<CheckReport> {
    vec![timed(|| certify_exactness(ctx.m(), ctx.n, prime, seed, trials).report("exactness.certificate"))]
}

/// Degreewise full rank of a square chain map at a random point.
fn full_rank(id: &str, maps: &big_complex::ChainMap, n: usize, prime: u64, seed: u64) -> CheckReport {
    let point = Specialization::random_point(n, seed, prime);
    for r in maps.lo()..=maps.hi() {
        let m = maps.get(r).expect("in range");
        let rank = linalg::rank_mod_p(&evaluate_mod_p(m, &point, prime), m.ncols(), prime);
        if m.nrows() != m.ncols() || rank != m.ncols() {
            return CheckReport::fail_with(id, format!("degree {r}: {}x{} of rank {rank}", m.nrows(), m.ncols()));
        }
    }
    CheckReport::pass(id)
}

/// `θ`, `Θ` and `Φ` for random transvections, and the block decomposition `φ`.
pub fn iso_checks(ctx: &Context, transvections: usize, prime: u64, seed: u64) -> Vec<CheckReport> {
    let (n, d) = (ctx.n, &ctx.data);
    let mut out = Vec::new();
    out.push(timed(|| {
        let (tilde, minus) = (build_f_variant(d, FVariant::Tilde), build_f_variant(d, FVariant::MinusV));
        let theta = iso_theta_sign(n);
        all_of("isos.theta", [check_chain_map("", &tilde, &minus, |r| theta.matrix(r, &tilde, &minus)), full_rank("", &theta, n, prime, seed)])
    }));
    let mut rng = rng_from_seed(seed);
    let picks: Vec<(usize, usize, i64)> = (0..transvections)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            let j = (i + rng.gen_range(1..n) - 1) % n + 1;
            let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            (i, j, c)
        })
        .collect();
    for (side, name) in [(BasisSide::Theta, "isos.Theta"), (BasisSide::Phi, "isos.Phi")] {
        out.push(timed(|| {
            all_of(
                name,
                picks.iter().map(|&(i, j, c)| match iso_basis_change(d, &transvection(n, i, j, c), side) {
                    Ok((target, map)) => {
                        let (a, b) = (&ctx.f, build_f(&target));
                        all_of("", [check_chain_map("", a, &b, |r| map.matrix(r, a, &b)), full_rank("", &map, n, prime, seed)])
                            .with_detail(format!("transvection ({i},{j},{c})"))
                    }
                    Err(e) => CheckReport::fail_with("", e.to_string()),
                }),
            )
            .with_detail(format!("{} transvections {:?}", picks.len(), picks))
        }));
    }
    out.push(timed(|| {
        let bd_data = Specialization::block(n).apply_data(d);
        match build_g(&bd_data) {
            Ok(bd) => {
                let f = build_f(&bd_data);
                all_of(
                    "isos.block",
                    [
                        check_chain_map("", &bd.f_hat, &f, |r| bd.phi.matrix(r, &bd.f_hat, &f)),
                        check_chain_map("", &bd.g, &f, |r| bd.iso.matrix(r, &bd.g, &f)),
                        full_rank("", &bd.phi, n, prime, seed),
                    ],
                )
            }
            Err(e) => CheckReport::fail_with("isos.block", e.to_string()),
        }
    }));
    out
}

/// Every identity of `F` and `M` for this context.
pub fn check_identity_suite(ctx: &Context, prime: u64, seed: u64) -> Vec<CheckReport> {
    let mut out = d2_checks(ctx, "both");
    out.extend(grading_checks(ctx));
    out.extend(decomposition_checks(ctx));
    out.extend(chainmap_checks(ctx, prime, seed));
    out.extend(minimality_checks(ctx));
    out.extend(h0_checks(ctx));
    out.extend(betti_checks(ctx));
    out.extend(duality_checks(ctx));
    out
}
