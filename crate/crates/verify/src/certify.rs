//! Exactness certificates from ranks of a complex specialized at random points of 𝔽_p.

use big_complex::ChainComplex;
use exact_arith::{linalg, Coeff, Fp, IntMatrix, VarId};
use generic_data::{rng_from_seed, Specialization};
use rand::Rng;
use serde::Serialize;

use crate::report::CheckReport;

/// Ranks of the specialized differentials and the exactness equations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessCertificate {
    pub prime: u64,
    pub seed: u64,
    /// Seed of the point that validated, or of the last point tried.
    pub point_seed: u64,
    pub trials: usize,
    /// `(r, rank d_r)` for `r ≥ 1`.
    pub ranks: Vec<(i64, usize)>,
    /// `rank d_r + rank d_{r+1} = rank M_r` for all `r ≥ 1`.
    pub rank_sums: bool,
    /// `rank d_1 = rank M_0`.
    pub first_rank: bool,
    /// `d_r∘d_{r+1} = 0` at the point.
    pub squares: bool,
    pub valid: bool,
}

impl ExactnessCertificate {
    pub fn report(&self, id: &str) -> CheckReport {
        let detail = format!("ranks {:?} at p = {}", self.ranks.iter().map(|(_, k)| *k).collect::<Vec<_>>(), self.prime);
        if self.valid {
            CheckReport::pass(id).with_detail(detail)
        } else {
            CheckReport::inconclusive(id, format!("no trial validated; last {detail}, sums {}, first {}, squares {}", self.rank_sums, self.first_rank, self.squares))
        }
    }
}

/// Dense residues of `m` at the point.
pub fn evaluate_mod_p(m: &IntMatrix, point: &Specialization, p: u64) -> Vec<Vec<u64>> {
    let value = |v: VarId| -> Fp { point.assignment.get(&v).and_then(|q| q.constant_term()).map_or_else(|| Fp::zero(&p), |c| Fp::from_integer(c, &p)) };
    let mut out = vec![vec![0u64; m.ncols()]; m.nrows()];
    for (i, j, q) in m.entries() {
        out[i][j] = q.map_coeffs(|c| Fp::from_integer(c, &p)).evaluate(&p, value).value();
    }
    out
}

fn mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], inner: usize, cols: usize, p: u64) -> bool {
    a.iter().all(|row| {
        (0..cols).all(|j| {
            let s = (0..inner).fold(0u128, |acc, k| (acc + row[k] as u128 * b[k][j] as u128) % p as u128);
            s == 0
        })
    })
}

fn attempt(c: &ChainComplex, n: usize, p: u64, point_seed: u64) -> (Vec<(i64, usize)>, bool, bool, bool) {
    let point = Specialization::random_point(n, point_seed, p);
    let degrees: Vec<i64> = (1..=c.hi()).collect();
    let evals: Vec<Vec<Vec<u64>>> = degrees.iter().map(|&r| evaluate_mod_p(&c.diff(r), &point, p)).collect();
    let ranks: Vec<(i64, usize)> = degrees.iter().zip(&evals).map(|(&r, e)| (r, linalg::rank_mod_p(e, c.rank(r), p))).collect();
    let rank_of = |r: i64| ranks.iter().find(|(s, _)| *s == r).map_or(0, |(_, k)| *k);
    let squares = degrees.windows(2).enumerate().all(|(k, w)| mul_mod(&evals[k], &evals[k + 1], c.rank(w[0]), c.rank(w[1]), p));
    if squares {
        for r in 1..=c.hi() {
            assert!(rank_of(r) + rank_of(r + 1) <= c.rank(r), "rank bound violated by a complex in degree {r}");
        }
    }
    let sums = (1..=c.hi()).all(|r| rank_of(r) + rank_of(r + 1) == c.rank(r));
    let first = rank_of(1) == c.rank(0);
    (ranks, sums, first, squares)
}

/// Try up to `trials` seeded points; valid iff some point satisfies every equation.
pub fn certify_exactness(c: &ChainComplex, n: usize, p: u64, seed: u64, trials: usize) -> ExactnessCertificate {
    let mut rng = rng_from_seed(seed);
    let mut last = None;
    for _ in 0..trials.max(1) {
        let point_seed: u64 = rng.gen();
        let (ranks, sums, first, squares) = attempt(c, n, p, point_seed);
        let valid = sums && first && squares;
        let cert = ExactnessCertificate { prime: p, seed, point_seed, trials, ranks, rank_sums: sums, first_rank: first, squares, valid };
        if valid {
            return cert;
        }
        last = Some(cert);
    }
    last.expect("at least one trial")
}
