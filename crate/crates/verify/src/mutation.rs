//! Seeded single-entry mutations of a complex and the battery that must catch them.

use big_complex::ChainComplex;
use exact_arith::{IntPoly, Integer, VarId};
use generic_data::rng_from_seed;
use rand::Rng;
use serde::Serialize;

use crate::checks::{check_chain_map, check_d_squared, check_minimality};
use crate::report::CheckReport;
use crate::spans::compare_spans;
use crate::suite::Context;

/// How the chosen entry is altered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MutationKind {
    Zero,
    Negate,
    Double,
    AddVariable,
}

/// One altered entry of `d_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mutation {
    pub degree: i64,
    pub row: usize,
    pub col: usize,
    pub kind: MutationKind,
}

impl Mutation {
    /// Apply to a copy of `c`.
    pub fn apply(&self, c: &ChainComplex) -> ChainComplex {
        c.map_diffs(|r, m| {
            if r != self.degree {
                return m.clone();
            }
            let mut out = m.clone();
            let old = m.entry(self.row, self.col);
            let new = match self.kind {
                MutationKind::Zero => IntPoly::zero(),
                MutationKind::Negate => old.neg(),
                MutationKind::Double => old.scale(&Integer::new(2)),
                MutationKind::AddVariable => old.add(&IntPoly::var(VarId::X(1, 1), &())),
            };
            out.set(self.row, self.col, new);
            out
        })
    }
}

/// `count` mutations of nonzero entries, drawn from `seed`.
pub fn seeded_mutations(c: &ChainComplex, count: usize, seed: u64) -> Vec<Mutation> {
    let mut rng = rng_from_seed(seed);
    let degrees: Vec<i64> = c.degrees().filter(|&r| c.diff_ref(r).is_some_and(|m| !m.is_zero())).collect();
    let kinds = [MutationKind::Zero, MutationKind::Negate, MutationKind::Double, MutationKind::AddVariable];
    (0..count)
        .map(|_| {
            let degree = degrees[rng.gen_range(0..degrees.len())];
            let m = c.diff(degree);
            let entries: Vec<(usize, usize)> = m.entries().map(|(i, j, _)| (i, j)).collect();
            let (row, col) = entries[rng.gen_range(0..entries.len())];
            Mutation { degree, row, col, kind: kinds[rng.gen_range(0..kinds.len())] }
        })
        .collect()
}

/// Checks of a candidate `M` against the fixed `F`, `ψ` and `ρ` of the context.
pub fn mutation_battery(ctx: &Context, m: &ChainComplex) -> Vec<CheckReport> {
    let (f, mc) = (&ctx.f, &ctx.minimal);
    let entries = |r: i64| -> Vec<IntPoly> { m.diff(r).entries().map(|(_, _, p)| p.clone()).collect() };
    vec![
        check_d_squared("d2.M", m),
        check_minimality("minimality.M", m),
        check_chain_map("chainmaps.psi", f, m, |r| mc.psi.matrix(r, f, m)),
        check_chain_map("chainmaps.rho", m, f, |r| mc.rho.matrix(r, m, f)),
    ]
    .into_iter()
    .chain((ctx.n >= 3).then(|| compare_spans("h0.span", &entries(1), &ctx.data.h_ideal(true), &ctx.data.grading)))
    .collect()
}

/// Outcome of one mutation: the ids of the checks that failed.
#[derive(Clone, Debug, Serialize)]
pub struct MutationOutcome {
    pub mutation: Mutation,
    pub caught_by: Vec<String>,
}

/// Run the battery on each seeded mutation of `M`.
pub fn run_mutations(ctx: &Context, count: usize, seed: u64) -> Vec<MutationOutcome> {
    seeded_mutations(ctx.m(), count, seed)
        .into_iter()
        .map(|mutation| {
            let mutated = mutation.apply(ctx.m());
            let caught_by = mutation_battery(ctx, &mutated).into_iter().filter(|r| !r.passed()).map(|r| r.id).collect();
            MutationOutcome { mutation, caught_by }
        })
        .collect()
}
