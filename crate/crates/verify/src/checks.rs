//! Matrix-level checks: `d² = 0`, chain maps, equalities and unit entries.

use big_complex::{ChainComplex, LabeledModule};
use exact_arith::IntMatrix;

use crate::report::{CheckReport, Witness};

fn label(m: Option<&LabeledModule>, k: usize) -> String {
    m.filter(|m| k < m.rank()).map_or_else(|| format!("#{k}"), |m| m.label(k).to_string())
}

/// Witness for the first nonzero entry of `a`, with rows in `rows` and columns in `cols`.
pub fn first_entry(degree: i64, a: &IntMatrix, rows: Option<&LabeledModule>, cols: Option<&LabeledModule>) -> Option<Witness> {
    a.first_nonzero().map(|(i, j, p)| Witness { degree, row: label(rows, i), col: label(cols, j), value: p.to_string() })
}

/// `d_{r−1}∘d_r = 0` for every `r`, symbolically.
pub fn check_d_squared(id: &str, c: &ChainComplex) -> CheckReport {
    for r in c.lo() + 1..=c.hi() {
        let prod = c.diff(r - 1).mul(&c.diff(r));
        if let Some(w) = first_entry(r, &prod, c.module_ref(r - 2), c.module_ref(r)) {
            return CheckReport::fail(id, w);
        }
    }
    CheckReport::pass(id)
}

/// `a = b` entrywise; the witness shows the first entry of `a − b`.
pub fn check_equal(id: &str, degree: i64, a: &IntMatrix, b: &IntMatrix, rows: Option<&LabeledModule>, cols: Option<&LabeledModule>) -> CheckReport {
    if (a.nrows(), a.ncols()) != (b.nrows(), b.ncols()) {
        return CheckReport::fail_with(id, format!("degree {degree}: shape {}x{} vs {}x{}", a.nrows(), a.ncols(), b.nrows(), b.ncols()));
    }
    match first_entry(degree, &a.sub(b), rows, cols) {
        Some(w) => CheckReport::fail(id, w),
        None => CheckReport::pass(id),
    }
}

/// All reports pass, folded into one report carrying the first failure.
pub fn all_of(id: &str, parts: impl IntoIterator<Item = CheckReport>) -> CheckReport {
    for p in parts {
        if !p.passed() {
            let mut r = p;
            r.id = id.to_string();
            return r;
        }
    }
    CheckReport::pass(id)
}

/// `b_{r−1}∘φ_r = φ_{r−1}∘a_r` for a map given degreewise.
pub fn check_chain_map(id: &str, a: &ChainComplex, b: &ChainComplex, map: impl Fn(i64) -> IntMatrix) -> CheckReport {
    let lo = a.lo().min(b.lo());
    let hi = a.hi().max(b.hi());
    for r in lo + 1..=hi {
        let lhs = b.diff(r).mul(&map(r));
        let rhs = map(r - 1).mul(&a.diff(r));
        if let Some(w) = first_entry(r, &lhs.sub(&rhs), b.module_ref(r - 1), a.module_ref(r)) {
            return CheckReport::fail(id, w);
        }
    }
    CheckReport::pass(id)
}

/// No entry of any differential has a nonzero constant term.
pub fn check_minimality(id: &str, c: &ChainComplex) -> CheckReport {
    for r in c.degrees() {
        for (i, j, p) in c.diff(r).entries() {
            if p.constant_term().is_some() {
                let w = Witness { degree: r, row: label(c.module_ref(r - 1), i), col: label(c.module_ref(r), j), value: p.to_string() };
                return CheckReport::fail(id, w);
            }
        }
    }
    CheckReport::pass(id)
}
