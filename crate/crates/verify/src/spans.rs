//! Degreewise comparison of linear spans of polynomial lists.

use std::collections::{BTreeMap, HashMap};

use exact_arith::{linalg, Coeff, GradingProfile, IntPoly, Monomial, Rational, WeightedDegree};

use crate::report::CheckReport;

fn by_degree<'a>(ps: &'a [IntPoly], g: &GradingProfile) -> Result<BTreeMap<i64, Vec<&'a IntPoly>>, String> {
    let mut out: BTreeMap<i64, Vec<&IntPoly>> = BTreeMap::new();
    for p in ps.iter().filter(|p| !p.is_zero()) {
        match p.weighted_degree(g).map_err(|e| e.to_string())? {
            WeightedDegree::Homogeneous(d) => out.entry(d).or_default().push(p),
            WeightedDegree::Inhomogeneous => return Err(format!("{p} is not weighted-homogeneous")),
        }
    }
    Ok(out)
}

/// Whether `a` and `b` span the same ℚ-space in each weighted degree.
pub fn compare_spans(id: &str, a: &[IntPoly], b: &[IntPoly], g: &GradingProfile) -> CheckReport {
    let (ga, gb) = match (by_degree(a, g), by_degree(b, g)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return CheckReport::fail_with(id, e),
    };
    let degrees: std::collections::BTreeSet<i64> = ga.keys().chain(gb.keys()).copied().collect();
    let empty = Vec::new();
    for d in degrees {
        let (pa, pb) = (ga.get(&d).unwrap_or(&empty), gb.get(&d).unwrap_or(&empty));
        let mut monos: HashMap<Monomial, usize> = HashMap::new();
        for p in pa.iter().chain(pb.iter()) {
            for (m, _) in p.terms() {
                let k = monos.len();
                monos.entry(*m).or_insert(k);
            }
        }
        let rows = |ps: &[&IntPoly]| -> Vec<Vec<Rational>> {
            ps.iter()
                .map(|p| {
                    let mut row = vec![Rational::zero(&()); monos.len()];
                    for (m, c) in p.terms() {
                        row[monos[m]] = Rational::from_integer(c, &());
                    }
                    row
                })
                .collect()
        };
        let (ra, rb) = (rows(pa), rows(pb));
        if !linalg::same_row_space(&ra, &rb, monos.len()) {
            return CheckReport::fail_with(id, format!("spans differ in degree {d}: ranks {} and {}", linalg::rank(&ra, monos.len()), linalg::rank(&rb, monos.len())));
        }
    }
    CheckReport::pass(id)
}
