//! Dense exact elimination over a field (𝔽_p or ℚ).

use crate::coeff::{Coeff, Fp, Integer, Rational};
use crate::error::ArithError;

/// Dense matrix as rows.
pub type Dense<C> = Vec<Vec<C>>;

/// Reduced row echelon form in place; returns the pivot columns.
///
/// Pivots are chosen left to right, taking the first row with a nonzero entry.
pub fn rref<C: Coeff>(m: &mut Dense<C>, ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(k) = (r..nrows).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(r, k);
        let inv = m[r][c].inv().expect("nonzero field element is invertible");
        if !inv.is_one() {
            for x in m[r].iter_mut().skip(c) {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination (no back substitution).
pub fn rank<C: Coeff>(m: &Dense<C>, ncols: usize) -> usize {
    let mut a = m.clone();
    let nrows = a.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(k) = (r..nrows).find(|&k| !a[k][c].is_zero()) else { continue };
        a.swap(r, k);
        let inv = a[r][c].inv().expect("nonzero field element is invertible");
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].mul(&inv);
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(c) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank of a dense matrix of residues modulo the prime `p`.
pub fn rank_mod_p(m: &[Vec<u64>], ncols: usize, p: u64) -> usize {
    let a: Dense<Fp> = m.iter().map(|row| row.iter().map(|&v| Fp::new(v, p)).collect()).collect();
    rank(&a, ncols)
}

/// Basis of the right null space `{x : m·x = 0}`.
pub fn kernel<C: Coeff>(m: &Dense<C>, ncols: usize, d: &C::Domain) -> Vec<Vec<C>> {
    let mut a = m.clone();
    let pivots = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![C::zero(d); ncols];
            x[f] = C::one(d);
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = a[r][f].neg();
            }
            x
        })
        .collect()
}

/// Left inverse of a full-column-rank matrix `w` (`m × k`), as a `k × m` matrix
/// supported on the first `k` independent rows of `w`.
pub fn left_inverse<C: Coeff>(w: &Dense<C>, k: usize, d: &C::Domain) -> Result<Dense<C>, ArithError> {
    let m = w.len();
    // independent rows of w are pivot columns of wᵀ
    let mut wt: Dense<C> = (0..k).map(|j| (0..m).map(|i| w[i][j].clone()).collect()).collect();
    let rows = rref(&mut wt, m);
    if rows.len() != k {
        return Err(ArithError::Shape(format!("left inverse needs full column rank {k}, got {}", rows.len())));
    }
    // invert the k×k block on those rows via [S | I]
    let mut aug: Dense<C> = rows
        .iter()
        .enumerate()
        .map(|(a, &i)| {
            let mut r: Vec<C> = w[i].clone();
            r.extend((0..k).map(|b| if a == b { C::one(d) } else { C::zero(d) }));
            r
        })
        .collect();
    rref(&mut aug, 2 * k);
    let mut out = vec![vec![C::zero(d); m]; k];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, &i) in rows.iter().enumerate() {
            row[i] = aug[a][k + b].clone();
        }
    }
    Ok(out)
}

/// Integer matrix into ℚ.
pub fn to_rational(m: &Dense<Integer>) -> Dense<Rational> {
    m.iter().map(|r| r.iter().map(|c| Rational::from_integer(c, &())).collect()).collect()
}

/// Rational matrix back to ℤ, failing on a non-integral entry.
pub fn to_integer(m: &Dense<Rational>) -> Result<Dense<Integer>, ArithError> {
    m.iter().map(|r| r.iter().map(|c| c.to_integer().ok_or(ArithError::NonIntegral)).collect()).collect()
}

/// Whether the row spaces of `a` and `b` coincide.
pub fn same_row_space<C: Coeff>(a: &Dense<C>, b: &Dense<C>, ncols: usize) -> bool {
    let ra = rank(a, ncols);
    let rb = rank(b, ncols);
    if ra != rb {
        return false;
    }
    let mut both = a.clone();
    both.extend(b.iter().cloned());
    rank(&both, ncols) == ra
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Dense<Rational> {
        rows.iter().map(|r| r.iter().map(|&v| Rational::from_i64(v, &())).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m, 3), 2);
        let k = kernel(&m, 3, &());
        assert_eq!(k.len(), 1);
        for (row, _) in m.iter().zip(0..) {
            let s = row.iter().zip(k[0].iter()).fold(Rational::zero(&()), |acc, (a, b)| acc.add(&a.mul(b)));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn left_inverse_recovers_identity() {
        let w = q(&[&[0, 1], &[1, 0], &[1, 1]]);
        let l = left_inverse(&w, 2, &()).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let s = (0..3).fold(Rational::zero(&()), |acc, i| acc.add(&l[a][i].mul(&w[i][b])));
                assert_eq!(s, Rational::from_i64((a == b) as i64, &()));
            }
        }
    }

    #[test]
    fn rank_modulo_prime() {
        let m = vec![vec![1, 2], vec![3, 6]];
        assert_eq!(rank_mod_p(&m, 2, 7), 1);
        let m = vec![vec![1, 2], vec![3, 5]];
        assert_eq!(rank_mod_p(&m, 2, 7), 2);
    }
}
