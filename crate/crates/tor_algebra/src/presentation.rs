//! The monomial presentation of the subalgebra generated by `Tor₁`:
//! `⋀(V₁ ⊕ V₂ ⊕ V₃)` modulo `⋀^{n−1}V₂, ⋀^{n−1}V₃, ⋀²V₁, V₁V₂, V₁V₃, V₂V₃`.

use serde::Serialize;

use crate::error::TorError;

/// One of the three summands of `Tor₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Summand {
    /// `V₁ = F₁(1)^(1)`, dimension `n²`.
    V1,
    /// `V₂ = F₁(2)^(1)`, dimension `n`.
    V2,
    /// `V₃ = F₁(3)^(1)`, dimension `n`.
    V3,
}

impl Summand {
    pub fn of_family(family: u8) -> Summand {
        match family {
            1 => Summand::V1,
            2 => Summand::V2,
            3 => Summand::V3,
            _ => panic!("Tor₁ has families 1, 2, 3"),
        }
    }
}

/// Dimensions, relation families and Hilbert function of the presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorPresentation {
    pub n: usize,
    pub dims: [usize; 3],
    pub relations: Vec<String>,
    /// Dimension of the quotient in degrees `0..=n`.
    pub hilbert: Vec<u64>,
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Whether the monomial with `c[i]` factors from summand `i` survives.
pub fn survives(n: usize, c: [usize; 3]) -> bool {
    let [a, b, d] = c;
    !(a >= 2 || (a >= 1 && b >= 1) || (a >= 1 && d >= 1) || (b >= 1 && d >= 1) || b >= n - 1 || d >= n - 1)
}

/// Whether a product of two basis vectors of `Tor₁` lies in the relations.
pub fn pair_in_relations(n: usize, a: Summand, b: Summand) -> bool {
    let mut c = [0; 3];
    c[a as usize] += 1;
    c[b as usize] += 1;
    !survives(n, c)
}

/// Surviving monomials counted by degree.
pub fn hilbert_of_presentation(n: usize) -> Result<Vec<u64>, TorError> {
    if n < 3 {
        return Err(TorError::RankTooSmall(n));
    }
    let dims = [n * n, n, n];
    Ok((0..=n)
        .map(|deg| {
            let mut total = 0;
            for a in 0..=deg {
                for b in 0..=deg - a {
                    let d = deg - a - b;
                    if survives(n, [a, b, d]) {
                        total += binomial(dims[0], a) * binomial(dims[1], b) * binomial(dims[2], d);
                    }
                }
            }
            total
        })
        .collect())
}

pub fn presentation(n: usize) -> Result<TorPresentation, TorError> {
    let relations = ["⋀^{n−1}V₂", "⋀^{n−1}V₃", "⋀²V₁", "V₁V₂", "V₁V₃", "V₂V₃"].iter().map(|s| s.to_string()).collect();
    Ok(TorPresentation { n, dims: [n * n, n, n], relations, hilbert: hilbert_of_presentation(n)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form() {
        for n in 3..=8 {
            let h = hilbert_of_presentation(n).unwrap();
            assert_eq!(h[0], 1);
            assert_eq!(h[1], (n * n + 2 * n) as u64);
            for (d, &v) in h.iter().enumerate().skip(2) {
                let expected = if d <= n - 2 { 2 * binomial(n, d) } else { 0 };
                assert_eq!(v, expected, "n = {n}, d = {d}");
            }
        }
    }
}
