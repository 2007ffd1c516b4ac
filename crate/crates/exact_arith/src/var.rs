//! Variables of the generic ring and the weighted grading.

use std::fmt;

use crate::error::ArithError;

/// Largest supported matrix size. Slots are laid out for this bound so that
/// the slot of a variable does not depend on `n`.
pub const MAX_N: usize = 6;
/// Number of exponent slots in a monomial.
pub const NSLOTS: usize = 2 * MAX_N + MAX_N * MAX_N;

/// A variable `u_i`, `v_i` or `x_ij` (1-based indices).
///
/// Slots are `u_i → i−1`, `v_i → MAX_N + i−1`, `x_ij → 2·MAX_N + MAX_N·(i−1) + j−1`.
/// For every fixed `n` this reproduces the order u₁<…<uₙ<v₁<…<vₙ<x₁₁<x₁₂<…<xₙₙ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum VarId {
    U(u8),
    V(u8),
    X(u8, u8),
}

impl VarId {
    pub fn slot(self) -> usize {
        match self {
            VarId::U(i) => i as usize - 1,
            VarId::V(i) => MAX_N + i as usize - 1,
            VarId::X(i, j) => 2 * MAX_N + MAX_N * (i as usize - 1) + j as usize - 1,
        }
    }

    pub fn from_slot(s: usize) -> VarId {
        assert!(s < NSLOTS, "slot out of range");
        if s < MAX_N {
            VarId::U(s as u8 + 1)
        } else if s < 2 * MAX_N {
            VarId::V((s - MAX_N) as u8 + 1)
        } else {
            let k = s - 2 * MAX_N;
            VarId::X((k / MAX_N) as u8 + 1, (k % MAX_N) as u8 + 1)
        }
    }

    /// All variables of the generic ring for size `n`, in ring order.
    pub fn all(n: usize) -> Vec<VarId> {
        let n8 = n as u8;
        let mut v: Vec<VarId> = (1..=n8).map(VarId::U).collect();
        v.extend((1..=n8).map(VarId::V));
        for i in 1..=n8 {
            for j in 1..=n8 {
                v.push(VarId::X(i, j));
            }
        }
        v
    }

    pub fn parse(s: &str) -> Result<VarId, ArithError> {
        let err = || ArithError::Parse(s.to_string(), "unknown variable".into());
        let digit = |c: char| c.to_digit(10).filter(|d| (1..=MAX_N as u32).contains(d)).map(|d| d as u8);
        let mut ch = s.chars();
        let kind = ch.next().ok_or_else(err)?;
        let rest: Vec<char> = ch.collect();
        match (kind, rest.as_slice()) {
            ('u', [a]) => Ok(VarId::U(digit(*a).ok_or_else(err)?)),
            ('v', [a]) => Ok(VarId::V(digit(*a).ok_or_else(err)?)),
            ('x', [a, b]) => Ok(VarId::X(digit(*a).ok_or_else(err)?, digit(*b).ok_or_else(err)?)),
            _ => Err(err()),
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::U(i) => write!(f, "u{i}"),
            VarId::V(i) => write!(f, "v{i}"),
            VarId::X(i, j) => write!(f, "x{i}{j}"),
        }
    }
}

/// Weighted grading: `deg x_ij = 1`, `deg u_i = d_u`, `deg v_i = d_v`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GradingProfile {
    pub n: usize,
    pub d_u: i64,
    pub d_v: i64,
}

impl GradingProfile {
    /// Profile with `d_v = n − 1 − d_u`.
    pub fn new(n: usize, d_u: i64) -> Result<Self, ArithError> {
        if n == 0 || d_u < 0 || d_u > n as i64 - 1 {
            return Err(ArithError::Shape(format!("grading needs 0 <= d_u <= n-1, got n={n}, d_u={d_u}")));
        }
        Ok(GradingProfile { n, d_u, d_v: n as i64 - 1 - d_u })
    }

    /// Default profile with `d_u = ⌊(n−1)/2⌋`.
    pub fn default_for(n: usize) -> Self {
        Self::new(n, (n as i64 - 1) / 2).expect("default profile is valid")
    }

    pub fn weight(&self, v: VarId) -> i64 {
        match v {
            VarId::U(_) => self.d_u,
            VarId::V(_) => self.d_v,
            VarId::X(_, _) => 1,
        }
    }

    /// Weight of every slot.
    pub fn slot_weights(&self) -> [i64; NSLOTS] {
        let mut w = [0i64; NSLOTS];
        for (s, wi) in w.iter_mut().enumerate() {
            *wi = self.weight(VarId::from_slot(s));
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_order_matches_ring_order() {
        for n in 1..=MAX_N {
            let vars = VarId::all(n);
            for w in vars.windows(2) {
                assert!(w[0].slot() < w[1].slot());
            }
            for v in vars {
                assert_eq!(VarId::from_slot(v.slot()), v);
                assert_eq!(VarId::parse(&v.to_string()).unwrap(), v);
            }
        }
    }
}
