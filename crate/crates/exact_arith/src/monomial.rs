//! Dense exponent vectors ordered by degree reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use crate::var::{VarId, NSLOTS};

/// A monomial as an exponent vector over the fixed variable slots.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; NSLOTS],
    deg: u16,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; NSLOTS], deg: 0 }
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u8) -> Self {
        let mut m = Self::one();
        m.exps[v.slot()] = e;
        m.deg = e as u16;
        m
    }

    pub fn from_exps(exps: [u8; NSLOTS]) -> Self {
        let deg = exps.iter().map(|&e| e as u16).sum();
        Monomial { exps, deg }
    }

    pub fn exps(&self) -> &[u8; NSLOTS] {
        &self.exps
    }

    pub fn exp(&self, v: VarId) -> u8 {
        self.exps[v.slot()]
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Weighted degree against per-slot weights.
    pub fn weighted_degree(&self, w: &[i64; NSLOTS]) -> i64 {
        self.exps.iter().zip(w.iter()).map(|(&e, &wi)| e as i64 * wi).sum()
    }

    /// Product. Panics if an exponent exceeds 255.
    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut exps = [0u8; NSLOTS];
        for i in 0..NSLOTS {
            exps[i] = self.exps[i].checked_add(o.exps[i]).unwrap_or_else(|| panic!("exponent overflow in slot {i}"));
        }
        Monomial { exps, deg: self.deg + o.deg }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn div(&self, o: &Monomial) -> Monomial {
        let mut exps = [0u8; NSLOTS];
        for i in 0..NSLOTS {
            exps[i] = o.exps[i] - self.exps[i];
        }
        Monomial { exps, deg: o.deg - self.deg }
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut exps = [0u8; NSLOTS];
        for i in 0..NSLOTS {
            exps[i] = self.exps[i].max(o.exps[i]);
        }
        Monomial::from_exps(exps)
    }

    /// True when the monomials share no variable.
    pub fn coprime(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Slots with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

impl Ord for Monomial {
    /// Degree reverse lexicographic: higher total degree first; ties broken by
    /// the last slot where the exponents differ, the smaller exponent winning.
    fn cmp(&self, o: &Self) -> Ordering {
        match self.deg.cmp(&o.deg) {
            Ordering::Equal => {}
            c => return c,
        }
        for i in (0..NSLOTS).rev() {
            if self.exps[i] != o.exps[i] {
                return o.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", VarId::from_slot(s))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_examples() {
        let x11 = Monomial::var(VarId::X(1, 1));
        let u1 = Monomial::var(VarId::U(1));
        let u2 = Monomial::var(VarId::U(2));
        // equal degree: the variable later in the order is smaller
        assert!(u1 > x11);
        assert!(u1 > u2);
        // degree dominates
        assert!(u2.mul(&u2) > u1);
        // u1*x22 vs u2*x11: last differing slot is x22, present only in the first
        let a = u1.mul(&Monomial::var(VarId::X(2, 2)));
        let b = u2.mul(&x11);
        assert!(b > a);
    }
}
