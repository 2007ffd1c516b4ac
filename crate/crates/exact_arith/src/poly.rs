//! Sparse multivariate polynomials in canonical form.
//!
//! Terms are stored in strictly decreasing degrevlex order with nonzero
//! coefficients, so structural equality is mathematical equality.
//!
//! Canonical text: terms in decreasing order joined by ` + ` / ` - `; a term
//! is `coeff*var^e*...`, with a unit coefficient omitted and `^1` omitted.
//! The zero polynomial prints as `0`.

use std::collections::HashMap;
use std::fmt;

use crate::coeff::{Coeff, Integer};
use crate::error::ArithError;
use crate::monomial::Monomial;
use crate::var::{GradingProfile, VarId, NSLOTS};

/// Sparse polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C: Coeff> {
    terms: Vec<(Monomial, C)>,
}

/// Result of a weighted-degree query.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightedDegree {
    Homogeneous(i64),
    Inhomogeneous,
}

pub type IntPoly = Polynomial<Integer>;

impl<C: Coeff> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn one(d: &C::Domain) -> Self {
        Self::constant(C::one(d))
    }

    pub fn from_i64(v: i64, d: &C::Domain) -> Self {
        Self::constant(C::from_i64(v, d))
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: VarId, d: &C::Domain) -> Self {
        Self::monomial(Monomial::var(v), C::one(d))
    }

    /// Normalize arbitrary terms: combine duplicates, drop zeros, sort.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut map: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(acc) => acc.add_assign(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    /// Build from terms already in strictly decreasing order with nonzero coefficients.
    pub fn from_sorted_terms_unchecked(terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Domain of the coefficients, `None` for the zero polynomial.
    pub fn domain(&self) -> Option<C::Domain> {
        self.terms.first().map(|(_, c)| c.domain())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Option<&C> {
        self.terms.last().filter(|(m, _)| m.is_one()).map(|(_, c)| c)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Common weighted degree of all terms.
    pub fn weighted_degree(&self, g: &GradingProfile) -> Result<WeightedDegree, ArithError> {
        let w = g.slot_weights();
        let mut it = self.terms.iter().map(|(m, _)| m.weighted_degree(&w));
        let first = it.next().ok_or(ArithError::ZeroPolynomial)?;
        if it.all(|d| d == first) {
            Ok(WeightedDegree::Homogeneous(first))
        } else {
            Ok(WeightedDegree::Inhomogeneous)
        }
    }

    /// Whether both operands share a coefficient domain (vacuous for zero).
    pub fn compatible(&self, o: &Self) -> bool {
        match (self.terms.first(), o.terms.first()) {
            (Some((_, a)), Some((_, b))) => a.compatible(b),
            _ => true,
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ArithError> {
        self.guard(o)?;
        Ok(self.add(o))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, ArithError> {
        self.guard(o)?;
        Ok(self.sub(o))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, ArithError> {
        self.guard(o)?;
        Ok(self.mul(o))
    }

    fn guard(&self, o: &Self) -> Result<(), ArithError> {
        match (self.terms.first(), o.terms.first()) {
            (Some((_, a)), Some((_, b))) if !a.compatible(b) => Err(ArithError::DomainMismatch(a.modulus_tag(), b.modulus_tag())),
            _ => Ok(()),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0, c));
        }
        Polynomial { terms: out }
    }

    pub fn neg(&self) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        let terms: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.mul(k))).filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { terms }
    }

    /// Multiply by a signed unit `±1`.
    pub fn signed(&self, sign: i64) -> Self {
        match sign {
            1 => self.clone(),
            -1 => self.neg(),
            0 => Self::zero(),
            _ => panic!("signed() expects -1, 0 or 1"),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let terms: Vec<_> = self.terms.iter().map(|(t, c)| (t.mul(m), c.mul(k))).filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return o.mul_monomial(m, c);
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut map: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match map.get_mut(&m) {
                    Some(acc) => acc.add_assign(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    pub fn pow(&self, e: u32, d: &C::Domain) -> Self {
        let mut r = Self::one(d);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Evaluate with every variable replaced by a coefficient.
    pub fn evaluate(&self, d: &C::Domain, val: impl Fn(VarId) -> C) -> C {
        let mut cache: [Option<C>; NSLOTS] = std::array::from_fn(|_| None);
        let mut acc: Option<C> = None;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for s in m.support() {
                let x = cache[s].get_or_insert_with(|| val(VarId::from_slot(s))).clone();
                for _ in 0..m.exps()[s] {
                    t = t.mul(&x);
                }
            }
            acc = Some(match acc {
                Some(a) => a.add(&t),
                None => t,
            });
        }
        acc.unwrap_or_else(|| C::zero(d))
    }

    /// Substitute polynomials for the variables present in `map`; others survive.
    pub fn substitute(&self, map: &HashMap<VarId, Polynomial<C>>) -> Self {
        if map.is_empty() {
            return self.clone();
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = [0u8; NSLOTS];
            let mut factor: Option<Self> = None;
            for s in m.support() {
                let v = VarId::from_slot(s);
                match map.get(&v) {
                    Some(p) => {
                        for _ in 0..m.exps()[s] {
                            factor = Some(match factor {
                                Some(f) => f.mul(p),
                                None => p.clone(),
                            });
                        }
                    }
                    None => kept[s] = m.exps()[s],
                }
            }
            let base = Self::monomial(Monomial::from_exps(kept), c.clone());
            let term = match factor {
                Some(f) => base.mul(&f),
                None => base,
            };
            out = out.add(&term);
        }
        out
    }

    /// Apply a coefficient map, dropping terms that become zero.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let terms: Vec<_> = self.terms.iter().map(|(m, c)| (*m, f(c))).filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { terms }
    }

    /// Variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<VarId> {
        let mut seen = [false; NSLOTS];
        for (m, _) in &self.terms {
            for s in m.support() {
                seen[s] = true;
            }
        }
        (0..NSLOTS).filter(|&s| seen[s]).map(VarId::from_slot).collect()
    }

    /// Parse canonical text.
    pub fn parse(s: &str, d: &C::Domain) -> Result<Self, ArithError> {
        let src = s.trim();
        let err = |m: &str| ArithError::Parse(s.to_string(), m.to_string());
        if src.is_empty() {
            return Err(err("empty input"));
        }
        let mut terms = Vec::new();
        let mut sign = 1i64;
        let mut cur = String::new();
        let mut pending = false;
        let flush = |cur: &mut String, sign: i64, terms: &mut Vec<(Monomial, C)>| -> Result<(), ArithError> {
            let t = cur.trim();
            if t.is_empty() {
                return Err(err("empty term"));
            }
            let mut coef = C::from_i64(sign, d);
            let mut exps = [0u8; NSLOTS];
            for f in t.split('*') {
                let f = f.trim();
                if f.is_empty() {
                    return Err(err("empty factor"));
                }
                if f.starts_with(|c: char| c.is_ascii_digit()) {
                    coef = coef.mul(&C::parse(f, d)?);
                } else {
                    let (name, e) = match f.split_once('^') {
                        Some((n, e)) => (n.trim(), e.trim().parse::<u8>().map_err(|_| err("bad exponent"))?),
                        None => (f, 1),
                    };
                    let v = VarId::parse(name)?;
                    let slot = v.slot();
                    exps[slot] = exps[slot].checked_add(e).ok_or(ArithError::ExponentOverflow(slot))?;
                }
            }
            terms.push((Monomial::from_exps(exps), coef));
            cur.clear();
            Ok(())
        };
        for ch in src.chars() {
            match ch {
                '+' | '-' => {
                    if pending {
                        flush(&mut cur, sign, &mut terms)?;
                    } else if !cur.trim().is_empty() {
                        return Err(err("unexpected sign"));
                    }
                    sign = if ch == '-' { -1 } else { 1 };
                    pending = false;
                }
                c if c.is_whitespace() => cur.push(c),
                c => {
                    // a `/` inside a rational coefficient stays within the term
                    cur.push(c);
                    pending = true;
                }
            }
        }
        if !pending {
            return Err(err("dangling sign"));
        }
        flush(&mut cur, sign, &mut terms)?;
        Ok(Self::from_terms(terms))
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl IntPoly {
    /// Shorthand for an integer polynomial in one variable.
    pub fn v(v: VarId) -> Self {
        Self::var(v, &())
    }

    pub fn int(c: i64) -> Self {
        Self::from_i64(c, &())
    }

    pub fn parse_int(s: &str) -> Result<Self, ArithError> {
        Self::parse(s, &())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Fp, Rational};

    fn p(s: &str) -> IntPoly {
        IntPoly::parse_int(s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p("x11 + u1");
        let b = p("x11 - u1");
        assert_eq!(a.mul(&b), p("x11^2 - u1^2"));
        assert_eq!(a.mul(&b).to_string(), "-u1^2 + x11^2");
    }

    #[test]
    fn additive_identity() {
        let a = p("3*u1*v2 - x12*x21 + 7");
        assert_eq!(a.add(&IntPoly::zero()), a);
    }

    #[test]
    fn evaluation_mod_7() {
        let f = p("u1*v1 - x22");
        let val = |v: VarId| match v {
            VarId::U(1) => Fp::new(3, 7),
            VarId::V(1) => Fp::new(2, 7),
            VarId::X(2, 2) => Fp::new(6, 7),
            _ => Fp::new(0, 7),
        };
        let fp = f.map_coeffs(|c| Fp::from_integer(c, &7));
        assert_eq!(fp.evaluate(&7, val), Fp::new(0, 7));
    }

    #[test]
    fn weighted_degrees() {
        let g3 = GradingProfile::new(3, 1).unwrap();
        assert_eq!(p("u1*x12").weighted_degree(&g3).unwrap(), WeightedDegree::Homogeneous(2));
        assert_eq!(p("x11*x22 - x12*x21").weighted_degree(&g3).unwrap(), WeightedDegree::Homogeneous(2));
        let g4 = GradingProfile::new(4, 2).unwrap();
        assert_eq!(p("u1 + x11").weighted_degree(&g4).unwrap(), WeightedDegree::Inhomogeneous);
        assert_eq!(IntPoly::zero().weighted_degree(&g4), Err(ArithError::ZeroPolynomial));
    }

    #[test]
    fn canonical_text() {
        let f = p("x11*x22 - x12*x21");
        // degrevlex: x12*x21 > x11*x22 since x22 is the last differing variable
        assert_eq!(f.to_string(), "-x12*x21 + x11*x22");
        let g = p("-2*u1^2*v1 + 5 - x33");
        assert_eq!(g.to_string(), "-2*u1^2*v1 - x33 + 5");
        assert_eq!(p(&g.to_string()), g);
        let q = Polynomial::<Rational>::parse("3/4*u1 - 1/2", &()).unwrap();
        assert_eq!(q.to_string(), "3/4*u1 - 1/2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert!(IntPoly::parse_int("u1 +").is_err());
        assert!(IntPoly::parse_int("y1").is_err());
    }

    #[test]
    fn substitution() {
        let f = p("x11*x22 - x12*x21");
        let mut m = HashMap::new();
        m.insert(VarId::X(1, 2), IntPoly::zero());
        m.insert(VarId::X(2, 1), IntPoly::zero());
        assert_eq!(f.substitute(&m), p("x11*x22"));
        assert_eq!(f.substitute(&HashMap::new()), f);
    }

    #[test]
    fn domain_mismatch_detected() {
        let a = Polynomial::constant(Fp::new(1, 7));
        let b = Polynomial::constant(Fp::new(1, 11));
        assert!(matches!(a.try_add(&b), Err(ArithError::DomainMismatch(7, 11))));
        assert!(a.try_add(&Polynomial::zero()).is_ok());
    }
}
