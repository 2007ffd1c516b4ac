//! Coefficient domains: unbounded integers, rationals and prime fields.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ArithError;

/// Arithmetic interface shared by all coefficient domains.
///
/// Values are self-describing: a prime-field element carries its modulus, so
/// the domain of a value can always be recovered with [`Coeff::domain`].
pub trait Coeff: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Runtime description of the domain (unit for ℤ and ℚ, the modulus for 𝔽_p).
    type Domain: Clone + PartialEq + fmt::Debug + Send + Sync;

    /// Domain of this value.
    fn domain(&self) -> Self::Domain;
    /// Additive identity of `d`.
    fn zero(d: &Self::Domain) -> Self;
    /// Multiplicative identity of `d`.
    fn one(d: &Self::Domain) -> Self;
    /// Image of a machine integer.
    fn from_i64(v: i64, d: &Self::Domain) -> Self;
    /// Image of an unbounded integer.
    fn from_integer(v: &Integer, d: &Self::Domain) -> Self;
    /// Whether two values live in the same domain.
    fn compatible(&self, other: &Self) -> bool;
    /// Modulus for prime-field values, 0 otherwise.
    fn modulus_tag(&self) -> u64 {
        0
    }
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for non-units.
    fn inv(&self) -> Option<Self>;
    /// True when the canonical text of the value starts with a minus sign.
    fn is_negative(&self) -> bool;
    /// Parse the canonical text of a coefficient.
    fn parse(s: &str, d: &Self::Domain) -> Result<Self, ArithError>;

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
}

/// Unbounded integer with an inline fast path.
///
/// Values fitting in `i64` are always stored as `Small`; arithmetic escalates
/// to `Big` on overflow and demotes results that fit again.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub fn new(v: i64) -> Self {
        Integer::Small(v)
    }

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    /// Value as a `BigInt`.
    pub fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    /// Value as `i64` when it fits.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    /// Residue in `[0, p)`.
    pub fn rem_euclid_u64(&self, p: u64) -> u64 {
        match self {
            Integer::Small(v) => (*v as i128).rem_euclid(p as i128) as u64,
            Integer::Big(b) => b.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits"),
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Big(BigInt::from(*v).abs()),
            },
            Integer::Big(b) => Integer::from_big(b.abs()),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer::from_big(v)
    }
}

impl Coeff for Integer {
    type Domain = ();

    fn domain(&self) {}
    fn zero(_: &()) -> Self {
        Integer::Small(0)
    }
    fn one(_: &()) -> Self {
        Integer::Small(1)
    }
    fn from_i64(v: i64, _: &()) -> Self {
        Integer::Small(v)
    }
    fn from_integer(v: &Integer, _: &()) -> Self {
        v.clone()
    }
    fn compatible(&self, _: &Self) -> bool {
        true
    }
    fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }
    fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }
    fn add(&self, o: &Self) -> Self {
        if let (Integer::Small(a), Integer::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_bigint() + o.to_bigint())
    }
    fn sub(&self, o: &Self) -> Self {
        if let (Integer::Small(a), Integer::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_bigint() - o.to_bigint())
    }
    fn mul(&self, o: &Self) -> Self {
        if let (Integer::Small(a), Integer::Small(b)) = (self, o) {
            if let Some(c) = a.checked_mul(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_bigint() * o.to_bigint())
    }
    fn neg(&self) -> Self {
        match self {
            Integer::Small(a) => match a.checked_neg() {
                Some(c) => Integer::Small(c),
                None => Integer::Big(-BigInt::from(*a)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }
    fn inv(&self) -> Option<Self> {
        match self {
            Integer::Small(1) => Some(Integer::Small(1)),
            Integer::Small(-1) => Some(Integer::Small(-1)),
            _ => None,
        }
    }
    fn is_negative(&self) -> bool {
        match self {
            Integer::Small(a) => *a < 0,
            Integer::Big(b) => b.is_negative(),
        }
    }
    fn parse(s: &str, _: &()) -> Result<Self, ArithError> {
        s.trim()
            .parse::<BigInt>()
            .map(Integer::from_big)
            .map_err(|e| ArithError::Parse(s.to_string(), e.to_string()))
    }
}

/// Rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Integer value when the denominator is one.
    pub fn to_integer(&self) -> Option<Integer> {
        if self.0.is_integer() {
            Some(Integer::from_big(self.0.to_integer()))
        } else {
            None
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Coeff for Rational {
    type Domain = ();

    fn domain(&self) {}
    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }
    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(v: i64, _: &()) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn from_integer(v: &Integer, _: &()) -> Self {
        Rational(BigRational::from_integer(v.to_bigint()))
    }
    fn compatible(&self, _: &Self) -> bool {
        true
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        Rational(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Rational(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Rational(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
    fn parse(s: &str, _: &()) -> Result<Self, ArithError> {
        let s = s.trim();
        let err = |m: String| ArithError::Parse(s.to_string(), m);
        match s.split_once('/') {
            Some((a, b)) => {
                let a = a.trim().parse::<BigInt>().map_err(|e| err(e.to_string()))?;
                let b = b.trim().parse::<BigInt>().map_err(|e| err(e.to_string()))?;
                if b.is_zero() {
                    return Err(err("zero denominator".into()));
                }
                Ok(Rational(BigRational::new(a, b)))
            }
            None => {
                let a = s.parse::<BigInt>().map_err(|e| err(e.to_string()))?;
                Ok(Rational(BigRational::from_integer(a)))
            }
        }
    }
}

/// Element of the prime field 𝔽_p, stored as a residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    /// Residue of `v` modulo `p`. The modulus is not re-validated here; use
    /// [`check_modulus`] once at the boundary.
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    pub fn from_signed(v: i64, p: u64) -> Self {
        Fp { v: (v as i128).rem_euclid(p as i128) as u64, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Addition that reports a modulus mismatch instead of panicking.
    pub fn checked_add(&self, o: &Self) -> Result<Self, ArithError> {
        if self.p != o.p {
            return Err(ArithError::DomainMismatch(self.p, o.p));
        }
        Ok(Coeff::add(self, o))
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

/// `a * b mod p` without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// `a^e mod p`.
pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Deterministic Miller–Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Accept only odd primes below 2^62.
pub fn check_modulus(p: u64) -> Result<u64, ArithError> {
    if p > 2 && p < (1u64 << 62) && is_prime(p) {
        Ok(p)
    } else {
        Err(ArithError::BadModulus(p))
    }
}

impl Coeff for Fp {
    type Domain = u64;

    fn domain(&self) -> u64 {
        self.p
    }
    fn zero(p: &u64) -> Self {
        Fp { v: 0, p: *p }
    }
    fn one(p: &u64) -> Self {
        Fp { v: 1, p: *p }
    }
    fn from_i64(v: i64, p: &u64) -> Self {
        Fp::from_signed(v, *p)
    }
    fn from_integer(v: &Integer, p: &u64) -> Self {
        Fp { v: v.rem_euclid_u64(*p), p: *p }
    }
    fn compatible(&self, other: &Self) -> bool {
        self.p == other.p
    }
    fn modulus_tag(&self) -> u64 {
        self.p
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p, "coefficient-domain mismatch");
        let s = self.v + o.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p, "coefficient-domain mismatch");
        Fp { v: if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v }, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p, "coefficient-domain mismatch");
        Fp { v: mul_mod(self.v, o.v, self.p), p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        inv_mod(self.v, self.p).map(|v| Fp { v, p: self.p })
    }
    fn is_negative(&self) -> bool {
        false
    }
    fn parse(s: &str, p: &u64) -> Result<Self, ArithError> {
        let i = Integer::parse(s, &())?;
        Ok(Fp::from_integer(&i, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_escalates_on_overflow() {
        let a = Integer::new(i64::MAX);
        let b = a.add(&Integer::new(1));
        assert!(matches!(b, Integer::Big(_)));
        assert_eq!(b.sub(&Integer::new(1)), a);
        let c = a.mul(&a);
        assert_eq!(c.to_bigint(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(Integer::new(i64::MIN).neg().to_bigint(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn rationals_normalize() {
        let r = Rational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::parse("-3/2", &()).unwrap(), r);
    }

    #[test]
    fn prime_field_basics() {
        let p = 7;
        let a = Fp::from_signed(-1, p);
        assert_eq!(a.value(), 6);
        assert_eq!(a.inv().unwrap().value(), 6);
        assert!(Fp::new(3, 7).checked_add(&Fp::new(3, 11)).is_err());
        assert!(check_modulus(1_000_003).is_ok());
        assert!(check_modulus(1_000_001).is_err());
        assert!(check_modulus(2).is_err());
    }
}
