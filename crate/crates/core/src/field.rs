//! Exact coefficient fields: the rationals and prime fields `Z/p`.
//!
//! Fields are context objects: elements do not know their field, and every
//! operation goes through the field value. This lets the prime-field modulus
//! be chosen at runtime while the rest of the engine stays generic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a ring is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoefficientField {
    Rationals,
    PrimeField { p: u32 },
}

impl CoefficientField {
    pub const DEFAULT_PRIME: u32 = 32003;

    pub fn validate(self) -> Result<Self> {
        if let CoefficientField::PrimeField { p } = self {
            if !is_prime(p as u64) {
                return Err(Error::InvalidInput(format!("{p} is not prime")));
            }
        }
        Ok(self)
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "rationals"),
            CoefficientField::PrimeField { p } => write!(f, "prime-field({p})"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> CoefficientField;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of a rational number; `None` when the denominator vanishes in the field.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

// ---------------------------------------------------------------------------
// Rationals

/// A rational number with an `i64` fast path that spills to `BigRational`.
#[derive(Clone, Debug)]
pub enum Rat {
    /// Reduced, denominator positive.
    Small(i64, i64),
    Big(BigRational),
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl Rat {
    fn from_i128(n: i128, d: i128) -> Rat {
        debug_assert!(d != 0);
        let g = n.gcd(&d);
        let (mut n, mut d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(q: BigRational) -> Rat {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(q),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(q) => q.clone(),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn descriptor(&self) -> CoefficientField {
        CoefficientField::Rationals
    }
    fn zero(&self) -> Rat {
        Rat::Small(0, 1)
    }
    fn one(&self) -> Rat {
        Rat::Small(1, 1)
    }
    fn is_zero(&self, a: &Rat) -> bool {
        match a {
            Rat::Small(n, _) => *n == 0,
            Rat::Big(q) => q.is_zero(),
        }
    }
    fn is_one(&self, a: &Rat) -> bool {
        match a {
            Rat::Small(n, d) => *n == 1 && *d == 1,
            Rat::Big(q) => q.is_one(),
        }
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        match (a, b) {
            (Rat::Small(n1, d1), Rat::Small(n2, d2)) => {
                if d1 == d2 {
                    return Rat::from_i128(*n1 as i128 + *n2 as i128, *d1 as i128);
                }
                let n = *n1 as i128 * *d2 as i128 + *n2 as i128 * *d1 as i128;
                Rat::from_i128(n, *d1 as i128 * *d2 as i128)
            }
            _ => Rat::from_big(a.to_big() + b.to_big()),
        }
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Rat) -> Rat {
        match a {
            Rat::Small(n, d) if *n != i64::MIN => Rat::Small(-n, *d),
            _ => Rat::from_big(-a.to_big()),
        }
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        match (a, b) {
            (Rat::Small(n1, d1), Rat::Small(n2, d2)) => {
                Rat::from_i128(*n1 as i128 * *n2 as i128, *d1 as i128 * *d2 as i128)
            }
            _ => Rat::from_big(a.to_big() * b.to_big()),
        }
    }
    fn inv(&self, a: &Rat) -> Rat {
        assert!(!self.is_zero(a), "inverse of zero");
        match a {
            Rat::Small(n, d) => Rat::from_i128(*d as i128, *n as i128),
            Rat::Big(q) => Rat::from_big(q.recip()),
        }
    }
    fn from_i64(&self, n: i64) -> Rat {
        Rat::Small(n, 1)
    }
    fn from_rational(&self, q: &BigRational) -> Option<Rat> {
        Some(Rat::from_big(q.clone()))
    }
    fn format(&self, a: &Rat) -> String {
        a.to_string()
    }
}

// ---------------------------------------------------------------------------
// Prime fields

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        base = acc as u32;
        base
    }

    fn reduce_big(&self, n: &BigInt) -> u32 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("residue fits")
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn descriptor(&self) -> CoefficientField {
        CoefficientField::PrimeField { p: self.p }
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn from_rational(&self, q: &BigRational) -> Option<u32> {
        let d = self.reduce_big(q.denom());
        if d == 0 {
            return None;
        }
        let n = self.reduce_big(q.numer());
        Some(self.mul(&n, &self.inv(&d)))
    }
    fn format(&self, a: &u32) -> String {
        // symmetric representative reads better for small negatives
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
}

/// Converts a `BigRational` to `Rat`. Used at the boundary to Laurent data.
pub fn rat_from_big(q: BigRational) -> Rat {
    Rat::from_big(q)
}

pub fn big_abs_le(q: &BigRational, bound: i64) -> bool {
    q.abs() <= BigRational::from_integer(BigInt::from(bound))
}
