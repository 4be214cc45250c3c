//! Laurent expansions of rational functions around `t = 1`.
//!
//! With `u = 1 − t`, a series is written `Σ_m b_m u^m`. The coefficient of
//! `(t − 1)^n` is `a_n = (−1)^n b_n`, so `g^n = (−1)^n a_{−n} = b_{−n}`: the
//! signed coefficients are read off directly in the variable `u`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;

/// Order of a Laurent expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(i64),
    /// The zero function.
    Infinite,
    /// Every coefficient up to the bound cancelled; the order is larger than it.
    Exceeds(i64),
}

impl Order {
    /// Whether the order is known to be `> k`, known to be `≤ k`, or undetermined.
    pub fn greater_than(self, k: i64) -> Option<bool> {
        match self {
            Order::Finite(o) => Some(o > k),
            Order::Infinite => Some(true),
            Order::Exceeds(b) => (b >= k).then_some(true),
        }
    }

    /// Whether the order is known to be `≥ k`.
    pub fn at_least(self, k: i64) -> Option<bool> {
        self.greater_than(k - 1)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Finite(o) => Some(o),
            _ => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(o) => write!(f, "{o}"),
            Order::Infinite => write!(f, "+inf"),
            Order::Exceeds(b) => write!(f, ">{b}"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(o) => s.serialize_i64(*o),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// `Σ_{m ≥ order} b_m u^m` known through `u^{order + precision}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentExpansion {
    order: Order,
    /// `b_{order}, b_{order+1}, ...`; empty unless the order is finite.
    coeffs: Vec<BigRational>,
}

impl LaurentExpansion {
    pub fn zero() -> Self {
        LaurentExpansion {
            order: Order::Infinite,
            coeffs: Vec::new(),
        }
    }

    /// Expansion of `φ` with `precision + 1` coefficients starting at the order.
    pub fn expand(phi: &HilbertSeries, precision: usize) -> LaurentExpansion {
        if phi.is_zero() {
            return Self::zero();
        }
        let n = precision + 1;
        let (v, cof) = phi.numerator().split_root_at_one();
        let order = v as i64 - phi.denominator().len() as i64;
        // cof(t) as a power series in u: Σ_e c_e (1 − u)^e, generalized binomials.
        let mut num = vec![BigRational::zero(); n];
        for (e, c) in cof.terms() {
            let c = BigRational::from_integer(c.clone());
            let mut binom = BigRational::one();
            for (i, slot) in num.iter_mut().enumerate() {
                // coefficient of u^i in (1 − u)^e is (−1)^i C(e, i)
                let term = if i % 2 == 0 {
                    binom.clone()
                } else {
                    -binom.clone()
                };
                *slot += &c * term;
                binom = binom * BigRational::from_integer(BigInt::from(e - i as i64))
                    / BigRational::from_integer(BigInt::from(i as i64 + 1));
            }
        }
        let mut series = num;
        for &s in phi.denominator() {
            series = div_series(&series, &unit_part(s, n));
        }
        LaurentExpansion {
            order: Order::Finite(order),
            coeffs: series,
        }
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `g^n`. Errors when `n` lies below the computed range.
    pub fn g(&self, n: i64) -> Result<BigRational> {
        let m = -n;
        match self.order {
            Order::Infinite => Ok(BigRational::zero()),
            Order::Exceeds(b) if m <= b => Ok(BigRational::zero()),
            Order::Exceeds(b) => Err(Error::Precision(format!(
                "g^{n} requested but only orders up to {b} are resolved"
            ))),
            Order::Finite(o) => {
                if m < o {
                    return Ok(BigRational::zero());
                }
                let i = (m - o) as usize;
                self.coeffs.get(i).cloned().ok_or_else(|| {
                    Error::Precision(format!(
                        "g^{n} lies beyond the expansion precision {}",
                        self.precision()
                    ))
                })
            }
        }
    }

    /// Coefficients `(n, g^n)` for all computed `n`, from the top down.
    pub fn g_values(&self) -> Vec<(i64, BigRational)> {
        match self.order {
            Order::Finite(o) => self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (-(o + i as i64), c.clone()))
                .collect(),
            _ => Vec::new(),
        }
    }

    fn highest_known(&self) -> Option<i64> {
        match self.order {
            Order::Finite(o) => Some(o + self.coeffs.len() as i64 - 1),
            Order::Exceeds(b) => Some(b),
            Order::Infinite => None,
        }
    }

    fn coeff_at(&self, m: i64) -> BigRational {
        match self.order {
            Order::Finite(o) if m >= o => self
                .coeffs
                .get((m - o) as usize)
                .cloned()
                .unwrap_or_else(BigRational::zero),
            _ => BigRational::zero(),
        }
    }

    pub fn add(&self, other: &LaurentExpansion) -> LaurentExpansion {
        let (lo_a, lo_b) = match (self.order, other.order) {
            (Order::Infinite, _) => return other.clone(),
            (_, Order::Infinite) => return self.clone(),
            (a, b) => (start(a), start(b)),
        };
        let hi = match (self.highest_known(), other.highest_known()) {
            (Some(a), Some(b)) => a.min(b),
            _ => unreachable!(),
        };
        let lo = lo_a.min(lo_b);
        let mut first = None;
        let mut coeffs = Vec::new();
        for m in lo..=hi {
            let c = self.coeff_at(m) + other.coeff_at(m);
            if first.is_none() {
                if c.is_zero() {
                    continue;
                }
                first = Some(m);
            }
            coeffs.push(c);
        }
        match first {
            Some(o) => LaurentExpansion {
                order: Order::Finite(o),
                coeffs,
            },
            None => LaurentExpansion {
                order: Order::Exceeds(hi),
                coeffs: Vec::new(),
            },
        }
    }

    pub fn neg(&self) -> LaurentExpansion {
        LaurentExpansion {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentExpansion) -> LaurentExpansion {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentExpansion) -> LaurentExpansion {
        match (self.order, other.order) {
            (Order::Infinite, _) | (_, Order::Infinite) => Self::zero(),
            (Order::Finite(a), Order::Finite(b)) => {
                let n = self.coeffs.len().min(other.coeffs.len());
                let mut coeffs = vec![BigRational::zero(); n];
                for i in 0..n {
                    for j in 0..n - i {
                        coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                    }
                }
                LaurentExpansion {
                    order: Order::Finite(a + b),
                    coeffs,
                }
            }
            (Order::Exceeds(a), Order::Finite(b)) | (Order::Finite(b), Order::Exceeds(a)) => {
                LaurentExpansion {
                    order: Order::Exceeds(a + b),
                    coeffs: Vec::new(),
                }
            }
            (Order::Exceeds(a), Order::Exceeds(b)) => LaurentExpansion {
                order: Order::Exceeds(a + b + 1),
                coeffs: Vec::new(),
            },
        }
    }

    pub fn div(&self, other: &LaurentExpansion) -> Result<LaurentExpansion> {
        match other.order {
            Order::Infinite => Err(Error::DivisionByZero),
            Order::Exceeds(b) => Err(Error::Precision(format!(
                "divisor order undetermined (> {b})"
            ))),
            Order::Finite(b) => match self.order {
                Order::Infinite => Ok(Self::zero()),
                Order::Exceeds(a) => Ok(LaurentExpansion {
                    order: Order::Exceeds(a - b),
                    coeffs: Vec::new(),
                }),
                Order::Finite(a) => {
                    let n = self.coeffs.len().min(other.coeffs.len());
                    let coeffs = div_series(&self.coeffs[..n], &other.coeffs[..n]);
                    Ok(LaurentExpansion {
                        order: Order::Finite(a - b),
                        coeffs,
                    })
                }
            },
        }
    }
}

/// Order of `φ` at `t = 1`.
pub fn order_of(phi: &HilbertSeries) -> Order {
    if phi.is_zero() {
        return Order::Infinite;
    }
    let (v, _) = phi.numerator().split_root_at_one();
    Order::Finite(v as i64 - phi.denominator().len() as i64)
}

/// `g^n(φ)`, expanding only as far as needed.
pub fn g_of(phi: &HilbertSeries, n: i64) -> BigRational {
    match order_of(phi) {
        Order::Finite(o) if -n >= o => LaurentExpansion::expand(phi, (-n - o) as usize)
            .g(n)
            .expect("expanded to the requested index"),
        _ => BigRational::zero(),
    }
}

fn start(o: Order) -> i64 {
    match o {
        Order::Finite(o) => o,
        Order::Exceeds(b) => b + 1,
        Order::Infinite => i64::MAX,
    }
}

/// `(1 − (1 − u)^s)/u = Σ_{j<s} C(s, j+1) (−1)^j u^j`, truncated to `n` terms.
fn unit_part(s: u32, n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n];
    let mut binom = BigInt::from(s); // C(s, 1)
    for (j, slot) in out.iter_mut().enumerate().take(s as usize) {
        let v = if j % 2 == 0 {
            binom.clone()
        } else {
            -binom.clone()
        };
        *slot = BigRational::from_integer(v);
        binom = binom * BigInt::from(s as i64 - j as i64 - 1) / BigInt::from(j as i64 + 2);
    }
    out
}

/// Power-series quotient `a / b` with `b_0 ≠ 0`, truncated to `a.len()` terms.
fn div_series(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len();
    let inv0 = b[0].recip();
    let mut q: Vec<BigRational> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = a[i].clone();
        for j in 1..=i.min(b.len() - 1) {
            acc -= &b[j] * &q[i - j];
        }
        q.push(acc * &inv0);
    }
    q
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Serialize for LaurentExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("order", &self.order)?;
        let coeffs: BTreeMap<String, String> = self
            .g_values()
            .into_iter()
            .map(|(n, g)| (n.to_string(), format_rational(&g)))
            .collect();
        m.serialize_entry("coefficients", &coeffs)?;
        m.end()
    }
}

impl fmt::Display for LaurentExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {}", self.order)?;
        for (n, g) in self.g_values() {
            if !g.is_zero() || n == -self.order.finite().unwrap_or(0) {
                write!(f, ", g^{n} = {}", format_rational(&g))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::LaurentPoly;
    use proptest::prelude::*;

    fn hs(lo: i64, c: &[i64], den: &[u32]) -> HilbertSeries {
        HilbertSeries::new(LaurentPoly::from_i64(lo, c), den.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn free_polynomial_ring() {
        let e = LaurentExpansion::expand(&hs(0, &[1], &[1, 1]), 4);
        assert_eq!(e.order(), Order::Finite(-2));
        assert_eq!(e.g(2).unwrap(), q(1, 1));
        assert_eq!(e.g(1).unwrap(), q(0, 1));
        assert_eq!(e.g(0).unwrap(), q(0, 1));
    }

    #[test]
    fn hypersurface_ring() {
        // (1 + t)/(1 − t) = (2 − u)/u
        let e = LaurentExpansion::expand(&hs(0, &[1, 1], &[1]), 3);
        assert_eq!(e.order(), Order::Finite(-1));
        assert_eq!(e.g(1).unwrap(), q(2, 1));
        assert_eq!(e.g(0).unwrap(), q(-1, 1));
        assert_eq!(e.g(-1).unwrap(), q(0, 1));
    }

    #[test]
    fn betti_generating_function() {
        // t^r/(1 − t²)^r: order −r and g^r = 2^{−r} (the unit part at t = 1 is 1/2 per factor).
        for r in 1..=3u32 {
            let h = hs(r as i64, &[1], &vec![2; r as usize]);
            let e = LaurentExpansion::expand(&h, 4);
            assert_eq!(e.order(), Order::Finite(-(r as i64)));
            assert_eq!(e.g(r as i64).unwrap(), q(1, 1 << r));
        }
    }

    #[test]
    fn cancellation_and_quotients() {
        let a = LaurentExpansion::expand(&hs(0, &[1], &[1]), 3);
        let b = LaurentExpansion::expand(&hs(0, &[-1], &[1]), 3);
        let s = a.add(&b);
        assert!(matches!(s.order(), Order::Exceeds(_)));
        assert_eq!(s.order().greater_than(-1), Some(true));
        let one = a.div(&a).unwrap();
        assert_eq!(one.order(), Order::Finite(0));
        assert_eq!(one.g(0).unwrap(), q(1, 1));
        assert_eq!(LaurentExpansion::zero().order(), Order::Infinite);
    }

    fn arb_series() -> impl Strategy<Value = HilbertSeries> {
        (
            -3i64..3,
            prop::collection::vec(-4i64..5, 1..5),
            prop::collection::vec(1u32..4, 0..3),
        )
            .prop_map(|(lo, c, den)| hs(lo, &c, &den))
            .prop_filter("nonzero", |h| !h.is_zero())
    }

    /// Evaluates the truncated expansion `Σ b_m u^m` as a series in `t` and
    /// compares with the exact value by clearing denominators: the residual must
    /// vanish to the stated precision at `t = 1`.
    fn residual_order(h: &HilbertSeries, e: &LaurentExpansion) -> i64 {
        // φ·u^{-o} − Σ_{i≤K} b_{o+i} u^i  has a zero of order ≥ K+1 at u = 0.
        // Clear: numerator(t) − den(t)·u^{-o}·P(u), all as polynomials in t.
        let o = e.order().finite().unwrap();
        let k = e.precision();
        let mut den = LaurentPoly::one();
        for &s in h.denominator() {
            den = den.mul_one_minus(s);
        }
        // Work with rationals: expand both sides in u at t = 1 − u to K+1 terms.
        let lhs =
            LaurentExpansion::expand(&HilbertSeries::polynomial(h.numerator().clone()), k + 8);
        let dexp = LaurentExpansion::expand(&HilbertSeries::polynomial(den), k + 8);
        let rebuilt = LaurentExpansion {
            order: Order::Finite(o),
            coeffs: e.coeffs.clone(),
        }
        .mul(&dexp);
        match lhs.sub(&rebuilt).order() {
            Order::Finite(x) => x,
            Order::Exceeds(b) => b + 1,
            Order::Infinite => i64::MAX,
        }
    }

    proptest! {
        #[test]
        fn expansion_resums(h in arb_series()) {
            let e = LaurentExpansion::expand(&h, 5);
            let o = e.order().finite().unwrap();
            let dlen = h.denominator().len() as i64;
            prop_assert!(residual_order(&h, &e) > o + 5 + dlen - 1);
        }

        #[test]
        fn orders_add_and_top_coefficients_multiply(a in arb_series(), b in arb_series()) {
            let ea = LaurentExpansion::expand(&a, 4);
            let eb = LaurentExpansion::expand(&b, 4);
            let ep = LaurentExpansion::expand(&a.mul(&b), 4);
            let (oa, ob) = (ea.order().finite().unwrap(), eb.order().finite().unwrap());
            prop_assert_eq!(ep.order(), Order::Finite(oa + ob));
            prop_assert_eq!(ep.g(-(oa + ob)).unwrap(), ea.g(-oa).unwrap() * eb.g(-ob).unwrap());
            prop_assert_eq!(ea.mul(&eb), ep);
            let es = LaurentExpansion::expand(&a.add(&b), 4);
            if let Some(os) = es.order().finite() {
                prop_assert!(os >= oa.min(ob));
            }
        }
    }
}
