//! Hilbert series as rational functions `h(t) / ∏(1 − t^s)` with a Laurent
//! polynomial numerator over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Monomial;

/// `Σ c_i t^{lo+i}`, trimmed so that the first and last coefficients are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, c: BigInt) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    pub fn from_coeffs(lo: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(lo: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(lo, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_degree(&self) -> i64 {
        self.lo
    }

    pub fn high_degree(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.lo;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.high_degree().max(other.high_degree());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + other.coeff(e)).collect();
        Self::from_coeffs(lo, coeffs)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        Self::from_coeffs(self.lo, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(self.lo + other.lo, coeffs)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplication by `1 − t^s`.
    pub fn mul_one_minus(&self, s: u32) -> LaurentPoly {
        self.sub(&self.shift(s as i64))
    }

    /// Exact quotient by `1 − t^s`, if it exists.
    pub fn div_one_minus(&self, s: u32) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let s = s as usize;
        let n = self.coeffs.len();
        if n <= s {
            return None;
        }
        // (1 − t^s)·q = p  ⇔  q_i = p_i + q_{i−s}
        let mut q = vec![BigInt::zero(); n - s];
        for i in 0..n - s {
            q[i] = if i >= s {
                &self.coeffs[i] + &q[i - s]
            } else {
                self.coeffs[i].clone()
            };
        }
        for i in n - s..n {
            let expected = if i >= s { -&q[i - s] } else { BigInt::zero() };
            if self.coeffs[i] != expected {
                return None;
            }
        }
        Some(Self::from_coeffs(self.lo, q))
    }

    /// Exact quotient over the integers, if it exists.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dn = d.coeffs.len();
        let lead = &d.coeffs[dn - 1];
        let qn = rem.len() - dn + 1;
        let mut q = vec![BigInt::zero(); qn];
        for k in (0..qn).rev() {
            let top = &rem[k + dn - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let c = top / lead;
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.lo - d.lo, q))
    }

    /// Substitution `t ↦ t^{-1}`.
    pub fn invert(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            lo: -self.high_degree(),
            coeffs,
        }
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplicity of `t = 1` as a root, with the cofactor.
    pub fn split_root_at_one(&self) -> (u32, LaurentPoly) {
        let mut p = self.clone();
        let mut v = 0;
        while !p.is_zero() && p.eval_one().is_zero() {
            p = p.div_one_minus(1).expect("root at one divides exactly");
            v += 1;
        }
        (v, p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => "t".into(),
                e => format!("t^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// `numerator / ∏_{s ∈ denominator} (1 − t^s)`, kept in canonical form: no factor
/// `1 − t^s` of the denominator divides the numerator exactly.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    num: LaurentPoly,
    den: Vec<u32>,
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        let lhs = other
            .den
            .iter()
            .fold(self.num.clone(), |p, &s| p.mul_one_minus(s));
        let rhs = self
            .den
            .iter()
            .fold(other.num.clone(), |p, &s| p.mul_one_minus(s));
        lhs == rhs
    }
}

impl Eq for HilbertSeries {}

impl HilbertSeries {
    pub fn new(num: LaurentPoly, den: Vec<u32>) -> Result<Self> {
        if den.contains(&0) {
            return Err(Error::InvalidInput(
                "denominator exponents must be positive".into(),
            ));
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, mut den: Vec<u32>) -> Self {
        den.sort_unstable_by(|a, b| b.cmp(a));
        if num.is_zero() {
            return HilbertSeries {
                num,
                den: Vec::new(),
            };
        }
        let mut num = num;
        let mut kept = Vec::with_capacity(den.len());
        for s in den {
            match num.div_one_minus(s) {
                Some(q) => num = q,
                None => kept.push(s),
            }
        }
        HilbertSeries { num, den: kept }
    }

    pub fn zero() -> Self {
        HilbertSeries {
            num: LaurentPoly::zero(),
            den: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::polynomial(LaurentPoly::one())
    }

    pub fn polynomial(num: LaurentPoly) -> Self {
        HilbertSeries {
            num,
            den: Vec::new(),
        }
    }

    /// `t^k`.
    pub fn monomial(k: i64) -> Self {
        Self::polynomial(LaurentPoly::monomial(k, BigInt::one()))
    }

    /// Hilbert series of the weighted polynomial ring with the given variable degrees.
    pub fn polynomial_ring(weights: &[u32]) -> Self {
        Self::canonical(LaurentPoly::one(), weights.to_vec())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &[u32] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the series is a Laurent polynomial (finitely many nonzero coefficients).
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Value at `t = 1` of a Laurent-polynomial series (the length of a finite-length module).
    pub fn value_at_one(&self) -> Option<BigInt> {
        self.is_laurent_polynomial().then(|| self.num.eval_one())
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Common denominator: multiset union with maximal multiplicities.
        let mut rest_a = other.den.clone();
        let mut extra_for_self = Vec::new();
        let mut common = Vec::new();
        for &s in &self.den {
            if let Some(pos) = rest_a.iter().position(|&x| x == s) {
                rest_a.remove(pos);
            }
            common.push(s);
        }
        for &s in &rest_a {
            extra_for_self.push(s);
            common.push(s);
        }
        let mut extra_for_other = self.den.clone();
        for &s in &other.den {
            if let Some(pos) = extra_for_other.iter().position(|&x| x == s) {
                extra_for_other.remove(pos);
            }
        }
        let a = extra_for_self
            .iter()
            .fold(self.num.clone(), |p, &s| p.mul_one_minus(s));
        let b = extra_for_other
            .iter()
            .fold(other.num.clone(), |p, &s| p.mul_one_minus(s));
        Self::canonical(a.add(&b), common)
    }

    pub fn neg(&self) -> HilbertSeries {
        HilbertSeries {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        Self::canonical(self.num.mul(&other.num), den)
    }

    pub fn scale(&self, c: &BigInt) -> HilbertSeries {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> HilbertSeries {
        HilbertSeries {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Substitution `t ↦ t^{-1}`, using `1 − t^{-s} = −t^{-s}(1 − t^s)`.
    pub fn invert_t(&self) -> HilbertSeries {
        let mut num = self.num.invert();
        let total: i64 = self.den.iter().map(|&s| s as i64).sum();
        num = num.shift(total);
        if self.den.len() % 2 == 1 {
            num = num.neg();
        }
        Self::canonical(num, self.den.clone())
    }

    /// Exact quotient. Cyclotomic factors of the divisor's numerator are turned
    /// into `(1 − t^d)` denominators; whatever remains must divide the dividend's
    /// numerator exactly.
    pub fn div(&self, other: &HilbertSeries) -> Result<HilbertSeries> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (a/A) / (b/B) = a·B / (A·b)
        let mut num = other
            .den
            .iter()
            .fold(self.num.clone(), |p, &s| p.mul_one_minus(s));
        let mut den = self.den.clone();
        let mut b = other.num.clone();
        // t^k unit
        let k = b.low_degree();
        b = b.shift(-k);
        num = num.shift(-k);
        // φ(d) ≥ sqrt(d/2), so no cyclotomic factor has index above 2·deg².
        let limit = 2 * b.high_degree().pow(2) as u32 + 2;
        for d in 1..=limit {
            if b.high_degree() == 0 {
                break;
            }
            let phi = cyclotomic(d);
            if phi.high_degree() > b.high_degree() {
                continue;
            }
            while let Some(q) = b.div_exact(&phi) {
                b = q;
                // 1/Φ_d = −∏_{e|d, e<d} Φ_e / (1 − t^d)
                for e in (1..d).filter(|e| d % e == 0) {
                    num = num.mul(&cyclotomic(e));
                }
                num = num.neg();
                den.push(d);
            }
        }
        match num.div_exact(&b) {
            Some(q) => Ok(Self::canonical(q, den)),
            None => Err(Error::NotRepresentable(format!("({}) / ({})", self, other))),
        }
    }

    /// Power-series coefficients of `t^d` for `d` in `lo..=hi`.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        if hi < lo {
            return Vec::new();
        }
        // Expand 1/∏(1 − t^s) up to degree hi − num.lo.
        let start = self.num.low_degree();
        let span = (hi - start).max(-1);
        let mut inv = vec![BigInt::zero(); (span + 1).max(0) as usize];
        if !inv.is_empty() {
            inv[0] = BigInt::one();
            for &s in &self.den {
                let s = s as usize;
                for i in s..inv.len() {
                    let prev = inv[i - s].clone();
                    inv[i] += prev;
                }
            }
        }
        (lo..=hi)
            .map(|d| {
                let mut acc = BigInt::zero();
                for (e, c) in self.num.terms() {
                    let j = d - e;
                    if j >= 0 && (j as usize) < inv.len() {
                        acc += c * &inv[j as usize];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn coefficient(&self, d: i64) -> BigInt {
        self.coefficients(d, d).pop().unwrap()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|&s| {
                if s == 1 {
                    "(1 - t)".to_string()
                } else {
                    format!("(1 - t^{s})")
                }
            })
            .collect();
        write!(f, "({}) / {}", self.num, den.join(""))
    }
}

struct Coeff<'a>(&'a BigInt);

impl Serialize for Coeff<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for HilbertSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Num<'a>(&'a LaurentPoly);
        impl Serialize for Num<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let terms: Vec<_> = self.0.terms().collect();
                let mut seq = s.serialize_seq(Some(terms.len()))?;
                for (e, c) in terms {
                    seq.serialize_element(&(e, Coeff(c)))?;
                }
                seq.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("numerator", &Num(&self.num))?;
        m.serialize_entry("denominator", &self.den)?;
        m.end()
    }
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u32) -> LaurentPoly {
    let mut p = LaurentPoly::one().mul_one_minus(d).neg();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        p = p
            .div_exact(&cyclotomic(e))
            .expect("cyclotomic factor divides t^d - 1");
    }
    p
}

/// Numerator `N` with `H(Q/I) = N / ∏(1 − t^{w_i})` for the monomial ideal `I`
/// generated by `gens` in the weighted polynomial ring with variable degrees `weights`.
pub fn monomial_ideal_numerator(gens: &[Monomial], weights: &[u32]) -> Vec<i128> {
    let exps: Vec<Vec<u16>> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    numerator_rec(minimalize(exps), weights)
}

fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

fn mono_degree(e: &[u16], weights: &[u32]) -> usize {
    e.iter()
        .zip(weights)
        .map(|(&a, &w)| a as usize * w as usize)
        .sum()
}

fn poly_add(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn numerator_rec(gens: Vec<Vec<u16>>, weights: &[u32]) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    let n = weights.len();
    // Pick a variable occurring in at least two generators.
    let mut pivot_var = None;
    for v in 0..n {
        if gens.iter().filter(|g| g[v] > 0).count() >= 2 {
            pivot_var = Some(v);
            break;
        }
    }
    let Some(v) = pivot_var else {
        // Pairwise coprime: ∏ (1 − t^{deg m}).
        let mut acc = vec![1i128];
        for g in &gens {
            let d = mono_degree(g, weights);
            let mut next = vec![0i128; acc.len() + d];
            for (i, &c) in acc.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    };
    let k = gens
        .iter()
        .filter(|g| g[v] > 0)
        .map(|g| g[v])
        .min()
        .unwrap();
    let mut p = vec![0u16; n];
    p[v] = k;
    // I + (p)
    let mut sum: Vec<Vec<u16>> = gens.iter().filter(|g| g[v] == 0).cloned().collect();
    sum.push(p.clone());
    // I : p
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[v] = h[v].saturating_sub(k);
            h
        })
        .collect();
    let mut out = numerator_rec(minimalize(sum), weights);
    let tail = numerator_rec(minimalize(colon), weights);
    poly_add(&mut out, &tail, mono_degree(&p, weights));
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Hilbert series of `⊕_j Q(−twists_j) / (monomial submodule)`, where
/// `lead[j]` generates the monomial ideal in component `j`.
pub fn series_from_leading_terms(
    twists: &[i64],
    lead: &[Vec<Monomial>],
    weights: &[u32],
) -> HilbertSeries {
    let mut terms = Vec::new();
    for (j, lts) in lead.iter().enumerate() {
        let n = monomial_ideal_numerator(lts, weights);
        for (i, c) in n.into_iter().enumerate() {
            if c != 0 {
                terms.push((twists[j] + i as i64, BigInt::from(c)));
            }
        }
    }
    HilbertSeries::canonical(LaurentPoly::from_terms(terms), weights.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(lo: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(lo, c)
    }

    fn hs(lo: i64, c: &[i64], den: &[u32]) -> HilbertSeries {
        HilbertSeries::new(lp(lo, c), den.to_vec()).unwrap()
    }

    /// Power-series coefficients by naive long division, independent of `coefficients`.
    fn naive_coeffs(h: &HilbertSeries, upto: i64) -> Vec<BigInt> {
        let mut den = LaurentPoly::one();
        for &s in h.denominator() {
            den = den.mul_one_minus(s);
        }
        // num = den · series; solve for series coefficients from degree num.lo.
        let lo = h.numerator().low_degree();
        let mut out: Vec<BigInt> = Vec::new();
        for d in lo..=upto {
            let mut c = h.numerator().coeff(d);
            for (k, prev) in out.iter().enumerate() {
                let e = d - (lo + k as i64);
                c -= den.coeff(e) * prev;
            }
            out.push(c);
        }
        out
    }

    #[test]
    fn polynomial_ring_and_hypersurface() {
        let q = HilbertSeries::polynomial_ring(&[1, 1]);
        assert_eq!(q.coefficients(0, 5), [1, 2, 3, 4, 5, 6].map(BigInt::from));
        // Q/(x1 x2): (1 − t²)/(1 − t)² reduces to (1 + t)/(1 − t).
        let r = hs(0, &[1, 0, -1], &[1, 1]);
        assert_eq!(r.numerator(), &lp(0, &[1, 1]));
        assert_eq!(r.denominator(), &[1]);
        assert_eq!(r.coefficients(0, 4), [1, 2, 2, 2, 2].map(BigInt::from));
    }

    #[test]
    fn invert_t_examples() {
        // 1/(1−t) ↦ −t/(1−t): check by clearing denominators, (1 − t)·(−t/(1 − t)) = −t
        // and 1/(1 − t^{-1}) = t/(t − 1).
        let a = hs(0, &[1], &[1]);
        let inv = a.invert_t();
        assert_eq!(inv, hs(1, &[-1], &[1]));
        // (1 + t^{-1})/(1 − t^{-1}) = (t + 1)/(t − 1) = −(1 + t)/(1 − t)
        let r = hs(0, &[1, 1], &[1]);
        assert_eq!(r.invert_t(), hs(0, &[-1, -1], &[1]));
    }

    #[test]
    fn twist_shifts_series() {
        let r = hs(0, &[1, 1], &[1]);
        let twisted = r.shift(-3);
        assert_eq!(twisted.coefficient(-3), BigInt::from(1));
        assert_eq!(twisted.coefficient(-2), BigInt::from(2));
    }

    #[test]
    fn division() {
        let a = hs(0, &[1, 1], &[1]);
        assert_eq!(a.div(&a).unwrap(), HilbertSeries::one());
        assert!(matches!(
            a.div(&HilbertSeries::zero()),
            Err(Error::DivisionByZero)
        ));
        // 1/(1 + t) = (1 − t)/(1 − t²)
        let b = HilbertSeries::polynomial(lp(0, &[1, 1]));
        assert_eq!(HilbertSeries::one().div(&b).unwrap(), hs(0, &[1, -1], &[2]));
        // 1/(2 + t) is not a Hilbert-type series.
        let c = HilbertSeries::polynomial(lp(0, &[2, 1]));
        assert!(matches!(
            HilbertSeries::one().div(&c),
            Err(Error::NotRepresentable(_))
        ));
        // (2 + t)/(2 + t)
        let d = HilbertSeries::polynomial(lp(0, &[4, 4, 1]));
        assert_eq!(d.div(&c).unwrap(), c);
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), lp(0, &[-1, 1]));
        assert_eq!(cyclotomic(2), lp(0, &[1, 1]));
        assert_eq!(cyclotomic(6), lp(0, &[1, -1, 1]));
    }

    #[test]
    fn monomial_ideal_numerators() {
        // Q/(x y) over two variables of degree 1: 1 − t².
        let m = Monomial::from_exponents(&[1, 1], &[1, 1]);
        assert_eq!(monomial_ideal_numerator(&[m], &[1, 1]), vec![1, 0, -1]);
        // (x², xy, y²): 1 − 3t² + 2t³, dims 1, 2, 0, ...
        let gens = [[2, 0], [1, 1], [0, 2]].map(|e| Monomial::from_exponents(&e, &[1, 1]));
        let n = monomial_ideal_numerator(&gens, &[1, 1]);
        assert_eq!(n, vec![1, 0, -3, 2]);
        let lead = vec![gens.to_vec()];
        let h = series_from_leading_terms(&[0], &lead, &[1, 1]);
        assert_eq!(h, HilbertSeries::polynomial(lp(0, &[1, 2])));
    }

    fn arb_series() -> impl Strategy<Value = HilbertSeries> {
        (
            -3i64..3,
            prop::collection::vec(-4i64..5, 1..5),
            prop::collection::vec(1u32..4, 0..3),
        )
            .prop_map(|(lo, c, den)| hs(lo, &c, &den))
    }

    proptest! {
        #[test]
        fn canonical_form_is_idempotent(h in arb_series()) {
            let again = HilbertSeries::new(h.numerator().clone(), h.denominator().to_vec()).unwrap();
            prop_assert_eq!(again.numerator(), h.numerator());
            prop_assert_eq!(again.denominator(), h.denominator());
        }

        #[test]
        fn invert_t_is_involution(h in arb_series()) {
            prop_assert_eq!(h.invert_t().invert_t(), h);
        }

        #[test]
        fn sum_and_product_match_coefficients(a in arb_series(), b in arb_series()) {
            let lo = a.numerator().low_degree().min(b.numerator().low_degree());
            let s = a.add(&b);
            let ca = a.coefficients(lo, lo + 8);
            let cb = b.coefficients(lo, lo + 8);
            let cs = s.coefficients(lo, lo + 8);
            for i in 0..ca.len() {
                prop_assert_eq!(&cs[i], &(&ca[i] + &cb[i]));
            }
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&b).div(&a).unwrap(), b.clone());
            }
            prop_assert_eq!(a.sub(&a), HilbertSeries::zero());
        }

        #[test]
        fn coefficients_match_long_division(h in arb_series()) {
            let lo = h.numerator().low_degree();
            let naive = naive_coeffs(&h, lo + 10);
            prop_assert_eq!(h.coefficients(lo, lo + 10), naive);
        }
    }
}
