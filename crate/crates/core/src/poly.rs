//! Weighted polynomial rings and sparse graded polynomials.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::Field;

pub type Exp = u16;

/// Dense exponent vector with its cached weighted degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[Exp; 8]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn from_exponents(exps: &[Exp], weights: &[u32]) -> Monomial {
        assert_eq!(exps.len(), weights.len());
        let deg = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg,
        }
    }

    pub fn exponents(&self) -> &[Exp] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn total_exponent(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    /// Product. Exponent overflow is a hard error.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: SmallVec<[Exp; 8]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let deg = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Degree-compatible monomial orders on a weighted polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Weighted degree, ties broken reverse lexicographically.
    #[default]
    WeightedRevLex,
    /// Weighted degree, ties broken lexicographically.
    WeightedLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.deg.cmp(&b.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        match self {
            MonomialOrder::WeightedRevLex => {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::WeightedLex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    degrees: Vec<u32>,
    order: MonomialOrder,
}

#[derive(Clone, Debug)]
pub struct Term<F: Field> {
    pub mono: Monomial,
    pub coeff: F::Elem,
}

impl<F: Field> PartialEq for Term<F> {
    fn eq(&self, other: &Self) -> bool {
        self.mono == other.mono && self.coeff == other.coeff
    }
}

/// Sparse polynomial; terms strictly decreasing in the ring's order, no zero coefficients.
#[derive(Clone, Debug)]
pub struct Poly<F: Field> {
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    /// Builds from terms already sorted and nonzero.
    pub fn from_sorted(terms: Vec<Term<F>>) -> Self {
        Poly { terms }
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(
        field: F,
        names: Vec<String>,
        degrees: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<Self> {
        if names.len() != degrees.len() {
            return Err(Error::InvalidInput(
                "one degree per variable is required".into(),
            ));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidInput(format!(
                    "duplicate variable name `{n}`"
                )));
            }
        }
        if let Some((n, _)) = names.iter().zip(&degrees).find(|(_, &d)| d == 0) {
            return Err(Error::InvalidInput(format!(
                "variable `{n}` must have positive degree"
            )));
        }
        field.descriptor().validate()?;
        Ok(PolyRing {
            field,
            names,
            degrees,
            order,
        })
    }

    /// Standard-graded ring `k[x1..xn]` in revlex.
    pub fn standard(field: F, names: &[&str]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let degrees = vec![1; names.len()];
        Self::new(field, names, degrees, MonomialOrder::default())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn monomial(&self, exps: &[Exp]) -> Monomial {
        Monomial::from_exponents(exps, &self.degrees)
    }

    pub fn one_mono(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var_mono(&self, i: usize) -> Monomial {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(&e)
    }

    /// All monomials of weighted degree `d`, in decreasing monomial order.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let n = self.nvars();
        let mut exps = vec![0 as Exp; n];
        fn rec(i: usize, left: u32, w: &[u32], exps: &mut Vec<Exp>, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(Monomial::from_exponents(exps, w));
                }
                return;
            }
            let mut e = 0;
            loop {
                exps[i] = e as Exp;
                rec(i + 1, left - e * w[i], w, exps, out);
                if (e + 1) * w[i] > left {
                    break;
                }
                e += 1;
            }
            exps[i] = 0;
        }
        rec(0, d as u32, &self.degrees, &mut exps, &mut out);
        out.sort_by(|a, b| self.cmp_mono(b, a));
        out
    }

    pub fn zero(&self) -> Poly<F> {
        Poly::zero()
    }

    pub fn one(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        self.term(self.one_mono(), c)
    }

    pub fn term(&self, mono: Monomial, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term { mono, coeff: c }],
            }
        }
    }

    pub fn var(&self, i: usize) -> Poly<F> {
        self.term(self.var_mono(i), self.field.one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Poly<F> {
        let mut v: Vec<Term<F>> = terms
            .into_iter()
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        v.sort_by(|a, b| self.cmp_mono(&b.mono, &a.mono));
        let mut out: Vec<Term<F>> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = self.field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !self.field.is_zero(&t.coeff));
        Poly { terms: out }
    }

    pub fn add(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        self.add_scaled(f, g, &self.field.one(), &self.one_mono())
    }

    pub fn sub(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        self.add_scaled(f, g, &self.field.neg(&self.field.one()), &self.one_mono())
    }

    pub fn neg(&self, f: &Poly<F>) -> Poly<F> {
        self.scale(f, &self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, f: &Poly<F>, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        let terms = f
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.clone(),
                coeff: self.field.mul(&t.coeff, c),
            })
            .collect();
        Poly { terms }
    }

    pub fn mul_term(&self, f: &Poly<F>, m: &Monomial, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        let terms = f
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.mul(m),
                coeff: self.field.mul(&t.coeff, c),
            })
            .collect();
        Poly { terms }
    }

    /// `f + c·m·g`, merging sorted term lists.
    pub fn add_scaled(&self, f: &Poly<F>, g: &Poly<F>, c: &F::Elem, m: &Monomial) -> Poly<F> {
        let k = &self.field;
        if k.is_zero(c) || g.is_zero() {
            return f.clone();
        }
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.mul(m),
                coeff: k.mul(&t.coeff, c),
            })
            .peekable();
        while i < f.terms.len() || gi.peek().is_some() {
            match (f.terms.get(i), gi.peek()) {
                (Some(a), Some(b)) => match self.cmp_mono(&a.mono, &b.mono) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => out.push(gi.next().unwrap()),
                    Ordering::Equal => {
                        let s = k.add(&a.coeff, &b.coeff);
                        if !k.is_zero(&s) {
                            out.push(Term {
                                mono: a.mono.clone(),
                                coeff: s,
                            });
                        }
                        i += 1;
                        gi.next();
                    }
                },
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => out.push(gi.next().unwrap()),
                (None, None) => unreachable!(),
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        let (short, long) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Poly::zero();
        for t in &short.terms {
            acc = self.add_scaled(&acc, long, &t.coeff, &t.mono);
        }
        acc
    }

    pub fn pow(&self, f: &Poly<F>, e: u32) -> Poly<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// The weighted degree `d` if every term has degree `d`; the zero polynomial
    /// counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self, f: &Poly<F>) -> Option<u32> {
        let Some(first) = f.terms.first() else {
            return Some(0);
        };
        let d = first.mono.degree();
        f.terms.iter().all(|t| t.mono.degree() == d).then_some(d)
    }

    /// Monic rescaling (leading coefficient 1).
    pub fn monic(&self, f: &Poly<F>) -> Poly<F> {
        match f.leading() {
            None => Poly::zero(),
            Some(t) => self.scale(f, &self.field.inv(&t.coeff)),
        }
    }

    pub fn format_mono(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.names.iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }

    pub fn format(&self, f: &Poly<F>) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, t) in f.terms.iter().enumerate() {
            let mut c = self.field.format(&t.coeff);
            let negative = c.starts_with('-');
            if negative {
                c.remove(0);
            }
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let m = self.format_mono(&t.mono);
            if m.is_empty() {
                s.push_str(&c);
            } else if c == "1" {
                s.push_str(&m);
            } else if c.contains('/') {
                s.push_str(&format!("({c})*{m}"));
            } else {
                s.push_str(&format!("{c}*{m}"));
            }
        }
        s
    }

    pub fn display<'a>(&'a self, f: &'a Poly<F>) -> impl fmt::Display + 'a {
        struct D<'a, F: Field>(&'a PolyRing<F>, &'a Poly<F>);
        impl<F: Field> fmt::Display for D<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qring() -> PolyRing<Rationals> {
        PolyRing::standard(Rationals, &["x", "y"]).unwrap()
    }

    #[test]
    fn construction_errors() {
        let dup = PolyRing::new(
            Rationals,
            vec!["x".into(), "x".into()],
            vec![1, 1],
            MonomialOrder::default(),
        );
        assert!(dup.is_err());
        let zero = PolyRing::new(
            Rationals,
            vec!["x".into()],
            vec![0],
            MonomialOrder::default(),
        );
        assert!(zero.is_err());
    }

    #[test]
    fn weighted_degrees() {
        let r = PolyRing::standard(Rationals, &["x"]).unwrap();
        assert_eq!(r.monomial(&[3]).degree(), 3);
        let f = PrimeField::new(32003).unwrap();
        let r = PolyRing::new(
            f,
            vec!["x".into(), "y".into()],
            vec![2, 3],
            MonomialOrder::default(),
        )
        .unwrap();
        let xy = r.mul(&r.var(0), &r.var(1));
        assert_eq!(r.homogeneous_degree(&xy), Some(5));
        // x^a y^b with 2a + 3b = 12: (6,0), (3,2), (0,4)
        assert_eq!(r.monomials_of_degree(12).len(), 3);
        assert!(r.monomials_of_degree(1).is_empty());
        let q = qring();
        assert_eq!(q.monomials_of_degree(5).len(), 6);
    }

    #[test]
    fn basic_arithmetic() {
        let r = qring();
        let (x, y) = (r.var(0), r.var(1));
        assert_eq!(r.format(&r.mul(&x, &y)), "x*y");
        let s = r.add(&r.add(&x, &y), &r.neg(&y));
        assert_eq!(s, x);
        assert!(r.mul(&r.zero(), &x).is_zero());
        assert_eq!(r.homogeneous_degree(&r.zero()), Some(0));
        assert_eq!(r.homogeneous_degree(&r.add(&x, &r.mul(&x, &y))), None);
    }

    #[test]
    fn revlex_order() {
        let r = PolyRing::standard(Rationals, &["x", "y", "z"]).unwrap();
        // x*z < y^2 in grevlex
        let xz = r.monomial(&[1, 0, 1]);
        let y2 = r.monomial(&[0, 2, 0]);
        assert_eq!(r.cmp_mono(&xz, &y2), Ordering::Less);
        let lex = PolyRing::new(
            Rationals,
            r.names().to_vec(),
            vec![1, 1, 1],
            MonomialOrder::WeightedLex,
        )
        .unwrap();
        assert_eq!(lex.cmp_mono(&xz, &y2), Ordering::Greater);
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn exponent_overflow_is_fatal() {
        let r = qring();
        let m = r.monomial(&[Exp::MAX, 0]);
        let _ = m.mul(&r.var_mono(0));
    }
}
