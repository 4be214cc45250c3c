//! Sparse vectors in graded free modules over a polynomial ring.
//!
//! Terms are ordered position-over-term: a smaller component index is larger,
//! ties broken by the ring's monomial order. Terms are stored in decreasing order.

use std::cmp::Ordering;

use crate::field::Field;
use crate::poly::{Monomial, Poly, PolyRing, Term};

#[derive(Clone, Debug)]
pub struct VTerm<F: Field> {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: F::Elem,
}

impl<F: Field> PartialEq for VTerm<F> {
    fn eq(&self, other: &Self) -> bool {
        self.comp == other.comp && self.mono == other.mono && self.coeff == other.coeff
    }
}

#[derive(Clone, Debug)]
pub struct Vector<F: Field> {
    terms: Vec<VTerm<F>>,
}

impl<F: Field> PartialEq for Vector<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Default for Vector<F> {
    fn default() -> Self {
        Vector::zero()
    }
}

impl<F: Field> Vector<F> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[VTerm<F>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&VTerm<F>> {
        self.terms.first()
    }

    pub(crate) fn from_sorted(terms: Vec<VTerm<F>>) -> Self {
        Vector { terms }
    }

    /// Weighted degree of the (homogeneous) vector, given generator degrees.
    pub fn degree(&self, twists: &[i64]) -> Option<i64> {
        self.terms
            .first()
            .map(|t| t.mono.degree() as i64 + twists[t.comp])
    }

    pub fn homogeneous_degree(&self, twists: &[i64]) -> Option<i64> {
        let d = self.degree(twists)?;
        self.terms
            .iter()
            .all(|t| t.mono.degree() as i64 + twists[t.comp] == d)
            .then_some(d)
    }

    /// Component `i` as a polynomial.
    pub fn component(&self, i: usize) -> Poly<F> {
        Poly::from_sorted(
            self.terms
                .iter()
                .filter(|t| t.comp == i)
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        )
    }

    /// Drops components `< offset` and shifts the others down by `offset`.
    pub fn shift_down(&self, offset: usize) -> Vector<F> {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= offset)
                .map(|t| VTerm {
                    comp: t.comp - offset,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Re-indexes components through `map` (which must be monotone increasing).
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Vector<F> {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: map(t.comp),
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    pub fn max_component(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp).max()
    }
}

impl<F: Field> PolyRing<F> {
    pub fn cmp_vterm(&self, a: &VTerm<F>, b: &VTerm<F>) -> Ordering {
        match b.comp.cmp(&a.comp) {
            Ordering::Equal => self.cmp_mono(&a.mono, &b.mono),
            o => o,
        }
    }

    pub fn vector_from_terms(
        &self,
        terms: impl IntoIterator<Item = (usize, Monomial, F::Elem)>,
    ) -> Vector<F> {
        let k = self.field();
        let mut v: Vec<VTerm<F>> = terms
            .into_iter()
            .map(|(comp, mono, coeff)| VTerm { comp, mono, coeff })
            .collect();
        v.sort_by(|a, b| self.cmp_vterm(b, a));
        let mut out: Vec<VTerm<F>> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff = k.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !k.is_zero(&t.coeff));
        Vector { terms: out }
    }

    /// The vector `f·e_comp`.
    pub fn vector_from_poly(&self, comp: usize, f: &Poly<F>) -> Vector<F> {
        Vector {
            terms: f
                .terms()
                .iter()
                .map(|t| VTerm {
                    comp,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Column vector with polynomial entries `entries[i]` in component `i`.
    pub fn vector_from_polys(&self, entries: &[Poly<F>]) -> Vector<F> {
        let mut terms = Vec::new();
        for (i, f) in entries.iter().enumerate() {
            terms.extend(f.terms().iter().map(|t| VTerm {
                comp: i,
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            }));
        }
        Vector { terms }
    }

    pub fn vector_components(&self, v: &Vector<F>, rank: usize) -> Vec<Poly<F>> {
        let mut out: Vec<Vec<Term<F>>> = vec![Vec::new(); rank];
        for t in &v.terms {
            out[t.comp].push(Term {
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            });
        }
        out.into_iter().map(Poly::from_sorted).collect()
    }

    /// `f + c·m·g` where `m` is a monomial.
    pub fn vadd_scaled(
        &self,
        f: &[VTerm<F>],
        g: &[VTerm<F>],
        c: &F::Elem,
        m: &Monomial,
    ) -> Vec<VTerm<F>> {
        let k = self.field();
        let mut out = Vec::with_capacity(f.len() + g.len());
        let unit = m.is_one();
        let shifted = |t: &VTerm<F>| if unit { t.mono.clone() } else { t.mono.mul(m) };
        let mut i = 0;
        let mut j = 0;
        let mut bm = g.first().map(shifted);
        while i < f.len() && j < g.len() {
            let a = &f[i];
            let b = &g[j];
            let cur = bm.as_ref().unwrap();
            let ord = match b.comp.cmp(&a.comp) {
                Ordering::Equal => self.cmp_mono(&a.mono, cur),
                o => o,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(VTerm {
                        comp: b.comp,
                        mono: bm.take().unwrap(),
                        coeff: k.mul(&b.coeff, c),
                    });
                    j += 1;
                    bm = g.get(j).map(shifted);
                }
                Ordering::Equal => {
                    let s = k.add(&a.coeff, &k.mul(&b.coeff, c));
                    if !k.is_zero(&s) {
                        out.push(VTerm {
                            comp: a.comp,
                            mono: bm.take().unwrap(),
                            coeff: s,
                        });
                    }
                    i += 1;
                    j += 1;
                    bm = g.get(j).map(shifted);
                }
            }
        }
        out.extend(f[i..].iter().cloned());
        for b in &g[j..] {
            out.push(VTerm {
                comp: b.comp,
                mono: shifted(b),
                coeff: k.mul(&b.coeff, c),
            });
        }
        out
    }

    pub fn vadd(&self, f: &Vector<F>, g: &Vector<F>) -> Vector<F> {
        Vector {
            terms: self.vadd_scaled(&f.terms, &g.terms, &self.field().one(), &self.one_mono()),
        }
    }

    pub fn vsub(&self, f: &Vector<F>, g: &Vector<F>) -> Vector<F> {
        let m1 = self.field().neg(&self.field().one());
        Vector {
            terms: self.vadd_scaled(&f.terms, &g.terms, &m1, &self.one_mono()),
        }
    }

    pub fn vaxpy(&self, f: &Vector<F>, c: &F::Elem, m: &Monomial, g: &Vector<F>) -> Vector<F> {
        if self.field().is_zero(c) {
            return f.clone();
        }
        Vector {
            terms: self.vadd_scaled(&f.terms, &g.terms, c, m),
        }
    }

    pub fn vscale(&self, v: &Vector<F>, c: &F::Elem) -> Vector<F> {
        let k = self.field();
        if k.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: v
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp,
                    mono: t.mono.clone(),
                    coeff: k.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn vneg(&self, v: &Vector<F>) -> Vector<F> {
        self.vscale(v, &self.field().neg(&self.field().one()))
    }

    pub fn vmul_term(&self, v: &Vector<F>, m: &Monomial, c: &F::Elem) -> Vector<F> {
        let k = self.field();
        if k.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: v
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp,
                    mono: t.mono.mul(m),
                    coeff: k.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    /// Polynomial times vector.
    pub fn vmul_poly(&self, f: &Poly<F>, v: &Vector<F>) -> Vector<F> {
        let mut acc: Vec<VTerm<F>> = Vec::new();
        for t in f.terms() {
            acc = self.vadd_scaled(&acc, &v.terms, &t.coeff, &t.mono);
        }
        Vector { terms: acc }
    }

    /// `Σ_j coeffs[j]·cols[j]`.
    pub fn vlinear_combination(&self, coeffs: &[Poly<F>], cols: &[Vector<F>]) -> Vector<F> {
        let mut acc = Vector::zero();
        for (c, v) in coeffs.iter().zip(cols) {
            if !c.is_zero() && !v.is_zero() {
                acc = self.vadd(&acc, &self.vmul_poly(c, v));
            }
        }
        acc
    }

    pub fn vmonic(&self, v: &Vector<F>) -> Vector<F> {
        match v.leading() {
            None => Vector::zero(),
            Some(t) => {
                let inv = self.field().inv(&t.coeff);
                self.vscale(v, &inv)
            }
        }
    }

    pub fn format_vector(&self, v: &Vector<F>, rank: usize) -> String {
        let parts: Vec<String> = self
            .vector_components(v, rank)
            .iter()
            .map(|p| self.format(p))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}
