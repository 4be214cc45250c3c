//! Buchberger's algorithm for homogeneous submodules of graded free modules,
//! optionally modulo an ideal.
//!
//! The ideal is given by its (reduced) Gröbner basis and acts implicitly on every
//! component: the basis is taken to contain `h·e_j` for every ideal element `h`
//! and every component `j`. Pairs are processed degree by degree (normal
//! strategy). Input generators are handled as pseudo-pairs after the S-pairs of
//! their degree, so an input that survives reduction is a minimal generator of
//! the submodule modulo the ideal.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Poly, PolyRing};
use crate::vector::{VTerm, Vector};

#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Ignore pairs and generators of degree above this bound.
    pub degree_bound: Option<i64>,
    /// Tail-reduce the final basis.
    pub reduce: bool,
}

impl GbOptions {
    pub fn full() -> Self {
        GbOptions {
            degree_bound: None,
            reduce: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ModuleGb<F: Field> {
    ring: PolyRing<F>,
    twists: Vec<i64>,
    elems: Vec<Vector<F>>,
    lead: Vec<(usize, Monomial)>,
    by_comp: Vec<Vec<usize>>,
    ideal: Vec<Poly<F>>,
    ideal_lead: Vec<Monomial>,
    minimal: Vec<usize>,
    degree_bound: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    /// Two basis elements.
    Module = 0,
    /// Ideal element (first index) against a basis element.
    Ideal = 1,
    /// Input generator.
    Input = 2,
}

type PairKey = (i64, PairKind, usize, usize);

struct Builder<'a, F: Field> {
    gb: ModuleGb<F>,
    pairs: BTreeMap<PairKey, Monomial>,
    inputs: &'a [Vector<F>],
}

impl<F: Field> ModuleGb<F> {
    /// Gröbner basis of the submodule generated by `gens` (plus `ideal·F`) inside
    /// the free module with generator degrees `twists`.
    pub fn compute(
        ring: &PolyRing<F>,
        twists: &[i64],
        gens: &[Vector<F>],
        ideal: &[Poly<F>],
        opts: &GbOptions,
    ) -> Result<ModuleGb<F>> {
        let mut input_degrees = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if let Some(c) = g.max_component() {
                if c >= twists.len() {
                    return Err(Error::InvalidInput(format!(
                        "generator {i} has component {c} outside a free module of rank {}",
                        twists.len()
                    )));
                }
            }
            match g.homogeneous_degree(twists) {
                Some(d) => input_degrees.push(Some(d)),
                None if g.is_zero() => input_degrees.push(None),
                None => {
                    return Err(Error::NotHomogeneous(format!(
                        "generator {i} is not homogeneous: {}",
                        ring.format_vector(g, twists.len())
                    )))
                }
            }
        }
        let gb = ModuleGb {
            ring: ring.clone(),
            twists: twists.to_vec(),
            elems: Vec::new(),
            lead: Vec::new(),
            by_comp: vec![Vec::new(); twists.len()],
            ideal: ideal.iter().map(|h| ring.monic(h)).collect(),
            ideal_lead: ideal
                .iter()
                .map(|h| h.leading().expect("nonzero ideal element").mono.clone())
                .collect(),
            minimal: Vec::new(),
            degree_bound: opts.degree_bound,
        };
        let mut b = Builder {
            gb,
            pairs: BTreeMap::new(),
            inputs: gens,
        };
        for (i, d) in input_degrees.into_iter().enumerate() {
            if let Some(d) = d {
                if opts.degree_bound.is_none_or(|bd| d <= bd) {
                    b.pairs
                        .insert((d, PairKind::Input, i, 0), Monomial::one(ring.nvars()));
                }
            }
        }
        b.run();
        let mut gb = b.gb;
        if opts.reduce {
            gb.interreduce();
        }
        Ok(gb)
    }

    /// Gröbner basis of an ideal of `ring` (no ambient quotient).
    pub fn ideal(ring: &PolyRing<F>, gens: &[Poly<F>]) -> Result<ModuleGb<F>> {
        let vs: Vec<Vector<F>> = gens.iter().map(|f| ring.vector_from_poly(0, f)).collect();
        ModuleGb::compute(ring, &[0], &vs, &[], &GbOptions::full())
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn elements(&self) -> &[Vector<F>] {
        &self.elems
    }

    /// Elements of a rank-one basis as polynomials.
    pub fn polys(&self) -> Vec<Poly<F>> {
        self.elems.iter().map(|v| v.component(0)).collect()
    }

    pub fn ideal_elements(&self) -> &[Poly<F>] {
        &self.ideal
    }

    /// Indices (into the input list) of the inputs that are minimal generators.
    pub fn minimal_inputs(&self) -> &[usize] {
        &self.minimal
    }

    pub fn degree_bound(&self) -> Option<i64> {
        self.degree_bound
    }

    /// Leading monomials of the basis (ideal elements included) lying in component `comp`.
    pub fn leading_monomials(&self, comp: usize) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self.by_comp[comp]
            .iter()
            .map(|&i| self.lead[i].1.clone())
            .collect();
        out.extend(self.ideal_lead.iter().cloned());
        out
    }

    /// Whether a term in `comp` with monomial `m` is divisible by some leading term.
    pub fn is_reducible(&self, comp: usize, m: &Monomial) -> bool {
        self.find_reducer(comp, m).is_some()
    }

    fn find_reducer(&self, comp: usize, m: &Monomial) -> Option<Reducer> {
        for &i in &self.by_comp[comp] {
            if self.lead[i].1.divides(m) {
                return Some(Reducer::Module(i));
            }
        }
        for (k, lm) in self.ideal_lead.iter().enumerate() {
            if lm.divides(m) {
                return Some(Reducer::Ideal(k));
            }
        }
        None
    }

    fn reducer_terms(&self, r: Reducer, comp: usize) -> Vec<VTerm<F>> {
        match r {
            Reducer::Module(i) => self.elems[i].terms().to_vec(),
            Reducer::Ideal(k) => self
                .ring
                .vector_from_poly(comp, &self.ideal[k])
                .terms()
                .to_vec(),
        }
    }

    fn reducer_lead(&self, r: Reducer) -> &Monomial {
        match r {
            Reducer::Module(i) => &self.lead[i].1,
            Reducer::Ideal(k) => &self.ideal_lead[k],
        }
    }

    /// Reduces the leading term until it is irreducible (or the vector vanishes).
    fn top_reduce(&self, v: Vec<VTerm<F>>) -> Vec<VTerm<F>> {
        let k = self.ring.field();
        let mut v = v;
        while let Some(t) = v.first() {
            let Some(r) = self.find_reducer(t.comp, &t.mono) else {
                break;
            };
            let q = self.reducer_lead(r).quotient_of(&t.mono).unwrap();
            let c = k.neg(&t.coeff);
            let comp = t.comp;
            let g = self.reducer_terms(r, comp);
            v = self.ring.vadd_scaled(&v, &g, &c, &q);
        }
        v
    }

    /// Fully reduced remainder of `v`.
    pub fn normal_form(&self, v: &Vector<F>) -> Vector<F> {
        Vector::from_sorted(self.reduce_from(v.terms().to_vec(), 0, None))
    }

    fn reduce_from(
        &self,
        mut v: Vec<VTerm<F>>,
        start: usize,
        skip: Option<usize>,
    ) -> Vec<VTerm<F>> {
        let k = self.ring.field();
        let mut pos = start;
        while pos < v.len() {
            let t = &v[pos];
            let r = match skip {
                None => self.find_reducer(t.comp, &t.mono),
                Some(s) => self.find_reducer_skipping(t.comp, &t.mono, s),
            };
            match r {
                None => pos += 1,
                Some(r) => {
                    let q = self.reducer_lead(r).quotient_of(&t.mono).unwrap();
                    let c = k.neg(&t.coeff);
                    let g = self.reducer_terms(r, t.comp);
                    let tail = self.ring.vadd_scaled(&v[pos..], &g, &c, &q);
                    v.truncate(pos);
                    v.extend(tail);
                }
            }
        }
        v
    }

    fn find_reducer_skipping(&self, comp: usize, m: &Monomial, skip: usize) -> Option<Reducer> {
        for &i in &self.by_comp[comp] {
            if i != skip && self.lead[i].1.divides(m) {
                return Some(Reducer::Module(i));
            }
        }
        for (k, lm) in self.ideal_lead.iter().enumerate() {
            if lm.divides(m) {
                return Some(Reducer::Ideal(k));
            }
        }
        None
    }

    /// Normal form of a polynomial, for rank-one bases.
    pub fn normal_form_poly(&self, f: &Poly<F>) -> Poly<F> {
        self.normal_form(&self.ring.vector_from_poly(0, f))
            .component(0)
    }

    pub fn reduces_to_zero(&self, v: &Vector<F>) -> bool {
        self.top_reduce(v.terms().to_vec()).is_empty()
    }

    fn interreduce(&mut self) {
        let k = self.ring.field().clone();
        for i in 0..self.elems.len() {
            let terms = self.elems[i].terms().to_vec();
            let reduced = self.reduce_from(terms, 1, Some(i));
            let inv = k.inv(&reduced[0].coeff);
            let v = self.ring.vscale(&Vector::from_sorted(reduced), &inv);
            self.elems[i] = v;
        }
    }

    fn insert(&mut self, v: Vector<F>) -> usize {
        let t = v.leading().unwrap();
        let idx = self.elems.len();
        self.lead.push((t.comp, t.mono.clone()));
        self.by_comp[t.comp].push(idx);
        self.elems.push(v);
        idx
    }
}

#[derive(Clone, Copy, Debug)]
enum Reducer {
    Module(usize),
    Ideal(usize),
}

impl<F: Field> Builder<'_, F> {
    fn run(&mut self) {
        while let Some((key, _)) = self.pairs.pop_first() {
            let (deg, kind, a, b) = key;
            if self.gb.degree_bound.is_some_and(|bd| deg > bd) {
                break;
            }
            let candidate = match kind {
                PairKind::Input => self.inputs[a].terms().to_vec(),
                PairKind::Module => self.spair_module(a, b),
                PairKind::Ideal => self.spair_ideal(a, b),
            };
            let reduced = self.gb.top_reduce(candidate);
            if reduced.is_empty() {
                continue;
            }
            let v = self.gb.ring.vmonic(&Vector::from_sorted(reduced));
            let idx = self.gb.insert(v);
            if kind == PairKind::Input {
                self.gb.minimal.push(a);
            }
            self.update(idx);
        }
    }

    fn spair_module(&self, i: usize, j: usize) -> Vec<VTerm<F>> {
        let ring = &self.gb.ring;
        let k = ring.field();
        let (_, mi) = &self.gb.lead[i];
        let (_, mj) = &self.gb.lead[j];
        let l = mi.lcm(mj, ring.degrees());
        let qi = mi.quotient_of(&l).unwrap();
        let qj = mj.quotient_of(&l).unwrap();
        let left = ring.vmul_term(&self.gb.elems[i], &qi, &k.one());
        ring.vadd_scaled(
            left.terms(),
            self.gb.elems[j].terms(),
            &k.neg(&k.one()),
            &qj,
        )
    }

    fn spair_ideal(&self, h: usize, j: usize) -> Vec<VTerm<F>> {
        let ring = &self.gb.ring;
        let k = ring.field();
        let (comp, mj) = &self.gb.lead[j];
        let mh = &self.gb.ideal_lead[h];
        let l = mh.lcm(mj, ring.degrees());
        let qh = mh.quotient_of(&l).unwrap();
        let qj = mj.quotient_of(&l).unwrap();
        let left = ring.vmul_term(&self.gb.elems[j], &qj, &k.one());
        let hv = ring.vector_from_poly(*comp, &self.gb.ideal[h]);
        ring.vadd_scaled(left.terms(), hv.terms(), &k.neg(&k.one()), &qh)
    }

    /// Gebauer–Möller pair update after inserting basis element `t`.
    fn update(&mut self, t: usize) {
        let degrees = self.gb.ring.degrees().to_vec();
        let (comp, mt) = self.gb.lead[t].clone();
        let twist = self.gb.twists[comp];

        // Chain criterion on the existing pairs.
        let mut doomed = Vec::new();
        for (key, l) in &self.pairs {
            let (_, kind, a, b) = *key;
            let (ma, mb, pc) = match kind {
                PairKind::Input => continue,
                PairKind::Module => (&self.gb.lead[a].1, &self.gb.lead[b].1, self.gb.lead[b].0),
                PairKind::Ideal => (
                    &self.gb.ideal_lead[a],
                    &self.gb.lead[b].1,
                    self.gb.lead[b].0,
                ),
            };
            if pc != comp || !mt.divides(l) {
                continue;
            }
            if ma.lcm(&mt, &degrees) != *l && mb.lcm(&mt, &degrees) != *l {
                doomed.push(*key);
            }
        }
        for key in doomed {
            self.pairs.remove(&key);
        }

        // Candidate new pairs: (lcm, kind, other index, coprime-with-ideal flag).
        let mut cands: Vec<(Monomial, PairKind, usize, bool)> = Vec::new();
        for &i in &self.gb.by_comp[comp] {
            if i != t {
                cands.push((
                    self.gb.lead[i].1.lcm(&mt, &degrees),
                    PairKind::Module,
                    i,
                    false,
                ));
            }
        }
        for (h, mh) in self.gb.ideal_lead.iter().enumerate() {
            cands.push((mh.lcm(&mt, &degrees), PairKind::Ideal, h, mh.coprime(&mt)));
        }

        // Criterion M: drop pairs whose lcm is a proper multiple of another lcm.
        let n = cands.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && cands[j].0.divides(&cands[i].0) && cands[j].0 != cands[i].0 {
                    keep[i] = false;
                    break;
                }
            }
        }
        // Criterion F: one pair per lcm, none if any pair with that lcm is coprime.
        let mut chosen: BTreeMap<Vec<u16>, (usize, bool)> = BTreeMap::new();
        for (i, c) in cands.iter().enumerate() {
            if !keep[i] {
                continue;
            }
            let e = c.0.exponents().to_vec();
            match chosen.get_mut(&e) {
                None => {
                    chosen.insert(e, (i, c.3));
                }
                Some(entry) => entry.1 |= c.3,
            }
        }
        for (_, (i, coprime)) in chosen {
            if coprime {
                continue;
            }
            let (l, kind, other, _) = &cands[i];
            let deg = l.degree() as i64 + twist;
            let key = match kind {
                PairKind::Module => (deg, PairKind::Module, *other.min(&t), *other.max(&t)),
                _ => (deg, PairKind::Ideal, *other, t),
            };
            self.pairs.insert(key, l.clone());
        }
    }
}

/// Lifts `f` into the submodule generated by `gens`, returning coefficients `a`
/// with `f = Σ a_i·gens_i`, or `None` when `f` is not in the submodule.
#[derive(Clone, Debug)]
pub struct Lifter<F: Field> {
    rank: usize,
    gb: ModuleGb<F>,
}

impl<F: Field> Lifter<F> {
    /// `gens` live in a free module with generator degrees `twists` over `ring`.
    pub fn new(ring: &PolyRing<F>, twists: &[i64], gens: &[Vector<F>]) -> Result<Lifter<F>> {
        let rank = twists.len();
        let mut ambient = twists.to_vec();
        let mut aug = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            let d = g.homogeneous_degree(twists).ok_or_else(|| {
                Error::NotHomogeneous(format!("generator {i} is zero or not homogeneous"))
            })?;
            ambient.push(d);
            let tag = ring.vector_from_poly(rank + i, &ring.one());
            aug.push(ring.vadd(g, &tag));
        }
        let gb = ModuleGb::compute(ring, &ambient, &aug, &[], &GbOptions::full())?;
        Ok(Lifter { rank, gb })
    }

    pub fn lift(&self, f: &Vector<F>) -> Option<Vec<Poly<F>>> {
        let ring = self.gb.ring();
        let nf = self.gb.normal_form(f);
        if nf.leading().is_some_and(|t| t.comp < self.rank) {
            return None;
        }
        let m = self.gb.rank() - self.rank;
        let neg = ring.vneg(&nf.shift_down(self.rank));
        Some(ring.vector_components(&neg, m))
    }

    pub fn lift_poly(&self, f: &Poly<F>) -> Option<Vec<Poly<F>>> {
        let ring = self.gb.ring();
        self.lift(&ring.vector_from_poly(0, f))
    }
}

/// Generators of the syzygy module of the columns `gens` (over the polynomial
/// ring modulo `ideal`), as vectors in the free module with one generator per column.
pub fn syzygies<F: Field>(
    ring: &PolyRing<F>,
    twists: &[i64],
    gens: &[Vector<F>],
    ideal: &[Poly<F>],
) -> Result<Vec<Vector<F>>> {
    let (source, _) = column_degrees(gens, twists)?;
    kernel_vectors(ring, twists, &source, gens, &[], ideal)
}

/// Degrees of homogeneous columns; zero columns get degree 0 and are flagged.
pub fn column_degrees<F: Field>(
    cols: &[Vector<F>],
    twists: &[i64],
) -> Result<(Vec<i64>, Vec<bool>)> {
    let mut degs = Vec::with_capacity(cols.len());
    let mut zero = Vec::with_capacity(cols.len());
    for (i, c) in cols.iter().enumerate() {
        if c.is_zero() {
            degs.push(0);
            zero.push(true);
        } else {
            let d = c
                .homogeneous_degree(twists)
                .ok_or_else(|| Error::NotHomogeneous(format!("column {i} is not homogeneous")))?;
            degs.push(d);
            zero.push(false);
        }
    }
    Ok((degs, zero))
}

/// Generators (a Gröbner basis) of `{v ∈ Q^source : Σ v_j·cols_j ∈ im(rels) + ideal·Q^target}`,
/// reduced modulo the ideal.
pub fn kernel_vectors<F: Field>(
    ring: &PolyRing<F>,
    target: &[i64],
    source: &[i64],
    cols: &[Vector<F>],
    rels: &[Vector<F>],
    ideal: &[Poly<F>],
) -> Result<Vec<Vector<F>>> {
    let a = target.len();
    let mut ambient = target.to_vec();
    ambient.extend_from_slice(source);
    let mut gens = Vec::with_capacity(cols.len() + rels.len());
    for (j, c) in cols.iter().enumerate() {
        let tag = ring.vector_from_poly(a + j, &ring.one());
        gens.push(ring.vadd(c, &tag));
    }
    gens.extend(rels.iter().cloned());
    let gb = ModuleGb::compute(ring, &ambient, &gens, ideal, &GbOptions::full())?;
    Ok(gb
        .elements()
        .iter()
        .filter(|v| v.leading().is_some_and(|t| t.comp >= a))
        .map(|v| v.shift_down(a))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn ring2() -> PolyRing<Rationals> {
        PolyRing::standard(Rationals, &["x", "y"]).unwrap()
    }

    /// Independent check: every S-polynomial of `basis` reduces to zero by naive
    /// repeated leading-term division.
    fn naive_reduce(
        r: &PolyRing<Rationals>,
        f: &Poly<Rationals>,
        basis: &[Poly<Rationals>],
    ) -> Poly<Rationals> {
        let k = Rationals;
        let mut f = f.clone();
        let mut rem = r.zero();
        while let Some(t) = f.leading().cloned() {
            let mut done = false;
            for g in basis {
                let lg = g.leading().unwrap();
                if let Some(q) = lg.mono.quotient_of(&t.mono) {
                    let c = k.neg(&k.div(&t.coeff, &lg.coeff));
                    f = r.add(&f, &r.mul_term(g, &q, &c));
                    done = true;
                    break;
                }
            }
            if !done {
                let lt = r.term(t.mono.clone(), t.coeff.clone());
                rem = r.add(&rem, &lt);
                f = r.sub(&f, &lt);
            }
        }
        rem
    }

    #[test]
    fn single_monomial_and_coprime_inputs() {
        let r = PolyRing::standard(Rationals, &["x1", "x2", "x3", "x4"]).unwrap();
        let x = |i| r.var(i);
        let gb = ModuleGb::ideal(&r, &[r.mul(&x(0), &x(1))]).unwrap();
        assert_eq!(gb.polys(), vec![r.mul(&x(0), &x(1))]);
        let gens = vec![r.mul(&x(0), &x(2)), r.mul(&x(1), &x(3))];
        let gb = ModuleGb::ideal(&r, &gens).unwrap();
        assert_eq!(gb.polys(), gens);
    }

    #[test]
    fn classic_three_element_basis() {
        let r = ring2();
        let (x, y) = (r.var(0), r.var(1));
        let f1 = r.add(&r.mul(&x, &x), &r.mul(&y, &y));
        let f2 = r.mul(&x, &y);
        let gb = ModuleGb::ideal(&r, &[f1.clone(), f2.clone()]).unwrap();
        let y3 = r.pow(&y, 3);
        let polys = gb.polys();
        assert_eq!(polys, vec![f1.clone(), f2.clone(), y3.clone()]);

        // Oracle: all S-polynomials reduce to 0 by naive division, and y^3 lies in
        // the ideal via the explicit combination y·f1 − x·f2.
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                let (a, b) = (&polys[i], &polys[j]);
                let la = &a.leading().unwrap().mono;
                let lb = &b.leading().unwrap().mono;
                let l = la.lcm(lb, r.degrees());
                let s = r.sub(
                    &r.mul_term(a, &la.quotient_of(&l).unwrap(), &Rationals.one()),
                    &r.mul_term(b, &lb.quotient_of(&l).unwrap(), &Rationals.one()),
                );
                assert!(naive_reduce(&r, &s, &polys).is_zero());
            }
        }
        assert_eq!(r.sub(&r.mul(&y, &f1), &r.mul(&x, &f2)), y3);
    }

    #[test]
    fn normal_forms() {
        let r = ring2();
        let (x, y) = (r.var(0), r.var(1));
        let xy = r.mul(&x, &y);
        let gb = ModuleGb::ideal(&r, std::slice::from_ref(&xy)).unwrap();
        assert!(gb.normal_form_poly(&xy).is_zero());
        assert!(gb.normal_form_poly(&r.mul(&xy, &x)).is_zero());
        let s = r.add(&x, &y);
        assert_eq!(gb.normal_form_poly(&s), s);
    }

    #[test]
    fn inhomogeneous_input_rejected() {
        let r = ring2();
        let f = r.add(&r.var(0), &r.one());
        assert!(matches!(
            ModuleGb::ideal(&r, &[f]),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring2();
        let (x, y) = (r.var(0), r.var(1));
        let cols = vec![r.vector_from_poly(0, &x), r.vector_from_poly(0, &y)];
        let syz = syzygies(&r, &[0], &cols, &[]).unwrap();
        assert_eq!(syz.len(), 1);
        let comps = r.vector_components(&syz[0], 2);
        // (y, -x) up to scalar
        assert_eq!(
            r.add(&r.mul(&comps[0], &x), &r.mul(&comps[1], &y)),
            r.zero()
        );
        assert_eq!(r.homogeneous_degree(&comps[0]), Some(1));
        let nzd = syzygies(&r, &[0], &[r.vector_from_poly(0, &r.mul(&x, &y))], &[]).unwrap();
        assert!(nzd.is_empty());
    }

    #[test]
    fn syzygy_over_quotient() {
        let r = ring2();
        let (x, y) = (r.var(0), r.var(1));
        let ideal = vec![r.mul(&x, &y)];
        let syz = syzygies(&r, &[0], &[r.vector_from_poly(0, &x)], &ideal).unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].component(0), y);
    }

    #[test]
    fn lifting() {
        let r = ring2();
        let (x, y) = (r.var(0), r.var(1));
        let xy = r.mul(&x, &y);
        let l = Lifter::new(&r, &[0], &[r.vector_from_poly(0, &xy)]).unwrap();
        let a = l.lift_poly(&r.mul(&xy, &xy)).unwrap();
        assert_eq!(a, vec![xy.clone()]);
        assert!(l.lift_poly(&x).is_none());
        let q = PolyRing::standard(Rationals, &["x"]).unwrap();
        let x2 = q.pow(&q.var(0), 2);
        let l = Lifter::new(&q, &[0], &[q.vector_from_poly(0, &x2)]).unwrap();
        assert_eq!(l.lift_poly(&x2).unwrap(), vec![q.one()]);
    }

    #[test]
    fn minimal_inputs_tracked() {
        let r = ring2();
        let (x, y) = (r.var(0), r.var(1));
        let gens: Vec<_> = [x.clone(), r.mul(&x, &y), y.clone(), r.add(&x, &y)]
            .iter()
            .map(|f| r.vector_from_poly(0, f))
            .collect();
        let gb = ModuleGb::compute(&r, &[0], &gens, &[], &GbOptions::full()).unwrap();
        assert_eq!(gb.minimal_inputs(), &[0, 2]);
    }
}
