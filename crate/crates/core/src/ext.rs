//! `Ext^i_R(M, N)` via `Hom_R(F, N)` for a minimal resolution `F → M`.
//!
//! With `Hom_i = Hom(F_i, N) = ⊕_j N(a_ij)` and `C_i = coker(δ^i : Hom_i → Hom_{i+1})`,
//! additivity along the complex gives
//! `H(Ext^i) = H(C_i) + H(C_{i−1}) − H(Hom_{i+1})`, with `C_{−1} = Hom_0`.
//! Each `C_i` is one presented module, so every step costs a single Gröbner basis.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{GbOptions, ModuleGb};
use crate::hilbert::{series_from_leading_terms, HilbertSeries};
use crate::linalg::Matrix;
use crate::module::{PresentedModule, Resolution};
use crate::poly::{Monomial, Poly};
use crate::ring::QuotientRing;
use crate::vector::Vector;

pub struct ExtComputer<F: Field> {
    m: PresentedModule<F>,
    n: PresentedModule<F>,
    res: Resolution<F>,
    coker: HashMap<i64, HilbertSeries>,
    series: Vec<HilbertSeries>,
}

impl<F: Field> ExtComputer<F> {
    pub fn new(m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<Self> {
        QuotientRing::same_ring(m.ring(), n.ring())?;
        let nmin = n.minimal_presentation();
        Ok(ExtComputer {
            m: m.clone(),
            n: nmin,
            res: Resolution::new(m, 1),
            coker: HashMap::new(),
            series: Vec::new(),
        })
    }

    pub fn m(&self) -> &PresentedModule<F> {
        &self.m
    }

    pub fn n(&self) -> &PresentedModule<F> {
        &self.n
    }

    pub fn resolution(&self) -> &Resolution<F> {
        &self.res
    }

    /// Extends the resolution through `F_steps`.
    pub fn extend_resolution(&mut self, steps: usize) {
        self.res.extend_to(steps);
    }

    /// `H(Hom(F_i, N)) = Σ_j t^{−a_ij} H(N)`.
    pub fn hom_series(&self, i: usize) -> HilbertSeries {
        let hn = self.n.hilbert_series();
        self.res
            .twists(i)
            .iter()
            .fold(HilbertSeries::zero(), |acc, &a| acc.add(&hn.shift(-a)))
    }

    /// Presentation data of `coker(δ^i)` inside `Hom(F_{i+1}, N)`.
    fn coker_presentation(&self, i: usize) -> (Vec<i64>, Vec<Vector<F>>) {
        let p = self.m.ring().poly();
        let g = self.n.num_generators();
        let nt = self.n.generator_degrees();
        let src = self.res.twists(i);
        let tgt = self.res.twists(i + 1);
        let mut twists = Vec::with_capacity(tgt.len() * g);
        for &a in tgt {
            twists.extend(nt.iter().map(|&nl| nl - a));
        }
        let mut rels = Vec::new();
        for k in 0..tgt.len() {
            rels.extend(self.n.relations().iter().map(|r| r.remap(|c| k * g + c)));
        }
        // δ^i(e_{j,l}) = Σ_k ∂_{i+1}[j][k] e'_{k,l}
        let mut images: Vec<Vec<(usize, Monomial, F::Elem)>> = vec![Vec::new(); src.len() * g];
        for (k, col) in self.res.map(i + 1).iter().enumerate() {
            for t in col.terms() {
                for l in 0..g {
                    images[t.comp * g + l].push((k * g + l, t.mono.clone(), t.coeff.clone()));
                }
            }
        }
        rels.extend(
            images
                .into_iter()
                .filter(|v| !v.is_empty())
                .map(|v| p.vector_from_terms(v)),
        );
        (twists, rels)
    }

    fn coker_series(&mut self, i: i64) -> HilbertSeries {
        if let Some(h) = self.coker.get(&i) {
            return h.clone();
        }
        let h = if i < 0 {
            self.hom_series(0)
        } else if self.res.rank(i as usize + 1) == 0 {
            HilbertSeries::zero()
        } else {
            let (twists, rels) = self.coker_presentation(i as usize);
            let ring = self.m.ring();
            let gb = ModuleGb::compute(
                ring.poly(),
                &twists,
                &rels,
                ring.ideal(),
                &GbOptions {
                    degree_bound: None,
                    reduce: false,
                },
            )
            .expect("Hom complex maps are homogeneous");
            let lead: Vec<Vec<Monomial>> =
                (0..twists.len()).map(|j| gb.leading_monomials(j)).collect();
            series_from_leading_terms(&twists, &lead, ring.poly().degrees())
        };
        self.coker.insert(i, h.clone());
        h
    }

    /// `H(Ext^i_R(M, N), t)`.
    pub fn ext_series(&mut self, i: usize) -> HilbertSeries {
        while self.series.len() <= i {
            let s = self.series.len();
            self.res.extend_to(s + 1);
            let h = self
                .coker_series(s as i64)
                .add(&self.coker_series(s as i64 - 1))
                .sub(&self.hom_series(s + 1));
            self.series.push(h);
        }
        self.series[i].clone()
    }

    /// Computes `Ext^0..Ext^max_step` and summarizes them.
    pub fn profile(&mut self, max_step: usize, fext_certified: bool) -> ExtProfile {
        let series: Vec<HilbertSeries> = (0..=max_step).map(|i| self.ext_series(i)).collect();
        let codim = self.m.ring().codim();
        ExtProfile::from_series(series, codim, fext_certified)
    }

    /// Degreewise view of the Hom complex.
    pub fn complex(&self) -> HomComplex<'_, F> {
        HomComplex {
            res: &self.res,
            n: &self.n,
            bases: RefCell::new(HashMap::new()),
        }
    }
}

/// Ext data through a maximal step.
#[derive(Clone, Debug, Serialize)]
pub struct ExtProfile {
    pub max_step: usize,
    pub codim: usize,
    pub series: Vec<HilbertSeries>,
    pub finite_length: Vec<bool>,
    /// `λ(Ext^i)` where finite.
    #[serde(serialize_with = "ser_opt_big")]
    pub lengths: Vec<Option<BigInt>>,
    /// `max(0, fext)` as read from the computed window.
    pub fext_hat: usize,
    /// Finite length beyond the window is inferred, not certified.
    pub heuristic: bool,
    pub window: usize,
    pub warnings: Vec<String>,
}

fn ser_opt_big<S: serde::Serializer>(
    v: &[Option<BigInt>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<Option<String>> = v
        .iter()
        .map(|x| x.as_ref().map(|b| b.to_string()))
        .collect();
    strs.serialize(s)
}

impl ExtProfile {
    pub fn from_series(series: Vec<HilbertSeries>, codim: usize, fext_certified: bool) -> Self {
        let max_step = series.len() - 1;
        let finite_length: Vec<bool> = series.iter().map(|h| h.is_laurent_polynomial()).collect();
        let lengths = series.iter().map(|h| h.value_at_one()).collect();
        let window = 2 * codim + 4;
        let mut fext = max_step;
        while fext > 0 && finite_length[fext] {
            fext -= 1;
        }
        // fext is now the largest non-finite index (or 0); everything above is finite.
        let fext_hat = if fext == 0 && finite_length[0] {
            0
        } else {
            fext
        };
        let mut warnings = Vec::new();
        if max_step < fext_hat + window {
            warnings.push(format!(
                "finite-length pattern not stable: only {} finite-length steps after {} (window {window}); increase the maximum step",
                max_step - fext_hat,
                fext_hat
            ));
        }
        if !fext_certified {
            warnings.push(format!(
                "fext = {fext_hat} inferred from steps 0..={max_step}; finite length beyond the window is not certified"
            ));
        }
        ExtProfile {
            max_step,
            codim,
            series,
            finite_length,
            lengths,
            fext_hat,
            heuristic: !fext_certified,
            window,
            warnings,
        }
    }

    /// `β_i = λ(Ext^i)`, defined for finite-length steps.
    pub fn betti(&self, i: usize) -> Option<&BigInt> {
        self.lengths.get(i).and_then(|x| x.as_ref())
    }

    /// `(i, β_i)` for `ℓ̂ < i ≤ J`.
    pub fn betti_window(&self) -> Vec<(usize, BigInt)> {
        (self.fext_hat + 1..=self.max_step)
            .filter_map(|i| self.betti(i).map(|b| (i, b.clone())))
            .collect()
    }

    /// Whether `Ext^i = 0` for every computed `i > j`.
    pub fn vanishes_after(&self, j: usize) -> bool {
        self.series.iter().skip(j + 1).all(|h| h.is_zero())
    }

    /// CSV with columns `i,beta,parity`.
    pub fn betti_csv(&self) -> String {
        let mut out = String::from("i,beta,parity\n");
        for (i, b) in self.betti_window() {
            out.push_str(&format!(
                "{i},{b},{}\n",
                if i % 2 == 0 { "even" } else { "odd" }
            ));
        }
        out
    }
}

type BlockBasis = (Vec<(usize, Monomial)>, HashMap<(usize, Monomial), usize>);

/// Degree-`d` pieces of `Hom(F_i, N)` in the standard-monomial basis of `N`.
pub struct HomComplex<'a, F: Field> {
    res: &'a Resolution<F>,
    n: &'a PresentedModule<F>,
    bases: RefCell<HashMap<i64, std::rc::Rc<BlockBasis>>>,
}

impl<F: Field> HomComplex<'_, F> {
    fn n_basis(&self, e: i64) -> std::rc::Rc<BlockBasis> {
        self.bases
            .borrow_mut()
            .entry(e)
            .or_insert_with(|| {
                let list = self.n.standard_basis(e);
                let index = list
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, x)| (x, i))
                    .collect();
                std::rc::Rc::new((list, index))
            })
            .clone()
    }

    /// Offsets of the blocks `N_{d + a_ij}` inside `(Hom_i)_d`, and the total dimension.
    fn layout(&self, i: usize, d: i64) -> (Vec<usize>, usize) {
        let mut offs = Vec::new();
        let mut total = 0;
        for &a in self.res.twists(i) {
            offs.push(total);
            total += self.n_basis(d + a).0.len();
        }
        (offs, total)
    }

    pub fn field(&self) -> &F {
        self.n.ring().field()
    }

    pub fn dim(&self, i: usize, d: i64) -> usize {
        self.layout(i, d).1
    }

    /// Matrix of `ψ ↦ (Σ_j entry(j, k)·ψ_j)_k` from `(Hom_src)_{d}` to `(Hom_tgt)_{d − shift}`.
    pub fn transport(
        &self,
        src: usize,
        tgt: usize,
        d: i64,
        shift: i64,
        entry: &dyn Fn(usize, usize) -> Poly<F>,
    ) -> Matrix<F> {
        let ring = self.n.ring();
        let p = ring.poly();
        let k = p.field();
        let (soffs, sdim) = self.layout(src, d);
        let (toffs, tdim) = self.layout(tgt, d - shift);
        let mut m = Matrix::zeros(k, tdim, sdim);
        let g = self.n.gb();
        let ta = self.res.twists(tgt);
        for (j, &a) in self.res.twists(src).iter().enumerate() {
            let basis = self.n_basis(d + a);
            for (bi, (l, mono)) in basis.0.iter().enumerate() {
                let col = soffs[j] + bi;
                for (kk, &b) in ta.iter().enumerate() {
                    let e = entry(j, kk);
                    if e.is_zero() {
                        continue;
                    }
                    let v = p.vector_from_poly(*l, &p.mul_term(&e, mono, &k.one()));
                    let nf = g.normal_form(&v);
                    if nf.is_zero() {
                        continue;
                    }
                    let tb = self.n_basis(d - shift + b);
                    for t in nf.terms() {
                        let row = toffs[kk] + tb.1[&(t.comp, t.mono.clone())];
                        m.set(row, col, t.coeff.clone());
                    }
                }
            }
        }
        m
    }

    /// `δ^i_d : (Hom_i)_d → (Hom_{i+1})_d`.
    pub fn delta(&self, i: usize, d: i64) -> Matrix<F> {
        let map = self.res.map(i + 1);
        self.transport(i, i + 1, d, 0, &|j, k| map[k].component(j))
    }

    /// `dim_k Ext^i(M, N)_d`.
    pub fn ext_dim(&self, i: usize, d: i64) -> usize {
        let k = self.n.ring().field();
        let dim = self.dim(i, d);
        let out = self.delta(i, d).rank(k);
        let inc = if i == 0 {
            0
        } else {
            self.delta(i - 1, d).rank(k)
        };
        dim - out - inc
    }

    /// Basis of the cycles `ker δ^i_d`.
    pub fn cycles(&self, i: usize, d: i64) -> Vec<Vec<F::Elem>> {
        let k = self.n.ring().field();
        let dim = self.dim(i, d);
        if self.res.rank(i + 1) == 0 {
            return (0..dim).map(|c| unit(k, dim, c)).collect();
        }
        self.delta(i, d).nullspace(k)
    }

    /// Spanning set of the boundaries `im δ^{i−1}_d`.
    pub fn boundaries(&self, i: usize, d: i64) -> Vec<Vec<F::Elem>> {
        if i == 0 {
            return Vec::new();
        }
        let m = self.delta(i - 1, d);
        columns(&m)
    }

    /// Lowest internal degree in which `Hom_i` can be nonzero.
    pub fn min_degree(&self, i: usize) -> Option<i64> {
        let nmin = self.n.generator_degrees().iter().min()?;
        let amax = self.res.twists(i).iter().max()?;
        Some(nmin - amax)
    }
}

fn unit<F: Field>(k: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![k.zero(); n];
    v[i] = k.one();
    v
}

pub fn columns<F: Field>(m: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m.get(i, j).clone()).collect())
        .collect()
}

/// Checks that `ext_series` agrees with degreewise cohomology of the Hom complex
/// for steps `0..=max_step` and `span` degrees above the lowest possible one.
pub fn check_against_hom_complex<F: Field>(
    ext: &mut ExtComputer<F>,
    max_step: usize,
    span: i64,
) -> Result<()> {
    for i in 0..=max_step {
        let h = ext.ext_series(i);
        ext.extend_resolution(i + 1);
        let cx = ext.complex();
        let Some(lo) = cx.min_degree(i) else {
            if !h.is_zero() {
                return Err(Error::Precondition(format!(
                    "Ext^{i} nonzero but Hom_{i} = 0"
                )));
            }
            continue;
        };
        let coeffs = h.coefficients(lo - 1, lo + span);
        if !coeffs[0].eq(&BigInt::from(0)) {
            return Err(Error::Precondition(format!(
                "Ext^{i} has a class below the lowest Hom degree"
            )));
        }
        for (off, c) in coeffs.iter().enumerate().skip(1) {
            let d = lo - 1 + off as i64;
            let direct = cx.ext_dim(i, d);
            if BigInt::from(direct) != *c {
                return Err(Error::Precondition(format!(
                    "Ext^{i} in degree {d}: series gives {c}, Hom complex gives {direct}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::hilbert::LaurentPoly;
    use crate::poly::PolyRing;
    use crate::ring::Ring;

    fn hyper() -> Ring<Rationals> {
        let q = PolyRing::standard(Rationals, &["x1", "x2"]).unwrap();
        let f = q.mul(&q.var(0), &q.var(1));
        QuotientRing::new("R", q, vec![f]).unwrap()
    }

    #[test]
    fn intro_pair_series() {
        let r = hyper();
        let p = r.poly();
        let m = PresentedModule::cyclic(&r, "M", &[p.var(0)]).unwrap();
        let n = PresentedModule::cyclic(&r, "N", &[p.var(1)]).unwrap();
        let mut ext = ExtComputer::new(&m, &n).unwrap();
        assert!(ext.ext_series(0).is_zero());
        assert_eq!(ext.ext_series(1), HilbertSeries::monomial(-1));
        assert!(ext.ext_series(2).is_zero());
        assert_eq!(ext.ext_series(3), HilbertSeries::monomial(-3));
        check_against_hom_complex(&mut ext, 6, 6).unwrap();
        let prof = ext.profile(8, false);
        assert_eq!(prof.fext_hat, 0);
        assert!(prof.heuristic);
        for i in 1..=8 {
            assert_eq!(prof.betti(i).unwrap(), &BigInt::from(i % 2));
        }
    }

    #[test]
    fn residue_field_over_dual_numbers() {
        let q = PolyRing::standard(Rationals, &["x"]).unwrap();
        let r = QuotientRing::new("R", q.clone(), vec![q.pow(&q.var(0), 2)]).unwrap();
        let k = PresentedModule::residue_field(&r);
        let mut ext = ExtComputer::new(&k, &k).unwrap();
        for i in 0..6 {
            assert_eq!(
                ext.ext_series(i),
                HilbertSeries::polynomial(LaurentPoly::from_i64(-(i as i64), &[1]))
            );
        }
        check_against_hom_complex(&mut ext, 6, 4).unwrap();
    }

    #[test]
    fn free_module_has_no_higher_ext() {
        let r = hyper();
        let p = r.poly();
        let m = PresentedModule::free(&r, "F", vec![0, 2]);
        let n = PresentedModule::cyclic(&r, "N", &[p.var(1)]).unwrap();
        let mut ext = ExtComputer::new(&m, &n).unwrap();
        let h0 = ext.ext_series(0);
        assert_eq!(h0, n.hilbert_series().add(&n.hilbert_series().shift(-2)));
        for i in 1..5 {
            assert!(ext.ext_series(i).is_zero());
        }
    }
}
