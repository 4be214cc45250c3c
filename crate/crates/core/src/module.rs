//! Finitely presented graded modules, kernels, minimal presentations and
//! minimal graded free resolutions.
//!
//! A free module `F = ⊕_j R(−a_j)` is described by its twist list `a`: generator
//! `j` sits in degree `a_j`, so `H(F) = Σ_j t^{a_j}·H(R)`. A map of free modules is
//! a list of columns, column `k` being the image of the `k`-th source generator.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{column_degrees, kernel_vectors, GbOptions, ModuleGb};
use crate::hilbert::{series_from_leading_terms, HilbertSeries};
use crate::laurent::{LaurentExpansion, Order};
use crate::linalg::sparse_rank;
use crate::poly::{Monomial, Poly};
use crate::ring::{QuotientRing, Ring};
use crate::vector::Vector;

/// `coker(F_1 → F_0)` over a quotient ring.
#[derive(Clone, Debug)]
pub struct PresentedModule<F: Field> {
    ring: Ring<F>,
    name: String,
    gens: Vec<i64>,
    rels: Vec<Vector<F>>,
    gb: OnceLock<ModuleGb<F>>,
    hilbert: OnceLock<HilbertSeries>,
    ann: OnceLock<Vec<Poly<F>>>,
}

impl<F: Field> PresentedModule<F> {
    /// `gens` are the twists of `F_0`; `rels` are the relation columns in `F_0`.
    pub fn new(
        ring: &Ring<F>,
        name: impl Into<String>,
        gens: Vec<i64>,
        rels: Vec<Vector<F>>,
    ) -> Result<Self> {
        let name = name.into();
        let mut reduced = Vec::with_capacity(rels.len());
        for (k, r) in rels.iter().enumerate() {
            if let Some(c) = r.max_component() {
                if c >= gens.len() {
                    return Err(Error::InvalidInput(format!(
                        "{name}: relation {} refers to generator {} of {}",
                        k + 1,
                        c + 1,
                        gens.len()
                    )));
                }
            }
            if !r.is_zero() && r.homogeneous_degree(&gens).is_none() {
                let degs: Vec<String> = r
                    .terms()
                    .iter()
                    .map(|t| format!("{}", t.mono.degree() as i64 + gens[t.comp]))
                    .collect();
                return Err(Error::NotHomogeneous(format!(
                    "{name}: relation {} mixes degrees {}",
                    k + 1,
                    degs.join(", ")
                )));
            }
            reduced.push(ring.reduce_vector(r));
        }
        Ok(Self::raw(ring, name, gens, reduced))
    }

    fn raw(ring: &Ring<F>, name: String, gens: Vec<i64>, rels: Vec<Vector<F>>) -> Self {
        PresentedModule {
            ring: ring.clone(),
            name,
            gens,
            rels,
            gb: OnceLock::new(),
            hilbert: OnceLock::new(),
            ann: OnceLock::new(),
        }
    }

    /// `⊕_j R(−twists_j)`.
    pub fn free(ring: &Ring<F>, name: impl Into<String>, twists: Vec<i64>) -> Self {
        Self::raw(ring, name.into(), twists, Vec::new())
    }

    /// `R/(ideal)`.
    pub fn cyclic(ring: &Ring<F>, name: impl Into<String>, ideal: &[Poly<F>]) -> Result<Self> {
        let p = ring.poly();
        let rels = ideal.iter().map(|f| p.vector_from_poly(0, f)).collect();
        Self::new(ring, name, vec![0], rels)
    }

    /// The residue field `k = R/(x_1..x_n)`.
    pub fn residue_field(ring: &Ring<F>) -> Self {
        let p = ring.poly();
        let vars: Vec<Poly<F>> = (0..p.nvars()).map(|i| p.var(i)).collect();
        Self::cyclic(ring, "k", &vars).expect("variables are homogeneous")
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Twists of the free module `F_0` covering the module.
    pub fn generator_degrees(&self) -> &[i64] {
        &self.gens
    }

    pub fn relations(&self) -> &[Vector<F>] {
        &self.rels
    }

    /// Degrees of the relation columns (zero columns report 0).
    pub fn relation_degrees(&self) -> Vec<i64> {
        column_degrees(&self.rels, &self.gens)
            .expect("relations are homogeneous")
            .0
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// `M(a)`, with `M(a)_i = M_{a+i}`.
    pub fn twist(&self, a: i64) -> Self {
        let gens = self.gens.iter().map(|g| g - a).collect();
        Self::raw(
            &self.ring,
            format!("{}({a})", self.name),
            gens,
            self.rels.clone(),
        )
    }

    /// Gröbner basis of the relations plus `I·F_0` inside `F_0`, over the polynomial ring.
    pub fn gb(&self) -> &ModuleGb<F> {
        self.gb.get_or_init(|| {
            ModuleGb::compute(
                self.ring.poly(),
                &self.gens,
                &self.rels,
                self.ring.ideal(),
                &GbOptions::full(),
            )
            .expect("relations were validated as homogeneous")
        })
    }

    pub fn hilbert_series(&self) -> &HilbertSeries {
        self.hilbert.get_or_init(|| {
            let gb = self.gb();
            let lead: Vec<Vec<Monomial>> = (0..self.gens.len())
                .map(|j| gb.leading_monomials(j))
                .collect();
            series_from_leading_terms(&self.gens, &lead, self.ring.poly().degrees())
        })
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert_series().is_zero()
    }

    pub fn order(&self) -> Order {
        LaurentExpansion::expand(self.hilbert_series(), 0).order()
    }

    /// Krull dimension; `None` stands for `−∞` (the zero module).
    pub fn dimension(&self) -> Option<i64> {
        self.order().finite().map(|o| -o)
    }

    /// Standard monomials `(component, monomial)` spanning `M_d`.
    pub fn standard_basis(&self, d: i64) -> Vec<(usize, Monomial)> {
        let gb = self.gb();
        let p = self.ring.poly();
        let mut out = Vec::new();
        for (j, &a) in self.gens.iter().enumerate() {
            for m in p.monomials_of_degree(d - a) {
                if !gb.is_reducible(j, &m) {
                    out.push((j, m));
                }
            }
        }
        out
    }

    /// `dim_k M_d` by standard-monomial enumeration.
    pub fn dim_in_degree(&self, d: i64) -> usize {
        self.standard_basis(d).len()
    }

    /// `dim_k M_d` by plain linear algebra on `(F_0)_d` modulo the span of all
    /// monomial multiples of relations and of `f_n·e_j`; uses no Gröbner basis.
    pub fn dim_in_degree_linear_algebra(&self, d: i64) -> usize {
        let p = self.ring.poly();
        let k = p.field();
        let mut basis: Vec<(usize, Monomial)> = Vec::new();
        for (j, &a) in self.gens.iter().enumerate() {
            for m in p.monomials_of_degree(d - a) {
                basis.push((j, m));
            }
        }
        if basis.is_empty() {
            return 0;
        }
        let lookup: HashMap<(usize, &Monomial), usize> = basis
            .iter()
            .enumerate()
            .map(|(i, (c, m))| ((*c, m), i))
            .collect();
        let index = |c: usize, m: &Monomial| lookup[&(c, m)];
        let mut spans: Vec<Vec<(usize, F::Elem)>> = Vec::new();
        let mut push = |v: &Vector<F>| {
            spans.push(
                v.terms()
                    .iter()
                    .map(|t| (index(t.comp, &t.mono), t.coeff.clone()))
                    .collect(),
            );
        };
        for r in &self.rels {
            let Some(deg) = r.degree(&self.gens) else {
                continue;
            };
            for m in p.monomials_of_degree(d - deg) {
                push(&p.vmul_term(r, &m, &k.one()));
            }
        }
        for f in self.ring.generators() {
            let e = p.homogeneous_degree(f).unwrap() as i64;
            for (j, &a) in self.gens.iter().enumerate() {
                for m in p.monomials_of_degree(d - a - e) {
                    push(&p.vmul_term(&p.vector_from_poly(j, f), &m, &k.one()));
                }
            }
        }
        basis.len() - sparse_rank(k, spans)
    }

    /// Generators of `ann M = {r ∈ R : rM = 0}`.
    pub fn annihilator(&self) -> &[Poly<F>] {
        self.ann.get_or_init(|| {
            let p = self.ring.poly();
            let m = self.gens.len();
            if m == 0 {
                return vec![p.one()];
            }
            // R → ⊕_j M(a_j), 1 ↦ (g_1, ..., g_m).
            let mut target = Vec::with_capacity(m * m);
            for &aj in &self.gens {
                target.extend(self.gens.iter().map(|&al| al - aj));
            }
            let diag =
                p.vector_from_terms((0..m).map(|j| (j * m + j, p.one_mono(), p.field().one())));
            let mut rels = Vec::with_capacity(m * self.rels.len());
            for j in 0..m {
                rels.extend(self.rels.iter().map(|r| r.remap(|c| j * m + c)));
            }
            let ker = kernel_vectors(p, &target, &[0], &[diag], &rels, self.ring.ideal())
                .expect("annihilator data is homogeneous");
            ker.iter().map(|v| v.component(0)).collect()
        })
    }

    /// Whether every relation entry lies in the irrelevant maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.rels
            .iter()
            .all(|r| r.terms().iter().all(|t| !t.mono.is_one()))
    }

    /// An isomorphic presentation with no unit relation entries and a minimal set of relations.
    pub fn minimal_presentation(&self) -> Self {
        let p = self.ring.poly();
        let k = p.field();
        let mut gens = self.gens.clone();
        let mut rels: Vec<Vector<F>> = self.rels.iter().filter(|r| !r.is_zero()).cloned().collect();
        loop {
            let unit = rels.iter().enumerate().find_map(|(ci, r)| {
                r.terms()
                    .iter()
                    .find(|t| t.mono.is_one())
                    .map(|t| (ci, t.comp, t.coeff.clone()))
            });
            let Some((col, row, u)) = unit else { break };
            let pivot = rels.swap_remove(col);
            let mut next = Vec::with_capacity(rels.len());
            for v in rels {
                let entry = v.component(row);
                let v = if entry.is_zero() {
                    v
                } else {
                    let scaled = p.scale(&entry, &k.neg(&k.inv(&u)));
                    p.vadd(&v, &p.vmul_poly(&scaled, &pivot))
                };
                debug_assert!(v.component(row).is_zero());
                let v = self
                    .ring
                    .reduce_vector(&v.remap(|c| if c > row { c - 1 } else { c }));
                if !v.is_zero() {
                    next.push(v);
                }
            }
            gens.remove(row);
            rels = next;
        }
        if !rels.is_empty() {
            let gb = ModuleGb::compute(
                p,
                &gens,
                &rels,
                self.ring.ideal(),
                &GbOptions {
                    degree_bound: None,
                    reduce: false,
                },
            )
            .expect("relations are homogeneous");
            rels = gb
                .minimal_inputs()
                .iter()
                .map(|&i| rels[i].clone())
                .collect();
        }
        rels.sort_by_key(|r| r.degree(&gens));
        Self::raw(&self.ring, self.name.clone(), gens, rels)
    }

    /// Normal form of an element of `F_0` modulo the relations.
    pub fn normal_form(&self, v: &Vector<F>) -> Vector<F> {
        self.gb().normal_form(v)
    }
}

/// `ker(φ: src → tgt)` where `matrix[j]` is the image of the `j`-th generator of
/// `src`, written in the generators of `tgt`.
pub fn kernel<F: Field>(
    src: &PresentedModule<F>,
    tgt: &PresentedModule<F>,
    matrix: &[Vector<F>],
) -> Result<PresentedModule<F>> {
    QuotientRing::same_ring(src.ring(), tgt.ring())?;
    if matrix.len() != src.gens.len() {
        return Err(Error::InvalidInput(format!(
            "map has {} columns but {} has {} generators",
            matrix.len(),
            src.name,
            src.gens.len()
        )));
    }
    for (j, c) in matrix.iter().enumerate() {
        if c.max_component().is_some_and(|m| m >= tgt.gens.len()) {
            return Err(Error::InvalidInput(format!(
                "column {} leaves the target",
                j + 1
            )));
        }
        if !c.is_zero() && c.homogeneous_degree(&tgt.gens) != Some(src.gens[j]) {
            return Err(Error::NotHomogeneous(format!(
                "column {} is not homogeneous of degree {}",
                j + 1,
                src.gens[j]
            )));
        }
    }
    let ring = src.ring();
    let p = ring.poly();
    let elems = kernel_vectors(p, &tgt.gens, &src.gens, matrix, &tgt.rels, ring.ideal())?;
    let degs: Vec<i64> = elems.iter().map(|v| v.degree(&src.gens).unwrap()).collect();
    let rels = kernel_vectors(p, &src.gens, &degs, &elems, &src.rels, ring.ideal())?;
    let m = PresentedModule::new(ring, format!("ker({}→{})", src.name, tgt.name), degs, rels)?;
    Ok(m.minimal_presentation())
}

/// A minimal graded free resolution `… → F_2 → F_1 → F_0`, computed step by step.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: Ring<F>,
    twists: Vec<Vec<i64>>,
    maps: Vec<Vec<Vector<F>>>,
    finite: bool,
}

impl<F: Field> Resolution<F> {
    /// Resolution of `module` through `F_steps`.
    pub fn new(module: &PresentedModule<F>, steps: usize) -> Self {
        let m = module.minimal_presentation();
        let f1 = m.relation_degrees();
        let mut res = Resolution {
            ring: module.ring().clone(),
            twists: vec![m.gens.clone(), f1],
            maps: vec![m.rels.clone()],
            finite: false,
        };
        if res.twists[1].is_empty() {
            res.finite = true;
        }
        res.extend_to(steps);
        res
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    /// Number of free modules computed (`F_0..F_{len−1}`), or all of them when finite.
    pub fn computed(&self) -> usize {
        self.twists.len() - 1
    }

    /// Whether the resolution has been shown to stop (all further modules are zero).
    pub fn is_finite(&self) -> bool {
        self.finite
    }

    pub fn extend_to(&mut self, steps: usize) {
        let p = self.ring.poly();
        while !self.finite && self.computed() < steps {
            let i = self.computed();
            let src = &self.twists[i];
            let tgt = &self.twists[i - 1];
            let ker = kernel_vectors(p, tgt, src, &self.maps[i - 1], &[], self.ring.ideal())
                .expect("resolution maps are homogeneous");
            let gens = if ker.is_empty() {
                ker
            } else {
                let gb = ModuleGb::compute(
                    p,
                    src,
                    &ker,
                    self.ring.ideal(),
                    &GbOptions {
                        degree_bound: None,
                        reduce: false,
                    },
                )
                .expect("kernel vectors are homogeneous");
                let mut g: Vec<Vector<F>> = gb
                    .minimal_inputs()
                    .iter()
                    .map(|&j| ker[j].clone())
                    .collect();
                g.sort_by_key(|v| v.degree(src));
                g
            };
            let degs: Vec<i64> = gens.iter().map(|v| v.degree(src).unwrap()).collect();
            if degs.is_empty() {
                self.finite = true;
            }
            self.twists.push(degs);
            self.maps.push(gens);
        }
    }

    /// Twists of `F_i` (empty beyond a finite resolution's length).
    pub fn twists(&self, i: usize) -> &[i64] {
        self.twists.get(i).map_or(&[], |v| v.as_slice())
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twists(i).len()
    }

    pub fn ensure(&self, i: usize) -> Result<()> {
        if self.finite || i <= self.computed() {
            Ok(())
        } else {
            Err(Error::ResolutionTooShort {
                needed: i,
                have: self.computed(),
            })
        }
    }

    /// Columns of `∂_i : F_i → F_{i−1}` (`i ≥ 1`).
    pub fn map(&self, i: usize) -> &[Vector<F>] {
        assert!(i >= 1, "∂_0 is not part of the resolution");
        self.maps.get(i - 1).map_or(&[], |v| v.as_slice())
    }

    /// Entry `(row, col)` of `∂_i`.
    pub fn entry(&self, i: usize, row: usize, col: usize) -> Poly<F> {
        self.map(i)[col].component(row)
    }

    /// `Ω^i M = coker(∂_{i+1})`, generated by `F_i`.
    pub fn syzygy(&self, i: usize) -> Result<PresentedModule<F>> {
        self.ensure(i + 1)?;
        Ok(PresentedModule::raw(
            &self.ring,
            format!("Omega^{i}"),
            self.twists(i).to_vec(),
            self.map(i + 1).to_vec(),
        ))
    }

    /// Whether every entry of every computed map has positive degree.
    pub fn is_minimal(&self) -> bool {
        self.maps
            .iter()
            .flatten()
            .all(|v| v.terms().iter().all(|t| !t.mono.is_one()))
    }

    /// `∂_i ∘ ∂_{i+1} = 0` modulo the defining ideal, for every computed `i`.
    pub fn composes_to_zero(&self) -> bool {
        let p = self.ring.poly();
        for i in 1..self.maps.len() {
            let upper = self.map(i);
            for col in self.map(i + 1) {
                let coeffs = p.vector_components(col, upper.len());
                let v = p.vlinear_combination(&coeffs, upper);
                if !self.ring.reduce_vector(&v).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_i (−1)^i Σ_j t^{a_ij}` over the computed steps.
    pub fn betti_polynomial(&self) -> crate::hilbert::LaurentPoly {
        let terms = self.twists.iter().enumerate().flat_map(|(i, tw)| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            tw.iter().map(move |&a| (a, num_bigint::BigInt::from(sign)))
        });
        crate::hilbert::LaurentPoly::from_terms(terms)
    }
}
