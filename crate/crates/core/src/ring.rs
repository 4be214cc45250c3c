//! Graded quotient rings `R = Q/(f_1..f_c)` of weighted polynomial rings.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Lifter, ModuleGb};
use crate::hilbert::{series_from_leading_terms, HilbertSeries, LaurentPoly};
use crate::poly::{Poly, PolyRing};
use crate::vector::Vector;

pub type Ring<F> = Arc<QuotientRing<F>>;

#[derive(Debug)]
pub struct QuotientRing<F: Field> {
    name: String,
    poly: PolyRing<F>,
    gens: Vec<Poly<F>>,
    gb: ModuleGb<F>,
    ideal: Vec<Poly<F>>,
    ci: bool,
    e: Vec<u32>,
    hilbert: HilbertSeries,
    lifter: OnceLock<Result<Lifter<F>>>,
}

impl<F: Field> QuotientRing<F> {
    /// The polynomial ring itself (no relations).
    pub fn polynomial(poly: PolyRing<F>) -> Ring<F> {
        Self::build("Q".into(), poly, Vec::new()).expect("the zero ideal is always valid")
    }

    /// `Q/(gens)`. Generators must be homogeneous with every term of total exponent ≥ 2.
    /// Whether they form a regular sequence is tested with the Hilbert-series
    /// criterion `H(Q/(f)) = ∏(1 − t^{e_i}) / ∏(1 − t^{deg x_l})`.
    pub fn new(name: impl Into<String>, poly: PolyRing<F>, gens: Vec<Poly<F>>) -> Result<Ring<F>> {
        for (i, f) in gens.iter().enumerate() {
            if f.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "ideal generator {} is zero",
                    i + 1
                )));
            }
            if poly.homogeneous_degree(f).is_none() {
                return Err(Error::NotHomogeneous(format!(
                    "ideal generator {}: {}",
                    i + 1,
                    poly.format(f)
                )));
            }
            if let Some(t) = f.terms().iter().find(|t| t.mono.total_exponent() < 2) {
                return Err(Error::InvalidInput(format!(
                    "ideal generator {} has the term {} outside the square of the maximal ideal",
                    i + 1,
                    poly.format_mono(&t.mono)
                )));
            }
        }
        Self::build(name.into(), poly, gens)
    }

    fn build(name: String, poly: PolyRing<F>, gens: Vec<Poly<F>>) -> Result<Ring<F>> {
        let gb = ModuleGb::ideal(&poly, &gens)?;
        let ideal = gb.polys();
        let lead = vec![gb.leading_monomials(0)];
        let hilbert = series_from_leading_terms(&[0], &lead, poly.degrees());
        let e: Vec<u32> = gens
            .iter()
            .map(|f| poly.homogeneous_degree(f).unwrap())
            .collect();
        let expected = e
            .iter()
            .fold(HilbertSeries::polynomial_ring(poly.degrees()), |h, &d| {
                h.mul(&HilbertSeries::polynomial(
                    LaurentPoly::one().mul_one_minus(d),
                ))
            });
        let ci = hilbert == expected;
        Ok(Arc::new(QuotientRing {
            name,
            poly,
            gens,
            gb,
            ideal,
            ci,
            e,
            hilbert,
            lifter: OnceLock::new(),
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn poly(&self) -> &PolyRing<F> {
        &self.poly
    }

    pub fn field(&self) -> &F {
        self.poly.field()
    }

    pub fn generators(&self) -> &[Poly<F>] {
        &self.gens
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn ideal(&self) -> &[Poly<F>] {
        &self.ideal
    }

    pub fn gb(&self) -> &ModuleGb<F> {
        &self.gb
    }

    /// Whether the generators form a regular sequence.
    pub fn is_complete_intersection(&self) -> bool {
        self.ci
    }

    pub fn require_ci(&self) -> Result<()> {
        if self.ci {
            Ok(())
        } else {
            Err(Error::NotCompleteIntersection(format!(
                "the generators of {} are not a regular sequence",
                self.name
            )))
        }
    }

    /// Codimension `c`.
    pub fn codim(&self) -> usize {
        self.gens.len()
    }

    /// Generator degrees `e_1..e_c`.
    pub fn generator_degrees(&self) -> &[u32] {
        &self.e
    }

    pub fn hilbert_series(&self) -> &HilbertSeries {
        &self.hilbert
    }

    /// Krull dimension, from the order of the Hilbert series at `t = 1`.
    pub fn dim(&self) -> i64 {
        let (v, _) = self.hilbert.numerator().split_root_at_one();
        self.hilbert.denominator().len() as i64 - v as i64
    }

    pub fn reduce(&self, f: &Poly<F>) -> Poly<F> {
        if self.ideal.is_empty() {
            return f.clone();
        }
        self.gb.normal_form_poly(f)
    }

    pub fn reduce_vector(&self, v: &Vector<F>) -> Vector<F> {
        if self.ideal.is_empty() {
            return v.clone();
        }
        let rank = v.max_component().map_or(0, |c| c + 1);
        let comps: Vec<Poly<F>> = self
            .poly
            .vector_components(v, rank)
            .iter()
            .map(|f| self.reduce(f))
            .collect();
        self.poly.vector_from_polys(&comps)
    }

    /// Coefficients `a` with `f = Σ a_n f_n` over `Q`, or `None` if `f ∉ (f_1..f_c)`.
    pub fn lift_to_generators(&self, f: &Poly<F>) -> Result<Option<Vec<Poly<F>>>> {
        let lifter = self.lifter.get_or_init(|| {
            let cols: Vec<Vector<F>> = self
                .gens
                .iter()
                .map(|g| self.poly.vector_from_poly(0, g))
                .collect();
            Lifter::new(&self.poly, &[0], &cols)
        });
        match lifter {
            Ok(l) => Ok(l.lift_poly(f)),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn same_ring(a: &Ring<F>, b: &Ring<F>) -> Result<()> {
        if Arc::ptr_eq(a, b) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", a.name, b.name)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn hypersurface() {
        let q = PolyRing::standard(Rationals, &["x1", "x2"]).unwrap();
        let f = q.mul(&q.var(0), &q.var(1));
        let r = QuotientRing::new("R", q.clone(), vec![f]).unwrap();
        assert!(r.is_complete_intersection());
        assert_eq!(r.dim(), 1);
        assert_eq!(
            r.hilbert_series(),
            &HilbertSeries::new(LaurentPoly::from_i64(0, &[1, 1]), vec![1]).unwrap()
        );
        let x1 = q.var(0);
        let a = r
            .lift_to_generators(&q.mul(&q.mul(&x1, &x1), &q.var(1)))
            .unwrap()
            .unwrap();
        assert_eq!(a, vec![x1.clone()]);
        assert!(r.lift_to_generators(&x1).unwrap().is_none());
    }

    #[test]
    fn non_regular_sequence_detected() {
        let q = PolyRing::standard(Rationals, &["x", "y"]).unwrap();
        let (x, y) = (q.var(0), q.var(1));
        let r = QuotientRing::new("R", q.clone(), vec![q.mul(&x, &y), q.mul(&x, &x)]).unwrap();
        assert!(!r.is_complete_intersection());
        assert!(r.require_ci().is_err());
    }

    #[test]
    fn linear_generators_rejected() {
        let q = PolyRing::standard(Rationals, &["x", "y"]).unwrap();
        assert!(QuotientRing::new("R", q.clone(), vec![q.var(0)]).is_err());
        let inhom = q.add(&q.mul(&q.var(0), &q.var(0)), &q.pow(&q.var(1), 3));
        assert!(matches!(
            QuotientRing::new("R", q, vec![inhom]),
            Err(Error::NotHomogeneous(_))
        ));
    }
}
