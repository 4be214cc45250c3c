use ciext::corpus::{
    generated_pair, hypersurface_pair, product_pair, residue_pair, standard_corpus,
};
use ciext::groebner::ModuleGb;
use ciext::invariants::{fit_hilbert_polynomials, omega, phi};
use ciext::operators::{find_superficial, reduce_complexity};
use ciext::{
    ExtComputer, Field, HilbertSeries, LaurentPoly, PairAnalysis, Poly, PolyRing, PresentedModule,
    PrimeField, QuotientRing, Rationals, Resolution, SuperficialOptions,
};
use num_traits::Zero;
use proptest::prelude::*;

fn q3() -> PolyRing<Rationals> {
    PolyRing::standard(Rationals, &["x", "y", "z"]).unwrap()
}

/// Homogeneous polynomial of degree `d` from a coefficient list over the monomial basis.
fn homogeneous<F: Field>(p: &PolyRing<F>, d: i64, coeffs: &[i64]) -> Poly<F> {
    let k = p.field().clone();
    p.from_terms(
        p.monomials_of_degree(d)
            .into_iter()
            .zip(coeffs.iter().cycle())
            .map(|(m, &c)| (m, k.from_i64(c))),
    )
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ring_axioms(a in coeffs(), b in coeffs(), c in coeffs(), da in 0i64..3, db in 0i64..3, dc in 0i64..3) {
        let p = q3();
        let (f, g, h) = (homogeneous(&p, da, &a), homogeneous(&p, db, &b), homogeneous(&p, dc, &c));
        prop_assert_eq!(p.mul(&p.mul(&f, &g), &h), p.mul(&f, &p.mul(&g, &h)));
        prop_assert_eq!(p.mul(&f, &p.add(&g, &h)), p.add(&p.mul(&f, &g), &p.mul(&f, &h)));
        if !f.is_zero() && !g.is_zero() {
            prop_assert_eq!(p.homogeneous_degree(&p.mul(&f, &g)), Some((da + db) as u32));
        }
    }

    #[test]
    fn normal_form_is_confluent(g1 in coeffs(), g2 in coeffs(), f in coeffs(), df in 2i64..5) {
        let p = q3();
        let gens: Vec<_> = [homogeneous(&p, 2, &g1), homogeneous(&p, 3, &g2)].into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = ModuleGb::ideal(&p, &gens).unwrap();
        let f = homogeneous(&p, df, &f);
        let r = p.sub(&f, &gb.normal_form_poly(&f));
        prop_assert!(gb.normal_form_poly(&r).is_zero());
    }

    #[test]
    fn lift_round_trips(a1 in coeffs(), a2 in coeffs()) {
        let p = q3();
        let ring = QuotientRing::new("R", p.clone(), vec![p.pow(&p.var(0), 2), p.mul(&p.var(1), &p.var(2))]).unwrap();
        let f = p.add(
            &p.mul(&homogeneous(&p, 2, &a1), &ring.generators()[0]),
            &p.mul(&homogeneous(&p, 2, &a2), &ring.generators()[1]),
        );
        let lift = ring.lift_to_generators(&f).unwrap().expect("f lies in the ideal");
        let back = lift.iter().zip(ring.generators()).fold(p.zero(), |acc, (a, g)| p.add(&acc, &p.mul(a, g)));
        prop_assert_eq!(back, f);
    }

    #[test]
    fn resolutions_compose_to_zero_and_match_series(g in coeffs(), h in coeffs()) {
        let p = q3();
        let ring = QuotientRing::new("R", p.clone(), vec![p.pow(&p.var(0), 2), p.pow(&p.var(1), 2)]).unwrap();
        let gens: Vec<_> = [homogeneous(&p, 1, &g), homogeneous(&p, 2, &h)].into_iter().filter(|f| !f.is_zero()).collect();
        let m = PresentedModule::cyclic(&ring, "M", &gens).unwrap();
        let res = Resolution::new(&m, 4);
        prop_assert!(res.composes_to_zero());
        prop_assert!(res.is_minimal());
        // 0 → Ω^i → F_{i−1} → Ω^{i−1} → 0
        for i in 1..4 {
            let left = res.syzygy(i).unwrap().hilbert_series().clone();
            let right = res.syzygy(i - 1).unwrap().hilbert_series().clone();
            let twists = res.twists(i - 1);
            let free = PresentedModule::free(&ring, "F", twists.to_vec()).hilbert_series().clone();
            prop_assert_eq!(left.add(&right), free);
        }
    }

    #[test]
    fn invert_t_is_an_involution(lo in -3i64..3, c in prop::collection::vec(-5i64..5, 1..6), den in prop::collection::vec(1u32..4, 0..3)) {
        let h = HilbertSeries::new(LaurentPoly::from_i64(lo, &c), den).unwrap();
        prop_assert_eq!(h.invert_t().invert_t(), h);
    }
}

#[test]
fn betti_numbers_over_polynomial_ring_reproduce_series() {
    let p = q3();
    let poly = QuotientRing::polynomial(p.clone());
    let m = PresentedModule::cyclic(
        &poly,
        "M",
        &[
            p.pow(&p.var(0), 2),
            p.mul(&p.var(0), &p.var(1)),
            p.pow(&p.var(2), 3),
        ],
    )
    .unwrap();
    let res = Resolution::new(&m, 5);
    assert!(res.is_finite());
    let lhs = HilbertSeries::polynomial(res.betti_polynomial());
    let rhs = m.hilbert_series().mul(&HilbertSeries::polynomial(
        LaurentPoly::one()
            .mul_one_minus(1)
            .mul_one_minus(1)
            .mul_one_minus(1),
    ));
    assert_eq!(lhs, rhs);
}

#[test]
fn laurent_coefficients_vanish_above_dimension() {
    for pair in standard_corpus().unwrap() {
        for m in [&pair.m, &pair.n] {
            let dim = m.dimension().unwrap_or(-1);
            let h = m.hilbert_series();
            for n in dim + 1..dim + 4 {
                assert!(
                    ciext::laurent::g_of(h, n).is_zero(),
                    "{}: g^{n} ≠ 0",
                    pair.name
                );
            }
        }
    }
}

#[test]
fn omega_equals_phi_once_ext_vanishes() {
    let q = PolyRing::standard(Rationals, &["x", "y"]).unwrap();
    let ring = QuotientRing::new(
        "R",
        q.clone(),
        vec![q.pow(&q.var(0), 2), q.pow(&q.var(1), 2)],
    )
    .unwrap();
    let m = PresentedModule::free(&ring, "M", vec![0, 1]);
    let n = PresentedModule::residue_field(&ring);
    let mut ext = ExtComputer::new(&m, &n).unwrap();
    for i in 1..6 {
        assert!(ext.ext_series(i).is_zero());
    }
    assert_eq!(omega(&mut ext, 0), phi(&m, &n).unwrap());
}

fn residue_ext_series<F: Field>(field: F, steps: usize) -> Vec<HilbertSeries> {
    let q = PolyRing::standard(field, &["x", "y"]).unwrap();
    let f = vec![
        q.pow(&q.var(0), 2),
        q.sub(&q.pow(&q.var(1), 2), &q.mul(&q.var(0), &q.var(1))),
    ];
    let ring = QuotientRing::new("R", q, f).unwrap();
    let k = PresentedModule::residue_field(&ring);
    let mut ext = ExtComputer::new(&k, &k).unwrap();
    (0..=steps).map(|i| ext.ext_series(i)).collect()
}

#[test]
fn prime_field_agrees_with_rationals() {
    assert_eq!(
        residue_ext_series(Rationals, 7),
        residue_ext_series(PrimeField::new(32003).unwrap(), 7)
    );
}

#[test]
fn reduction_lowers_degree_by_one() {
    let mut pairs = vec![
        hypersurface_pair().unwrap(),
        product_pair(2, 2).unwrap(),
        residue_pair(2, 2).unwrap(),
    ];
    pairs.push(generated_pair(2, 2, 1).unwrap());
    pairs.push(generated_pair(3, 2, 1).unwrap());
    for pair in pairs {
        let c = pair.ring.codim();
        let mut ext = ExtComputer::new(&pair.m, &pair.n).unwrap();
        let a = PairAnalysis::compute(&mut ext, 2 * c + 8, true).unwrap();
        let chi =
            find_superficial(&mut ext, &a.profile, a.cx, &SuperficialOptions::default()).unwrap();
        let (red, _) = reduce_complexity(&mut ext, &a.profile, &chi, None, None, 6).unwrap();
        let deg = |p: &ciext::HilbertPolynomials| {
            p.even.degree().max(p.odd.degree()).map_or(-1, |d| d as i64)
        };
        let before = fit_hilbert_polynomials(&a.profile).unwrap();
        assert_eq!(deg(&red.after), deg(&before) - 1, "{}", pair.name);
        assert!(
            red.beta_relation_holds && red.h_relation_holds,
            "{}",
            pair.name
        );
    }
}
