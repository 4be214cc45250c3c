//! Asymptotic invariants of a pair: Hilbert polynomials of the Betti sequence,
//! complexity, `h_R`, Herbrand differences, and the Laurent invariants
//! `φ, ω^j, ρ^j, γ^n, ε^j`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ext::{ExtComputer, ExtProfile};
use crate::field::Field;
use crate::hilbert::{HilbertSeries, LaurentPoly};
use crate::laurent::{format_rational, g_of, order_of, Order};
use crate::module::PresentedModule;

/// Dense univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly::default()
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    /// The unique polynomial of degree `< points.len()` through the given points (Newton form).
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let n = points.len();
        let mut dd: Vec<BigRational> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
            }
        }
        let mut acc = RatPoly::zero();
        for i in (0..n).rev() {
            // acc = acc·(x − x_i) + dd[i]
            let mut next = vec![BigRational::zero(); acc.coeffs.len() + 1];
            for (k, c) in acc.coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &points[i].0;
            }
            next[0] += &dd[i];
            acc = RatPoly::new(next);
        }
        acc
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = format_rational(&a);
            match k {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    write!(f, "i")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        strs.serialize(s)
    }
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

fn ser_rat<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

fn ser_opt_rat<S: Serializer>(
    q: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&format_rational(q)),
        None => s.serialize_none(),
    }
}

/// `P_even`, `P_odd` and what follows from them.
#[derive(Clone, Debug, Serialize)]
pub struct HilbertPolynomials {
    pub even: RatPoly,
    pub odd: RatPoly,
    /// First step of the trailing verification window.
    pub window_start: usize,
    pub max_step: usize,
    /// Lowest step from which the stored polynomials are used in sums.
    pub fext_hat: usize,
    pub cx: usize,
    #[serde(serialize_with = "ser_rat")]
    pub a_lead: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub b_lead: BigRational,
    /// `β_i` for `ℓ̂ < i ≤ max_step`.
    #[serde(skip)]
    betti: Vec<(usize, BigInt)>,
}

impl HilbertPolynomials {
    /// `β_i`, read from the profile inside the window and from the polynomials beyond it.
    pub fn beta(&self, i: usize) -> BigRational {
        if i <= self.max_step {
            if let Some((_, b)) = self.betti.iter().find(|(j, _)| *j == i) {
                return rat(b);
            }
        }
        let p = if i.is_multiple_of(2) {
            &self.even
        } else {
            &self.odd
        };
        p.eval_int(i as i64)
    }
}

/// Fits `P_even` and `P_odd` by exact finite differences over the trailing `c + 2`
/// values of each parity.
pub fn fit_hilbert_polynomials(profile: &ExtProfile) -> Result<HilbertPolynomials> {
    let c = profile.codim;
    let per_parity = c + 2;
    let need = 2 * per_parity;
    let betti = profile.betti_window();
    if betti.len() < need || betti.len() != profile.max_step - profile.fext_hat {
        return Err(Error::NotStabilized(format!(
            "need {need} finite-length steps after fext = {}, have {}; increase the maximum step",
            profile.fext_hat,
            betti.len()
        )));
    }
    let window_start = profile.max_step + 1 - need;
    let mut fitted = Vec::new();
    for parity in [0, 1] {
        let pts: Vec<(i64, BigInt)> = betti
            .iter()
            .filter(|(i, _)| *i >= window_start && i % 2 == parity)
            .map(|(i, b)| (*i as i64, b.clone()))
            .collect();
        fitted.push(fit_parity(&pts, c)?);
    }
    let odd = fitted.pop().unwrap();
    let even = fitted.pop().unwrap();
    let cx = match (even.degree(), odd.degree()) {
        (None, None) => 0,
        (a, b) => 1 + a.max(b).unwrap(),
    };
    let (a_lead, b_lead) = if cx == 0 {
        (BigRational::zero(), BigRational::zero())
    } else {
        (even.coeff(cx - 1), odd.coeff(cx - 1))
    };
    Ok(HilbertPolynomials {
        even,
        odd,
        window_start,
        max_step: profile.max_step,
        fext_hat: profile.fext_hat,
        cx,
        a_lead,
        b_lead,
        betti,
    })
}

fn fit_parity(pts: &[(i64, BigInt)], c: usize) -> Result<RatPoly> {
    let mut diffs: Vec<BigInt> = pts.iter().map(|p| p.1.clone()).collect();
    let mut degree = None;
    for d in 0..pts.len() {
        if diffs.iter().all(|x| x.is_zero()) {
            degree = Some(d);
            break;
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // `degree` counts differencing rounds; the polynomial degree is one less.
    let Some(rounds) = degree else {
        return Err(Error::NotStabilized(format!(
            "Betti numbers at steps {}..={} are not polynomial; increase the maximum step",
            pts[0].0,
            pts[pts.len() - 1].0
        )));
    };
    if rounds == 0 {
        return Ok(RatPoly::zero());
    }
    let deg = rounds - 1;
    if deg > c.saturating_sub(1) || rounds >= pts.len() {
        if rounds >= pts.len() {
            return Err(Error::NotStabilized(
                "fit not verified on extra values; increase the maximum step".into(),
            ));
        }
        return Err(Error::DegreeExceedsCodim {
            degree: deg,
            bound: c.saturating_sub(1),
        });
    }
    let sample: Vec<(BigRational, BigRational)> = pts[pts.len() - rounds..]
        .iter()
        .map(|(i, b)| (BigRational::from_integer((*i).into()), rat(b)))
        .collect();
    let p = RatPoly::interpolate(&sample);
    debug_assert!(pts.iter().all(|(i, b)| p.eval_int(*i) == rat(b)));
    Ok(p)
}

/// `h_R(M, N) = a_{r−1} − b_{r−1}`, and `0` when `r = 0`.
pub fn h_invariant(polys: &HilbertPolynomials) -> BigRational {
    &polys.a_lead - &polys.b_lead
}

/// The `j`-th Herbrand difference and the partial-sum polynomials it comes from.
#[derive(Clone, Debug, Serialize)]
pub struct HerbrandDifference {
    pub j: usize,
    /// `None` when the normalized partial sums diverge or oscillate.
    #[serde(serialize_with = "ser_opt_rat")]
    pub value: Option<BigRational>,
    /// `S(n) = Σ_{ℓ̂ < i ≤ n} (−1)^i β_i` as a polynomial in `n`, for even and odd `n`.
    pub even_sums: RatPoly,
    pub odd_sums: RatPoly,
}

pub fn herbrand_difference(polys: &HilbertPolynomials, j: usize) -> HerbrandDifference {
    let npts = polys.cx + 3;
    let partial = |n: usize| -> BigRational {
        (polys.fext_hat + 1..=n).fold(BigRational::zero(), |acc, i| {
            let b = polys.beta(i);
            if i % 2 == 0 {
                acc + b
            } else {
                acc - b
            }
        })
    };
    let mut branches = Vec::new();
    for parity in [0, 1] {
        let mut n0 = polys.max_step.max(polys.fext_hat) + 1;
        if n0 % 2 != parity {
            n0 += 1;
        }
        let pts: Vec<(BigRational, BigRational)> = (0..npts)
            .map(|k| {
                let n = n0 + 2 * k;
                (BigRational::from_integer((n as i64).into()), partial(n))
            })
            .collect();
        branches.push(RatPoly::interpolate(&pts));
    }
    let odd_sums = branches.pop().unwrap();
    let even_sums = branches.pop().unwrap();
    let within = |p: &RatPoly| p.degree().is_none_or(|d| d <= j);
    let value =
        if within(&even_sums) && within(&odd_sums) && even_sums.coeff(j) == odd_sums.coeff(j) {
            Some(even_sums.coeff(j))
        } else {
            None
        };
    HerbrandDifference {
        j,
        value,
        even_sums,
        odd_sums,
    }
}

/// Whether `h_R = 2r·h_r`.
pub fn check_h_identity(polys: &HilbertPolynomials) -> bool {
    let r = polys.cx;
    let hr = herbrand_difference(polys, r);
    match hr.value {
        Some(v) => h_invariant(polys) == v * BigRational::from_integer(BigInt::from(2 * r)),
        None => false,
    }
}

/// `φ(M, N) = H(M, t^{−1}) H(N, t) / H(R, t^{−1})`.
pub fn phi<F: Field>(m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<HilbertSeries> {
    let hr = m.ring().hilbert_series().invert_t();
    m.hilbert_series()
        .invert_t()
        .mul(n.hilbert_series())
        .div(&hr)
}

/// `ω^j = Σ_{i ≤ j} (−1)^i H(Ext^i)`.
pub fn omega<F: Field>(ext: &mut ExtComputer<F>, j: usize) -> HilbertSeries {
    (0..=j).fold(HilbertSeries::zero(), |acc, i| {
        let h = ext.ext_series(i);
        if i % 2 == 0 {
            acc.add(&h)
        } else {
            acc.sub(&h)
        }
    })
}

/// `ρ^j = ω^j − φ`.
pub fn rho<F: Field>(ext: &mut ExtComputer<F>, j: usize) -> Result<HilbertSeries> {
    let p = phi(ext.m(), ext.n())?;
    Ok(omega(ext, j).sub(&p))
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaValue {
    pub n: i64,
    pub ell_n: usize,
    #[serde(serialize_with = "ser_rat")]
    pub value: BigRational,
}

/// `γ^n = g^n(ρ^{ℓ_n})`, where `ℓ_n` is the last step `≤ max_step` with `g^n(Ext^i) ≠ 0`.
/// Fails when that step lies in the last `2c + 4` computed steps.
pub fn gamma<F: Field>(ext: &mut ExtComputer<F>, n: i64, max_step: usize) -> Result<GammaValue> {
    let window = 2 * ext.m().ring().codim() + 4;
    let mut ell = 0;
    for i in 0..=max_step {
        if !g_of(&ext.ext_series(i), n).is_zero() {
            ell = i;
        }
    }
    if max_step < window || ell > max_step - window {
        return Err(Error::WindowTooShort(format!(
            "g^{n}(Ext^{ell}) ≠ 0 within the last {window} of {max_step} steps; cannot certify ℓ_{n}"
        )));
    }
    let value = g_of(&rho(ext, ell)?, n);
    Ok(GammaValue {
        n,
        ell_n: ell,
        value,
    })
}

/// `ε^j = g^{dim R − j}(ω^j)`.
pub fn epsilon<F: Field>(ext: &mut ExtComputer<F>, j: usize) -> BigRational {
    let d = ext.m().ring().dim();
    g_of(&omega(ext, j), d - j as i64)
}

/// Krull dimension with `−∞` for the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dim {
    NegInf,
    Finite(i64),
}

impl Dim {
    pub fn from_option(d: Option<i64>) -> Self {
        d.map_or(Dim::NegInf, Dim::Finite)
    }

    pub fn value(self) -> Option<i64> {
        match self {
            Dim::Finite(d) => Some(d),
            Dim::NegInf => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(d) => write!(f, "{d}"),
            Dim::NegInf => write!(f, "-inf"),
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(d) => s.serialize_i64(*d),
            Dim::NegInf => s.serialize_str("-inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Dimensions {
    pub ring: i64,
    pub m: Dim,
    pub n: Dim,
    /// `dim R/(ann M + ann N)`.
    pub support: Dim,
}

impl Dimensions {
    pub fn of<F: Field>(m: &PresentedModule<F>, n: &PresentedModule<F>) -> Result<Self> {
        let ring = m.ring();
        let mut ideal = m.annihilator().to_vec();
        ideal.extend_from_slice(n.annihilator());
        let quotient = PresentedModule::cyclic(ring, "R/(ann M + ann N)", &ideal)?;
        Ok(Dimensions {
            ring: ring.dim(),
            m: Dim::from_option(m.dimension()),
            n: Dim::from_option(n.dimension()),
            support: Dim::from_option(quotient.dimension()),
        })
    }

    /// `dim M + dim N − dim R`.
    pub fn excess(&self) -> Dim {
        match (self.m, self.n) {
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a + b - self.ring),
            _ => Dim::NegInf,
        }
    }

    pub fn min_mn(&self) -> Dim {
        self.m.min(self.n)
    }
}

/// Everything the theorem checks read off one pair.
#[derive(Clone, Debug, Serialize)]
pub struct PairAnalysis {
    pub profile: ExtProfile,
    pub polynomials: HilbertPolynomials,
    pub cx: usize,
    #[serde(serialize_with = "ser_rat")]
    pub h: BigRational,
    pub dims: Dimensions,
    pub phi: HilbertSeries,
    /// `ρ^{ℓ̂}` and its order.
    pub rho_fext: HilbertSeries,
    pub order_rho_fext: Order,
}

impl PairAnalysis {
    pub fn compute<F: Field>(
        ext: &mut ExtComputer<F>,
        max_step: usize,
        fext_certified: bool,
    ) -> Result<Self> {
        let profile = ext.profile(max_step, fext_certified);
        let polynomials = fit_hilbert_polynomials(&profile)?;
        let cx = polynomials.cx;
        let h = h_invariant(&polynomials);
        let dims = Dimensions::of(ext.m(), ext.n())?;
        let phi = phi(ext.m(), ext.n())?;
        let rho_fext = omega(ext, profile.fext_hat).sub(&phi);
        let order_rho_fext = order_of(&rho_fext);
        Ok(PairAnalysis {
            profile,
            polynomials,
            cx,
            h,
            dims,
            phi,
            rho_fext,
            order_rho_fext,
        })
    }
}

/// `t^{−e} − 1`.
pub fn t_inverse_power_minus_one(e: u32) -> HilbertSeries {
    HilbertSeries::polynomial(LaurentPoly::from_terms([
        (-(e as i64), BigInt::one()),
        (0, -BigInt::one()),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::poly::PolyRing;
    use crate::ring::QuotientRing;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn profile_from(betti: &[i64], codim: usize) -> ExtProfile {
        let series = betti
            .iter()
            .map(|&b| HilbertSeries::polynomial(LaurentPoly::from_i64(0, &[b])))
            .collect();
        ExtProfile::from_series(series, codim, true)
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let p = RatPoly::new(vec![q(1, 3), q(-2, 1), q(0, 1), q(5, 7)]);
        let pts: Vec<_> = (0..4)
            .map(|x| (q(2 * x - 1, 1), p.eval_int(2 * x - 1)))
            .collect();
        assert_eq!(RatPoly::interpolate(&pts), p);
        assert_eq!(p.to_string(), "5/7*i^3 - 2*i + 1/3");
    }

    #[test]
    fn alternating_betti_fit() {
        let betti: Vec<i64> = (0..=10).map(|i| i % 2).collect();
        let polys = fit_hilbert_polynomials(&profile_from(&betti, 1)).unwrap();
        assert!(polys.even.is_zero());
        assert_eq!(polys.odd, RatPoly::from_i64(&[1]));
        assert_eq!(polys.cx, 1);
        assert_eq!(h_invariant(&polys), q(-1, 1));
        let h1 = herbrand_difference(&polys, 1);
        assert_eq!(h1.value, Some(q(-1, 2)));
        assert!(check_h_identity(&polys));
    }

    #[test]
    fn linear_even_fit() {
        // coefficients of t²/(1 − t²)²: β_{2m} = m
        let betti: Vec<i64> = (0..=12)
            .map(|i| if i % 2 == 0 { i / 2 } else { 0 })
            .collect();
        let polys = fit_hilbert_polynomials(&profile_from(&betti, 2)).unwrap();
        assert_eq!(polys.even, RatPoly::new(vec![q(0, 1), q(1, 2)]));
        assert!(polys.odd.is_zero());
        assert_eq!(polys.cx, 2);
        assert_eq!(h_invariant(&polys), q(1, 2));
        assert_eq!(herbrand_difference(&polys, 2).value, Some(q(1, 8)));
        assert_eq!(herbrand_difference(&polys, 3).value, Some(q(0, 1)));
        assert_eq!(herbrand_difference(&polys, 1).value, None);
        assert!(check_h_identity(&polys));
    }

    #[test]
    fn zero_and_unstable_profiles() {
        let polys =
            fit_hilbert_polynomials(&profile_from(&[3, 0, 0, 0, 0, 0, 0, 0, 0], 1)).unwrap();
        assert_eq!(polys.cx, 0);
        assert_eq!(h_invariant(&polys), q(0, 1));
        let err = fit_hilbert_polynomials(&profile_from(&[1, 1, 2, 4, 8, 16, 32, 64, 128, 256], 1))
            .unwrap_err();
        assert!(matches!(
            err,
            Error::NotStabilized(_) | Error::DegreeExceedsCodim { .. }
        ));
        let quad: Vec<i64> = (0..=12).map(|i| i * i).collect();
        let err = fit_hilbert_polynomials(&profile_from(&quad, 2)).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeExceedsCodim {
                degree: 2,
                bound: 1
            }
        );
        assert!(matches!(
            fit_hilbert_polynomials(&profile_from(&[0, 1, 0], 1)),
            Err(Error::NotStabilized(_))
        ));
    }

    #[test]
    fn phi_of_intro_pair() {
        let p = PolyRing::standard(Rationals, &["x1", "x2"]).unwrap();
        let r = QuotientRing::new("R", p.clone(), vec![p.mul(&p.var(0), &p.var(1))]).unwrap();
        let m = PresentedModule::cyclic(&r, "M", &[p.var(0)]).unwrap();
        let n = PresentedModule::cyclic(&r, "N", &[p.var(1)]).unwrap();
        // t/(1 − t²)
        let expected = HilbertSeries::new(LaurentPoly::from_i64(1, &[1]), vec![2]).unwrap();
        assert_eq!(phi(&m, &n).unwrap(), expected);
        let rr = PresentedModule::free(&r, "R", vec![0]);
        assert_eq!(&phi(&rr, &n).unwrap(), n.hilbert_series());
        assert_eq!(phi(&m.twist(2), &n.twist(-1)).unwrap(), expected.shift(3));
        let mut ext = ExtComputer::new(&m, &n).unwrap();
        let rho0 = rho(&mut ext, 0).unwrap();
        assert_eq!(rho0, expected.neg());
        assert_eq!(order_of(&rho0), Order::Finite(-1));
        let dims = Dimensions::of(&m, &n).unwrap();
        assert_eq!(
            (dims.ring, dims.m, dims.n, dims.support),
            (1, Dim::Finite(1), Dim::Finite(1), Dim::Finite(0))
        );
        let a = PairAnalysis::compute(&mut ext, 12, false).unwrap();
        assert_eq!(a.cx, 1);
        assert_eq!(a.h, q(-1, 1));
        assert_eq!(a.order_rho_fext, Order::Finite(-1));
        // γ^1: Ext^i has dimension 0 for i ≥ 1, so ℓ_1 = 0
        let g1 = gamma(&mut ext, 1, 12).unwrap();
        assert_eq!(g1.ell_n, 0);
        assert_eq!(g1.value, g_of(&rho0, 1));
        assert!(gamma(&mut ext, 0, 12).is_err());
        assert!(epsilon(&mut ext, 0).is_zero());
    }

    proptest! {
        #[test]
        fn interpolation_is_exact(coeffs in prop::collection::vec(-20i64..20, 1..6), start in -5i64..5) {
            let p = RatPoly::from_i64(&coeffs);
            let pts: Vec<_> = (0..coeffs.len() as i64).map(|k| (q(start + 3 * k, 1), p.eval_int(start + 3 * k))).collect();
            prop_assert_eq!(RatPoly::interpolate(&pts), p);
        }

        #[test]
        fn fitted_polynomials_reproduce_window(a in 0i64..5, b in 0i64..5, c0 in 0i64..5, c1 in 0i64..5) {
            let betti: Vec<i64> = (0..=13).map(|i| if i % 2 == 0 { a * i + c0 } else { b * i + c1 }).collect();
            let polys = fit_hilbert_polynomials(&profile_from(&betti, 2)).unwrap();
            for (i, &v) in betti.iter().enumerate().skip(polys.window_start) {
                prop_assert_eq!(polys.beta(i), q(v, 1));
            }
            prop_assert!(polys.cx <= 2);
            if polys.cx >= 1 {
                prop_assert!(check_h_identity(&polys));
            }
        }
    }
}
