//! Named module pairs used by the acceptance suite and the benches.

use crate::error::Result;
use crate::field::Rationals;
use crate::module::PresentedModule;
use crate::operators::generate_pair;
use crate::poly::{Poly, PolyRing};
use crate::ring::{QuotientRing, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// `R = k[x1,x2]/(x1x2)`, `M = R/(x1)`, `N = R/(x2)`.
    Hypersurface,
    /// `R = k[x1..x2d]/(x_i x_{d+i})`, `M = R/(x1..xr)`, `N = R/(x_{r+1}..x_{2d})`.
    Product { r: usize, d: usize },
    /// Output of [`generate_pair`] on `(x_1², …, x_c²)`.
    Generated { c: usize, i: usize, j: usize },
    /// `M` free.
    Free,
    /// `M = N = k`.
    Residue,
}

#[derive(Clone, Debug)]
pub struct CorpusPair {
    pub name: String,
    pub kind: PairKind,
    pub ring: Ring<Rationals>,
    pub m: PresentedModule<Rationals>,
    pub n: PresentedModule<Rationals>,
    /// Whether `fext(M, N)` is known to be finite, so profiles need not be marked heuristic.
    pub fext_certified: bool,
    pub predicted_cx: Option<usize>,
}

fn pair(
    name: impl Into<String>,
    kind: PairKind,
    m: PresentedModule<Rationals>,
    n: PresentedModule<Rationals>,
    predicted_cx: Option<usize>,
) -> CorpusPair {
    CorpusPair {
        name: name.into(),
        kind,
        ring: m.ring().clone(),
        m,
        n,
        fext_certified: true,
        predicted_cx,
    }
}

fn names(prefix: &str, k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("{prefix}{i}")).collect()
}

fn poly_ring(vars: &[String]) -> Result<PolyRing<Rationals>> {
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    PolyRing::standard(Rationals, &refs)
}

fn squares(q: &PolyRing<Rationals>) -> Vec<Poly<Rationals>> {
    (0..q.nvars()).map(|i| q.pow(&q.var(i), 2)).collect()
}

/// `R = k[x1..x2d]/(x_i x_{d+i})` with `M = R/(x1..xr)` and `N = R/(x_{r+1}..x_{2d})`.
/// `Σ β_i t^i = t^r/(1 − t²)^r` and `cx = r`.
pub fn product_pair(r: usize, d: usize) -> Result<CorpusPair> {
    let q = poly_ring(&names("x", 2 * d))?;
    let fs = (0..d).map(|i| q.mul(&q.var(i), &q.var(d + i))).collect();
    let ring = QuotientRing::new("R", q.clone(), fs)?;
    let m = PresentedModule::cyclic(&ring, "M", &(0..r).map(|i| q.var(i)).collect::<Vec<_>>())?;
    let n = PresentedModule::cyclic(
        &ring,
        "N",
        &(r..2 * d).map(|i| q.var(i)).collect::<Vec<_>>(),
    )?;
    Ok(pair(
        format!("product r={r} d={d}"),
        PairKind::Product { r, d },
        m,
        n,
        Some(r),
    ))
}

/// `R = k[x1,x2]/(x1x2)`, `M = R/(x1)`, `N = R/(x2)`.
pub fn hypersurface_pair() -> Result<CorpusPair> {
    let mut p = product_pair(1, 1)?;
    p.name = "hypersurface x1*x2".into();
    p.kind = PairKind::Hypersurface;
    Ok(p)
}

/// Generated pair over `k[x_1..x_c]/(x_1², …, x_c²)`.
pub fn generated_pair(c: usize, i: usize, j: usize) -> Result<CorpusPair> {
    let q = poly_ring(&names("x", c))?;
    let g = generate_pair(&q, &squares(&q), i, j)?;
    Ok(pair(
        format!("generated c={c} i={i} j={j}"),
        PairKind::Generated { c, i, j },
        g.m,
        g.n,
        Some(g.predicted_cx),
    ))
}

/// `(k, k)` over `k[x_1..x_c]/(x_1^a, …, x_c^a)`; `cx = c`.
pub fn residue_pair(c: usize, a: u32) -> Result<CorpusPair> {
    let q = poly_ring(&names("x", c))?;
    let fs = (0..c).map(|i| q.pow(&q.var(i), a)).collect();
    let ring = QuotientRing::new("R", q, fs)?;
    let k = PresentedModule::residue_field(&ring);
    Ok(pair(
        format!("residue c={c} a={a}"),
        PairKind::Residue,
        k.clone(),
        k,
        Some(c),
    ))
}

/// `(k, k)` over `k[x, y]/(x⁴ − y²)` with `deg y = 2`; `cx = 1`.
pub fn weighted_residue_pair() -> Result<CorpusPair> {
    let q = PolyRing::new(
        Rationals,
        vec!["x".into(), "y".into()],
        vec![1, 2],
        crate::poly::MonomialOrder::default(),
    )?;
    let f = q.sub(&q.pow(&q.var(0), 4), &q.pow(&q.var(1), 2));
    let ring = QuotientRing::new("R", q, vec![f])?;
    let k = PresentedModule::residue_field(&ring);
    Ok(pair(
        "residue weighted x^4-y^2",
        PairKind::Residue,
        k.clone(),
        k,
        Some(1),
    ))
}

/// `M = R(−1)²` over `k[x,y]/(x², y²)` against `N = k`, and `M = R` against `N = R/(x1)`
/// over the hypersurface `x1x2`.
pub fn free_pairs() -> Result<Vec<CorpusPair>> {
    let q = poly_ring(&names("x", 2))?;
    let ring = QuotientRing::new("R", q.clone(), squares(&q))?;
    let a = pair(
        "free R(-1)^2 vs k",
        PairKind::Free,
        PresentedModule::free(&ring, "M", vec![1, 1]),
        PresentedModule::residue_field(&ring),
        Some(0),
    );
    let h = QuotientRing::new("R", q.clone(), vec![q.mul(&q.var(0), &q.var(1))])?;
    let b = pair(
        "free R vs R/(x1)",
        PairKind::Free,
        PresentedModule::free(&h, "M", vec![0]),
        PresentedModule::cyclic(&h, "N", &[q.var(0)])?,
        Some(0),
    );
    Ok(vec![a, b])
}

/// The full corpus: hypersurface pair, product pairs, generated pairs with `c ≤ 3`,
/// free pairs and residue-field pairs.
pub fn standard_corpus() -> Result<Vec<CorpusPair>> {
    let mut out = vec![hypersurface_pair()?];
    for (r, d) in [(1, 2), (2, 2)] {
        out.push(product_pair(r, d)?);
    }
    for c in [2, 3] {
        for i in 1..=c {
            for j in 1..=c {
                out.push(generated_pair(c, i, j)?);
            }
        }
    }
    out.extend(free_pairs()?);
    out.push(residue_pair(1, 2)?);
    out.push(residue_pair(1, 3)?);
    out.push(residue_pair(2, 2)?);
    out.push(weighted_residue_pair()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_builds() {
        let c = standard_corpus().unwrap();
        assert_eq!(c.len(), 1 + 2 + 4 + 9 + 2 + 4);
        assert!(c.iter().all(|p| p.ring.is_complete_intersection()));
    }
}
