//! Mechanical checks of the vanishing criteria for `h_R` and of the order bounds
//! on `ρ^j`. Ring properties that cannot be computed are supplied as trusted
//! assertions.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext::ExtComputer;
use crate::field::Field;
use crate::invariants::{omega, phi, Dim, PairAnalysis};
use crate::laurent::{g_of, order_of, Order};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    #[serde(rename = "VIOLATION")]
    Violation,
    HypothesisNotMet,
    UndecidableAtPrecision,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Violation => "VIOLATION",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::UndecidableAtPrecision => "undecidable-at-precision",
        })
    }
}

/// Statements the verifiers know how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// `o(ρ^ℓ) ≥ −r`, and `h_R = 0 ⟺ o(ρ^ℓ) > −r`.
    OrderCriterion,
    /// `h_R = 0` when `cx` is large relative to `dim R`.
    RingDimensionBound,
    /// `h_R = 0` when `cx` is large relative to `dim M`, `dim N`.
    ModuleDimensionBound,
    /// Under `cx > dim R/(ann M + ann N)`: `h_R = 0 ⟺ dim M + dim N − dim R < cx`.
    DimensionCriterion,
    /// For `cx = 0`: `h_R = 0` and `dim M + dim N − dim R ≤ dim R/(ann M + ann N)`.
    ComplexityZero,
    /// Order bounds on `ρ^0, ρ^1, ρ^2` under regularity of `R`.
    RegularityOrders,
    /// `o(ρ^{dim R − v}) > −v` for `v = min{dim M, dim N}`.
    RankOrders,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::OrderCriterion,
        TheoremId::RingDimensionBound,
        TheoremId::ModuleDimensionBound,
        TheoremId::DimensionCriterion,
        TheoremId::ComplexityZero,
        TheoremId::RegularityOrders,
        TheoremId::RankOrders,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::OrderCriterion => "order-criterion",
            TheoremId::RingDimensionBound => "ring-dimension-bound",
            TheoremId::ModuleDimensionBound => "module-dimension-bound",
            TheoremId::DimensionCriterion => "dimension-criterion",
            TheoremId::ComplexityZero => "complexity-zero",
            TheoremId::RegularityOrders => "regularity-orders",
            TheoremId::RankOrders => "rank-orders",
        }
    }

    /// Short alias accepted on the command line.
    pub fn alias(self) -> &'static str {
        match self {
            TheoremId::OrderCriterion => "thm4.1",
            TheoremId::RingDimensionBound => "thm4.2",
            TheoremId::ModuleDimensionBound => "thm4.3",
            TheoremId::DimensionCriterion => "cor4.4",
            TheoremId::ComplexityZero => "rmk4.5",
            TheoremId::RegularityOrders => "prop2.2",
            TheoremId::RankOrders => "prop2.3",
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == s || t.alias() == s)
            .ok_or_else(|| {
                let known: Vec<String> = TheoremId::ALL
                    .iter()
                    .map(|t| format!("{} ({})", t.id(), t.alias()))
                    .collect();
                Error::InvalidInput(format!(
                    "unknown theorem id `{s}`; expected one of {}",
                    known.join(", ")
                ))
            })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Trusted hypotheses about the ring and the modules.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Assertions {
    /// `R_p` is regular for every homogeneous prime of codimension `≤ u`.
    pub regular_in_codim: Option<i64>,
    pub domain: bool,
    pub ufd: bool,
    /// `R` has a unique prime of codimension 0, and the localization there is a field.
    pub unique_minimal_prime_field: bool,
    /// `M` or `N` has a rank.
    pub has_rank: bool,
    /// `fext(M, N) < ∞` is known.
    pub fext_finite: bool,
}

impl Assertions {
    pub const FLAGS: &'static str =
        "regular-in-codim=<u>, domain, ufd, unique-minimal-prime-field, has-rank, fext-finite";

    pub fn parse_flag(&mut self, flag: &str) -> Result<()> {
        match flag.split_once('=') {
            Some(("regular-in-codim", u)) => {
                let u: i64 = u.parse().map_err(|_| {
                    Error::InvalidInput(format!("regular-in-codim needs an integer, got `{u}`"))
                })?;
                self.regular_in_codim = Some(u);
            }
            None if flag == "domain" => self.domain = true,
            None if flag == "ufd" => {
                self.ufd = true;
                self.domain = true;
            }
            None if flag == "unique-minimal-prime-field" => self.unique_minimal_prime_field = true,
            None if flag == "has-rank" => self.has_rank = true,
            None if flag == "fext-finite" => self.fext_finite = true,
            _ => {
                return Err(Error::InvalidInput(format!(
                    "unknown assertion `{flag}`; known: {}",
                    Self::FLAGS
                )))
            }
        }
        Ok(())
    }

    pub fn regular_through(&self, u: i64) -> bool {
        self.regular_in_codim.is_some_and(|v| v >= u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Hypothesis,
    Conclusion,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub part: String,
    pub kind: CheckKind,
    pub statement: String,
    /// `None` when it cannot be decided from the computed data.
    pub holds: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub theorem: TheoremId,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

struct Part {
    name: String,
    checks: Vec<Check>,
}

impl Part {
    fn new(name: &str) -> Self {
        Part {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    fn hyp(
        &mut self,
        statement: impl Into<String>,
        holds: Option<bool>,
        detail: impl Into<String>,
    ) -> &mut Self {
        self.push(
            CheckKind::Hypothesis,
            statement.into(),
            holds,
            detail.into(),
        )
    }

    fn concl(
        &mut self,
        statement: impl Into<String>,
        holds: Option<bool>,
        detail: impl Into<String>,
    ) -> &mut Self {
        self.push(
            CheckKind::Conclusion,
            statement.into(),
            holds,
            detail.into(),
        )
    }

    fn push(
        &mut self,
        kind: CheckKind,
        statement: String,
        holds: Option<bool>,
        detail: String,
    ) -> &mut Self {
        self.checks.push(Check {
            part: self.name.clone(),
            kind,
            statement,
            holds,
            detail,
        });
        self
    }

    fn verdict(&self) -> Verdict {
        let hyps = self
            .checks
            .iter()
            .filter(|c| c.kind == CheckKind::Hypothesis);
        let mut unknown = false;
        for h in hyps {
            match h.holds {
                Some(false) => return Verdict::HypothesisNotMet,
                None => unknown = true,
                Some(true) => {}
            }
        }
        if unknown {
            return Verdict::UndecidableAtPrecision;
        }
        let concl: Vec<Option<bool>> = self
            .checks
            .iter()
            .filter(|c| c.kind == CheckKind::Conclusion)
            .map(|c| c.holds)
            .collect();
        if concl.contains(&Some(false)) {
            Verdict::Violation
        } else if concl.contains(&None) {
            Verdict::UndecidableAtPrecision
        } else {
            Verdict::Consistent
        }
    }
}

fn combine(parts: &[Part]) -> Verdict {
    let vs: Vec<Verdict> = parts.iter().map(Part::verdict).collect();
    [
        Verdict::Violation,
        Verdict::Consistent,
        Verdict::UndecidableAtPrecision,
    ]
    .into_iter()
    .find(|v| vs.contains(v))
    .unwrap_or(Verdict::HypothesisNotMet)
}

fn gt(a: i64, b: Dim) -> bool {
    match b {
        Dim::Finite(b) => a > b,
        Dim::NegInf => true,
    }
}

fn order_str(o: Order) -> String {
    o.to_string()
}

/// Evaluates one statement on a pair.
pub fn verify_theorem<F: Field>(
    id: TheoremId,
    ext: &mut ExtComputer<F>,
    analysis: &PairAnalysis,
    assertions: &Assertions,
) -> Result<VerdictReport> {
    let a = analysis;
    let r = a.cx as i64;
    let h_zero = a.h.is_zero();
    let d = a.dims;
    let dim_r = d.ring;
    let o_rho = a.order_rho_fext;
    let mut warnings = a.profile.warnings.clone();
    if assertions.fext_finite {
        warnings.retain(|w| !w.contains("not certified"));
    }
    let fext_detail = format!(
        "fext = {} read from steps 0..={}",
        a.profile.fext_hat, a.profile.max_step
    );
    let h_detail = format!("h_R = {}", crate::laurent::format_rational(&a.h));
    let mut parts = Vec::new();
    match id {
        TheoremId::OrderCriterion => {
            let mut p = Part::new("1");
            p.hyp("cx ≥ 1", Some(r >= 1), format!("cx = {r}"));
            p.hyp("fext < ∞", Some(true), fext_detail.clone());
            p.concl(
                "o(ρ^ℓ) ≥ −r",
                o_rho.at_least(-r),
                format!("o(ρ^{}) = {}", a.profile.fext_hat, order_str(o_rho)),
            );
            parts.push(p);
            let mut p = Part::new("2");
            p.hyp("cx ≥ 1", Some(r >= 1), format!("cx = {r}"));
            p.hyp("fext < ∞", Some(true), fext_detail);
            let holds = o_rho.greater_than(-r).map(|gt| gt == h_zero);
            p.concl(
                "h_R = 0 ⟺ o(ρ^ℓ) > −r",
                holds,
                format!("{h_detail}, o(ρ^ℓ) = {}", order_str(o_rho)),
            );
            parts.push(p);
        }
        TheoremId::RingDimensionBound => {
            let cases: [(&str, i64, Vec<(&str, bool)>); 4] = [
                ("1", dim_r + 1, vec![]),
                (
                    "2",
                    dim_r,
                    vec![(
                        "unique-minimal-prime-field",
                        assertions.unique_minimal_prime_field,
                    )],
                ),
                (
                    "3",
                    dim_r - 1,
                    vec![("regular-in-codim=1", assertions.regular_through(1))],
                ),
                (
                    "4",
                    dim_r - 2,
                    vec![
                        ("ufd", assertions.ufd),
                        ("regular-in-codim=2", assertions.regular_through(2)),
                    ],
                ),
            ];
            for (name, bound, flags) in cases {
                let mut p = Part::new(name);
                p.hyp("cx ≥ 1", Some(r >= 1), format!("cx = {r}"));
                if name == "1" {
                    p.hyp(
                        "cx > dim R",
                        Some(r > dim_r),
                        format!("cx = {r}, dim R = {dim_r}"),
                    );
                } else {
                    p.hyp(
                        format!("cx = dim R − {}", dim_r - bound),
                        Some(r == bound),
                        format!("cx = {r}, dim R = {dim_r}"),
                    );
                }
                for (flag, set) in flags {
                    p.hyp(
                        format!("asserted {flag}"),
                        Some(set),
                        if set { "asserted" } else { "not asserted" },
                    );
                }
                p.concl("h_R = 0", Some(h_zero), h_detail.clone());
                parts.push(p);
            }
        }
        TheoremId::ModuleDimensionBound => {
            let bound1 = d.support.max(d.excess());
            let mut p = Part::new("1");
            p.hyp("cx ≥ 1", Some(r >= 1), format!("cx = {r}"));
            p.hyp(
                "cx > max{dim R/(ann M + ann N), dim M + dim N − dim R}",
                Some(gt(r, bound1)),
                format!("cx = {r}, max = {bound1}"),
            );
            p.concl("h_R = 0", Some(h_zero), h_detail.clone());
            parts.push(p);
            let min = d.min_mn();
            let mut p = Part::new("2");
            p.hyp("cx ≥ 1", Some(r >= 1), format!("cx = {r}"));
            p.hyp(
                "cx > min{dim M, dim N}",
                Some(gt(r, min)),
                format!("cx = {r}, min = {min}"),
            );
            p.concl("h_R = 0", Some(h_zero), h_detail.clone());
            parts.push(p);
            let mut p = Part::new("3");
            p.hyp("cx ≥ 1", Some(r >= 1), format!("cx = {r}"));
            p.hyp(
                "cx = min{dim M, dim N}",
                Some(min == Dim::Finite(r)),
                format!("cx = {r}, min = {min}"),
            );
            let u = dim_r - r;
            let reg = assertions.regular_through(u);
            p.hyp(
                format!("asserted regular-in-codim={u}"),
                Some(reg),
                if reg { "asserted" } else { "not asserted" },
            );
            if dim_r == r {
                p.hyp(
                    "asserted has-rank",
                    Some(assertions.has_rank),
                    "needed since cx = dim R",
                );
            }
            p.concl("h_R = 0", Some(h_zero), h_detail.clone());
            parts.push(p);
        }
        TheoremId::DimensionCriterion => {
            let mut p = Part::new("1");
            p.hyp(
                "cx > dim R/(ann M + ann N)",
                Some(gt(r, d.support)),
                format!("cx = {r}, dim = {}", d.support),
            );
            p.hyp("fext < ∞", Some(true), fext_detail);
            let lhs = d.excess();
            let holds = h_zero == (lhs < Dim::Finite(r));
            p.concl(
                "h_R = 0 ⟺ dim M + dim N − dim R < cx",
                Some(holds),
                format!("{h_detail}, dim M + dim N − dim R = {lhs}, cx = {r}"),
            );
            parts.push(p);
        }
        TheoremId::ComplexityZero => {
            let mut p = Part::new("1");
            p.hyp("cx = 0", Some(r == 0), format!("cx = {r}"));
            p.concl("h_R = 0", Some(h_zero), h_detail.clone());
            let lhs = d.excess();
            p.concl(
                "dim M + dim N − dim R ≤ dim R/(ann M + ann N)",
                Some(lhs <= d.support),
                format!("{lhs} vs {}", d.support),
            );
            parts.push(p);
        }
        TheoremId::RegularityOrders => {
            if !assertions.unique_minimal_prime_field
                && !assertions.domain
                && assertions.regular_in_codim.is_none()
            {
                return Err(Error::MissingAssertion(format!(
                    "{} needs unique-minimal-prime-field, or domain with regular-in-codim=1, or ufd with regular-in-codim=2",
                    id
                )));
            }
            let cases: [(&str, i64, Vec<(&str, bool)>); 3] = [
                (
                    "1",
                    0,
                    vec![(
                        "unique-minimal-prime-field",
                        assertions.unique_minimal_prime_field,
                    )],
                ),
                (
                    "2",
                    1,
                    vec![
                        ("domain", assertions.domain),
                        ("regular-in-codim=1", assertions.regular_through(1)),
                    ],
                ),
                (
                    "3",
                    2,
                    vec![
                        ("ufd", assertions.ufd),
                        ("regular-in-codim=2", assertions.regular_through(2)),
                    ],
                ),
            ];
            for (name, j, flags) in cases {
                let mut p = Part::new(name);
                for (flag, set) in flags {
                    p.hyp(
                        format!("asserted {flag}"),
                        Some(set),
                        if set { "asserted" } else { "not asserted" },
                    );
                }
                if p.verdict() != Verdict::HypothesisNotMet {
                    let o = order_of(&omega(ext, j as usize).sub(&a.phi));
                    p.concl(
                        format!("o(ρ^{j}) > −(dim R − {j})"),
                        o.greater_than(-(dim_r - j)),
                        format!("o(ρ^{j}) = {o}"),
                    );
                }
                parts.push(p);
            }
            push_regularity_vanishing(ext, a, assertions, &mut parts);
        }
        TheoremId::RankOrders => {
            let Some(u_asserted) = assertions.regular_in_codim else {
                return Err(Error::MissingAssertion(format!(
                    "{id} needs regular-in-codim=<u>"
                )));
            };
            let mut p = Part::new("1");
            let v = d.min_mn();
            p.hyp(
                "v = min{dim M, dim N} > 0",
                Some(v > Dim::Finite(0)),
                format!("v = {v}"),
            );
            if let Dim::Finite(v) = v {
                let u = dim_r - v;
                p.hyp(
                    format!("regular in codimension {u}"),
                    Some(u_asserted >= u),
                    format!("asserted {u_asserted}"),
                );
                if v == dim_r {
                    p.hyp(
                        "asserted has-rank",
                        Some(assertions.has_rank),
                        "needed since v = dim R",
                    );
                }
                if p.verdict() != Verdict::HypothesisNotMet && u >= 0 {
                    let o = order_of(&omega(ext, u as usize).sub(&a.phi));
                    p.concl(
                        format!("o(ρ^{u}) > −{v}"),
                        o.greater_than(-v),
                        format!("o(ρ^{u}) = {o}"),
                    );
                }
            }
            parts.push(p);
            push_regularity_vanishing(ext, a, assertions, &mut parts);
        }
    }
    let verdict = combine(&parts);
    Ok(VerdictReport {
        theorem: id,
        verdict,
        checks: parts.into_iter().flat_map(|p| p.checks).collect(),
        warnings,
    })
}

/// When regularity in codimension `u < dim R` is asserted:
/// `g^n(Ext^i) = 0` for `n ≥ dim R − u` and `i > dim R − n`, over the computed steps.
fn push_regularity_vanishing<F: Field>(
    ext: &mut ExtComputer<F>,
    a: &PairAnalysis,
    assertions: &Assertions,
    parts: &mut Vec<Part>,
) {
    let Some(u) = assertions.regular_in_codim else {
        return;
    };
    let d = a.dims.ring;
    if u >= d {
        return;
    }
    let mut p = Part::new("regularity-vanishing");
    p.hyp(
        format!("asserted regular-in-codim={u}"),
        Some(true),
        "asserted",
    );
    let mut bad = Vec::new();
    for n in (d - u)..=d {
        for i in ((d - n + 1).max(0) as usize)..=a.profile.max_step {
            if !g_of(&ext.ext_series(i), n).is_zero() {
                bad.push(format!("g^{n}(Ext^{i}) ≠ 0"));
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("checked steps ≤ {}", a.profile.max_step)
    } else {
        bad.join(", ")
    };
    p.concl(
        "g^n(Ext^i) = 0 for n ≥ dim R − u, i > dim R − n",
        Some(bad.is_empty()),
        detail,
    );
    parts.push(p);
}

/// Order identities that hold for every pair: the order of `φ`, the lower bounds
/// on `o(ρ^j)`, and the equality case. One check per statement, over `j ≤ max_step`.
pub fn order_identities<F: Field>(ext: &mut ExtComputer<F>, max_step: usize) -> Result<Vec<Check>> {
    let dims = crate::invariants::Dimensions::of(ext.m(), ext.n())?;
    let ph = phi(ext.m(), ext.n())?;
    let mut out = Vec::new();
    let (Dim::Finite(_), Dim::Finite(_)) = (dims.m, dims.n) else {
        return Ok(out);
    };
    let excess = dims.excess().value().unwrap();
    let o_phi = order_of(&ph);
    out.push(Check {
        part: "phi".into(),
        kind: CheckKind::Conclusion,
        statement: "o(φ) = −(dim M + dim N − dim R)".into(),
        holds: Some(o_phi == Order::Finite(-excess)),
        detail: format!("o(φ) = {o_phi}, dim M + dim N − dim R = {excess}"),
    });
    let lower = dims.support.max(dims.excess()).value().unwrap();
    let min = dims.min_mn().value().unwrap();
    let equal_case = Dim::Finite(excess) > dims.support;
    let mut bad_lower = Vec::new();
    let mut bad_min = Vec::new();
    let mut bad_equal = Vec::new();
    for j in 0..=max_step {
        let o = order_of(&omega(ext, j).sub(&ph));
        if o.at_least(-lower) != Some(true) {
            bad_lower.push(format!("j={j}: {o}"));
        }
        if o.at_least(-min) != Some(true) {
            bad_min.push(format!("j={j}: {o}"));
        }
        if equal_case && o != Order::Finite(-excess) {
            bad_equal.push(format!("j={j}: {o}"));
        }
    }
    let mk = |statement: &str, bad: Vec<String>| Check {
        part: "rho".into(),
        kind: CheckKind::Conclusion,
        statement: statement.into(),
        holds: Some(bad.is_empty()),
        detail: if bad.is_empty() {
            format!("j ≤ {max_step}")
        } else {
            bad.join("; ")
        },
    };
    out.push(mk(
        "o(ρ^j) ≥ −max{dim R/(ann M + ann N), dim M + dim N − dim R}",
        bad_lower,
    ));
    out.push(mk("o(ρ^j) ≥ −min{dim M, dim N}", bad_min));
    if equal_case {
        out.push(mk("o(ρ^j) = −(dim M + dim N − dim R)", bad_equal));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::module::PresentedModule;
    use crate::poly::PolyRing;
    use crate::ring::QuotientRing;

    fn intro() -> ExtComputer<Rationals> {
        let p = PolyRing::standard(Rationals, &["x1", "x2"]).unwrap();
        let r = QuotientRing::new("R", p.clone(), vec![p.mul(&p.var(0), &p.var(1))]).unwrap();
        let m = PresentedModule::cyclic(&r, "M", &[p.var(0)]).unwrap();
        let n = PresentedModule::cyclic(&r, "N", &[p.var(1)]).unwrap();
        ExtComputer::new(&m, &n).unwrap()
    }

    #[test]
    fn ids_and_aliases() {
        for t in TheoremId::ALL {
            assert_eq!(t.id().parse::<TheoremId>().unwrap(), t);
            assert_eq!(t.alias().parse::<TheoremId>().unwrap(), t);
        }
        assert!("thm9".parse::<TheoremId>().is_err());
        let mut a = Assertions::default();
        a.parse_flag("regular-in-codim=1").unwrap();
        a.parse_flag("ufd").unwrap();
        assert!(a.regular_through(1) && !a.regular_through(2) && a.domain);
        assert!(a.parse_flag("smooth").is_err());
    }

    #[test]
    fn intro_pair_verdicts() {
        let mut ext = intro();
        let a = PairAnalysis::compute(&mut ext, 12, false).unwrap();
        let none = Assertions::default();
        let v = |id, ext: &mut ExtComputer<Rationals>| {
            verify_theorem(id, ext, &a, &none).unwrap().verdict
        };
        assert_eq!(v(TheoremId::OrderCriterion, &mut ext), Verdict::Consistent);
        assert_eq!(
            v(TheoremId::DimensionCriterion, &mut ext),
            Verdict::Consistent
        );
        assert_eq!(
            v(TheoremId::ComplexityZero, &mut ext),
            Verdict::HypothesisNotMet
        );
        assert_eq!(
            v(TheoremId::ModuleDimensionBound, &mut ext),
            Verdict::HypothesisNotMet
        );
        assert!(matches!(
            verify_theorem(TheoremId::RankOrders, &mut ext, &a, &none),
            Err(Error::MissingAssertion(_))
        ));
        assert!(order_identities(&mut ext, 8)
            .unwrap()
            .iter()
            .all(|c| c.holds == Some(true)));
    }

    #[test]
    fn residue_field_over_dual_numbers() {
        let q = PolyRing::standard(Rationals, &["x"]).unwrap();
        let r = QuotientRing::new("R", q.clone(), vec![q.pow(&q.var(0), 2)]).unwrap();
        let k = PresentedModule::residue_field(&r);
        let mut ext = ExtComputer::new(&k, &k).unwrap();
        let a = PairAnalysis::compute(&mut ext, 10, false).unwrap();
        assert_eq!(a.cx, 1);
        assert!(a.h.is_zero());
        let rep = verify_theorem(
            TheoremId::ModuleDimensionBound,
            &mut ext,
            &a,
            &Assertions::default(),
        )
        .unwrap();
        assert_eq!(rep.verdict, Verdict::Consistent);
        let rep = verify_theorem(
            TheoremId::OrderCriterion,
            &mut ext,
            &a,
            &Assertions::default(),
        )
        .unwrap();
        assert_eq!(rep.verdict, Verdict::Consistent);
    }
}
