//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and exits
//! nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use ciext::corpus::{product_pair, standard_corpus, CorpusPair, PairKind};
use ciext::ext::check_against_hom_complex;
use ciext::invariants::{check_h_identity, herbrand_difference, RatPoly};
use ciext::operators::{check_rho_formula, find_superficial, reduce_complexity, DEFAULT_RETRIES};
use ciext::verify::{order_identities, verify_theorem};
use ciext::{
    Assertions, EisenbudOperators, ExtComputer, Order, PairAnalysis, Rationals, Resolution,
    SuperficialOptions, TheoremId, Verdict,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Outcome = Result<String, String>;

struct Analysed {
    pair: CorpusPair,
    ext: ExtComputer<Rationals>,
    analysis: PairAnalysis,
}

struct Ctx {
    corpus: Vec<Analysed>,
}

fn max_step_for(codim: usize) -> usize {
    2 * codim + 8
}

fn analyse(pair: CorpusPair) -> Result<Analysed, String> {
    let mut ext = ExtComputer::new(&pair.m, &pair.n).map_err(|e| format!("{}: {e}", pair.name))?;
    let steps = max_step_for(pair.ring.codim());
    let analysis = PairAnalysis::compute(&mut ext, steps, pair.fext_certified)
        .map_err(|e| format!("{}: {e}", pair.name))?;
    Ok(Analysed {
        pair,
        ext,
        analysis,
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Coefficient of `t^i` in `t^r/(1 − t²)^r`.
fn product_betti(r: usize, i: usize) -> BigInt {
    if i < r || (i - r) % 2 == 1 {
        return BigInt::zero();
    }
    binomial(((i - r) / 2 + r - 1) as u64, (r - 1) as u64)
}

fn hypersurface_pair_fit(ctx: &mut Ctx) -> Outcome {
    let a = ctx
        .corpus
        .iter()
        .find(|a| a.pair.kind == PairKind::Hypersurface)
        .ok_or("hypersurface pair missing")?;
    let p = &a.analysis.polynomials;
    ensure(p.odd == RatPoly::from_i64(&[1]), || {
        format!("P_odd = {}", p.odd)
    })?;
    ensure(p.even.is_zero(), || format!("P_even = {}", p.even))?;
    ensure(a.analysis.cx == 1, || format!("cx = {}", a.analysis.cx))?;
    ensure(a.analysis.h == q(-1, 1), || format!("h = {}", a.analysis.h))?;
    Ok("P_odd = 1, P_even = 0, cx = 1, h = -1".into())
}

fn product_family_betti(_: &mut Ctx) -> Outcome {
    for (r, d) in [(1, 1), (1, 2), (2, 2)] {
        let Analysed {
            mut ext, analysis, ..
        } = analyse(product_pair(r, d).map_err(|e| e.to_string())?)?;
        for i in 0..=12 {
            let b = ext
                .ext_series(i)
                .value_at_one()
                .ok_or_else(|| format!("(r,d)=({r},{d}): Ext^{i} infinite"))?;
            ensure(b == product_betti(r, i), || {
                format!(
                    "(r,d)=({r},{d}): β_{i} = {b}, closed form {}",
                    product_betti(r, i)
                )
            })?;
        }
        ensure(analysis.cx == r, || {
            format!("(r,d)=({r},{d}): cx = {}", analysis.cx)
        })?;
        ensure(!analysis.h.is_zero(), || format!("(r,d)=({r},{d}): h = 0"))?;
        if (r, d) == (2, 2) {
            let b: Vec<_> = [2, 4, 6]
                .iter()
                .map(|&i| ext.ext_series(i).value_at_one().unwrap())
                .collect();
            ensure(b == [1, 2, 3].map(BigInt::from), || {
                format!("β_2, β_4, β_6 = {b:?}")
            })?;
        }
    }
    Ok("3 pairs, steps 0..=12 match t^r/(1-t^2)^r".into())
}

fn order_criterion(ctx: &mut Ctx) -> Outcome {
    let mut consistent = 0;
    for a in &mut ctx.corpus {
        let rep = verify_theorem(
            TheoremId::OrderCriterion,
            &mut a.ext,
            &a.analysis,
            &Assertions::default(),
        )
        .map_err(|e| format!("{}: {e}", a.pair.name))?;
        ensure(rep.verdict != Verdict::Violation, || {
            format!("{}: VIOLATION {:?}", a.pair.name, rep.checks)
        })?;
        let r = a.analysis.cx as i64;
        let o = a.analysis.order_rho_fext;
        if let Order::Finite(k) = o {
            ensure(k >= -r, || format!("{}: o(ρ) = {k} < -{r}", a.pair.name))?;
        }
        let above = o.greater_than(-r);
        if let Some(above) = above {
            ensure(above == a.analysis.h.is_zero(), || {
                format!("{}: h = {}, o(ρ) = {o}", a.pair.name, a.analysis.h)
            })?;
        }
        consistent += usize::from(rep.verdict == Verdict::Consistent);
    }
    Ok(format!(
        "{consistent}/{} pairs consistent, no violation",
        ctx.corpus.len()
    ))
}

/// `S(n)/n^j` from closed-form Betti numbers, summed directly.
fn direct_normalized_sum(
    beta: impl Fn(usize) -> BigInt,
    start: usize,
    n: usize,
    j: u32,
) -> BigRational {
    let s: BigInt = (start..=n)
        .map(|i| if i % 2 == 0 { beta(i) } else { -beta(i) })
        .sum();
    BigRational::new(s, BigInt::from(n).pow(j))
}

fn herbrand_identity(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for a in ctx.corpus.iter().filter(|a| a.analysis.cx >= 1) {
        ensure(check_h_identity(&a.analysis.polynomials), || {
            format!("{}: h_R ≠ 2r·h_r", a.pair.name)
        })?;
        checked += 1;
    }
    let spot = |kind: PairKind, j: usize| -> Result<BigRational, String> {
        let a = ctx
            .corpus
            .iter()
            .find(|a| a.pair.kind == kind)
            .ok_or("pair missing")?;
        herbrand_difference(&a.analysis.polynomials, j)
            .value
            .ok_or_else(|| "limit diverges".to_string())
    };
    let h1 = spot(PairKind::Hypersurface, 1)?;
    let h2 = spot(PairKind::Product { r: 2, d: 2 }, 2)?;
    ensure(h1 == q(-1, 2), || format!("h_1 = {h1}"))?;
    ensure(h2 == q(1, 8), || format!("h_2 = {h2}"))?;
    // Partial sums converge to the limits at rate O(1/n).
    for (r, h, j) in [(1, &h1, 1), (2, &h2, 2)] {
        for n in [4000, 4001] {
            let s = direct_normalized_sum(|i| product_betti(r, i), 1, n, j);
            ensure((s.clone() - h).abs() < q(2, n as i64), || {
                format!("r={r}: S({n})/n^{j} = {s}, far from {h}")
            })?;
        }
    }
    Ok(format!(
        "identity on {checked} pairs; h_1 = -1/2, h_2 = 1/8"
    ))
}

fn complexity_reduction(_: &mut Ctx) -> Outcome {
    let pair = product_pair(2, 2).map_err(|e| e.to_string())?;
    let Analysed {
        mut ext, analysis, ..
    } = analyse(pair)?;
    let chi = find_superficial(
        &mut ext,
        &analysis.profile,
        analysis.cx,
        &SuperficialOptions::default(),
    )
    .map_err(|e| e.to_string())?;
    let mut ns = Vec::new();
    for parity in [0, 1] {
        let (red, mut ext_k) =
            reduce_complexity(&mut ext, &analysis.profile, &chi, None, Some(parity), 6)
                .map_err(|e| e.to_string())?;
        ensure(red.cx_after == 1, || {
            format!("n={}: cx(K,N) = {}", red.n, red.cx_after)
        })?;
        ensure(red.beta_relation_holds, || {
            format!("n={}: β relation fails {:?}", red.n, red.beta_checks)
        })?;
        ensure(red.h_relation_holds, || {
            format!(
                "n={}: h(K,N) = {}, h(M,N) = {}",
                red.n, red.h_after, red.h_before
            )
        })?;
        let rho =
            check_rho_formula(&mut ext, &mut ext_k, red.n, red.e).map_err(|e| e.to_string())?;
        ensure(rho.holds, || {
            format!(
                "n={}: ρ¹(K,N) = {}, formula gives {}",
                red.n, rho.lhs, rho.rhs
            )
        })?;
        ns.push(red.n);
    }
    Ok(format!(
        "χ found in {} draws, checks exact for n = {ns:?}",
        chi.draws
    ))
}

fn generated_complexity(ctx: &mut Ctx) -> Outcome {
    let mut seen = 0;
    for a in &ctx.corpus {
        if let PairKind::Generated { c, i, j } = a.pair.kind {
            let want = (i + 1).saturating_sub(j);
            ensure(a.analysis.cx == want, || {
                format!(
                    "c={c} i={i} j={j}: cx = {}, predicted {want}",
                    a.analysis.cx
                )
            })?;
            seen += 1;
        }
    }
    ensure(seen == 4 + 9, || format!("only {seen} generated pairs"))?;
    Ok(format!(
        "{seen} generated pairs (c = 2, 3) match max(i-j+1, 0)"
    ))
}

fn dimension_criteria(ctx: &mut Ctx) -> Outcome {
    let (mut with_hyp, mut cx_zero) = (0, 0);
    for a in &mut ctx.corpus {
        let none = Assertions::default();
        let rep = verify_theorem(
            TheoremId::DimensionCriterion,
            &mut a.ext,
            &a.analysis,
            &none,
        )
        .map_err(|e| e.to_string())?;
        let hyp = a
            .analysis
            .dims
            .support
            .value()
            .is_none_or(|s| (a.analysis.cx as i64) > s);
        if hyp {
            ensure(rep.verdict == Verdict::Consistent, || {
                format!("{}: dimension criterion {:?}", a.pair.name, rep.verdict)
            })?;
            with_hyp += 1;
        } else {
            ensure(rep.verdict == Verdict::HypothesisNotMet, || {
                format!("{}: expected hypothesis-not-met", a.pair.name)
            })?;
        }
        if a.analysis.cx == 0 {
            let rep = verify_theorem(TheoremId::ComplexityZero, &mut a.ext, &a.analysis, &none)
                .map_err(|e| e.to_string())?;
            ensure(rep.verdict == Verdict::Consistent, || {
                format!("{}: complexity-zero {:?}", a.pair.name, rep.verdict)
            })?;
            cx_zero += 1;
        }
    }
    Ok(format!(
        "dimension criterion on {with_hyp} pairs, cx = 0 consequence on {cx_zero} pairs"
    ))
}

fn oracles(ctx: &mut Ctx) -> Outcome {
    let mut modules = 0;
    for a in &mut ctx.corpus {
        for m in [&a.pair.m, &a.pair.n] {
            let lo = m.generator_degrees().iter().copied().min().unwrap_or(0);
            let h = m.hilbert_series();
            for d in lo..=24 {
                let series = h.coefficient(d);
                let count = m.dim_in_degree(d);
                let lin = m.dim_in_degree_linear_algebra(d);
                ensure(series == BigInt::from(count) && count == lin, || {
                    format!("{} {}: degree {d}: series {series}, standard monomials {count}, linear algebra {lin}", a.pair.name, m.name())
                })?;
            }
            modules += 1;
        }
        check_against_hom_complex(&mut a.ext, 8, 10)
            .map_err(|e| format!("{}: {e}", a.pair.name))?;
        let steps = max_step_for(a.pair.ring.codim());
        for c in order_identities(&mut a.ext, steps).map_err(|e| e.to_string())? {
            ensure(c.holds != Some(false), || {
                format!("{}: {} fails: {}", a.pair.name, c.statement, c.detail)
            })?;
        }
    }
    Ok(format!(
        "{modules} modules to degree 24, Hom complex to step 8, order identities on {} pairs",
        ctx.corpus.len()
    ))
}

fn operators(ctx: &mut Ctx) -> Outcome {
    let mut searched = 0;
    let mut worst = 0;
    for a in &mut ctx.corpus {
        let mut res = Resolution::new(&a.pair.m, 10);
        res.extend_to(10);
        let ops =
            EisenbudOperators::compute(&res, 10).map_err(|e| format!("{}: {e}", a.pair.name))?;
        ensure(ops.lift_identity_holds(&res), || {
            format!("{}: ∂̃² ≠ Σ f_n τ̃^n", a.pair.name)
        })?;
        ensure(ops.chain_map_holds(&res), || {
            format!("{}: τ is not a chain map", a.pair.name)
        })?;
        if a.analysis.cx >= 1 {
            let chi = find_superficial(
                &mut a.ext,
                &a.analysis.profile,
                a.analysis.cx,
                &SuperficialOptions::default(),
            )
            .map_err(|e| format!("{}: {e}", a.pair.name))?;
            ensure(chi.draws <= DEFAULT_RETRIES, || {
                format!("{}: {} draws", a.pair.name, chi.draws)
            })?;
            worst = worst.max(chi.draws);
            searched += 1;
        }
    }
    Ok(format!("lift identity through step 10 on {} resolutions; χ found on {searched} pairs, at most {worst} draws", ctx.corpus.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = match standard_corpus()
        .map_err(|e| e.to_string())
        .and_then(|c| c.into_iter().map(analyse).collect())
    {
        Ok(c) => c,
        Err(e) => {
            println!("corpus setup failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut ctx = Ctx { corpus };
    let criteria: [(&str, fn(&mut Ctx) -> Outcome); 9] = [
        ("hypersurface pair polynomials", hypersurface_pair_fit),
        ("product family Betti numbers", product_family_betti),
        ("order criterion on corpus", order_criterion),
        ("Herbrand identity and spot values", herbrand_identity),
        ("complexity reduction", complexity_reduction),
        ("generated pair complexity", generated_complexity),
        (
            "dimension criterion and cx = 0 consequence",
            dimension_criteria,
        ),
        ("oracle equivalences", oracles),
        ("Eisenbud operators and superficial search", operators),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&mut ctx)))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail}) [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({why}) [{secs:.2}s]", k + 1)
            }
        }
    }
    println!(
        "acceptance: {}/9 passed in {:.2}s",
        9 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
