//! Engine commands, shared by the command line and by command statements in scripts.

use std::collections::{HashMap, HashSet};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ciext::invariants::{check_h_identity, epsilon, gamma, herbrand_difference, phi, rho};
use ciext::laurent::{format_rational, order_of, LaurentExpansion};
use ciext::operators::{
    check_rho_formula, find_superficial, generate_pair, reduce_complexity, DEFAULT_SEED,
};
use ciext::verify::{order_identities, verify_theorem};
use ciext::{
    Assertions, ExtComputer, Field, PairAnalysis, SuperficialOptions, TheoremId, Verdict,
    VerdictReport,
};

use crate::report::{envelope, Bounds, Output, Status};
use crate::session::Session;
use crate::CliError;

#[derive(Args, Debug, Clone, PartialEq)]
pub struct PairArgs {
    /// First module of the pair.
    #[arg(default_value = "M")]
    pub m: String,
    /// Second module of the pair.
    #[arg(default_value = "N")]
    pub n: String,
    /// Last Ext step to compute; defaults to 2c + 8.
    #[arg(long)]
    pub max_step: Option<usize>,
    /// Treat fext(M, N) as known to be finite.
    #[arg(long)]
    pub fext_finite: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum EngineCommand {
    /// Hilbert series, dimension and Laurent data of a module.
    Hilbert { module: String },
    /// Hilbert series and lengths of Ext^i(M, N).
    Ext(PairArgs),
    /// Ext lengths as CSV `i,beta,parity`.
    Betti(PairArgs),
    /// Even and odd Hilbert polynomials of the Ext lengths.
    Fit(PairArgs),
    /// Complexity, h and the Herbrand difference.
    Complexity(PairArgs),
    /// The rational invariants φ, ρ^j, γ^n, ε^j.
    Invariants {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        phi: bool,
        #[arg(long, value_name = "J")]
        rho: Option<usize>,
        #[arg(long, value_name = "N", allow_negative_numbers = true)]
        gamma: Option<i64>,
        #[arg(long, value_name = "J")]
        epsilon: Option<usize>,
    },
    /// Checks one statement on the pair.
    Verify {
        /// Statement id (e.g. order-criterion) or its short alias.
        theorem: String,
        #[command(flatten)]
        pair: PairArgs,
        /// Assumed ring or module property, repeatable.
        #[arg(long = "assert", value_name = "FLAG")]
        assertions: Vec<String>,
    },
    /// Random search for a superficial operator.
    Superficial {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = ciext::operators::DEFAULT_RETRIES)]
        retries: usize,
    },
    /// Builds the complexity-reducing module K and checks its relations to (M, N).
    Reduce {
        #[command(flatten)]
        pair: PairArgs,
        /// Construction index; defaults to max(s, fext) + 1.
        #[arg(long = "n", value_name = "N")]
        index: Option<usize>,
        #[arg(long, value_enum)]
        parity: Option<Parity>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Name under which K is registered.
        #[arg(long, default_value = "K")]
        name: String,
    },
    /// Builds a pair of prescribed complexity from the generators of a quotient ring.
    GenPair {
        #[arg(long, default_value = "R")]
        ring: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value = "M")]
        m_name: String,
        #[arg(long, default_value = "N")]
        n_name: String,
        #[arg(long)]
        max_step: Option<usize>,
    },
    /// Full report for a pair.
    Report {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        json: bool,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long = "assert", value_name = "FLAG")]
        assertions: Vec<String>,
    },
}

impl EngineCommand {
    pub fn name(&self) -> &'static str {
        match self {
            EngineCommand::Hilbert { .. } => "hilbert",
            EngineCommand::Ext(_) => "ext",
            EngineCommand::Betti(_) => "betti",
            EngineCommand::Fit(_) => "fit",
            EngineCommand::Complexity(_) => "complexity",
            EngineCommand::Invariants { .. } => "invariants",
            EngineCommand::Verify { .. } => "verify",
            EngineCommand::Superficial { .. } => "superficial",
            EngineCommand::Reduce { .. } => "reduce",
            EngineCommand::GenPair { .. } => "gen-pair",
            EngineCommand::Report { .. } => "report",
        }
    }
}

#[derive(Parser, Debug)]
#[command(no_binary_name = true, disable_help_flag = true)]
struct ScriptCommand {
    #[command(subcommand)]
    cmd: EngineCommand,
}

/// Parses the words of a command statement.
pub fn parse_words(words: &[String]) -> Result<EngineCommand, String> {
    ScriptCommand::try_parse_from(words)
        .map(|c| c.cmd)
        .map_err(|e| {
            let text = e.to_string();
            text.lines()
                .next()
                .unwrap_or("invalid command")
                .trim_start_matches("error: ")
                .to_string()
        })
}

/// Engine state for one script.
pub struct Executor<F: Field> {
    pub session: Session<F>,
    exts: HashMap<(String, String), ExtComputer<F>>,
    certified: HashSet<(String, String)>,
}

fn err(e: ciext::Error) -> CliError {
    CliError::Engine(e.to_string())
}

fn rat(q: &num_rational::BigRational) -> String {
    format_rational(q)
}

fn verdict_status(v: Verdict) -> Status {
    match v {
        Verdict::Violation => Status::Violation,
        Verdict::UndecidableAtPrecision => Status::Undecidable,
        _ => Status::Ok,
    }
}

impl<F: Field> Executor<F> {
    pub fn new(session: Session<F>) -> Self {
        Executor {
            session,
            exts: HashMap::new(),
            certified: HashSet::new(),
        }
    }

    fn ext(&mut self, m: &str, n: &str) -> Result<&mut ExtComputer<F>, CliError> {
        let key = (m.to_string(), n.to_string());
        if !self.exts.contains_key(&key) {
            let mm = self
                .session
                .module(m)
                .ok_or_else(|| CliError::Engine(format!("unknown module `{m}`")))?;
            let nn = self
                .session
                .module(n)
                .ok_or_else(|| CliError::Engine(format!("unknown module `{n}`")))?;
            let e = ExtComputer::new(mm, nn)
                .map_err(|e| CliError::Engine(format!("pair ({m}, {n}): {e}")))?;
            self.exts.insert(key.clone(), e);
        }
        Ok(self.exts.get_mut(&key).unwrap())
    }

    fn max_step(&mut self, p: &PairArgs) -> Result<usize, CliError> {
        let c = self.ext(&p.m, &p.n)?.m().ring().codim();
        Ok(p.max_step.unwrap_or(2 * c + 8))
    }

    fn certified(&self, p: &PairArgs) -> bool {
        p.fext_finite || self.certified.contains(&(p.m.clone(), p.n.clone()))
    }

    fn analysis(
        &mut self,
        p: &PairArgs,
        certified: bool,
    ) -> Result<(PairAnalysis, Bounds), CliError> {
        let j = self.max_step(p)?;
        let ext = self.ext(&p.m, &p.n)?;
        let a = PairAnalysis::compute(ext, j, certified)
            .map_err(|e| CliError::Engine(format!("pair ({}, {}): {e}", p.m, p.n)))?;
        let bounds = Bounds {
            max_step: j,
            window: a.profile.window,
            fit_window_start: Some(a.polynomials.window_start),
        };
        Ok((a, bounds))
    }

    pub fn run(&mut self, cmd: &EngineCommand) -> Result<Output, CliError> {
        let name = cmd.name();
        match cmd {
            EngineCommand::Hilbert { module } => {
                let m = self
                    .session
                    .module(module)
                    .ok_or_else(|| CliError::Engine(format!("unknown module `{module}`")))?;
                let h = m.hilbert_series().clone();
                let dim = m.dimension();
                let exp = LaurentExpansion::expand(&h, 3);
                let text = format!(
                    "H({module}) = {h}\ndim {module} = {}\norder at t=1: {}\nLaurent expansion: {exp}",
                    dim.map_or("-inf".into(), |d| d.to_string()),
                    order_of(&h)
                );
                let result = json!({ "module": module, "hilbert_series": h, "dimension": dim, "order": order_of(&h), "laurent": exp });
                Ok(Output::new(
                    name,
                    text,
                    envelope(name, None, None, None, false, &[], result),
                ))
            }
            EngineCommand::Ext(p) => {
                let j = self.max_step(p)?;
                let cert = self.certified(p);
                let prof = self.ext(&p.m, &p.n)?.profile(j, cert);
                let mut text = format!("Ext^i({}, {}) for i = 0..={j}\n", p.m, p.n);
                for (i, h) in prof.series.iter().enumerate() {
                    let len = prof.lengths[i]
                        .as_ref()
                        .map_or("infinite".into(), |b| b.to_string());
                    text.push_str(&format!("  {i:>3}  beta = {len:<10}  H = {h}\n"));
                }
                text.push_str(&format!("fext (window estimate): {}\n", prof.fext_hat));
                let bounds = Bounds {
                    max_step: j,
                    window: prof.window,
                    fit_window_start: None,
                };
                let warnings = prof.warnings.clone();
                let heuristic = prof.heuristic;
                let result = serde_json::to_value(&prof).unwrap();
                Ok(Output::new(
                    name,
                    text,
                    envelope(
                        name,
                        Some(p),
                        None,
                        Some(bounds),
                        heuristic,
                        &warnings,
                        result,
                    ),
                ))
            }
            EngineCommand::Betti(p) => {
                let j = self.max_step(p)?;
                let cert = self.certified(p);
                let prof = self.ext(&p.m, &p.n)?.profile(j, cert);
                let rows: Vec<Value> = prof
                    .lengths
                    .iter()
                    .enumerate()
                    .map(|(i, b)| json!({"i": i, "beta": b.as_ref().map(|b| b.to_string()), "parity": if i % 2 == 0 {"even"} else {"odd"}}))
                    .collect();
                let bounds = Bounds {
                    max_step: j,
                    window: prof.window,
                    fit_window_start: None,
                };
                let mut out = Output::new(
                    name,
                    prof.betti_csv(),
                    envelope(
                        name,
                        Some(p),
                        None,
                        Some(bounds),
                        prof.heuristic,
                        &prof.warnings,
                        json!({ "rows": rows }),
                    ),
                );
                out.csv = Some(prof.betti_csv());
                Ok(out)
            }
            EngineCommand::Fit(p) => {
                let cert = self.certified(p);
                let (a, bounds) = self.analysis(p, cert)?;
                let poly = &a.polynomials;
                let text = format!(
                    "P_even(i) = {}\nP_odd(i) = {}\nfitted on steps {}..={} (fext estimate {})\ncx = {}\nh = {}",
                    poly.even,
                    poly.odd,
                    poly.window_start,
                    poly.max_step,
                    poly.fext_hat,
                    a.cx,
                    rat(&a.h)
                );
                let result = serde_json::to_value(poly).unwrap();
                Ok(Output::new(
                    name,
                    text,
                    envelope(
                        name,
                        Some(p),
                        None,
                        Some(bounds),
                        a.profile.heuristic,
                        &a.profile.warnings,
                        result,
                    ),
                ))
            }
            EngineCommand::Complexity(p) => {
                let cert = self.certified(p);
                let (a, bounds) = self.analysis(p, cert)?;
                let hd = herbrand_difference(&a.polynomials, a.cx);
                let identity = a.cx == 0 || check_h_identity(&a.polynomials);
                let hj = hd.value.as_ref().map_or("diverges".into(), rat);
                let text = format!(
                    "cx = {}\nh = {}\nh_{} = {hj}\nh = 2r*h_r: {identity}",
                    a.cx,
                    rat(&a.h),
                    a.cx
                );
                let result = json!({
                    "cx": a.cx, "h": rat(&a.h), "herbrand": hd, "h_identity_holds": identity,
                });
                Ok(Output::new(
                    name,
                    text,
                    envelope(
                        name,
                        Some(p),
                        None,
                        Some(bounds),
                        a.profile.heuristic,
                        &a.profile.warnings,
                        result,
                    ),
                ))
            }
            EngineCommand::Invariants {
                pair,
                phi: want_phi,
                rho: rho_j,
                gamma: gamma_n,
                epsilon: eps_j,
            } => {
                let j = self.max_step(pair)?;
                let cert = self.certified(pair);
                let ext = self.ext(&pair.m, &pair.n)?;
                let prof = ext.profile(j, cert);
                let none = !*want_phi && rho_j.is_none() && gamma_n.is_none() && eps_j.is_none();
                let mut text = String::new();
                let mut result = serde_json::Map::new();
                if *want_phi || none {
                    let f = phi(ext.m(), ext.n()).map_err(err)?;
                    text.push_str(&format!("phi = {f}\no(phi) = {}\n", order_of(&f)));
                    result.insert("phi".into(), json!({"series": f, "order": order_of(&f)}));
                }
                if rho_j.is_some() || none {
                    let jj = rho_j.unwrap_or(prof.fext_hat);
                    let r = rho(ext, jj).map_err(err)?;
                    text.push_str(&format!("rho^{jj} = {r}\no(rho^{jj}) = {}\n", order_of(&r)));
                    result.insert(
                        "rho".into(),
                        json!({"j": jj, "series": r, "order": order_of(&r)}),
                    );
                }
                if let Some(n) = gamma_n {
                    let g = gamma(ext, *n, j).map_err(err)?;
                    text.push_str(&format!(
                        "gamma^{n} = {} (l_{n} = {})\n",
                        rat(&g.value),
                        g.ell_n
                    ));
                    result.insert("gamma".into(), serde_json::to_value(&g).unwrap());
                }
                if let Some(jj) = eps_j {
                    let e = epsilon(ext, *jj);
                    text.push_str(&format!("epsilon^{jj} = {}\n", rat(&e)));
                    result.insert("epsilon".into(), json!({"j": jj, "value": rat(&e)}));
                }
                let bounds = Bounds {
                    max_step: j,
                    window: prof.window,
                    fit_window_start: None,
                };
                Ok(Output::new(
                    name,
                    text.trim_end().to_string(),
                    envelope(
                        name,
                        Some(pair),
                        None,
                        Some(bounds),
                        prof.heuristic,
                        &prof.warnings,
                        Value::Object(result),
                    ),
                ))
            }
            EngineCommand::Verify {
                theorem,
                pair,
                assertions,
            } => {
                let id: TheoremId = theorem
                    .parse()
                    .map_err(|e: ciext::Error| CliError::Usage(e.to_string()))?;
                let asserts = parse_assertions(assertions)?;
                let cert = self.certified(pair) || asserts.fext_finite;
                let (a, bounds) = self.analysis(pair, cert)?;
                let ext = self.ext(&pair.m, &pair.n)?;
                let rep = verify_theorem(id, ext, &a, &asserts).map_err(err)?;
                let text = render_verdict(&rep);
                let status = verdict_status(rep.verdict);
                let result = serde_json::to_value(&rep).unwrap();
                let mut out = Output::new(
                    name,
                    text,
                    envelope(
                        name,
                        Some(pair),
                        None,
                        Some(bounds),
                        a.profile.heuristic,
                        &rep.warnings,
                        result,
                    ),
                );
                out.status = status;
                Ok(out)
            }
            EngineCommand::Superficial {
                pair,
                seed,
                retries,
            } => {
                let cert = self.certified(pair);
                let (a, bounds) = self.analysis(pair, cert)?;
                let ext = self.ext(&pair.m, &pair.n)?;
                let opts = SuperficialOptions {
                    seed: *seed,
                    retries: *retries,
                    window: None,
                };
                let chi = find_superficial(ext, &a.profile, a.cx, &opts).map_err(err)?;
                let terms: Vec<String> = chi
                    .operators
                    .iter()
                    .zip(&chi.coefficients)
                    .map(|(n, c)| format!("{c}*chi_{}", n + 1))
                    .collect();
                let text = format!(
                    "chi = {}\ndegree (2, -{})\ninjective on Ext^i for {} <= i <= {}{}\nfound after {} draw(s) with seed {}",
                    terms.join(" + "),
                    chi.e,
                    chi.start,
                    chi.start + chi.window,
                    if chi.bijective { " (bijective)" } else { "" },
                    chi.draws,
                    chi.seed
                );
                let mut warnings = a.profile.warnings.clone();
                warnings.extend(chi.warnings.iter().cloned());
                let result = serde_json::to_value(&chi).unwrap();
                Ok(Output::new(
                    name,
                    text,
                    envelope(
                        name,
                        Some(pair),
                        Some(*seed),
                        Some(bounds),
                        true,
                        &warnings,
                        result,
                    ),
                ))
            }
            EngineCommand::Reduce {
                pair,
                index,
                parity,
                seed,
                name: kname,
            } => {
                let cert = self.certified(pair);
                let (a, bounds) = self.analysis(pair, cert)?;
                let ext = self.ext(&pair.m, &pair.n)?;
                let opts = SuperficialOptions {
                    seed: *seed,
                    ..Default::default()
                };
                let chi = find_superficial(ext, &a.profile, a.cx, &opts).map_err(err)?;
                let par = parity.map(|p| if p == Parity::Even { 0 } else { 1 });
                let (red, mut ext_k) =
                    reduce_complexity(ext, &a.profile, &chi, *index, par, 6).map_err(err)?;
                let rho_check = check_rho_formula(ext, &mut ext_k, red.n, red.e).map_err(err)?;
                let text = format!(
                    "{kname} built at n = {} from chi of degree (2, -{}): {} generators, {} relations\nbeta relation on {} steps: {}\ncx: {} -> {} ({})\nh: {} -> {} ({})\nrho formula: {}",
                    red.n,
                    red.e,
                    red.k_generators.len(),
                    red.k_relations,
                    red.beta_checks.len(),
                    red.beta_relation_holds,
                    red.cx_before,
                    red.cx_after,
                    red.cx_relation_holds,
                    rat(&red.h_before),
                    rat(&red.h_after),
                    red.h_relation_holds,
                    rho_check.holds
                );
                let all = red.beta_relation_holds
                    && red.cx_relation_holds
                    && red.h_relation_holds
                    && rho_check.holds;
                let result =
                    json!({ "reduction": red, "rho_formula": rho_check, "superficial": chi });
                self.session.insert_module(kname, red.k.clone());
                self.exts.insert((kname.clone(), pair.n.clone()), ext_k);
                let mut warnings = a.profile.warnings.clone();
                warnings.extend(chi.warnings.iter().cloned());
                let mut out = Output::new(
                    name,
                    text,
                    envelope(
                        name,
                        Some(pair),
                        Some(*seed),
                        Some(bounds),
                        true,
                        &warnings,
                        result,
                    ),
                );
                if !all {
                    out.status = Status::Violation;
                }
                Ok(out)
            }
            EngineCommand::GenPair {
                ring,
                i,
                j,
                m_name,
                n_name,
                max_step,
            } => {
                let r = self
                    .session
                    .ring(ring)
                    .ok_or_else(|| CliError::Engine(format!("unknown ring `{ring}`")))?
                    .clone();
                let g = generate_pair(r.poly(), r.generators(), *i, *j).map_err(err)?;
                self.session.insert_module(m_name, g.m.clone());
                self.session.insert_module(n_name, g.n.clone());
                let key = (m_name.clone(), n_name.clone());
                self.exts.remove(&key);
                self.certified.insert(key);
                let pair = PairArgs {
                    m: m_name.clone(),
                    n: n_name.clone(),
                    max_step: *max_step,
                    fext_finite: true,
                };
                let (a, bounds) = self.analysis(&pair, true)?;
                let matches = a.cx == g.predicted_cx;
                let text = format!(
                    "{m_name}: {} generators, {} relations\n{n_name}: {} generators, {} relations\npredicted cx = {}, measured cx = {}{}",
                    g.m.num_generators(),
                    g.m.relations().len(),
                    g.n.num_generators(),
                    g.n.relations().len(),
                    g.predicted_cx,
                    a.cx,
                    if matches { "" } else { " (MISMATCH)" }
                );
                let result = json!({"i": i, "j": j, "predicted_cx": g.predicted_cx, "measured_cx": a.cx, "matches": matches, "fext_certified": true});
                let mut out = Output::new(
                    name,
                    text,
                    envelope(
                        name,
                        Some(&pair),
                        None,
                        Some(bounds),
                        false,
                        &a.profile.warnings,
                        result,
                    ),
                );
                if !matches {
                    out.status = Status::Violation;
                }
                Ok(out)
            }
            EngineCommand::Report {
                pair,
                json,
                csv,
                seed,
                assertions,
            } => {
                let mut out = self.report(pair, *csv, *seed, assertions)?;
                out.prefer_json = *json;
                Ok(out)
            }
        }
    }

    fn report(
        &mut self,
        pair: &PairArgs,
        csv: bool,
        seed: u64,
        assertions: &[String],
    ) -> Result<Output, CliError> {
        let asserts = parse_assertions(assertions)?;
        let cert = self.certified(pair) || asserts.fext_finite;
        let (a, bounds) = self.analysis(pair, cert)?;
        let j = bounds.max_step;
        let ext = self.ext(&pair.m, &pair.n)?;
        let mut warnings = a.profile.warnings.clone();
        let mut status = Status::Ok;
        let mut verdicts = Vec::new();
        let mut text = format!(
            "pair ({}, {}) over {}\ncx = {}\nh = {}\nP_even(i) = {}\nP_odd(i) = {}\n",
            pair.m,
            pair.n,
            ext.m().ring().name(),
            a.cx,
            rat(&a.h),
            a.polynomials.even,
            a.polynomials.odd
        );
        for id in TheoremId::ALL {
            match verify_theorem(id, ext, &a, &asserts) {
                Ok(rep) => {
                    status = status.max(verdict_status(rep.verdict));
                    text.push_str(&format!("{} ({}): {}\n", id.id(), id.alias(), rep.verdict));
                    verdicts.push(serde_json::to_value(&rep).unwrap());
                }
                Err(e) => {
                    text.push_str(&format!("{} ({}): skipped ({e})\n", id.id(), id.alias()));
                    verdicts.push(json!({"theorem": id, "skipped": e.to_string()}));
                }
            }
        }
        let identities = order_identities(ext, j).map_err(err)?;
        if identities.iter().any(|c| c.holds == Some(false)) {
            status = Status::Violation;
        }
        let herbrand = herbrand_difference(&a.polynomials, a.cx);
        let superficial = if a.cx >= 1 {
            let opts = SuperficialOptions {
                seed,
                ..Default::default()
            };
            match find_superficial(ext, &a.profile, a.cx, &opts) {
                Ok(chi) => {
                    warnings.extend(chi.warnings.iter().cloned());
                    serde_json::to_value(&chi).unwrap()
                }
                Err(e) => {
                    warnings.push(format!("superficial search: {e}"));
                    Value::Null
                }
            }
        } else {
            Value::Null
        };
        for w in &warnings {
            text.push_str(&format!("warning: {w}\n"));
        }
        let result = json!({
            "analysis": a,
            "herbrand": herbrand,
            "verdicts": verdicts,
            "order_identities": identities,
            "superficial": superficial,
        });
        let heuristic = a.profile.heuristic || !superficial.is_null();
        let mut out = Output::new(
            "report",
            text.trim_end().to_string(),
            envelope(
                "report",
                Some(pair),
                Some(seed),
                Some(bounds),
                heuristic,
                &warnings,
                result,
            ),
        );
        if csv {
            out.csv = Some(a.profile.betti_csv());
        }
        out.status = status;
        Ok(out)
    }
}

fn parse_assertions(flags: &[String]) -> Result<Assertions, CliError> {
    let mut a = Assertions::default();
    for f in flags {
        a.parse_flag(f)
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(a)
}

fn render_verdict(rep: &VerdictReport) -> String {
    let mut s = format!(
        "{} ({}): {}\n",
        rep.theorem.id(),
        rep.theorem.alias(),
        rep.verdict
    );
    for c in &rep.checks {
        let state = match c.holds {
            Some(true) => "holds",
            Some(false) => "FAILS",
            None => "undecided",
        };
        s.push_str(&format!("  [{}] {}: {state}", c.part, c.statement));
        if !c.detail.is_empty() {
            s.push_str(&format!(" ({})", c.detail));
        }
        s.push('\n');
    }
    for w in &rep.warnings {
        s.push_str(&format!("warning: {w}\n"));
    }
    s.trim_end().to_string()
}
