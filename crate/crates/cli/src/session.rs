//! Binds declarations to engine objects. All rings in one script share a coefficient field.

use std::collections::HashMap;

use ciext::{Field, Poly, PolyRing, PresentedModule, QuotientRing, Resolution, Ring, Vector};
use num_rational::BigRational;

use crate::ast::*;
use crate::diag::{DiagKind, Diagnostic};

pub struct Session<F: Field> {
    field: F,
    rings: HashMap<String, (Ring<F>, Span)>,
    modules: HashMap<String, (PresentedModule<F>, Span)>,
    order: Vec<String>,
}

fn bind_err(span: Span, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::new(DiagKind::Binding, span, msg)
}

impl<F: Field> Session<F> {
    pub fn new(field: F) -> Self {
        Session {
            field,
            rings: HashMap::new(),
            modules: HashMap::new(),
            order: Vec::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ring(&self, name: &str) -> Option<&Ring<F>> {
        self.rings.get(name).map(|(r, _)| r)
    }

    pub fn module(&self, name: &str) -> Option<&PresentedModule<F>> {
        self.modules.get(name).map(|(m, _)| m)
    }

    /// Module names in declaration order.
    pub fn module_names(&self) -> &[String] {
        &self.order
    }

    pub fn ring_names(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.rings.keys().map(String::as_str).collect();
        v.sort();
        v
    }

    /// Registers a module built outside the script, replacing any previous binding.
    pub fn insert_module(&mut self, name: &str, m: PresentedModule<F>) {
        if !self.order.iter().any(|n| n == name) {
            self.order.push(name.to_string());
        }
        self.modules
            .insert(name.to_string(), (m.with_name(name), Span::default()));
    }

    fn check_fresh(&self, id: &Ident, src: &str) -> Result<(), Diagnostic> {
        let prev = self
            .rings
            .get(&id.name)
            .map(|(_, s)| *s)
            .or_else(|| self.modules.get(&id.name).map(|(_, s)| *s));
        if let Some(prev) = prev {
            let (l, c) = crate::diag::line_col(src, prev.start);
            return Err(bind_err(
                id.span,
                format!("`{}` is already declared at {l}:{c}", id.name),
            )
            .hint("choose a different name"));
        }
        Ok(())
    }

    fn lookup_ring(&self, id: &Ident) -> Result<&Ring<F>, Diagnostic> {
        self.ring(&id.name).ok_or_else(|| {
            let hint = if self.modules.contains_key(&id.name) {
                format!("`{}` is a module, not a ring", id.name)
            } else {
                format!("declared rings: {}", self.ring_names().join(", "))
            };
            bind_err(id.span, format!("unknown ring `{}`", id.name)).hint(hint)
        })
    }

    fn lookup_module(&self, id: &Ident) -> Result<&PresentedModule<F>, Diagnostic> {
        self.module(&id.name).ok_or_else(|| {
            bind_err(id.span, format!("unknown module `{}`", id.name))
                .hint(format!("declared modules: {}", self.order.join(", ")))
        })
    }

    /// Applies one declaration. Commands are ignored here.
    pub fn declare(&mut self, st: &Stmt, src: &str) -> Result<(), Diagnostic> {
        match st {
            Stmt::Ring(r) => {
                self.check_fresh(&r.name, src)?;
                let names: Vec<String> = r.vars.iter().map(|v| v.name.name.clone()).collect();
                let degrees: Vec<u32> = r.vars.iter().map(|v| v.weight.unwrap_or(1)).collect();
                if let Some(v) = r.vars.iter().find(|v| v.weight == Some(0)) {
                    return Err(bind_err(
                        v.name.span,
                        format!("variable `{}` has degree 0", v.name.name),
                    )
                    .hint("variable degrees are at least 1"));
                }
                let poly = PolyRing::new(self.field.clone(), names, degrees, Default::default())
                    .map_err(|e| {
                        bind_err(r.span, e.to_string()).hint("variable names must be distinct")
                    })?;
                self.rings.insert(
                    r.name.name.clone(),
                    (QuotientRing::polynomial(poly), r.name.span),
                );
            }
            Stmt::Quotient(q) => {
                self.check_fresh(&q.name, src)?;
                let base = self.lookup_ring(&q.base)?;
                if !base.generators().is_empty() {
                    return Err(bind_err(
                        q.base.span,
                        format!("`{}` is already a quotient", q.base.name),
                    )
                    .hint("divide the polynomial ring by all generators at once"));
                }
                let p = base.poly().clone();
                let gens = q
                    .gens
                    .iter()
                    .map(|e| eval(&p, e))
                    .collect::<Result<Vec<_>, _>>()?;
                for (e, g) in q.gens.iter().zip(&gens) {
                    check_homogeneous(&p, g, e.span(), None)?;
                }
                let ring = QuotientRing::new(q.name.name.clone(), p, gens).map_err(|e| {
                    bind_err(q.span, e.to_string()).hint("ideal generators must be homogeneous and lie in the square of the maximal ideal")
                })?;
                self.rings.insert(q.name.name.clone(), (ring, q.name.span));
            }
            Stmt::Module(m) => {
                self.check_fresh(&m.name, src)?;
                let module = self.module_expr(&m.name.name, &m.expr)?;
                self.order.push(m.name.name.clone());
                self.modules
                    .insert(m.name.name.clone(), (module, m.name.span));
            }
            Stmt::Command(_) => {}
        }
        Ok(())
    }

    fn free(&self, summands: &[Summand]) -> Result<(Ring<F>, Vec<i64>), Diagnostic> {
        let ring = self.lookup_ring(&summands[0].ring)?.clone();
        let mut twists = Vec::new();
        for s in summands {
            let r = self.lookup_ring(&s.ring)?;
            if !std::sync::Arc::ptr_eq(r, &ring) {
                return Err(bind_err(
                    s.ring.span,
                    format!(
                        "free summands mix rings `{}` and `{}`",
                        summands[0].ring.name, s.ring.name
                    ),
                )
                .hint("all summands must be over the same ring"));
            }
            for _ in 0..s.mult.unwrap_or(1) {
                twists.push(-s.twist);
            }
        }
        Ok((ring, twists))
    }

    fn module_expr(&self, name: &str, e: &ModuleExpr) -> Result<PresentedModule<F>, Diagnostic> {
        match e {
            ModuleExpr::Free { summands, .. } => {
                let (ring, twists) = self.free(summands)?;
                Ok(PresentedModule::free(&ring, name, twists))
            }
            ModuleExpr::Coker {
                target,
                source,
                rows,
                span,
            } => {
                let (ring, tgt) = self.free(target)?;
                let (sring, src) = self.free(source)?;
                if !std::sync::Arc::ptr_eq(&ring, &sring) {
                    return Err(bind_err(
                        source[0].ring.span,
                        "source and target are over different rings",
                    ));
                }
                if rows.len() != tgt.len() {
                    return Err(bind_err(
                        *span,
                        format!(
                            "matrix has {} rows but the target has rank {}",
                            rows.len(),
                            tgt.len()
                        ),
                    )
                    .hint("write one row per target generator"));
                }
                let p = ring.poly();
                let mut cols = vec![vec![p.zero(); tgt.len()]; src.len()];
                for (r, row) in rows.iter().enumerate() {
                    if row.len() != src.len() {
                        let at = row.first().map_or(*span, |e| e.span);
                        return Err(bind_err(
                            at,
                            format!(
                                "row {} has {} entries but the source has rank {}",
                                r + 1,
                                row.len(),
                                src.len()
                            ),
                        )
                        .hint("write one column per source generator"));
                    }
                    for (c, entry) in row.iter().enumerate() {
                        let f = eval(p, &entry.expr)?;
                        let want = src[c] - tgt[r];
                        check_homogeneous(p, &f, entry.span, Some((r, c, src[c], tgt[r], want)))?;
                        cols[c][r] = f;
                    }
                }
                let rels: Vec<Vector<F>> = cols.iter().map(|c| p.vector_from_polys(c)).collect();
                PresentedModule::new(&ring, name, tgt, rels)
                    .map_err(|e| bind_err(*span, e.to_string()))
            }
            ModuleExpr::Cyclic { ring, gens, .. } => {
                let r = self.lookup_ring(ring)?;
                let p = r.poly();
                let polys = gens
                    .iter()
                    .map(|g| eval(p, g))
                    .collect::<Result<Vec<_>, _>>()?;
                for (g, f) in gens.iter().zip(&polys) {
                    check_homogeneous(p, f, g.span(), None)?;
                }
                PresentedModule::cyclic(r, name, &polys)
                    .map_err(|e| bind_err(ring.span, e.to_string()))
            }
            ModuleExpr::Residue { ring, .. } => {
                Ok(PresentedModule::residue_field(self.lookup_ring(ring)?).with_name(name))
            }
            ModuleExpr::Syzygy { module, step, span } => {
                let m = self.lookup_module(module)?;
                let res = Resolution::new(m, *step as usize + 1);
                let s = res
                    .syzygy(*step as usize)
                    .map_err(|e| bind_err(*span, e.to_string()))?;
                Ok(s.with_name(name))
            }
            ModuleExpr::Twist { module, shift, .. } => {
                Ok(self.lookup_module(module)?.twist(*shift).with_name(name))
            }
        }
    }
}

/// Evaluates a polynomial expression in `p`.
pub fn eval<F: Field>(p: &PolyRing<F>, e: &Expr) -> Result<Poly<F>, Diagnostic> {
    let k = p.field();
    Ok(match e {
        Expr::Num(n, span) => {
            let c = k
                .from_rational(&BigRational::from_integer(n.clone()))
                .ok_or_else(|| bind_err(*span, "constant not representable"))?;
            p.constant(c)
        }
        Expr::Var(id) => {
            let i = p.var_index(&id.name).ok_or_else(|| {
                bind_err(id.span, format!("unknown variable `{}`", id.name))
                    .hint(format!("ring variables: {}", p.names().join(", ")))
            })?;
            p.var(i)
        }
        Expr::Neg(inner, _) => p.neg(&eval(p, inner)?),
        Expr::Pow(base, k, _) => p.pow(&eval(p, base)?, *k),
        Expr::Bin(op, l, r, _) => {
            let (a, b) = (eval(p, l)?, eval(p, r)?);
            match op {
                BinOp::Add => p.add(&a, &b),
                BinOp::Sub => p.sub(&a, &b),
                BinOp::Mul => p.mul(&a, &b),
                BinOp::Div => {
                    let c = constant_of(p, &b).ok_or_else(|| {
                        bind_err(r.span(), "division by a non-constant polynomial")
                            .hint("only division by nonzero numbers is allowed")
                    })?;
                    if k.is_zero(&c) {
                        return Err(bind_err(r.span(), "division by zero"));
                    }
                    p.scale(&a, &k.inv(&c))
                }
            }
        }
    })
}

fn constant_of<F: Field>(p: &PolyRing<F>, f: &Poly<F>) -> Option<F::Elem> {
    match f.terms() {
        [] => Some(p.field().zero()),
        [t] if t.mono.is_one() => Some(t.coeff.clone()),
        _ => None,
    }
}

/// `entry` = `(row, col, source degree, target degree, required degree)` for matrix entries.
fn check_homogeneous<F: Field>(
    p: &PolyRing<F>,
    f: &Poly<F>,
    span: Span,
    entry: Option<(usize, usize, i64, i64, i64)>,
) -> Result<(), Diagnostic> {
    if f.is_zero() {
        return Ok(());
    }
    let mut degs: Vec<u32> = f.terms().iter().map(|t| t.mono.degree()).collect();
    degs.sort_unstable();
    degs.dedup();
    let where_ = entry.map_or("polynomial".to_string(), |(r, c, ..)| {
        format!("entry [{}][{}]", r + 1, c + 1)
    });
    if degs.len() > 1 {
        let list = degs
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Diagnostic::new(
            DiagKind::Homogeneity,
            span,
            format!(
                "{where_} `{}` is not homogeneous: its terms have degrees {list}",
                p.format(f)
            ),
        )
        .hint("split the entry or multiply terms by variables so every term has the same degree"));
    }
    if let Some((_, _, sdeg, tdeg, want)) = entry {
        if degs[0] as i64 != want {
            return Err(Diagnostic::new(
                DiagKind::Homogeneity,
                span,
                format!("{where_} `{}` has degree {} but must have degree {want} (source generator degree {sdeg} minus target generator degree {tdeg})", p.format(f), degs[0]),
            )
            .hint("adjust the twists R(a) or the entry so the map has degree 0"));
        }
    }
    Ok(())
}
