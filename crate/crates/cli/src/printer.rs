//! Canonical pretty-printer. `parse(print(s))` equals `s` for every parsed script.

use std::fmt::Write;

use crate::ast::*;

pub fn print_script(s: &Script) -> String {
    let mut out = String::new();
    for st in &s.stmts {
        out.push_str(&print_stmt(st));
        out.push('\n');
    }
    out
}

pub fn print_stmt(st: &Stmt) -> String {
    match st {
        Stmt::Ring(r) => {
            let field = match &r.field {
                FieldSpec::Rationals => "rationals".to_string(),
                FieldSpec::Gf { p, .. } => format!("gf({p})"),
            };
            let vars: Vec<String> = r
                .vars
                .iter()
                .map(|v| match v.weight {
                    Some(w) => format!("{}^{w}", v.name.name),
                    None => v.name.name.clone(),
                })
                .collect();
            format!("ring {} = {field}[{}];", r.name.name, vars.join(", "))
        }
        Stmt::Quotient(q) => format!(
            "quotient {} = {}/({});",
            q.name.name,
            q.base.name,
            exprs(&q.gens)
        ),
        Stmt::Module(m) => format!("module {} = {};", m.name.name, print_module(&m.expr)),
        Stmt::Command(c) => format!("{};", c.words.join(" ")),
    }
}

fn exprs(es: &[Expr]) -> String {
    es.iter().map(print_expr).collect::<Vec<_>>().join(", ")
}

fn free_sum(s: &[Summand]) -> String {
    s.iter()
        .map(|x| {
            let mut t = format!("{}({})", x.ring.name, x.twist);
            if let Some(m) = x.mult {
                let _ = write!(t, "^{m}");
            }
            t
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn print_module(m: &ModuleExpr) -> String {
    match m {
        ModuleExpr::Coker {
            target,
            source,
            rows,
            ..
        } => {
            let rows: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "[{}]",
                        r.iter()
                            .map(|e| print_expr(&e.expr))
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                })
                .collect();
            format!(
                "coker({} <- {} : [{}])",
                free_sum(target),
                free_sum(source),
                rows.join(", ")
            )
        }
        ModuleExpr::Free { summands, .. } => format!("free({})", free_sum(summands)),
        ModuleExpr::Cyclic { ring, gens, .. } => format!("{}/({})", ring.name, exprs(gens)),
        ModuleExpr::Residue { ring, .. } => format!("residue({})", ring.name),
        ModuleExpr::Syzygy { module, step, .. } => format!("syzygy({}, {step})", module.name),
        ModuleExpr::Twist { module, shift, .. } => format!("twist({}, {shift})", module.name),
    }
}

pub fn print_expr(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(&mut out, e, 0, false);
    out
}

const NEG: u8 = 3;
const POW: u8 = 4;
const ATOM: u8 = 5;

fn write_expr(out: &mut String, e: &Expr, parent: u8, right: bool) {
    let (prec, body) = match e {
        Expr::Num(n, _) => (ATOM, n.to_string()),
        Expr::Var(id) => (ATOM, id.name.clone()),
        Expr::Neg(inner, _) => {
            let mut s = String::from("-");
            write_expr(&mut s, inner, NEG, false);
            (NEG, s)
        }
        Expr::Bin(op, l, r, _) => {
            let p = op.precedence();
            let mut s = String::new();
            write_expr(&mut s, l, p, false);
            let _ = write!(s, " {} ", op.symbol());
            write_expr(&mut s, r, p, true);
            (p, s)
        }
        Expr::Pow(base, k, _) => {
            let mut s = String::new();
            write_expr(&mut s, base, ATOM, false);
            let _ = write!(s, "^{k}");
            (POW, s)
        }
    };
    if prec < parent || (prec == parent && right && prec < NEG) {
        out.push('(');
        out.push_str(&body);
        out.push(')');
    } else {
        out.push_str(&body);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn round_trip_keeps_structure() {
        let src = "ring Q = gf(101)[x^1, y^2, z];\nquotient R = Q/(x - (y - z^2), -(x + y)^3 * 2, x / 3 * y);\n\
                   module M = coker(R(0) + R(1)^2 <- R(-1) : [[x], [y], [-x]]);\nmodule K = R/(x);\next M K --max-step 4;\n";
        let a = parse(src).unwrap();
        let printed = print_script(&a);
        let b = parse(&printed).unwrap();
        assert_eq!(a, b);
        assert!(printed.contains("x - (y - z^2)"));
        assert!(printed.contains("-(x + y)^3 * 2"));
    }
}
