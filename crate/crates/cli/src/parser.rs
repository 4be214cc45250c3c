//! Recursive-descent parser for session scripts. The grammar is in `docs/grammar.ebnf`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::ast::*;
use crate::diag::{DiagKind, Diagnostic};
use crate::lexer::{lex, Tok, Token};

pub fn parse(src: &str) -> Result<Script, Diagnostic> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0 };
    let mut stmts = Vec::new();
    while p.peek() != &Tok::Eof {
        stmts.push(p.stmt()?);
    }
    Ok(Script { stmts })
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn prev_end(&self) -> usize {
        if self.pos == 0 {
            0
        } else {
            self.toks[self.pos - 1].span.end
        }
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, what: &str) -> Diagnostic {
        let found = self.peek().describe();
        Diagnostic::new(
            DiagKind::Syntax,
            self.span(),
            format!("expected {what}, found {found}"),
        )
    }

    fn expect(&mut self, tok: Tok, context: &str) -> PResult<Span> {
        if *self.peek() == tok {
            return Ok(self.bump().span);
        }
        let mut d = self.error(&format!("`{}` {context}", tok.symbol()));
        if tok == Tok::Semi {
            // Point just past the statement rather than at the next one.
            let at = self.prev_end();
            d.span = Span::new(at, at);
            d = d.hint("statements end with `;`");
        }
        Err(d)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> PResult<Ident> {
        match self.peek().clone() {
            Tok::Ident(name) => Ok(Ident {
                name,
                span: self.bump().span,
            }),
            _ => Err(self.error(what)),
        }
    }

    fn int(&mut self, what: &str) -> PResult<(BigInt, Span)> {
        match self.peek().clone() {
            Tok::Int(n) => Ok((n, self.bump().span)),
            _ => Err(self.error(what)),
        }
    }

    fn small_uint(&mut self, what: &str) -> PResult<(u32, Span)> {
        let (n, span) = self.int(what)?;
        let v = n.to_u32().ok_or_else(|| {
            Diagnostic::new(DiagKind::Syntax, span, format!("{n} is too large"))
                .hint("use a value below 2^32")
        })?;
        Ok((v, span))
    }

    fn signed(&mut self, what: &str) -> PResult<(i64, Span)> {
        let start = self.span();
        let neg = self.eat(&Tok::Minus);
        let (n, span) = self.int(what)?;
        let v = n
            .to_i64()
            .ok_or_else(|| Diagnostic::new(DiagKind::Syntax, span, format!("{n} is too large")))?;
        Ok((if neg { -v } else { v }, start.to(span)))
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let start = self.span();
        match self.peek().clone() {
            Tok::Command(words) => {
                self.bump();
                self.expect(Tok::Semi, "after the command")?;
                Ok(Stmt::Command(CommandStmt { words, span: start }))
            }
            Tok::Ident(kw) if kw == "ring" => {
                self.bump();
                let name = self.ident("a ring name")?;
                self.expect(Tok::Eq, "after the ring name")?;
                let field = self.field()?;
                self.expect(Tok::LBracket, "before the variable list")?;
                let mut vars = vec![self.var()?];
                while self.eat(&Tok::Comma) {
                    vars.push(self.var()?);
                }
                self.expect(Tok::RBracket, "after the variable list")?;
                self.expect(Tok::Semi, "after the ring declaration")?;
                Ok(Stmt::Ring(RingDecl {
                    name,
                    field,
                    vars,
                    span: start.to(Span::new(start.start, self.prev_end())),
                }))
            }
            Tok::Ident(kw) if kw == "quotient" => {
                self.bump();
                let name = self.ident("a ring name")?;
                self.expect(Tok::Eq, "after the ring name")?;
                let base = self.ident("the polynomial ring to divide")?;
                self.expect(Tok::Slash, "between the ring and its ideal")?;
                let gens = self.expr_list()?;
                self.expect(Tok::Semi, "after the quotient declaration")?;
                Ok(Stmt::Quotient(QuotientDecl {
                    name,
                    base,
                    gens,
                    span: Span::new(start.start, self.prev_end()),
                }))
            }
            Tok::Ident(kw) if kw == "module" => {
                self.bump();
                let name = self.ident("a module name")?;
                self.expect(Tok::Eq, "after the module name")?;
                let expr = self.module_expr()?;
                self.expect(Tok::Semi, "after the module declaration")?;
                Ok(Stmt::Module(ModuleDecl {
                    name,
                    expr,
                    span: Span::new(start.start, self.prev_end()),
                }))
            }
            _ => Err(self.error("a declaration or a command").hint(
                "statements start with `ring`, `quotient`, `module` or a command such as `ext`",
            )),
        }
    }

    fn field(&mut self) -> PResult<FieldSpec> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "rationals" => {
                self.bump();
                Ok(FieldSpec::Rationals)
            }
            Tok::Ident(s) if s == "gf" => {
                let start = self.bump().span;
                self.expect(Tok::LParen, "after `gf`")?;
                let (p, _) = self.int("a prime")?;
                let p = p.to_u64().unwrap_or(u64::MAX);
                self.expect(Tok::RParen, "after the prime")?;
                Ok(FieldSpec::Gf {
                    p,
                    span: Span::new(start.start, self.prev_end()),
                })
            }
            _ => Err(self
                .error("a coefficient field")
                .hint("use `rationals` or `gf(p)`")),
        }
    }

    fn var(&mut self) -> PResult<VarDecl> {
        let name = self.ident("a variable name")?;
        let weight = if self.eat(&Tok::Caret) {
            Some(self.small_uint("a variable degree")?.0)
        } else {
            None
        };
        Ok(VarDecl { name, weight })
    }

    fn expr_list(&mut self) -> PResult<Vec<Expr>> {
        self.expect(Tok::LParen, "before the generators")?;
        let mut out = vec![self.expr()?];
        while self.eat(&Tok::Comma) {
            out.push(self.expr()?);
        }
        self.expect(Tok::RParen, "after the generators")?;
        Ok(out)
    }

    fn module_expr(&mut self) -> PResult<ModuleExpr> {
        let start = self.span();
        let head = self.ident("a module expression")?;
        let close = |p: &Parser| Span::new(start.start, p.prev_end());
        match head.name.as_str() {
            "coker" => {
                self.expect(Tok::LParen, "after `coker`")?;
                let target = self.free_sum()?;
                self.expect(Tok::Arrow, "between target and source free modules")?;
                let source = self.free_sum()?;
                self.expect(Tok::Colon, "before the matrix")?;
                self.expect(Tok::LBracket, "to open the matrix")?;
                let mut rows = Vec::new();
                if *self.peek() != Tok::RBracket {
                    rows.push(self.row()?);
                    while self.eat(&Tok::Comma) {
                        rows.push(self.row()?);
                    }
                }
                self.expect(Tok::RBracket, "to close the matrix")?;
                self.expect(Tok::RParen, "after the matrix")?;
                Ok(ModuleExpr::Coker {
                    target,
                    source,
                    rows,
                    span: close(self),
                })
            }
            "free" => {
                self.expect(Tok::LParen, "after `free`")?;
                let summands = self.free_sum()?;
                self.expect(Tok::RParen, "after the free module")?;
                Ok(ModuleExpr::Free {
                    summands,
                    span: close(self),
                })
            }
            "residue" => {
                self.expect(Tok::LParen, "after `residue`")?;
                let ring = self.ident("a ring name")?;
                self.expect(Tok::RParen, "after the ring name")?;
                Ok(ModuleExpr::Residue {
                    ring,
                    span: close(self),
                })
            }
            "syzygy" => {
                self.expect(Tok::LParen, "after `syzygy`")?;
                let module = self.ident("a module name")?;
                self.expect(Tok::Comma, "between module and step")?;
                let (step, _) = self.small_uint("a syzygy step")?;
                self.expect(Tok::RParen, "after the step")?;
                Ok(ModuleExpr::Syzygy {
                    module,
                    step,
                    span: close(self),
                })
            }
            "twist" => {
                self.expect(Tok::LParen, "after `twist`")?;
                let module = self.ident("a module name")?;
                self.expect(Tok::Comma, "between module and shift")?;
                let (shift, _) = self.signed("a degree shift")?;
                self.expect(Tok::RParen, "after the shift")?;
                Ok(ModuleExpr::Twist {
                    module,
                    shift,
                    span: close(self),
                })
            }
            _ if *self.peek() == Tok::Slash => {
                self.bump();
                let gens = self.expr_list()?;
                Ok(ModuleExpr::Cyclic {
                    ring: head,
                    gens,
                    span: close(self),
                })
            }
            _ => Err(Diagnostic::new(
                DiagKind::Syntax,
                head.span,
                format!("unknown module expression `{}`", head.name),
            )
            .hint(
                "use coker(...), free(...), residue(R), syzygy(M, i), twist(M, a) or R/(g, ...)",
            )),
        }
    }

    fn free_sum(&mut self) -> PResult<Vec<Summand>> {
        let mut out = vec![self.summand()?];
        while self.eat(&Tok::Plus) {
            out.push(self.summand()?);
        }
        Ok(out)
    }

    fn summand(&mut self) -> PResult<Summand> {
        let ring = self.ident("a ring name such as `R(0)`")?;
        self.expect(Tok::LParen, "after the ring name in a free module")?;
        let (twist, _) = self.signed("a twist")?;
        self.expect(Tok::RParen, "after the twist")?;
        let mult = if self.eat(&Tok::Caret) {
            Some(self.small_uint("a multiplicity")?.0)
        } else {
            None
        };
        let span = Span::new(ring.span.start, self.prev_end());
        Ok(Summand {
            ring,
            twist,
            mult,
            span,
        })
    }

    fn row(&mut self) -> PResult<Vec<Entry>> {
        self.expect(Tok::LBracket, "to open a matrix row")?;
        let mut out = Vec::new();
        if *self.peek() != Tok::RBracket {
            out.push(self.entry()?);
            while self.eat(&Tok::Comma) {
                out.push(self.entry()?);
            }
        }
        self.expect(Tok::RBracket, "to close the matrix row")?;
        Ok(out)
    }

    fn entry(&mut self) -> PResult<Entry> {
        let expr = self.expr()?;
        let span = expr.span();
        Ok(Entry { expr, span })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span().to(rhs.span());
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs), span);
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            let span = lhs.span().to(rhs.span());
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs), span);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if *self.peek() == Tok::Minus {
            let start = self.bump().span;
            let inner = self.unary()?;
            let span = start.to(inner.span());
            return Ok(Expr::Neg(Box::new(inner), span));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let (e, span) = self.small_uint("an exponent")?;
            let span = base.span().to(span);
            return Ok(Expr::Pow(Box::new(base), e, span));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => Ok(Expr::Num(n, self.bump().span)),
            Tok::Ident(name) => Ok(Expr::Var(Ident {
                name,
                span: self.bump().span,
            })),
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "to close the parenthesis")?;
                Ok(e)
            }
            _ => Err(self
                .error("a polynomial")
                .hint("polynomials use + - * / ^, integers and variable names")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declarations() {
        let s = parse("ring Q = rationals[x1^1, x2^1]; quotient R = Q/(x1*x2);").unwrap();
        assert_eq!(s.stmts.len(), 2);
        let Stmt::Ring(r) = &s.stmts[0] else { panic!() };
        assert_eq!(r.vars.len(), 2);
        assert_eq!(r.vars[0].weight, Some(1));
    }

    #[test]
    fn coker_module() {
        let s = parse("module M = coker(R(0) <- R(-1) : [[x1]]);").unwrap();
        let Stmt::Module(m) = &s.stmts[0] else {
            panic!()
        };
        let ModuleExpr::Coker {
            target,
            source,
            rows,
            ..
        } = &m.expr
        else {
            panic!()
        };
        assert_eq!((target[0].twist, source[0].twist), (0, -1));
        assert_eq!(rows.len(), 1);
    }

    #[test]
    fn precedence() {
        let s = parse("quotient R = Q/(-x^2 + 2*y/3 - z);").unwrap();
        let Stmt::Quotient(q) = &s.stmts[0] else {
            panic!()
        };
        let Expr::Bin(BinOp::Sub, lhs, _, _) = &q.gens[0] else {
            panic!("{:?}", q.gens[0])
        };
        assert!(matches!(**lhs, Expr::Bin(BinOp::Add, _, _, _)));
    }

    #[test]
    fn missing_semicolon_points_after_statement() {
        let src = "ring Q = rationals[x]\nquotient R = Q/(x^2);";
        let e = parse(src).unwrap_err();
        assert_eq!(e.kind, DiagKind::Syntax);
        assert_eq!(e.line_col(src), (1, 22));
        assert_eq!(e.hint.as_deref(), Some("statements end with `;`"));
    }
}
